//! The Specht module V_lambda in the standard-polytabloid basis:
//! polytabloid expansion, Garnir transversals, straightening, and the
//! symmetric-group action in coordinates.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::SpechtError;
use crate::polyring::{specht_polynomial, Polynomial, Rational};
use crate::tableau::{
    column_stabilizer, enumerate_standard, tabloid_of, Partition, Perm, SignedPermutation,
    Tableau, Tabloid,
};

/// Element of the tabloid module: tabloid -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidVector {
    shape: Partition,
    coords: BTreeMap<Tabloid, Rational>,
}

impl TabloidVector {
    pub fn zero(shape: Partition) -> TabloidVector {
        TabloidVector {
            shape,
            coords: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn coords(&self) -> &BTreeMap<Tabloid, Rational> {
        &self.coords
    }

    pub fn add_term(&mut self, tab: Tabloid, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(tab.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&tab);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Element of V_lambda in the canonical standard-polytabloid basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    shape: Partition,
    coords: Vec<Rational>,
}

impl SpechtVector {
    pub fn zero(shape: Partition, dim: usize) -> SpechtVector {
        SpechtVector {
            shape,
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn from_coords(shape: Partition, coords: Vec<Rational>) -> SpechtVector {
        SpechtVector { shape, coords }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &SpechtVector) -> SpechtVector {
        assert_eq!(self.shape, other.shape);
        SpechtVector {
            shape: self.shape.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SpechtVector {
        SpechtVector {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

/// e(T) = sum over the column stabilizer of sign * pi{T}.
pub fn polytabloid_expand(t: &Tableau) -> TabloidVector {
    let mut v = TabloidVector::zero(t.shape().clone());
    for pi in column_stabilizer(t) {
        let tab = tabloid_of(&t.act(pi.perm()));
        let c = if pi.sign() == 1 {
            Rational::one()
        } else {
            -Rational::one()
        };
        v.add_term(tab, c);
    }
    v
}

/// A Garnir pattern on adjacent columns of a tableau: A is the bottom of
/// column `col` from `row` down, B is the top of column `col + 1` down to
/// `row`. Always |A| + |B| = height(col) + 1.
#[derive(Debug, Clone)]
pub struct GarnirPair {
    tableau: Tableau,
    col: usize,
    row: usize,
}

impl GarnirPair {
    pub fn new(tableau: Tableau, col: usize, row: usize) -> Result<GarnirPair, SpechtError> {
        let heights = tableau.shape().conjugate();
        let hs = heights.parts();
        if col < 1 || col >= hs.len() || row < 1 || row > hs[col] {
            return Err(SpechtError::InadmissibleGarnir(format!(
                "col {col}, row {row} on shape {}",
                tableau.shape()
            )));
        }
        Ok(GarnirPair { tableau, col, row })
    }

    /// Explicit (A, B) sets, when the caller knows the entries rather than
    /// the cell position. A must be a suffix of column `col`'s entries and B
    /// a prefix of column `col + 1`'s.
    pub fn from_sets(
        tableau: Tableau,
        a: &[usize],
        b: &[usize],
    ) -> Result<GarnirPair, SpechtError> {
        let heights = tableau.shape().conjugate();
        let hs = heights.parts();
        let row = b.len();
        for col in 1..hs.len() {
            let ca = tableau.column(col);
            let cb = tableau.column(col + 1);
            if a.is_empty() || b.is_empty() || a.len() > ca.len() || row > cb.len() {
                continue;
            }
            if ca.len() - a.len() + 1 != row {
                continue;
            }
            let sorted = |v: &[usize]| {
                let mut w = v.to_vec();
                w.sort_unstable();
                w
            };
            if sorted(a) == sorted(&ca[row - 1..]) && sorted(b) == sorted(&cb[..row]) {
                return GarnirPair::new(tableau, col, row);
            }
        }
        Err(SpechtError::InadmissibleGarnir(format!(
            "A={a:?}, B={b:?} does not match adjacent columns"
        )))
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    /// Entries of A, in column (top to bottom) order.
    pub fn a_entries(&self) -> Vec<usize> {
        self.tableau.column(self.col)[self.row - 1..].to_vec()
    }

    /// Entries of B, in column order.
    pub fn b_entries(&self) -> Vec<usize> {
        self.tableau.column(self.col + 1)[..self.row].to_vec()
    }

    /// All admissible patterns on a shape: every adjacent column pair and
    /// every split row.
    pub fn enumerate(tableau: &Tableau) -> Vec<GarnirPair> {
        let heights = tableau.shape().conjugate();
        let hs = heights.parts();
        let mut out = Vec::new();
        for col in 1..hs.len() {
            for row in 1..=hs[col] {
                out.push(GarnirPair {
                    tableau: tableau.clone(),
                    col,
                    row,
                });
            }
        }
        out
    }
}

/// The transversal S(A,B): permutations fixing [n] \ (A u B) whose images
/// increase down the A positions and down the B positions.
pub fn garnir_transversal(pair: &GarnirPair) -> Vec<SignedPermutation> {
    let n = pair.tableau.n();
    let a_slots = pair.a_entries();
    let b_slots = pair.b_entries();
    let mut union: Vec<usize> = a_slots.iter().chain(&b_slots).copied().collect();
    union.sort_unstable();
    let k = a_slots.len();
    let mut out = Vec::new();
    for choice in combinations(union.len(), k) {
        let mut a_vals = Vec::with_capacity(k);
        let mut b_vals = Vec::with_capacity(union.len() - k);
        let mut picked = vec![false; union.len()];
        for &i in &choice {
            picked[i] = true;
        }
        for (i, &v) in union.iter().enumerate() {
            if picked[i] {
                a_vals.push(v);
            } else {
                b_vals.push(v);
            }
        }
        let mut images: Vec<usize> = (1..=n).collect();
        for (slot, val) in a_slots.iter().zip(&a_vals) {
            images[slot - 1] = *val;
        }
        for (slot, val) in b_slots.iter().zip(&b_vals) {
            images[slot - 1] = *val;
        }
        out.push(SignedPermutation::new(
            Perm::from_images(images).expect("valid by construction"),
        ));
    }
    out
}

/// Index subsets of size k from 0..m, lexicographic.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    go(0, m, k, &mut cur, &mut out);
    out
}

const MAX_STRAIGHTEN_DEPTH: usize = 10_000;

/// Straightening engine for one shape, with a memo cache keyed by the
/// column-sorted tableau. Differentials revisit the same non-standard
/// tableaux heavily, so the cache matters.
pub struct Straightener {
    shape: Partition,
    syt: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    cache: HashMap<Tableau, Vec<Rational>>,
}

impl Straightener {
    pub fn new(shape: Partition) -> Straightener {
        let syt = enumerate_standard(&shape);
        let index = syt
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Straightener {
            shape,
            syt,
            index,
            cache: HashMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn syt(&self) -> &[Tableau] {
        &self.syt
    }

    pub fn dim(&self) -> usize {
        self.syt.len()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Coordinates of e(T) in the standard basis.
    pub fn straighten(&mut self, t: &Tableau) -> SpechtVector {
        assert_eq!(t.shape(), &self.shape, "shape mismatch");
        let coords = self.straighten_coords(t, 0);
        SpechtVector::from_coords(self.shape.clone(), coords)
    }

    fn straighten_coords(&mut self, t: &Tableau, depth: usize) -> Vec<Rational> {
        assert!(
            depth < MAX_STRAIGHTEN_DEPTH,
            "straightening recursion exceeded bound; dominance order violated"
        );
        let (sorted, sign) = t.sort_columns();
        let base = if let Some(cached) = self.cache.get(&sorted) {
            cached.clone()
        } else {
            let coords = self.expand_sorted(&sorted, depth);
            self.cache.insert(sorted, coords.clone());
            coords
        };
        if sign == 1 {
            base
        } else {
            base.iter().map(|c| -c).collect()
        }
    }

    /// `sorted` has ascending columns. Either it is standard, or the leftmost
    /// topmost row descent picks the Garnir relation to substitute.
    fn expand_sorted(&mut self, sorted: &Tableau, depth: usize) -> Vec<Rational> {
        match self.find_row_descent(sorted) {
            None => {
                let idx = self.index[sorted];
                let mut coords = vec![Rational::zero(); self.syt.len()];
                coords[idx] = Rational::one();
                coords
            }
            Some((col, row)) => {
                let pair = GarnirPair::new(sorted.clone(), col, row)
                    .expect("descent position is admissible");
                let mut coords = vec![Rational::zero(); self.syt.len()];
                for sp in garnir_transversal(&pair) {
                    let image = sorted.act(sp.perm());
                    if &image == sorted {
                        continue; // the identity term, moved to the left side
                    }
                    let sub = self.straighten_coords(&image, depth + 1);
                    if sp.sign() == 1 {
                        for (a, b) in coords.iter_mut().zip(&sub) {
                            *a -= b;
                        }
                    } else {
                        for (a, b) in coords.iter_mut().zip(&sub) {
                            *a += b;
                        }
                    }
                }
                coords
            }
        }
    }

    fn find_row_descent(&self, t: &Tableau) -> Option<(usize, usize)> {
        let heights = t.shape().conjugate();
        let hs = heights.parts();
        for col in 1..hs.len() {
            for row in 1..=hs[col] {
                if t.entry(row, col) > t.entry(row, col + 1) {
                    return Some((col, row));
                }
            }
        }
        None
    }

    /// Linear extension of e(S) -> straighten(sigma S).
    pub fn act(&mut self, sigma: &Perm, v: &SpechtVector) -> SpechtVector {
        assert_eq!(v.shape(), &self.shape);
        let mut out = SpechtVector::zero(self.shape.clone(), self.syt.len());
        let syt = self.syt.clone();
        for (i, c) in v.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let moved = self.straighten(&syt[i].act(sigma));
            out = out.add(&moved.scale(c));
        }
        out
    }

    /// Image under the isomorphism e(S) -> f_S.
    pub fn to_polynomial(&self, v: &SpechtVector) -> Polynomial {
        let n = self.shape.n();
        let mut out = Polynomial::zero(n);
        for (i, c) in v.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&specht_polynomial(&self.syt[i]).scale(c));
        }
        out
    }
}

/// Independent oracle: expresses e(T) in the standard basis by solving the
/// linear system over the tabloid expansion, never via Garnir relations.
pub struct TabloidSolver {
    shape: Partition,
    syt: Vec<Tableau>,
    tabloids: Vec<Tabloid>,
    tabloid_index: HashMap<Tabloid, usize>,
    // sparse columns of the expansion matrix, coefficient is +-1
    columns: Vec<Vec<(usize, i8)>>,
    pivot_rows: Vec<usize>,
    inverse: Vec<Vec<Rational>>, // inverse of the pivot-row square submatrix
}

impl TabloidSolver {
    pub fn new(shape: Partition) -> Result<TabloidSolver, SpechtError> {
        let syt = enumerate_standard(&shape);
        let tabloids = enumerate_tabloids(&shape);
        let tabloid_index: HashMap<Tabloid, usize> = tabloids
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let mut columns = Vec::with_capacity(syt.len());
        for s in &syt {
            let exp = polytabloid_expand(s);
            let mut col: Vec<(usize, i8)> = exp
                .coords()
                .iter()
                .map(|(tab, c)| {
                    let sign = if c > &Rational::zero() { 1i8 } else { -1i8 };
                    (tabloid_index[tab], sign)
                })
                .collect();
            col.sort_unstable_by_key(|&(i, _)| i);
            columns.push(col);
        }
        let pivot_rows = find_pivot_rows(&columns, tabloids.len())?;
        let k = syt.len();
        // dense square system on the pivot rows, inverted once
        let mut square = vec![vec![Rational::zero(); k]; k];
        for (c, col) in columns.iter().enumerate() {
            for &(r, s) in col {
                if let Some(pos) = pivot_rows.iter().position(|&pr| pr == r) {
                    square[pos][c] = if s == 1 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                }
            }
        }
        let inverse = invert_rational(square)
            .ok_or_else(|| SpechtError::SingularSystem("pivot submatrix".into()))?;
        Ok(TabloidSolver {
            shape,
            syt,
            tabloids,
            tabloid_index,
            columns,
            pivot_rows,
            inverse,
        })
    }

    pub fn syt(&self) -> &[Tableau] {
        &self.syt
    }

    /// Solve for the coordinates of e(T) and verify consistency on every
    /// tabloid, not just the pivot rows.
    pub fn straighten_oracle(&self, t: &Tableau) -> Result<SpechtVector, SpechtError> {
        assert_eq!(t.shape(), &self.shape);
        let target = polytabloid_expand(t);
        let mut rhs = vec![Rational::zero(); self.pivot_rows.len()];
        let mut dense_target: HashMap<usize, Rational> = HashMap::new();
        for (tab, c) in target.coords() {
            let idx = self.tabloid_index[tab];
            dense_target.insert(idx, c.clone());
            if let Some(pos) = self.pivot_rows.iter().position(|&pr| pr == idx) {
                rhs[pos] = c.clone();
            }
        }
        let k = self.syt.len();
        let mut coords = vec![Rational::zero(); k];
        for i in 0..k {
            let mut acc = Rational::zero();
            for (j, r) in rhs.iter().enumerate() {
                if !r.is_zero() {
                    acc += &self.inverse[i][j] * r;
                }
            }
            coords[i] = acc;
        }
        // full-system consistency check
        let mut residual: HashMap<usize, Rational> = dense_target;
        for (c, col) in self.columns.iter().enumerate() {
            if coords[c].is_zero() {
                continue;
            }
            for &(r, s) in col {
                let delta = if s == 1 {
                    coords[c].clone()
                } else {
                    -coords[c].clone()
                };
                let e = residual.entry(r).or_insert_with(Rational::zero);
                *e -= delta;
            }
        }
        if residual.values().any(|v| !v.is_zero()) {
            return Err(SpechtError::SingularSystem(format!(
                "e({t}) is not in the span of standard polytabloids"
            )));
        }
        Ok(SpechtVector::from_coords(self.shape.clone(), coords))
    }

    pub fn tabloid_count(&self) -> usize {
        self.tabloids.len()
    }
}

/// All tabloids of a shape, lexicographic on the sorted-row representation.
pub fn enumerate_tabloids(shape: &Partition) -> Vec<Tabloid> {
    let n = shape.n();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fn go(
        shape: &[usize],
        remaining: Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tabloid>,
    ) {
        if shape.is_empty() {
            let t = Tableau::new(rows.clone()).expect("valid rows");
            out.push(tabloid_of(&t));
            return;
        }
        let k = shape[0];
        for combo in combinations(remaining.len(), k) {
            let row: Vec<usize> = combo.iter().map(|&i| remaining[i]).collect();
            let rest: Vec<usize> = remaining
                .iter()
                .enumerate()
                .filter(|(i, _)| !combo.contains(i))
                .map(|(_, &v)| v)
                .collect();
            rows.push(row);
            go(&shape[1..], rest, rows, out);
            rows.pop();
        }
    }
    go(shape.parts(), (1..=n).collect(), &mut rows, &mut out);
    out.sort();
    out
}

/// Pivot-row selection by elimination modulo a word-size prime. Invertible
/// mod p implies invertible over Q, so the selection is sound.
fn find_pivot_rows(columns: &[Vec<(usize, i8)>], nrows: usize) -> Result<Vec<usize>, SpechtError> {
    const P: u64 = 2_147_483_647; // 2^31 - 1
    let mut reduced: Vec<(usize, Vec<u64>)> = Vec::new(); // (pivot_row, dense col)
    let mut pivots = Vec::new();
    for col in columns {
        let mut dense = vec![0u64; nrows];
        for &(r, s) in col {
            dense[r] = if s == 1 { 1 } else { P - 1 };
        }
        for (pr, other) in &reduced {
            if dense[*pr] != 0 {
                let factor = dense[*pr];
                let inv_lead = mod_inv(other[*pr], P);
                let m = factor * inv_lead % P;
                for r in 0..nrows {
                    if other[r] != 0 {
                        dense[r] = (dense[r] + P - m * other[r] % P) % P;
                    }
                }
            }
        }
        let pivot = dense.iter().position(|&v| v != 0).ok_or_else(|| {
            SpechtError::SingularSystem("standard polytabloids dependent (bug)".into())
        })?;
        pivots.push(pivot);
        reduced.push((pivot, dense));
    }
    Ok(pivots)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: p prime
    mod_pow(a, p - 2, p)
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

/// Gauss-Jordan inversion over the rationals; None if singular.
fn invert_rational(mut m: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let k = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let lead = m[col][col].clone();
        for j in 0..k {
            m[col][j] /= &lead;
            inv[col][j] /= &lead;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..k {
                    let mj = &m[col][j] * &f;
                    m[r][j] -= mj;
                    let ij = &inv[col][j] * &f;
                    inv[r][j] -= ij;
                }
            }
        }
    }
    Some(inv)
}
