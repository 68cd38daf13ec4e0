//! Partitions, Young tableaux, tabloids and symmetric-group actions.
//!
//! Tableaux are bijective fillings of a Young diagram by `1..=n`, stored
//! row-major. Cells are addressed `(row, col)` 1-indexed. The canonical
//! order on standard tableaux is lexicographic on the row-reading word
//! (rows top to bottom, left to right); every matrix layout downstream is
//! fixed by this order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::SpechtError;

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SpechtError> {
        if parts.is_empty() {
            return Err(SpechtError::InvalidPartition("empty part list".into()));
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(SpechtError::InvalidPartition(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(SpechtError::InvalidPartition("zero part".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Column heights, i.e. the conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell at (row, col), both 1-indexed.
    fn hook_len(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row - 1] - col;
        let leg = self.parts[row..].iter().filter(|&&p| p >= col).count();
        arm + leg + 1
    }

    /// Number of standard Young tableaux of this shape, by the hook formula.
    pub fn hook_dimension(&self) -> u64 {
        // n!/prod(hooks), computed by incremental exact division to stay in u64
        // for desk-scale n.
        let n = self.n();
        let mut hooks = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                hooks.push(self.hook_len(r + 1, c) as u128);
            }
        }
        let mut num: u128 = 1;
        let mut den: u128 = hooks.iter().product();
        for k in 1..=n as u128 {
            num *= k;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num as u64
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        go(n, n, &mut cur, &mut out);
        out
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SpechtError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
        let parts =
            parts.map_err(|_| SpechtError::InvalidPartition(format!("cannot parse {s:?}")))?;
        Partition::new(parts)
    }
}

/// A permutation of `[n]`, stored as the full image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>, // images[i-1] = sigma(i), values in 1..=n
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm, SpechtError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(SpechtError::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Transposition (a b) on [n].
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// Composition: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y - 1] = i + 1;
        }
        Perm { images }
    }

    /// Parity: +1 for even, -1 for odd.
    pub fn parity(&self) -> i8 {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

/// A permutation carrying its sign, fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Perm,
    sign: i8,
}

impl SignedPermutation {
    pub fn new(perm: Perm) -> SignedPermutation {
        let sign = perm.parity();
        SignedPermutation { perm, sign }
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

/// A Young tableau: bijective filling of a shape by 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Tableau, SpechtError> {
        let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = Partition::new(parts)
            .map_err(|_| SpechtError::InvalidTableau("row lengths are not a partition".into()))?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return Err(SpechtError::InvalidTableau(format!(
                        "entries are not a bijection onto 1..={n}"
                    )));
                }
                seen[x] = true;
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at (row, col), 1-indexed.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    /// Entries of column `col` (1-indexed), top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|r| r.get(col - 1).copied())
            .collect()
    }

    pub fn num_cols(&self) -> usize {
        self.shape.parts()[0]
    }

    pub fn is_standard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for c in 1..=self.num_cols() {
            let col = self.column(c);
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        true
    }

    /// Row-reading word: rows top to bottom, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Relabel entries through sigma; shape is unchanged.
    pub fn act(&self, sigma: &Perm) -> Tableau {
        assert_eq!(sigma.n(), self.n(), "permutation degree mismatch");
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| sigma.apply(x)).collect())
                .collect(),
        }
    }

    /// Sort every column ascending, returning the sorted tableau and the sign
    /// of the column permutation applied.
    pub fn sort_columns(&self) -> (Tableau, i8) {
        let mut rows = self.rows.clone();
        let mut sign = 1i8;
        for c in 0..self.num_cols() {
            let mut col: Vec<usize> = rows.iter().filter_map(|r| r.get(c).copied()).collect();
            // count inversions for the sign of the sorting permutation
            for i in 0..col.len() {
                for j in i + 1..col.len() {
                    if col[i] > col[j] {
                        sign = -sign;
                    }
                }
            }
            col.sort_unstable();
            for (r, &v) in col.iter().enumerate() {
                rows[r][c] = v;
            }
        }
        (
            Tableau {
                shape: self.shape.clone(),
                rows,
            },
            sign,
        )
    }
}

impl fmt::Display for Tableau {
    /// Textual format: rows separated by "/", entries comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = SpechtError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Result<Vec<Vec<usize>>, _> = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect();
        let rows = rows.map_err(|_| SpechtError::InvalidTableau(format!("cannot parse {s:?}")))?;
        Tableau::new(rows)
    }
}

impl serde::Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A tabloid: row contents only, each row stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "{{{}}}",
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Canonical form of a tableau's row contents.
pub fn tabloid_of(t: &Tableau) -> Tabloid {
    let mut rows: Vec<Vec<usize>> = t.rows().to_vec();
    for r in &mut rows {
        r.sort_unstable();
    }
    Tabloid {
        shape: t.shape().clone(),
        rows,
    }
}

/// All standard Young tableaux of `shape`, lexicographic by row-reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<Tableau> {
    let n = shape.n();
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]) .collect();
    let mut out = Vec::new();

    // Place 1..=n one at a time into any cell whose left and upper neighbors
    // are already filled; rows/columns end up increasing automatically.
    fn place(
        k: usize,
        n: usize,
        parts: &[usize],
        fill: &mut [usize], // next free column index per row
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k > n {
            let t = Tableau::new(rows.clone()).expect("valid by construction");
            out.push(t);
            return;
        }
        for r in 0..parts.len() {
            let c = fill[r];
            if c >= parts[r] {
                continue;
            }
            // column constraint: cell above must be filled
            if r > 0 && fill[r - 1] <= c {
                continue;
            }
            rows[r][c] = k;
            fill[r] += 1;
            place(k + 1, n, parts, fill, rows, out);
            fill[r] -= 1;
            rows[r][c] = 0;
        }
    }

    let mut fill = vec![0usize; parts.len()];
    place(1, n, &parts, &mut fill, &mut rows, &mut out);
    out.sort_by(|a, b| a.reading_word().cmp(&b.reading_word()));
    out
}

/// Hook-length count of standard tableaux.
pub fn hook_dimension(shape: &Partition) -> u64 {
    shape.hook_dimension()
}

/// All elements of the column stabilizer S(C_1) x ... x S(C_k), with signs.
pub fn column_stabilizer(t: &Tableau) -> Vec<SignedPermutation> {
    let n = t.n();
    let columns: Vec<Vec<usize>> = (1..=t.num_cols()).map(|c| t.column(c)).collect();
    let mut result = vec![Perm::identity(n)];
    for col in &columns {
        let perms_of_col = permutations_of(col);
        let mut next = Vec::with_capacity(result.len() * perms_of_col.len());
        for base in &result {
            for assignment in &perms_of_col {
                let mut images = base.images_clone();
                for (i, &src) in col.iter().enumerate() {
                    images[src - 1] = assignment[i];
                }
                next.push(Perm { images });
            }
        }
        result = next;
    }
    result.into_iter().map(SignedPermutation::new).collect()
}

impl Perm {
    fn images_clone(&self) -> Vec<usize> {
        self.images.clone()
    }
}

/// All orderings of `items` (as image lists in the same slot order).
fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; items.len()];
    fn go(
        items: &[usize],
        used: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == items.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                go(items, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(items, &mut used, &mut cur, &mut out);
    out
}

/// Row stabilizer elements (used in tests for tabloid invariance).
pub fn row_stabilizer(t: &Tableau) -> Vec<Perm> {
    let n = t.n();
    let mut result = vec![Perm::identity(n)];
    for row in t.rows() {
        let perms_of_row = permutations_of(row);
        let mut next = Vec::with_capacity(result.len() * perms_of_row.len());
        for base in &result {
            for assignment in &perms_of_row {
                let mut images = base.images_clone();
                for (i, &src) in row.iter().enumerate() {
                    images[src - 1] = assignment[i];
                }
                next.push(Perm { images });
            }
        }
        result = next;
    }
    result
}

/// All tableaux of a shape (brute force; test oracle for small n).
pub fn enumerate_all_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.n();
    let entries: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for perm in permutations_of(&entries) {
        let mut rows = Vec::new();
        let mut it = perm.into_iter();
        for &p in shape.parts() {
            rows.push((&mut it).take(p).collect::<Vec<_>>());
        }
        out.push(Tableau::new(rows).unwrap());
    }
    out
}

/// Distinct column-content sets, used as a sanity check in tests.
pub fn column_sets(t: &Tableau) -> Vec<BTreeSet<usize>> {
    (1..=t.num_cols())
        .map(|c| t.column(c).into_iter().collect())
        .collect()
}
