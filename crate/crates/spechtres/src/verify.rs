//! Mechanical verification of the assembled complexes: chain condition,
//! minimality, Betti numbers, graded-strand exactness, the Hilbert-series
//! identity, the subspace-arrangement decomposition of the ideals, and the
//! well-definedness of the differential formulas.
//!
//! All checks are exact. Ranks of large strand matrices are certified by a
//! sandwich argument: elimination mod p gives a lower bound on the rational
//! rank, while the chain condition gives the matching upper bound; when the
//! bounds close, the rank is known exactly without rational arithmetic.
//! Fraction-free elimination is the fallback whenever they do not.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::SpechtError;
use crate::linalg::{SparseMat, RANK_PRIMES};
use crate::polyring::{graded_piece_basis, rat, specht_polynomial, Monomial, Polynomial};
use crate::resolution::{Family, GradedComplex};
use crate::specht::{garnir_transversal, GarnirPair, Straightener};
use crate::tableau::{enumerate_all_tableaux, enumerate_standard, Partition, Tableau};

/// Outcome of one verification check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub passed: bool,
    /// First counterexample found, when failing.
    pub witness: Option<String>,
    /// What was verified, including any degree bounds.
    pub detail: String,
    pub millis: u64,
}

impl VerificationReport {
    fn run<F>(check: &str, body: F) -> VerificationReport
    where
        F: FnOnce() -> Result<String, String>,
    {
        let start = Instant::now();
        let outcome = body();
        let millis = start.elapsed().as_millis() as u64;
        match outcome {
            Ok(detail) => VerificationReport {
                check: check.to_string(),
                passed: true,
                witness: None,
                detail,
                millis,
            },
            Err(witness) => VerificationReport {
                check: check.to_string(),
                passed: false,
                witness: Some(witness),
                detail: String::new(),
                millis,
            },
        }
    }

    pub fn summary_line(&self) -> String {
        if self.passed {
            format!("[PASS] {}: {} ({} ms)", self.check, self.detail, self.millis)
        } else {
            format!(
                "[FAIL] {}: {} ({} ms)",
                self.check,
                self.witness.as_deref().unwrap_or("no witness"),
                self.millis
            )
        }
    }
}

/// Graded Betti numbers beta_{i,j} as a sparse table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable(pub BTreeMap<(usize, u32), u64>);

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }
}

fn factorial(k: u64) -> u128 {
    (1..=k as u128).product::<u128>().max(1)
}

/// Closed-form Betti table from the two families' formulas.
pub fn betti_expected(family: Family) -> BettiTable {
    let mut t = BTreeMap::new();
    t.insert((0, 0), 1u64);
    match family {
        Family::N22 { n } => {
            let n = n as u64;
            for i in 1..=n - 3 {
                let num = factorial(n) * (n - i - 2) as u128 * i as u128;
                let den = factorial(i + 1) * factorial(n - i - 1) * (n - 1) as u128;
                assert_eq!(num % den, 0, "Betti closed form must be integral");
                t.insert((i as usize, (i + 1) as u32), (num / den) as u64);
            }
            t.insert((n as usize - 2, n as u32), 1);
        }
        Family::Dd1 { d } => {
            let d = d as u64;
            for i in 1..=d {
                let num = factorial(2 * d + 1);
                let den = (d + i + 1) as u128
                    * factorial(d + 1)
                    * factorial(d - i)
                    * factorial(i - 1);
                assert_eq!(num % den, 0, "Betti closed form must be integral");
                t.insert((i as usize, (d + i + 1) as u32), (num / den) as u64);
            }
        }
    }
    BettiTable(t)
}

/// Betti table read off an assembled complex (ranks at twists).
pub fn betti_from_complex(c: &GradedComplex) -> BettiTable {
    let mut t = BTreeMap::new();
    for (i, m) in c.modules.iter().enumerate() {
        t.insert((i, m.twist), m.rank as u64);
    }
    BettiTable(t)
}

/// Assembled ranks/twists must equal both the closed forms and the hook
/// dimensions of the stated shapes.
pub fn check_betti(c: &GradedComplex) -> VerificationReport {
    VerificationReport::run("betti", || {
        let expected = betti_expected(c.family);
        let actual = betti_from_complex(c);
        if expected != actual {
            return Err(format!(
                "betti table mismatch: expected {:?}, assembled {:?}",
                expected.0, actual.0
            ));
        }
        for (i, m) in c.modules.iter().enumerate() {
            let hook = m.shape.hook_dimension();
            if hook != m.rank as u64 {
                return Err(format!(
                    "module {i}: rank {} != hook dimension {hook} of shape {}",
                    m.rank, m.shape
                ));
            }
        }
        Ok(format!(
            "{} table entries match closed forms and hook dimensions",
            actual.0.len()
        ))
    })
}

/// d . d = 0, as exact polynomial matrix products.
pub fn check_chain(c: &GradedComplex) -> VerificationReport {
    VerificationReport::run("chain", || {
        for i in 2..=c.family.top_index() {
            let prod = c.differential(i - 1).compose(c.differential(i));
            let witness = prod
                .entries()
                .next()
                .map(|(r, col, p)| (r, col, p.to_string()));
            if let Some((r, col, p)) = witness {
                return Err(format!(
                    "d_{} . d_{} has nonzero entry at ({r},{col}): {p}",
                    i - 1,
                    i
                ));
            }
        }
        Ok(format!(
            "all {} compositions vanish exactly",
            c.family.top_index().saturating_sub(1)
        ))
    })
}

/// No differential entry has a constant term (entries lie in the maximal
/// ideal), so the resolution is minimal.
pub fn check_minimal(c: &GradedComplex) -> VerificationReport {
    VerificationReport::run("minimal", || {
        for (i, d) in c.differentials.iter().enumerate() {
            for (r, col, p) in d.entries() {
                if !num_traits::Zero::is_zero(&p.constant_term()) {
                    return Err(format!(
                        "d_{} entry ({r},{col}) has constant term: {p}",
                        i + 1
                    ));
                }
            }
        }
        Ok("no unit entries in any differential".to_string())
    })
}

fn monomial_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect()
}

/// Dimension of the degree-e piece of F_i.
pub fn strand_dim(c: &GradedComplex, i: usize, e: u32) -> usize {
    let m = &c.modules[i];
    if e < m.twist {
        0
    } else {
        m.rank * graded_piece_basis(c.nvars, e - m.twist).len()
    }
}

/// The linear map [d_i]_e as a sparse matrix over the monomial-tensor
/// bases of the degree-e pieces of F_i and F_{i-1}.
pub fn strand_matrix(c: &GradedComplex, i: usize, e: u32) -> SparseMat {
    let src = &c.modules[i];
    let tgt = &c.modules[i - 1];
    let rows = strand_dim(c, i - 1, e);
    let cols = strand_dim(c, i, e);
    let mut mat = SparseMat::zero(rows, cols);
    if rows == 0 || cols == 0 {
        return mat;
    }
    let src_mons = graded_piece_basis(c.nvars, e - src.twist);
    let tgt_mons = graded_piece_basis(c.nvars, e - tgt.twist);
    let tgt_idx = monomial_index(&tgt_mons);
    let d = c.differential(i);
    for col in 0..src.rank {
        for (sm, mon) in src_mons.iter().enumerate() {
            let col_index = col * src_mons.len() + sm;
            for (r, p) in d.column(col) {
                for (pm, coeff) in p.terms() {
                    let target_mon = pm.mul(mon);
                    let row = r * tgt_mons.len() + tgt_idx[&target_mon];
                    mat.push_entry(row, col_index, coeff.clone());
                }
            }
        }
    }
    mat
}

/// Certified exact ranks of a strand's differentials. `dims[i]` is the
/// dimension of F_i's degree-e piece for 0 <= i <= top. Returns the ranks
/// if the complex is exact at F_1..F_top in this degree, otherwise an
/// error message naming the first failure.
fn certify_strand(mats: &[SparseMat], dims: &[usize]) -> Result<Vec<usize>, String> {
    let top = mats.len();
    let closes = |lbs: &[usize]| -> bool {
        (1..=top).all(|i| lbs[i - 1] + lbs.get(i).copied().unwrap_or(0) == dims[i])
    };
    // lower bounds from one prime usually close the certificate
    let mut lbs = vec![0usize; mats.len()];
    for &p in RANK_PRIMES.iter() {
        for (lb, m) in lbs.iter_mut().zip(mats) {
            if let Some(r) = m.rank_mod(p) {
                *lb = (*lb).max(r);
            }
        }
        if closes(&lbs) {
            return Ok(lbs);
        }
    }
    // exact fallback
    let exact: Vec<usize> = mats.iter().map(|m| m.rank_exact()).collect();
    for i in 1..=top {
        let ker = dims[i] - exact[i - 1];
        let im = exact.get(i).copied().unwrap_or(0);
        if ker != im {
            return Err(format!(
                "exactness fails at homological index {i}: dim ker = {ker}, rank of incoming map = {im}"
            ));
        }
    }
    Ok(exact)
}

/// Strand-by-strand exactness at F_i for all i >= 1, for every internal
/// degree e <= max_degree (default: top twist + 2). This is degree-bounded
/// evidence, not a proof for all degrees.
pub fn check_strand_exactness(c: &GradedComplex, max_degree: Option<u32>) -> VerificationReport {
    let d = max_degree.unwrap_or(c.top_twist() + 2);
    VerificationReport::run("strands", || {
        let top = c.family.top_index();
        let failures: Vec<String> = (0..=d)
            .into_par_iter()
            .filter_map(|e| {
                let dims: Vec<usize> = (0..=top).map(|i| strand_dim(c, i, e)).collect();
                let mats: Vec<SparseMat> = (1..=top).map(|i| strand_matrix(c, i, e)).collect();
                certify_strand(&mats, &dims)
                    .err()
                    .map(|msg| format!("degree {e}: {msg}"))
            })
            .collect();
        if let Some(first) = failures.first() {
            return Err(first.clone());
        }
        Ok(format!(
            "strand-verified up to degree {d} (degree-bounded evidence, not a proof for all degrees)"
        ))
    })
}

// ---- univariate integer polynomials for the Hilbert identity ----

fn poly1_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly1_trim(mut a: Vec<i128>) -> Vec<i128> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn one_minus_t_pow(k: usize) -> Vec<i128> {
    let mut acc = vec![1i128];
    for _ in 0..k {
        acc = poly1_mul(&acc, &[1, -1]);
    }
    acc
}

/// Euler-characteristic numerator sum over the Betti table.
fn euler_numerator(c: &GradedComplex) -> Vec<i128> {
    let mut num = vec![0i128; c.top_twist() as usize + 1];
    for (i, m) in c.modules.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        num[m.twist as usize] += sign * m.rank as i128;
    }
    poly1_trim(num)
}

/// Hilbert numerator identity. For (n-2,2): the alternating Betti sum must
/// equal (1 + (n-2)t + t^2)(1-t)^{n-2}. For (d,d,1): (1-t)^d must divide
/// the numerator with a nonnegative quotient (the Hilbert series of the
/// Cohen-Macaulay quotient of codimension d).
pub fn check_hilbert_numerator(c: &GradedComplex) -> VerificationReport {
    VerificationReport::run("hilbert", || {
        let num = euler_numerator(c);
        match c.family {
            Family::N22 { n } => {
                let rhs = poly1_trim(poly1_mul(
                    &[1, (n as i128) - 2, 1],
                    &one_minus_t_pow(n - 2),
                ));
                if num != rhs {
                    return Err(format!(
                        "numerator {num:?} != (1+(n-2)t+t^2)(1-t)^(n-2) = {rhs:?}"
                    ));
                }
                Ok(format!(
                    "alternating Betti sum equals (1+{}t+t^2)(1-t)^{}",
                    n - 2,
                    n - 2
                ))
            }
            Family::Dd1 { d } => {
                // synthetic division by (1-t)^d, i.e. d divisions by (1-t)
                let mut q = num;
                for _ in 0..d {
                    // divide by (1 - t): q(t) = (1-t) h(t) requires
                    // h_k = q_k + h_{k-1}
                    let mut h = vec![0i128; q.len().saturating_sub(1).max(1)];
                    let mut carry = 0i128;
                    for k in 0..q.len() {
                        let hk = q[k] + carry;
                        if k + 1 == q.len() {
                            if hk != 0 {
                                return Err(format!(
                                    "(1-t)^{d} does not divide the numerator {q:?}"
                                ));
                            }
                        } else {
                            h[k] = hk;
                            carry = hk;
                        }
                    }
                    q = poly1_trim(h);
                }
                if q.iter().any(|&x| x < 0) {
                    return Err(format!("Hilbert series numerator {q:?} has negative coefficients"));
                }
                Ok(format!(
                    "(1-t)^{d} divides the numerator; Hilbert numerator {q:?} is nonnegative"
                ))
            }
        }
    })
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(1, n, k, &mut cur, &mut out);
    out
}

/// Generator shape and the subset size of the arrangement decomposition.
/// A column of the shape dies under collapsing a set F whenever two of its
/// entries land in F; counting forced hits shows every Specht polynomial
/// vanishes exactly when |F| = lambda_1 + 1.
fn decomposition_data(family: Family) -> (Partition, usize) {
    match family {
        Family::N22 { n } => (Partition::new(vec![n - 2, 2]).unwrap(), n - 1),
        Family::Dd1 { d } => (
            Partition::new(vec![d, d, 1]).unwrap(),
            d + 1,
        ),
    }
}

/// Degree-wise equality of the Specht ideal with the intersection of the
/// difference ideals over all subsets F of the decomposition size, up to
/// max_degree (default: top twist of the family's resolution).
pub fn check_decomposition(family: Family, max_degree: Option<u32>) -> VerificationReport {
    VerificationReport::run("decomposition", || {
        let n = family.nvars();
        let (gen_shape, fsize) = decomposition_data(family);
        let gens: Vec<Polynomial> = enumerate_standard(&gen_shape)
            .iter()
            .map(specht_polynomial)
            .collect();
        let gen_deg = gens[0].degree();
        let fsets = subsets_of(n, fsize);

        // containment: every generator collapses to zero for every F
        for (k, g) in gens.iter().enumerate() {
            for f in &fsets {
                if !g.substitute_collapse(f).is_zero() {
                    return Err(format!(
                        "generator {k} does not lie in the ideal of F = {f:?}"
                    ));
                }
            }
        }

        let top = match family {
            Family::N22 { n } => n as u32,
            Family::Dd1 { d } => (2 * d + 1) as u32,
        };
        let d_max = max_degree.unwrap_or(top);
        for e in 0..=d_max {
            let mons = graded_piece_basis(n, e);
            let dim = mons.len();
            let idx = monomial_index(&mons);

            // ideal side: span of monomial * generator in degree e
            let mut gmat = SparseMat::zero(dim, 0);
            if e >= gen_deg {
                let shift = graded_piece_basis(n, e - gen_deg);
                gmat = SparseMat::zero(dim, gens.len() * shift.len());
                for (gi, g) in gens.iter().enumerate() {
                    for (mi, m) in shift.iter().enumerate() {
                        let col = gi * shift.len() + mi;
                        for (pm, c) in g.terms() {
                            gmat.push_entry(idx[&pm.mul(m)], col, c.clone());
                        }
                    }
                }
            }

            // arrangement side: common kernel of the collapse maps on R_e
            let mut smat = SparseMat::zero(fsets.len() * dim, dim);
            for (fi, f) in fsets.iter().enumerate() {
                for (mi, m) in mons.iter().enumerate() {
                    let collapsed = m.collapse(f, f[0]);
                    smat.push_entry(fi * dim + idx[&collapsed], mi, rat(1));
                }
            }

            // containment gives rank(G) <= dim - rank(S); equality in degree e
            // holds iff rank(G) + rank(S) = dim, certified by lower bounds.
            let mut ok = false;
            for &p in RANK_PRIMES.iter() {
                let rg = gmat.rank_mod(p).unwrap_or(0);
                let rs = smat.rank_mod(p).unwrap_or(0);
                if rg + rs == dim {
                    ok = true;
                    break;
                }
            }
            if !ok {
                let rg = gmat.rank_exact();
                let rs = smat.rank_exact();
                if rg + rs != dim {
                    return Err(format!(
                        "degree {e}: ideal has dimension {rg}, intersection has dimension {}",
                        dim - rs
                    ));
                }
            }
        }
        Ok(format!(
            "ideal equals the intersection over all {} subsets of size {fsize}, degree-checked up to {d_max}",
            subsets_of(n, fsize).len()
        ))
    })
}

/// [d_i] restricted to the generating degree of F_i is injective.
pub fn check_irreducible_strand(c: &GradedComplex, i: usize) -> VerificationReport {
    VerificationReport::run(&format!("irreducible(d_{i})"), || {
        let e = c.modules[i].twist;
        let mat = strand_matrix(c, i, e);
        let want = c.modules[i].rank;
        let got = if mat.rank_lower_bound() == want {
            want
        } else {
            mat.rank_exact()
        };
        if got != want {
            return Err(format!(
                "[d_{i}] at degree {e} has rank {got}, expected full column rank {want}"
            ));
        }
        Ok(format!("[d_{i}] at degree {e} has full column rank {want}"))
    })
}

/// How a well-definedness run samples its Garnir patterns.
pub enum WellDefScope {
    /// Every tableau of every middle source shape, every admissible pattern.
    Exhaustive,
    /// A fixed number of random (tableau, pattern) samples.
    Randomized { samples: usize, seed: u64 },
}

fn middle_indices(family: Family) -> Vec<usize> {
    match family {
        // d_i for 2 <= i <= n-3 plus the top map have tableau-indexed
        // formulas; the top n22 map has a one-dimensional source, so only
        // the middles need the Garnir test.
        Family::N22 { n } => (2..=n.saturating_sub(3)).collect(),
        // the top dd1 map is only defined on the standard basis
        Family::Dd1 { d } => (2..d).collect(),
    }
}

fn source_shape(family: Family, i: usize) -> Partition {
    match family {
        Family::N22 { n } => {
            let mut parts = vec![n - 1 - i, 2];
            parts.extend(std::iter::repeat(1).take(i - 1));
            Partition::new(parts).unwrap()
        }
        Family::Dd1 { d } => {
            let mut parts = vec![d, d - i + 1];
            parts.extend(std::iter::repeat(1).take(i));
            Partition::new(parts).unwrap()
        }
    }
}

fn target_shape(family: Family, i: usize) -> Partition {
    match family {
        Family::N22 { n } => {
            if i == 2 {
                Partition::new(vec![n - 2, 2]).unwrap()
            } else {
                let mut parts = vec![n - i, 2];
                parts.extend(std::iter::repeat(1).take(i - 2));
                Partition::new(parts).unwrap()
            }
        }
        Family::Dd1 { d } => {
            let mut parts = vec![d, d - i + 2];
            parts.extend(std::iter::repeat(1).take(i - 1));
            Partition::new(parts).unwrap()
        }
    }
}

fn diff_image(
    family: Family,
    t: &Tableau,
    i: usize,
    st: &mut Straightener,
) -> Result<Vec<Polynomial>, SpechtError> {
    match family {
        Family::N22 { .. } => crate::resolution::diff_n22_middle(t, i, st),
        Family::Dd1 { .. } => crate::resolution::diff_dd1(t, i, st),
    }
}

/// The Garnir relation maps to zero: for each sampled source tableau T and
/// admissible pattern, sum of sgn(sigma) * d(e(sigma T)) over the Garnir
/// transversal vanishes after straightening. This is the executable form
/// of the well-definedness theorems for the middle differentials.
pub fn check_well_defined(family: Family, scope: WellDefScope) -> VerificationReport {
    VerificationReport::run("welldef", || {
        let n = family.nvars();
        let mut tested = 0usize;
        let mut test_case = |t: &Tableau,
                             pair: &GarnirPair,
                             i: usize,
                             st: &mut Straightener|
         -> Result<(), String> {
            let mut acc = vec![Polynomial::zero(n); st.dim()];
            for sp in garnir_transversal(pair) {
                let img = diff_image(family, &t.act(sp.perm()), i, st)
                    .map_err(|e| format!("image failed: {e}"))?;
                for (a, p) in acc.iter_mut().zip(img) {
                    *a = a.add(&p.scale(&rat(sp.sign() as i64)));
                }
            }
            if acc.iter().any(|p| !p.is_zero()) {
                return Err(format!(
                    "Garnir relation not killed by d_{i}: T = {t}, A = {:?}, B = {:?}",
                    pair.a_entries(),
                    pair.b_entries()
                ));
            }
            tested += 1;
            Ok(())
        };

        match scope {
            WellDefScope::Exhaustive => {
                for i in middle_indices(family) {
                    let mut st = Straightener::new(target_shape(family, i));
                    for t in enumerate_all_tableaux(&source_shape(family, i)) {
                        for pair in GarnirPair::enumerate(&t) {
                            test_case(&t, &pair, i, &mut st)?;
                        }
                    }
                }
            }
            WellDefScope::Randomized { samples, seed } => {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let indices = middle_indices(family);
                if indices.is_empty() {
                    return Ok("no middle differentials to test".to_string());
                }
                let mut straighteners: HashMap<usize, Straightener> = indices
                    .iter()
                    .map(|&i| (i, Straightener::new(target_shape(family, i))))
                    .collect();
                for _ in 0..samples {
                    let i = indices[rng.gen_range(0..indices.len())];
                    let shape = source_shape(family, i);
                    let mut entries: Vec<usize> = (1..=n).collect();
                    entries.shuffle(&mut rng);
                    let mut rows = Vec::new();
                    let mut pos = 0;
                    for &len in shape.parts() {
                        rows.push(entries[pos..pos + len].to_vec());
                        pos += len;
                    }
                    let t = Tableau::new(rows).unwrap();
                    let pairs = GarnirPair::enumerate(&t);
                    let pair = &pairs[rng.gen_range(0..pairs.len())];
                    let st = straighteners.get_mut(&i).unwrap();
                    test_case(&t, pair, i, st)?;
                }
            }
        }
        Ok(format!("{tested} Garnir relations map to zero"))
    })
}

/// Flips the sign of one randomly chosen nonzero differential entry,
/// returning the mutated complex and a description of the flipped entry.
pub fn flip_random_entry<R: Rng>(c: &GradedComplex, rng: &mut R) -> (GradedComplex, String) {
    let mut sites = Vec::new();
    for (di, d) in c.differentials.iter().enumerate() {
        for (r, col, _) in d.entries() {
            sites.push((di, r, col));
        }
    }
    let &(di, r, col) = sites.choose(rng).expect("complex has no nonzero entries");
    let mut mutated = c.clone();
    let d = &c.differentials[di];
    let dense: Vec<Vec<Polynomial>> = (0..d.cols())
        .map(|cc| {
            let mut column = vec![Polynomial::zero(c.nvars); d.rows()];
            for (rr, p) in d.column(cc) {
                column[*rr] = if *rr == r && cc == col { p.neg() } else { p.clone() };
            }
            column
        })
        .collect();
    mutated.differentials[di] =
        crate::resolution::DifferentialMatrix::from_dense_columns(d.rows(), dense);
    (
        mutated,
        format!("flipped sign of d_{} entry ({r},{col})", di + 1),
    )
}
