//! Construction of the graded complexes resolving R/I^Sp_(n-2,2) and
//! R/I^Sp_(d,d,1).
//!
//! Free modules are V_lambda (x) R(-j) with the standard polytabloids as
//! basis; differentials are assembled column by column from the tableau
//! surgeries below, straightening every image term into the SYT basis.

use serde::{Deserialize, Serialize};

use crate::error::SpechtError;
use crate::polyring::{rat, Monomial, Polynomial, Rational};
use crate::specht::Straightener;
use crate::tableau::{enumerate_standard, Partition, Perm, Tableau};

/// Which of the two resolution families a complex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    #[serde(rename = "n22")]
    N22 { n: usize },
    #[serde(rename = "dd1")]
    Dd1 { d: usize },
}

impl Family {
    /// Number of polynomial variables (n, or 2d+1).
    pub fn nvars(&self) -> usize {
        match *self {
            Family::N22 { n } => n,
            Family::Dd1 { d } => 2 * d + 1,
        }
    }

    /// Homological length of the resolution (index of the last module).
    pub fn top_index(&self) -> usize {
        match *self {
            Family::N22 { n } => n - 2,
            Family::Dd1 { d } => d,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::N22 { n } => format!("(n-2,2) with n={n}"),
            Family::Dd1 { d } => format!("(d,d,1) with d={d}"),
        }
    }
}

/// One free module F_i = V_shape (x) R(-twist).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeModuleSpec {
    pub shape: Partition,
    pub twist: u32,
    pub rank: usize,
}

impl FreeModuleSpec {
    pub fn new(shape: Partition, twist: u32) -> FreeModuleSpec {
        let rank = shape.hook_dimension() as usize;
        FreeModuleSpec { shape, twist, rank }
    }

    /// Standard tableaux indexing the basis, in the canonical order.
    pub fn basis(&self) -> Vec<Tableau> {
        enumerate_standard(&self.shape)
    }
}

/// A differential stored column-major: one sparse column of polynomial
/// entries per source basis element, rows indexed by the target basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DifferentialMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Polynomial)>>,
}

impl DifferentialMatrix {
    pub fn from_dense_columns(rows: usize, dense: Vec<Vec<Polynomial>>) -> DifferentialMatrix {
        let cols = dense.len();
        let columns = dense
            .into_iter()
            .map(|col| {
                debug_assert_eq!(col.len(), rows);
                col.into_iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .collect()
            })
            .collect();
        DifferentialMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, Polynomial)] {
        &self.columns[c]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, p)| (*r, c, p)))
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&Polynomial> {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, p)| p)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Re-tags every entry with the ambient variable count. Deserialized
    /// polynomials infer their variable count from the variables actually
    /// present, so complexes read back from JSON need this fix-up.
    pub fn set_nvars(&mut self, nvars: usize) -> Result<(), SpechtError> {
        for col in &mut self.columns {
            for (_, p) in col.iter_mut() {
                *p = std::mem::replace(p, Polynomial::zero(nvars)).with_nvars(nvars)?;
            }
        }
        Ok(())
    }

    /// Matrix product self * next, where next maps into self's source.
    pub fn compose(&self, next: &DifferentialMatrix) -> DifferentialMatrix {
        assert_eq!(self.cols, next.rows, "composition shape mismatch");
        let nvars = self
            .entries()
            .next()
            .map(|(_, _, p)| p.nvars())
            .or_else(|| next.entries().next().map(|(_, _, p)| p.nvars()))
            .unwrap_or(1);
        let dense: Vec<Vec<Polynomial>> = next
            .columns
            .iter()
            .map(|ncol| {
                let mut acc = vec![Polynomial::zero(nvars); self.rows];
                for (k, q) in ncol {
                    for (r, p) in &self.columns[*k] {
                        acc[*r] = acc[*r].add(&p.mul(q));
                    }
                }
                acc
            })
            .collect();
        DifferentialMatrix::from_dense_columns(self.rows, dense)
    }
}

/// An assembled graded complex F_top -> ... -> F_1 -> F_0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradedComplex {
    pub family: Family,
    pub nvars: usize,
    pub modules: Vec<FreeModuleSpec>,
    pub differentials: Vec<DifferentialMatrix>,
}

impl GradedComplex {
    /// The differential d_i : F_i -> F_{i-1}, for 1 <= i <= top_index.
    pub fn differential(&self, i: usize) -> &DifferentialMatrix {
        &self.differentials[i - 1]
    }

    pub fn top_twist(&self) -> u32 {
        self.modules.last().unwrap().twist
    }

    /// Re-tags all entries with this complex's variable count; required
    /// after deserialization.
    pub fn normalize_nvars(&mut self) -> Result<(), SpechtError> {
        let n = self.nvars;
        for d in &mut self.differentials {
            d.set_nvars(n)?;
        }
        Ok(())
    }

    /// Checks lengths, rank bookkeeping, and entry homogeneity.
    pub fn validate(&self) -> Result<(), SpechtError> {
        if self.modules.len() != self.differentials.len() + 1 {
            return Err(SpechtError::InvalidParameter(
                "module/differential count mismatch".into(),
            ));
        }
        for (i, d) in self.differentials.iter().enumerate() {
            let (tgt, src) = (&self.modules[i], &self.modules[i + 1]);
            if d.rows() != tgt.rank || d.cols() != src.rank {
                return Err(SpechtError::InvalidParameter(format!(
                    "differential {} has shape {}x{}, expected {}x{}",
                    i + 1,
                    d.rows(),
                    d.cols(),
                    tgt.rank,
                    src.rank
                )));
            }
            let deg = src.twist - tgt.twist;
            for (r, c, p) in d.entries() {
                if !p.is_homogeneous_of_degree(deg) {
                    return Err(SpechtError::InvalidParameter(format!(
                        "entry ({r},{c}) of differential {} is not homogeneous of degree {deg}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn trivial_row_shape(n: usize) -> Partition {
    Partition::new(vec![n]).expect("n >= 1")
}

/// d_1 sends e(T) (x) 1 to the Specht polynomial f_T.
pub fn diff_n22_first(t: &Tableau) -> Polynomial {
    crate::polyring::specht_polynomial(t)
}

fn remove_at(v: &[usize], idx: usize) -> Vec<usize> {
    let mut out = v.to_vec();
    out.remove(idx);
    out
}

/// Builds a tableau from explicit rows, panicking on malformed input --
/// used only for the internal surgeries whose shapes are correct by
/// construction.
fn tableau_rows(rows: Vec<Vec<usize>>) -> Tableau {
    Tableau::new(rows).expect("surgery produced an invalid tableau")
}

/// Image of e(T) (x) 1 under d_i of the (n-2,2) family, 2 <= i <= n-3,
/// as a dense vector of polynomials over the target SYT basis.
///
/// T has shape (n-1-i, 2, 1^{i-1}); column 1 holds a_1..a_{i+1}, the second
/// column b_1, b_2, and the rest of row 1 the c's. T_j moves a_j from
/// column 1 to the end of row 1, with coefficient (-1)^{j-1} x_{a_j}.
pub fn diff_n22_middle(
    t: &Tableau,
    i: usize,
    st: &mut Straightener,
) -> Result<Vec<Polynomial>, SpechtError> {
    let n = t.n();
    if !(2..=n.saturating_sub(3)).contains(&i) {
        return Err(SpechtError::InvalidParameter(format!(
            "differential index {i} out of range for n={n}"
        )));
    }
    let mut expected = vec![n - 1 - i, 2];
    expected.extend(std::iter::repeat(1).take(i - 1));
    if t.shape().parts() != expected {
        return Err(SpechtError::InvalidTableau(format!(
            "shape {:?} does not match source of differential {i}",
            t.shape().parts()
        )));
    }
    let a = t.column(1);
    let b1 = t.entry(1, 2);
    let b2 = t.entry(2, 2);
    let c: Vec<usize> = t.rows()[0][2..].to_vec();

    let mut image = vec![Polynomial::zero(n); st.dim()];
    for (j0, &aj) in a.iter().enumerate() {
        let rem = remove_at(&a, j0);
        let mut row1 = vec![rem[0], b1];
        row1.extend_from_slice(&c);
        row1.push(aj);
        let mut rows = vec![row1, vec![rem[1], b2]];
        rows.extend(rem[2..].iter().map(|&x| vec![x]));
        let tj = tableau_rows(rows);
        let coords = st.straighten(&tj);
        let sign = if j0 % 2 == 0 { rat(1) } else { rat(-1) };
        let xa = Monomial::var(aj);
        accumulate(&mut image, coords.coords(), &sign, &xa, n);
    }
    Ok(image)
}

/// Image of the generator of F_{n-2} (the single column tableau 1..n)
/// under the top differential of the (n-2,2) family.
pub fn diff_n22_top(n: usize, st: &mut Straightener) -> Result<Vec<Polynomial>, SpechtError> {
    if n < 4 {
        return Err(SpechtError::InvalidParameter(format!(
            "n22 family needs n >= 4, got {n}"
        )));
    }
    let mut image = vec![Polynomial::zero(n); st.dim()];
    for j in 1..=n {
        for k in j + 1..=n {
            let rem: Vec<usize> = (1..=n).filter(|&x| x != j && x != k).collect();
            let mut rows = vec![vec![rem[0], j], vec![rem[1], k]];
            rows.extend(rem[2..].iter().map(|&x| vec![x]));
            let tjk = tableau_rows(rows);
            let coords = st.straighten(&tjk);
            let sign = if (j + k) % 2 == 1 { rat(1) } else { rat(-1) };
            let m = Monomial::var(j).mul(&Monomial::var(k));
            accumulate(&mut image, coords.coords(), &sign, &m, n);
        }
    }
    Ok(image)
}

/// Image of e(T) (x) 1 under d_i of the (d,d,1) family, 2 <= i <= d.
///
/// T has shape (d, d-i+1, 1^i); column 1 holds a_1..a_{i+2}, the tail of
/// row 1 holds b_{d-i+2}..b_d. T_j moves a_j to the end of row 2; the sum
/// over H permutes the row-1 tail, each permutation keeping all but its
/// first slot increasing and carrying no sign.
///
/// For i = d the formula is only applied to standard tableaux (the images
/// off the basis are not pinned down at the top index).
pub fn diff_dd1(
    t: &Tableau,
    i: usize,
    st: &mut Straightener,
) -> Result<Vec<Polynomial>, SpechtError> {
    let n = t.n();
    if n % 2 == 0 {
        return Err(SpechtError::InvalidTableau(format!(
            "dd1 tableaux have an odd number of entries, got {n}"
        )));
    }
    let d = (n - 1) / 2;
    if !(2..=d).contains(&i) {
        return Err(SpechtError::InvalidParameter(format!(
            "differential index {i} out of range for d={d}"
        )));
    }
    let mut expected = vec![d, d - i + 1];
    expected.extend(std::iter::repeat(1).take(i));
    if t.shape().parts() != expected {
        return Err(SpechtError::InvalidTableau(format!(
            "shape {:?} does not match source of differential {i}",
            t.shape().parts()
        )));
    }
    if i == d && !t.is_standard() {
        return Err(SpechtError::InvalidTableau(
            "the top differential of the (d,d,1) family is only defined on standard tableaux"
                .into(),
        ));
    }
    let a = t.column(1);
    let brow: Vec<usize> = t.rows()[0][1..].to_vec(); // b_2..b_d
    let c: Vec<usize> = t.rows()[1][1..].to_vec(); // c_2..c_{d-i+1}
    let tail: Vec<usize> = brow[d - i..].to_vec(); // b_{d-i+2}..b_d

    // H: pick the image of the first tail slot; the rest stay ascending.
    let mut h_perms = Vec::new();
    for &m in &tail {
        let mut images: Vec<usize> = (1..=n).collect();
        let rest: Vec<usize> = tail.iter().copied().filter(|&x| x != m).collect();
        images[tail[0] - 1] = m;
        for (slot, val) in tail[1..].iter().zip(rest) {
            images[slot - 1] = val;
        }
        h_perms.push(Perm::from_images(images)?);
    }

    let mut image = vec![Polynomial::zero(n); st.dim()];
    for (j0, &aj) in a.iter().enumerate() {
        let rem = remove_at(&a, j0);
        let mut row1 = vec![rem[0]];
        row1.extend_from_slice(&brow);
        let mut row2 = vec![rem[1]];
        row2.extend_from_slice(&c);
        row2.push(aj);
        let mut rows = vec![row1, row2];
        rows.extend(rem[2..].iter().map(|&x| vec![x]));
        let tj = tableau_rows(rows);
        let sign = if j0 % 2 == 0 { rat(1) } else { rat(-1) };
        let xa = Monomial::var(aj);
        for sigma in &h_perms {
            let coords = st.straighten(&tj.act(sigma));
            accumulate(&mut image, coords.coords(), &sign, &xa, n);
        }
    }
    Ok(image)
}

fn accumulate(
    image: &mut [Polynomial],
    coords: &[Rational],
    sign: &Rational,
    m: &Monomial,
    nvars: usize,
) {
    for (slot, c) in image.iter_mut().zip(coords) {
        if !num_traits::Zero::is_zero(c) {
            *slot = slot.add(&Polynomial::monomial(nvars, m.clone(), sign * c));
        }
    }
}

/// Assembles the resolution of R/I^Sp_(n-2,2): F_0 = R, F_i =
/// V_(n-1-i,2,1^{i-1}) (x) R(-1-i) for 1 <= i <= n-3, and F_{n-2} =
/// V_(1^n) (x) R(-n).
pub fn build_n22(n: usize) -> Result<GradedComplex, SpechtError> {
    if n < 4 {
        return Err(SpechtError::InvalidParameter(format!(
            "n22 family needs n >= 4, got {n}"
        )));
    }
    let mut modules = vec![FreeModuleSpec::new(trivial_row_shape(n), 0)];
    for i in 1..=n - 3 {
        let mut parts = vec![n - 1 - i, 2];
        parts.extend(std::iter::repeat(1).take(i - 1));
        modules.push(FreeModuleSpec::new(Partition::new(parts)?, (1 + i) as u32));
    }
    modules.push(FreeModuleSpec::new(
        Partition::new(vec![1; n])?,
        n as u32,
    ));

    let mut differentials = Vec::new();

    // d_1: one row, entry f_T per source SYT
    let d1_cols: Vec<Vec<Polynomial>> = modules[1]
        .basis()
        .iter()
        .map(|t| vec![diff_n22_first(t)])
        .collect();
    differentials.push(DifferentialMatrix::from_dense_columns(1, d1_cols));

    // middle differentials
    for i in 2..=n - 3 {
        let mut st = Straightener::new(modules[i - 1].shape.clone());
        let cols: Vec<Vec<Polynomial>> = modules[i]
            .basis()
            .iter()
            .map(|t| diff_n22_middle(t, i, &mut st))
            .collect::<Result<_, _>>()?;
        differentials.push(DifferentialMatrix::from_dense_columns(
            modules[i - 1].rank,
            cols,
        ));
    }

    // top differential: single source generator
    let mut st = Straightener::new(modules[n - 3].shape.clone());
    let top = diff_n22_top(n, &mut st)?;
    differentials.push(DifferentialMatrix::from_dense_columns(
        modules[n - 3].rank,
        vec![top],
    ));

    let complex = GradedComplex {
        family: Family::N22 { n },
        nvars: n,
        modules,
        differentials,
    };
    complex.validate()?;
    Ok(complex)
}

/// Assembles the resolution of R/I^Sp_(d,d,1) in n = 2d+1 variables:
/// F_0 = R and F_i = V_(d,d-i+1,1^i) (x) R(-d-i-1) for 1 <= i <= d.
pub fn build_dd1(d: usize) -> Result<GradedComplex, SpechtError> {
    if d < 1 {
        return Err(SpechtError::InvalidParameter(
            "dd1 family needs d >= 1".into(),
        ));
    }
    let n = 2 * d + 1;
    let mut modules = vec![FreeModuleSpec::new(trivial_row_shape(n), 0)];
    for i in 1..=d {
        let mut parts = vec![d, d - i + 1];
        parts.extend(std::iter::repeat(1).take(i));
        modules.push(FreeModuleSpec::new(
            Partition::new(parts)?,
            (d + i + 1) as u32,
        ));
    }

    let mut differentials = Vec::new();
    let d1_cols: Vec<Vec<Polynomial>> = modules[1]
        .basis()
        .iter()
        .map(|t| vec![diff_n22_first(t)])
        .collect();
    differentials.push(DifferentialMatrix::from_dense_columns(1, d1_cols));

    for i in 2..=d {
        let mut st = Straightener::new(modules[i - 1].shape.clone());
        let cols: Vec<Vec<Polynomial>> = modules[i]
            .basis()
            .iter()
            .map(|t| diff_dd1(t, i, &mut st))
            .collect::<Result<_, _>>()?;
        differentials.push(DifferentialMatrix::from_dense_columns(
            modules[i - 1].rank,
            cols,
        ));
    }

    let complex = GradedComplex {
        family: Family::Dd1 { d },
        nvars: n,
        modules,
        differentials,
    };
    complex.validate()?;
    Ok(complex)
}

/// Builds the complex for either family.
pub fn assemble(family: Family) -> Result<GradedComplex, SpechtError> {
    match family {
        Family::N22 { n } => build_n22(n),
        Family::Dd1 { d } => build_dd1(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::column_stabilizer;

    fn ranks(c: &GradedComplex) -> Vec<usize> {
        c.modules.iter().map(|m| m.rank).collect()
    }

    fn twists(c: &GradedComplex) -> Vec<u32> {
        c.modules.iter().map(|m| m.twist).collect()
    }

    #[test]
    fn n22_structure_small() {
        let c = build_n22(4).unwrap();
        assert_eq!(ranks(&c), vec![1, 2, 1]);
        assert_eq!(twists(&c), vec![0, 2, 4]);

        let c = build_n22(5).unwrap();
        assert_eq!(ranks(&c), vec![1, 5, 5, 1]);
        assert_eq!(twists(&c), vec![0, 2, 3, 5]);

        let c = build_n22(6).unwrap();
        assert_eq!(ranks(&c), vec![1, 9, 16, 9, 1]);
        assert_eq!(twists(&c), vec![0, 2, 3, 4, 6]);

        assert!(build_n22(3).is_err());
    }

    #[test]
    fn dd1_structure_small() {
        let c = build_dd1(1).unwrap();
        assert_eq!(ranks(&c), vec![1, 1]);
        assert_eq!(twists(&c), vec![0, 3]);

        let c = build_dd1(2).unwrap();
        assert_eq!(ranks(&c), vec![1, 5, 4]);
        assert_eq!(twists(&c), vec![0, 4, 5]);

        assert!(build_dd1(0).is_err());
    }

    #[test]
    fn dd1_module_shapes_d4() {
        let n = 9;
        let expected = [
            vec![n],
            vec![4, 4, 1],
            vec![4, 3, 1, 1],
            vec![4, 2, 1, 1, 1],
            vec![4, 1, 1, 1, 1, 1],
        ];
        let c = Family::Dd1 { d: 4 };
        assert_eq!(c.nvars(), 9);
        // structure only; the full d=4 build is exercised in the acceptance suite
        let mut modules = vec![FreeModuleSpec::new(trivial_row_shape(n), 0)];
        for i in 1..=4usize {
            let mut parts = vec![4, 4 - i + 1];
            parts.extend(std::iter::repeat(1).take(i));
            modules.push(FreeModuleSpec::new(
                Partition::new(parts).unwrap(),
                (4 + i + 1) as u32,
            ));
        }
        for (m, e) in modules.iter().zip(expected.iter()) {
            assert_eq!(m.shape.parts(), &e[..]);
        }
        assert_eq!(
            modules.iter().map(|m| m.rank).collect::<Vec<_>>(),
            vec![1, 84, 216, 189, 56]
        );
        assert_eq!(
            modules.iter().map(|m| m.twist).collect::<Vec<_>>(),
            vec![0, 6, 7, 8, 9]
        );
    }

    /// Sums sign * straighten(T') * monomial over paper-style term lists
    /// into a dense image vector, for comparison with the computed columns.
    fn expected_image(
        st: &mut Straightener,
        nvars: usize,
        terms: &[(i64, &str, &[usize])],
    ) -> Vec<Polynomial> {
        let mut image = vec![Polynomial::zero(nvars); st.dim()];
        for (sign, ttxt, vars) in terms {
            let t: Tableau = ttxt.parse().unwrap();
            let coords = st.straighten(&t);
            let mut m = Monomial::one();
            for &v in *vars {
                m = m.mul(&Monomial::var(v));
            }
            accumulate(&mut image, coords.coords(), &rat(*sign), &m, nvars);
        }
        image
    }

    #[test]
    fn golden_n22_top_n6() {
        let target = Partition::new(vec![2, 2, 1, 1]).unwrap();
        let mut st = Straightener::new(target);
        let got = diff_n22_top(6, &mut st).unwrap();
        let terms: Vec<(i64, &str, &[usize])> = vec![
            (1, "3,1/4,2/5/6", &[1, 2]),
            (-1, "2,1/4,3/5/6", &[1, 3]),
            (1, "2,1/3,4/5/6", &[1, 4]),
            (-1, "2,1/3,5/4/6", &[1, 5]),
            (1, "2,1/3,6/4/5", &[1, 6]),
            (1, "1,2/4,3/5/6", &[2, 3]),
            (-1, "1,2/3,4/5/6", &[2, 4]),
            (1, "1,2/3,5/4/6", &[2, 5]),
            (-1, "1,2/3,6/4/5", &[2, 6]),
            (1, "1,3/2,4/5/6", &[3, 4]),
            (-1, "1,3/2,5/4/6", &[3, 5]),
            (1, "1,3/2,6/4/5", &[3, 6]),
            (1, "1,4/2,5/3/6", &[4, 5]),
            (-1, "1,4/2,6/3/5", &[4, 6]),
            (1, "1,5/2,6/3/4", &[5, 6]),
        ];
        let want = expected_image(&mut st, 6, &terms);
        assert_eq!(got, want);
    }

    #[test]
    fn golden_n22_middle_n6() {
        // d_3 on e(3,1/4,2/5/6)
        let target = Partition::new(vec![3, 2, 1]).unwrap();
        let mut st = Straightener::new(target);
        let src: Tableau = "3,1/4,2/5/6".parse().unwrap();
        let got = diff_n22_middle(&src, 3, &mut st).unwrap();
        let terms: Vec<(i64, &str, &[usize])> = vec![
            (1, "4,1,3/5,2/6", &[3]),
            (-1, "3,1,4/5,2/6", &[4]),
            (1, "3,1,5/4,2/6", &[5]),
            (-1, "3,1,6/4,2/5", &[6]),
        ];
        let want = expected_image(&mut st, 6, &terms);
        assert_eq!(got, want);

        // d_2 on e(4,1,3/5,2/6)
        let target = Partition::new(vec![4, 2]).unwrap();
        let mut st = Straightener::new(target);
        let src: Tableau = "4,1,3/5,2/6".parse().unwrap();
        let got = diff_n22_middle(&src, 2, &mut st).unwrap();
        let terms: Vec<(i64, &str, &[usize])> = vec![
            (1, "5,1,3,4/6,2", &[4]),
            (-1, "4,1,3,5/6,2", &[5]),
            (1, "4,1,3,6/5,2", &[6]),
        ];
        let want = expected_image(&mut st, 6, &terms);
        assert_eq!(got, want);
    }

    #[test]
    fn golden_dd1_d2() {
        // d_2 on e(1,2/3,4/5) style sources for d=2: shape (2,1,1,1)
        let c = build_dd1(2).unwrap();
        assert_eq!(c.differential(2).rows(), 5);
        assert_eq!(c.differential(2).cols(), 4);
        // chain condition at small size, directly
        let prod = c.differential(1).compose(c.differential(2));
        assert!(prod.is_zero());
    }

    #[test]
    fn chain_condition_small() {
        for n in 4..=6 {
            let c = build_n22(n).unwrap();
            for i in 2..=c.family.top_index() {
                let prod = c.differential(i - 1).compose(c.differential(i));
                assert!(prod.is_zero(), "n={n}, d_{} . d_{} != 0", i - 1, i);
            }
        }
        for d in 1..=2 {
            let c = build_dd1(d).unwrap();
            for i in 2..=c.family.top_index() {
                let prod = c.differential(i - 1).compose(c.differential(i));
                assert!(prod.is_zero(), "d={d}, d_{} . d_{} != 0", i - 1, i);
            }
        }
    }

    #[test]
    fn middle_images_sign_equivariant() {
        // sigma in C(T): image of sigma T = sgn(sigma) * image of T
        let src: Tableau = "3,1/4,2/5/6".parse().unwrap();
        let target = Partition::new(vec![3, 2, 1]).unwrap();
        for sp in column_stabilizer(&src).iter().take(8) {
            let mut st = Straightener::new(target.clone());
            let base = diff_n22_middle(&src, 3, &mut st).unwrap();
            let moved = diff_n22_middle(&src.act(sp.perm()), 3, &mut st).unwrap();
            let scaled: Vec<Polynomial> = base
                .iter()
                .map(|p| p.scale(&rat(sp.sign() as i64)))
                .collect();
            assert_eq!(moved, scaled);
        }
    }

    #[test]
    fn well_definedness_small_n22() {
        // Garnir relations map to zero under the middle differential (n=5, i=2)
        let src: Tableau = "3,1/4,2/5".parse().unwrap();
        let target = Partition::new(vec![3, 2]).unwrap();
        let mut st = Straightener::new(target);
        for pair in crate::specht::GarnirPair::enumerate(&src) {
            let mut acc = vec![Polynomial::zero(5); st.dim()];
            for sp in crate::specht::garnir_transversal(&pair) {
                let img = diff_n22_middle(&src.act(sp.perm()), 2, &mut st).unwrap();
                for (a, p) in acc.iter_mut().zip(img) {
                    *a = a.add(&p.scale(&rat(sp.sign() as i64)));
                }
            }
            assert!(acc.iter().all(|p| p.is_zero()));
        }
    }

    #[test]
    fn dd1_rejects_nonstandard_at_top() {
        // d = 2, i = d = 2: shape (2,1,1,1), non-standard source
        let t: Tableau = "2,1/3/4/5".parse().unwrap();
        let target = Partition::new(vec![2, 2, 1]).unwrap();
        let mut st = Straightener::new(target);
        assert!(diff_dd1(&t, 2, &mut st).is_err());
        let s: Tableau = "1,2/3/4/5".parse().unwrap();
        assert!(diff_dd1(&s, 2, &mut st).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let c = build_n22(4).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: GradedComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(c.modules, back.modules);
        assert_eq!(c.differentials, back.differentials);
        let s2 = serde_json::to_string(&back).unwrap();
        assert_eq!(s, s2);
    }
}
