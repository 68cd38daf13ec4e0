//! Exact sparse multivariate polynomials over the rationals, plus the
//! Specht polynomial construction.
//!
//! Coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere. The term order is graded reverse lexicographic, which
//! affects only serialization and display, never results.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;

use crate::error::SpechtError;
use crate::tableau::Tableau;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse monomial: variable index (1-based) -> positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(i: usize) -> Monomial {
        let mut exps = BTreeMap::new();
        exps.insert(i, 1);
        Monomial { exps }
    }

    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut exps = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps.get(&var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn max_var(&self) -> usize {
        self.exps.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Collapse all variables in `fset` onto `target`.
    /// Redirects every variable in `fset` to `target`, merging exponents.
    pub fn collapse(&self, fset: &[usize], target: usize) -> Monomial {
        let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
        for (&v, &e) in &self.exps {
            let dest = if fset.contains(&v) { target } else { v };
            *exps.entry(dest).or_insert(0) += e;
        }
        exps.retain(|_, e| *e > 0);
        Monomial { exps }
    }

    /// Graded reverse lexicographic comparison; `Greater` means `self` is the
    /// larger monomial.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal degree: scan variables from the highest index downward; at the
        // first difference, the monomial with the SMALLER exponent is larger.
        let top = self.max_var().max(other.max_var());
        for v in (1..=top).rev() {
            let (a, b) = (self.exponent(v), other.exponent(v));
            match a.cmp(&b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let factors: Vec<String> = self
            .exps
            .iter()
            .map(|(&v, &e)| {
                if e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", factors.join("*"))
    }
}

/// Sparse polynomial in `nvars` variables over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Polynomial {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Polynomial {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Polynomial {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i), Rational::one());
        Polynomial { nvars, terms }
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<(), SpechtError> {
        if self.nvars != other.nvars {
            return Err(SpechtError::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_nvars(other).expect("nvars mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_nvars(other).expect("nvars mismatch");
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Apply a variable relabeling: x_i -> x_{sigma(i)}.
    pub fn permute_variables(&self, sigma: &crate::tableau::Perm) -> Polynomial {
        assert_eq!(sigma.n(), self.nvars);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let pairs: Vec<(usize, u32)> =
                m.exponents().map(|(v, e)| (sigma.apply(v), e)).collect();
            terms.insert(Monomial::from_pairs(&pairs), c.clone());
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Replace every x_i with i in F by x_{min F}. The result is 0 iff the
    /// polynomial lies in the ideal (x_i - x_j | i, j in F).
    pub fn substitute_collapse(&self, fset: &[usize]) -> Polynomial {
        assert!(!fset.is_empty(), "F must be nonempty");
        let target = *fset.iter().min().unwrap();
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let cm = m.collapse(fset, target);
            let entry = terms.entry(cm.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&cm);
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Reinterpret in `nvars` variables (used after deserialization).
    pub fn with_nvars(mut self, nvars: usize) -> Result<Polynomial, SpechtError> {
        let needed = self.terms.keys().map(|m| m.max_var()).max().unwrap_or(0);
        if needed > nvars {
            return Err(SpechtError::NvarsMismatch(needed, nvars));
        }
        self.nvars = nvars;
        Ok(self)
    }
}

impl fmt::Display for Polynomial {
    /// Grevlex-descending signed sum, e.g. `x1^2*x2 - 2*x2*x3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Polynomial {
    /// List of `{exponents, numerator, denominator}` in grevlex-descending
    /// order; exponents are `[variable, exponent]` pairs, coefficients are
    /// decimal strings.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Term {
            exponents: Vec<(usize, u32)>,
            numerator: String,
            denominator: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&Term {
                exponents: m.exponents().collect(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Term {
            exponents: Vec<(usize, u32)>,
            numerator: String,
            denominator: String,
        }
        let terms_in: Vec<Term> = Vec::deserialize(d)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let mut nvars = 0;
        for t in terms_in {
            let m = Monomial::from_pairs(&t.exponents);
            nvars = nvars.max(m.max_var());
            let num: BigInt = t.numerator.parse().map_err(serde::de::Error::custom)?;
            let den: BigInt = t.denominator.parse().map_err(serde::de::Error::custom)?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            let c = BigRational::new(num, den);
            if !c.is_zero() {
                terms.insert(m, c);
            }
        }
        Ok(Polynomial { nvars, terms })
    }
}

/// Product over columns of all top-over-bottom pairwise differences.
pub fn specht_polynomial(t: &Tableau) -> Polynomial {
    let n = t.n();
    let mut result = Polynomial::one(n);
    for c in 1..=t.num_cols() {
        let col = t.column(c);
        for s in 0..col.len() {
            for u in s + 1..col.len() {
                let diff = Polynomial::var(n, col[s]).sub(&Polynomial::var(n, col[u]));
                result = result.mul(&diff);
            }
        }
    }
    result
}

/// All monomials of total degree `e` in `n` variables, grevlex descending.
pub fn graded_piece_basis(n: usize, e: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps: Vec<u32> = vec![0; n];
    fn go(var: usize, rem: u32, n: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == n {
            exps[n - 1] = rem;
            let pairs: Vec<(usize, u32)> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i + 1, e))
                .collect();
            out.push(Monomial::from_pairs(&pairs));
            exps[n - 1] = 0;
            return;
        }
        for e in 0..=rem {
            exps[var - 1] = e;
            go(var + 1, rem - e, n, exps, out);
            exps[var - 1] = 0;
        }
    }
    if n == 0 {
        if e == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    go(1, e, n, &mut exps, &mut out);
    out.sort_by(|a, b| b.grevlex_cmp(a));
    out
}
