//! Exact arithmetic in the part of the representation ring `R(T)` spanned
//! by characters `e^λ` with `λ` in the root lattice, plus height-truncated
//! power series for characters of tangent-cone coordinate rings.
//!
//! Series are graded by root height. Every denominator weight is a
//! positive root of height at least 1, so the coefficient of `e^{-μ}`
//! only depends on terms of height at most `height(μ)`; truncating at a
//! height bound therefore loses nothing below the bound.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::Root;

/// Exponent of a character `e^λ`.
pub type WeightVector = Root;

/// An integer Laurent polynomial in the characters `e^λ`.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<WeightVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::monomial(Root::zero(rank), BigInt::one())
    }

    pub fn monomial(exponent: WeightVector, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, coeff.into());
        p
    }

    /// `1 - e^{-α}`.
    pub fn one_minus_exp_neg(alpha: &Root) -> Self {
        let mut p = LaurentPoly::one(alpha.rank());
        p.add_term(-alpha, -BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &WeightVector) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exponent: WeightVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<WeightVector, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Terms ordered by increasing height of `-λ`, e.g. `1 - e^{-α1-α2}`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.height().cmp(&a.0.height()).then_with(|| b.0.cmp(a.0)));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "e^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponent: Vec<i32>,
    coeff: String,
}

/// Serialized as a list of `{exponent: int[], coeff: "decimal"}` terms in
/// ascending exponent order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exponent: e.0.clone(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(Root(t.exponent), c);
        }
        Ok(p)
    }
}

/// `∏ (1 - e^{-α})` over the given weights.
pub fn lambda_minus_one(weights: &[Root], rank: usize) -> LaurentPoly {
    weights.iter().fold(LaurentPoly::one(rank), |acc, a| {
        &acc * &LaurentPoly::one_minus_exp_neg(a)
    })
}

/// Whether `target` is a nonnegative integer combination of `generators`.
///
/// Generators must be positive (nonnegative coordinates, height ≥ 1); the
/// search subtracts generators in nondecreasing index order so each
/// multiset is visited once.
pub fn cone_contains(target: &Root, generators: &[Root]) -> bool {
    fn rec(
        target: &Root,
        gens: &[Root],
        start: usize,
        memo: &mut HashMap<(Root, usize), bool>,
    ) -> bool {
        if target.is_zero() {
            return true;
        }
        if !target.is_nonnegative() {
            return false;
        }
        if let Some(&hit) = memo.get(&(target.clone(), start)) {
            return hit;
        }
        let found = (start..gens.len()).any(|k| {
            let rest = target - &gens[k];
            rest.is_nonnegative() && rec(&rest, gens, k, memo)
        });
        memo.insert((target.clone(), start), found);
        found
    }
    debug_assert!(generators.iter().all(Root::is_positive));
    rec(target, generators, 0, &mut HashMap::new())
}

/// A power series in `e^{-μ}`, `μ` in the nonnegative cone, exact for all
/// `height(μ) ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<WeightVector, BigInt>,
    bound: u32,
    rank: usize,
}

impl TruncatedSeries {
    pub fn zero(rank: usize, bound: u32) -> Self {
        TruncatedSeries {
            terms: BTreeMap::new(),
            bound,
            rank,
        }
    }

    /// Truncation of a polynomial whose exponents are all `-μ` with `μ ≥ 0`.
    pub fn from_poly(p: &LaurentPoly, rank: usize, bound: u32) -> Result<Self> {
        let mut s = TruncatedSeries::zero(rank, bound);
        for (e, c) in p.terms() {
            let mu = -e;
            if !mu.is_nonnegative() {
                return Err(Error::ExponentOutsideCone(e.0.clone()));
            }
            if mu.height() <= bound as i64 {
                s.add_term(e.clone(), c.clone());
            }
        }
        Ok(s)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exponent: WeightVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    fn within(&self, exponent: &WeightVector) -> bool {
        (-exponent).height() <= self.bound as i64
    }

    /// Exact coefficient of `e^λ`; errors beyond the truncation height.
    pub fn coefficient(&self, exponent: &WeightVector) -> Result<BigInt> {
        if !self.within(exponent) {
            return Err(Error::BeyondTruncation {
                exponent: exponent.0.clone(),
                bound: self.bound,
            });
        }
        Ok(self.terms.get(exponent).cloned().unwrap_or_default())
    }

    /// Multiplies by `1 / (1 - e^{-β}) = Σ_k e^{-kβ}`.
    pub fn divide_by_one_minus(&self, beta: &Root) -> Result<TruncatedSeries> {
        if !beta.is_positive() {
            return Err(Error::NonPositiveWeight(beta.0.clone()));
        }
        let step = beta.height();
        let mut out = TruncatedSeries::zero(self.rank, self.bound);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            let mut h = (-e).height();
            while h <= self.bound as i64 {
                out.add_term(exp.clone(), c.clone());
                exp = &exp - beta;
                h += step;
            }
        }
        Ok(out)
    }

    /// Product re-truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(other.bound);
        let mut out = TruncatedSeries::zero(self.rank, bound);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                if out.within(&e) {
                    out.add_term(e, c1 * c2);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let bound = self.bound.min(other.bound);
        let mut out = TruncatedSeries::zero(self.rank, bound);
        for (e, c) in self.terms.iter().chain(&other.terms) {
            if out.within(e) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.clone(),
        }
    }
}

/// `numerator / ∏ (1 - e^{-β})` expanded as a series and truncated at
/// height `bound`.
pub fn char_series(
    numerator: &LaurentPoly,
    denominator: &[Root],
    rank: usize,
    bound: u32,
) -> Result<TruncatedSeries> {
    if let Some(bad) = denominator.iter().find(|b| !b.is_positive()) {
        return Err(Error::NonPositiveWeight(bad.0.clone()));
    }
    for (e, _) in numerator.terms() {
        if !cone_contains(&-e, denominator) {
            return Err(Error::ExponentOutsideCone(e.0.clone()));
        }
    }
    let mut series = TruncatedSeries::from_poly(numerator, rank, bound)?;
    for beta in denominator {
        series = series.divide_by_one_minus(beta)?;
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i32]) -> Root {
        Root(v.to_vec())
    }

    fn om(v: &[i32]) -> LaurentPoly {
        LaurentPoly::one_minus_exp_neg(&r(v))
    }

    #[test]
    fn products_and_sums() {
        let p = &om(&[1, 0]) * &om(&[0, 1]);
        assert_eq!(p.len(), 4);
        assert_eq!(p.coefficient(&r(&[0, 0])), BigInt::from(1));
        assert_eq!(p.coefficient(&r(&[-1, 0])), BigInt::from(-1));
        assert_eq!(p.coefficient(&r(&[0, -1])), BigInt::from(-1));
        assert_eq!(p.coefficient(&r(&[-1, -1])), BigInt::from(1));
        assert!((&p + &p.scale(&BigInt::from(-1))).is_zero());
        let q = &(&om(&[1, 0]) + &om(&[0, 1])) - &p;
        assert_eq!(q, om(&[1, 1]));
        assert_eq!(q.to_string(), "1 - e^{-α1-α2}");
        assert_eq!(q.coefficient(&r(&[-1, -1])), BigInt::from(-1));
    }

    #[test]
    fn lambda_minus_one_examples() {
        assert_eq!(lambda_minus_one(&[], 2), LaurentPoly::one(2));
        assert_eq!(lambda_minus_one(&[r(&[1, 0])], 2), om(&[1, 0]));
        // 8 products before cancellation; the two e^{-α1-α2} terms cancel.
        let p = lambda_minus_one(&[r(&[1, 0]), r(&[1, 1]), r(&[0, 1])], 2);
        assert_eq!(p.coefficient(&r(&[-1, -1])), BigInt::zero());
        assert_eq!(p.coefficient(&r(&[-2, -2])), BigInt::from(-1));
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn geometric_series() {
        let s = char_series(&LaurentPoly::one(1), &[r(&[1])], 1, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(s.coefficient(&r(&[-k])).unwrap(), BigInt::one());
        }
        assert!(matches!(
            s.coefficient(&r(&[-4])),
            Err(Error::BeyondTruncation { .. })
        ));
        assert_eq!(s.coefficient(&r(&[-2])).unwrap(), BigInt::one());
    }

    #[test]
    fn char_series_counts_lattice_points() {
        let den = [r(&[1, 0]), r(&[1, 1]), r(&[0, 1])];
        let s = char_series(&om(&[1, 1]), &den, 2, 2).unwrap();
        assert_eq!(s.coefficient(&r(&[-1, -1])).unwrap(), BigInt::one());
        assert_eq!(s.coefficient(&r(&[-1, 0])).unwrap(), BigInt::one());
        assert_eq!(s.coefficient(&r(&[-2, 0])).unwrap(), BigInt::one());
    }

    #[test]
    fn char_series_errors() {
        let den = [r(&[1, 0])];
        assert!(matches!(
            char_series(&LaurentPoly::monomial(r(&[0, -1]), 1), &den, 2, 3),
            Err(Error::ExponentOutsideCone(_))
        ));
        assert!(matches!(
            char_series(&LaurentPoly::one(2), &[r(&[1, -1])], 2, 3),
            Err(Error::NonPositiveWeight(_))
        ));
    }

    #[test]
    fn cone_membership() {
        let gens = [r(&[1, 0]), r(&[1, 1])];
        assert!(cone_contains(&r(&[2, 1]), &gens));
        assert!(cone_contains(&r(&[0, 0]), &gens));
        assert!(!cone_contains(&r(&[0, 1]), &gens));
        assert!(!cone_contains(&r(&[1, 2]), &gens));
    }

    #[test]
    fn json_form() {
        let p = om(&[1, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"exponent":[-1,-1],"coeff":"-1"},{"exponent":[0,0],"coeff":"1"}]"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
