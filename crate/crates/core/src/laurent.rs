//! Exact multivariate Laurent polynomials over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact in the Laurent ring")]
    Inexact,
    #[error("the zero polynomial has no denominator vector")]
    ZeroPolynomial,
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

/// A Laurent polynomial in `x1..xn` with big-integer coefficients.
///
/// Terms are kept in a sorted map without zero coefficients, so structural
/// equality is mathematical equality and the derived order is a total order
/// usable for canonical sorting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The initial variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exponents: Vec<i32>, c: impl Into<BigInt>) -> Self {
        let nvars = exponents.len();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Self { nvars, terms }
    }

    /// Sums duplicate exponents and drops zeros.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>,
    ) -> Result<Self, LaurentError> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(LaurentError::ExponentLength {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_arity(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shifted(&self, shift: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    fn min_max_exponents(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Leading-term elimination in lexicographic order. Every term of a true
    /// quotient has exponents inside the box
    /// `[min(num) - min(den), max(num) - max(den)]` (per variable), so a
    /// candidate term outside it, or a coefficient that does not divide,
    /// proves inexactness and the loop always terminates.
    pub fn exact_div(&self, den: &Self) -> Result<Self, LaurentError> {
        self.check_arity(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let (nlo, nhi) = self.min_max_exponents();
        let (dlo, dhi) = den.min_max_exponents();
        let lo: Vec<i32> = nlo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = nhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(LaurentError::Inexact);
        }
        let (lead_e, lead_c) = den.terms.iter().next_back().expect("den is nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let qe: Vec<i32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe
                .iter()
                .zip(lo.iter().zip(&hi))
                .any(|(x, (l, h))| x < l || x > h)
            {
                return Err(LaurentError::Inexact);
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(LaurentError::Inexact);
            }
            for (de, dc) in &den.terms {
                let e2 = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(e2, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Entry `i` is minus the smallest exponent of `x_{i+1}`.
    pub fn denominator_vector(&self) -> Result<DenominatorVector, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let (lo, _) = self.min_max_exponents();
        Ok(DenominatorVector(lo.iter().map(|&m| -(m as i64)).collect()))
    }

    /// `(numerator, denominator exponents)` with a polynomial numerator and
    /// the smallest monomial denominator.
    fn split(&self) -> (Self, Vec<i32>) {
        let (lo, _) = self.min_max_exponents();
        let den: Vec<i32> = lo.iter().map(|&m| (-m).max(0)).collect();
        (self.shifted(&den), den)
    }

    /// Expanded form with terms in increasing lexicographic order of
    /// exponent vectors, e.g. `x2*x1^-1 + x1^-1`.
    pub fn to_expanded_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        join_terms(self.terms.iter().map(|(e, c)| (e.as_slice(), c)))
    }
}

fn format_monomial(e: &[i32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, k)
            }
        })
        .collect();
    factors.join("*")
}

fn join_terms<'a>(terms: impl Iterator<Item = (&'a [i32], &'a BigInt)>) -> String {
    let mut out = String::new();
    for (idx, (e, c)) in terms.enumerate() {
        let mono = format_monomial(e);
        let mag = c.abs();
        let body = match (mono.is_empty(), mag.is_one()) {
            (true, _) => mag.to_string(),
            (false, true) => mono,
            (false, false) => format!("{mag}*{mono}"),
        };
        match (idx, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// Factored form `numerator/denominator` with a monomial denominator, e.g.
/// `(1 + x1 + x2)/(x1*x2)`. Numerator terms are listed by increasing total
/// degree, ties broken by decreasing lexicographic order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (num, den) = self.split();
        let mut terms: Vec<(&[i32], &BigInt)> =
            num.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        terms.sort_by(|a, b| {
            let da: i64 = a.0.iter().map(|&x| x as i64).sum();
            let db: i64 = b.0.iter().map(|&x| x as i64).sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        let numerator = join_terms(terms.into_iter());
        let denominator = format_monomial(&den);
        if denominator.is_empty() {
            return f.write_str(&numerator);
        }
        let numerator = if num.terms.len() > 1 {
            format!("({numerator})")
        } else {
            numerator
        };
        if den.iter().filter(|&&k| k != 0).count() > 1 || den.iter().any(|&k| k > 1) {
            write!(f, "{numerator}/({denominator})")
        } else {
            write!(f, "{numerator}/{denominator}")
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on arity mismatch; see [`LaurentPoly::checked_add`].
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("arity mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("arity mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("arity mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Wire form: `{"nvars": 2, "terms": [[[-1, 0], "1"], [[-1, 1], "1"]]}` with
/// decimal coefficient strings, so big coefficients survive JSON.
#[derive(Serialize, Deserialize)]
struct LaurentWire {
    nvars: usize,
    terms: Vec<(Vec<i32>, String)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentWire {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = LaurentWire::deserialize(d)?;
        let terms = wire
            .terms
            .into_iter()
            .map(|(e, c)| {
                c.parse::<BigInt>()
                    .map(|c| (e, c))
                    .map_err(|_| LaurentError::BadCoefficient(c.clone()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        LaurentPoly::from_terms(wire.nvars, terms).map_err(serde::de::Error::custom)
    }
}

/// Denominator vector of a Laurent polynomial; initial variables get `-e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DenominatorVector(pub Vec<i64>);

impl fmt::Display for DenominatorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(2, i)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one(2)
    }

    #[test]
    fn ring_basics() {
        assert_eq!(&x(0) + &LaurentPoly::zero(2), x(0));
        assert!((&x(0) - &x(0)).is_zero());
        let sum = &(&one() + &x(1)) + &(&x(0) + &x(1));
        assert_eq!(sum.to_expanded_string(), "1 + 2*x2 + x1");
        let inv = LaurentPoly::monomial(vec![-1, 0], 1);
        assert_eq!(&x(0) * &inv, one());
        let p = &(&one() + &x(1)) * &inv;
        assert_eq!(p.to_expanded_string(), "x1^-1 + x1^-1*x2");
    }

    #[test]
    fn arity_is_checked() {
        let err = LaurentPoly::var(2, 0)
            .checked_add(&LaurentPoly::var(3, 0))
            .unwrap_err();
        assert_eq!(err, LaurentError::ArityMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_division() {
        let num = &(&one() + &x(0)) * &(&one() + &x(1));
        assert_eq!(num.exact_div(&(&one() + &x(0))).unwrap(), &one() + &x(1));
        let shifted = num.exact_div(&x(0)).unwrap();
        assert_eq!(shifted, num.shifted(&[-1, 0]));
        assert_eq!(
            num.exact_div(&LaurentPoly::zero(2)),
            Err(LaurentError::DivisionByZero)
        );
        assert_eq!(
            (&one() + &x(0)).exact_div(&(&one() + &x(1))),
            Err(LaurentError::Inexact)
        );
        assert_eq!(
            LaurentPoly::constant(2, 3).exact_div(&LaurentPoly::constant(2, 2)),
            Err(LaurentError::Inexact)
        );
    }

    #[test]
    fn a2_exchange_step() {
        // ((1 + x1 + x2)/(x1*x2) ... ) the third A2 variable from the second
        let x1p = (&one() + &x(1)).shifted(&[-1, 0]);
        let x2p = (&(&one() + &x(0)) + &x(1)).shifted(&[-1, -1]);
        let num = &one() + &x2p;
        let got = num.exact_div(&x1p).unwrap();
        assert_eq!(got, (&one() + &x(0)).shifted(&[0, -1]));
        assert_eq!(got.to_string(), "(1 + x1)/x2");
    }

    #[test]
    fn denominator_vectors() {
        assert_eq!(
            x(0).denominator_vector().unwrap(),
            DenominatorVector(vec![-1, 0])
        );
        let p = (&one() + &x(1)).shifted(&[-1, 0]);
        assert_eq!(
            p.denominator_vector().unwrap(),
            DenominatorVector(vec![1, 0])
        );
        let q = (&(&one() + &x(0)) + &x(1)).shifted(&[-1, -1]);
        assert_eq!(
            q.denominator_vector().unwrap(),
            DenominatorVector(vec![1, 1])
        );
        assert_eq!(
            LaurentPoly::zero(2).denominator_vector(),
            Err(LaurentError::ZeroPolynomial)
        );
    }

    #[test]
    fn factored_display() {
        let q = (&(&one() + &x(0)) + &x(1)).shifted(&[-1, -1]);
        assert_eq!(q.to_string(), "(1 + x1 + x2)/(x1*x2)");
        assert_eq!(
            LaurentPoly::constant(1, 2).shifted(&[-1]).to_string(),
            "2/x1"
        );
        assert_eq!(x(1).to_string(), "x2");
        assert_eq!(
            LaurentPoly::monomial(vec![-2, 0], -3).to_string(),
            "-3/(x1^2)"
        );
        assert_eq!((&x(0) - &one()).to_string(), "-1 + x1");
    }

    #[test]
    fn json_round_trip_keeps_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = &LaurentPoly::monomial(vec![1, -2], big) + &one();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
}
