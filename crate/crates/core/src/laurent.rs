//! Exact Laurent polynomials in `q` with integer coefficients.
//!
//! Every scalar in the calculator lives in `Z[q, q^-1]`. Coefficients are
//! arbitrary precision and the term map never stores a zero, so structural
//! equality coincides with ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[q^{±1}]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The trivial loop value `-q^2 - q^-2`.
    pub fn loop_value() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Membership in the positive cone `Z_+[q^{±1}]`: every coefficient is
    /// nonnegative. Zero is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Specialization at `q = 1`.
    pub fn eval_q1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `(coeff, exp)` if this is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// The bar involution `q -> q^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

fn fmt_q_power(f: &mut fmt::Formatter<'_>, exp: i64) -> fmt::Result {
    match exp {
        1 => write!(f, "q"),
        _ => write!(f, "q^{exp}"),
    }
}

/// Ascending exponents, e.g. `-q^-2 + 3 + q`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                fmt_q_power(f, *e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON object from exponent strings to integers, exponents ascending.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{Error as _, SerializeMap};
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let n = serde_json::Number::from_str(&c.to_string()).map_err(S::Error::custom)?;
            map.serialize_entry(&e.to_string(), &n)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, serde_json::Number>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (k, v) in raw {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid exponent key {k:?}")))?;
            let c: BigInt = v
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom(format!("non-integer coefficient {v}")))?;
            if p.terms.contains_key(&e) {
                return Err(D::Error::custom(format!("duplicate exponent {e}")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(lp(&[(1, 1), (-1, 1)]) + lp(&[(-1, -1)]), LaurentPoly::q());
        let x = lp(&[(3, 4), (-2, -7)]);
        assert_eq!(LaurentPoly::zero() + x.clone(), x);
        assert_eq!(lp(&[(2, 1)]) + lp(&[(2, 1)]), lp(&[(2, 2)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(LaurentPoly::q() * LaurentPoly::q_pow(-1), LaurentPoly::one());
        let d = LaurentPoly::loop_value();
        assert_eq!(&d * &d, lp(&[(4, 1), (0, 2), (-4, 1)]));
        assert!((lp(&[(5, 3)]) * LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn positivity_examples() {
        assert!(lp(&[(3, 1), (-1, 2)]).is_positive());
        assert!(!lp(&[(3, -1)]).is_positive());
        assert!(LaurentPoly::zero().is_positive());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(lp(&[(1, 1), (-1, 1)]).eval_q1(), BigInt::from(2));
        assert_eq!(LaurentPoly::loop_value().eval_q1(), BigInt::from(-2));
        assert_eq!(LaurentPoly::zero().eval_q1(), BigInt::from(0));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = lp(&[(0, 3), (1, -2)]);
        let y = lp(&[(0, -3), (1, 2)]);
        let s = x + y;
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
        assert_eq!(s, LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::loop_value().to_string(), "-q^-2 - q^2");
        assert_eq!(lp(&[(1, 1), (-1, 1)]).to_string(), "q^-1 + q");
        assert_eq!(lp(&[(0, -2), (3, 5)]).to_string(), "-2 + 5q^3");
        assert_eq!(lp(&[(0, 1)]).to_string(), "1");
    }

    #[test]
    fn json_shape() {
        let x = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"-1":1,"1":1}"#);
        let back: LaurentPoly = serde_json::from_str(r#"{"1": 1, "-1": 1}"#).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), "{}");
    }

    #[test]
    fn json_keeps_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = LaurentPoly::monomial(big.clone(), -7);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"-7":123456789012345678901234567890}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back.coeff(-7), big);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"a": 1}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"1": 1.5}"#).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = lp(&[(1, 1), (-1, 1)]);
        let mut acc = LaurentPoly::one();
        for n in 0..7 {
            assert_eq!(x.pow(n), acc);
            acc = &acc * &x;
        }
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    fn arb_positive() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, 0i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        }

        #[test]
        fn positive_cone_closed(a in arb_positive(), b in arb_positive()) {
            prop_assert!((&a + &b).is_positive());
            prop_assert!((&a * &b).is_positive());
        }

        #[test]
        fn cone_is_pointed(a in arb_poly()) {
            if a.is_positive() && (-&a).is_positive() {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn positive_sum_zero_forces_both_zero(x in arb_positive(), y in arb_positive()) {
            if (&x + &y).is_zero() {
                prop_assert!(x.is_zero() && y.is_zero());
            }
        }

        #[test]
        fn eval_q1_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a + &b).eval_q1(), a.eval_q1() + b.eval_q1());
            prop_assert_eq!((&a * &b).eval_q1(), a.eval_q1() * b.eval_q1());
            prop_assert_eq!(LaurentPoly::one().eval_q1(), BigInt::from(1));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: LaurentPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, a);
        }
    }
}
