//! Exact integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::modular;

/// Integer Laurent polynomial. Zero coefficients are never stored, so derived
/// equality is exact coefficient equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The variable `t`.
    pub fn var() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds `Σ coeffs[k] t^(low + k)`.
    pub fn from_dense<C: Into<BigInt>>(low: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        LaurentPoly::from_pairs(coeffs.into_iter().enumerate().map(|(k, c)| (low + k as i64, c)))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, or `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, c * factor)).collect() }
    }

    /// Substitutes `t -> 1/t`.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Substitutes `t -> t^k` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution t -> t^0 is not invertible");
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = LaurentPoly::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval_at_neg_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Value at `t = r` in `Z/pZ`; `r` must be a unit.
    pub fn eval_mod(&self, r: u64, p: u64) -> u64 {
        let r_inv = modular::inv_mod(r, p);
        self.terms.iter().fold(0u64, |acc, (&e, c)| {
            let base = if e >= 0 { r } else { r_inv };
            let term = modular::mul_mod(modular::bigint_mod(c, p), modular::pow_mod(base, e.unsigned_abs(), p), p);
            modular::add_mod(acc, term, p)
        })
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reciprocal()
    }

    /// Multiplies by the unit `±t^k` making the polynomial symmetric under
    /// `t -> 1/t` with positive value at `t = 1`. Returns `None` when no such
    /// unit exists (odd span or asymmetric coefficients).
    pub fn normalize_symmetric(&self) -> Option<Self> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        if (lo + hi).rem_euclid(2) != 0 {
            return None;
        }
        let mut p = self.shift(-(lo + hi) / 2);
        if p.eval_at_one().is_negative() || (p.eval_at_one().is_zero() && p.terms.values().next_back()?.is_negative()) {
            p = -p;
        }
        p.is_symmetric().then_some(p)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (over `Z[t, 1/t]`).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let d_lo = divisor.min_exp()?;
        let d_hi = divisor.max_exp()?;
        let d_lead = divisor.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some(r_hi) = rem.max_exp() {
            let r_lo = rem.min_exp()?;
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let (q, r) = rem.terms[&r_hi].div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let shift = r_hi - d_hi;
            for (&e, c) in &divisor.terms {
                rem.add_term(e + shift, -(c * &q));
            }
            quotient.add_term(shift, q);
        }
        Some(quotient)
    }

    /// Formats with the given variable name, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if body.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}{body}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Serializes as an ascending list of `[exponent, coefficient]` pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, crate::bigjson::BigIntJson)> =
            self.terms.iter().map(|(&e, c)| (e, crate::bigjson::BigIntJson(c.clone()))).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, crate::bigjson::BigIntJson)> = Vec::deserialize(deserializer)?;
        Ok(LaurentPoly::from_pairs(pairs.into_iter().map(|(e, c)| (e, c.0))))
    }
}
