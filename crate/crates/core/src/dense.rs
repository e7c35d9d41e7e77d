//! Dense Laurent polynomials over a checked coefficient type.
//!
//! Hot loops run over `i128` and report overflow as `None`; callers then
//! repeat the computation over `BigInt`, so results stay exact.

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

use crate::poly::LaurentPoly;

pub(crate) trait Coeff: Clone + Zero + CheckedAdd + CheckedSub + CheckedMul + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn abs_bigint(&self) -> BigInt {
        self.to_bigint().abs()
    }
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// `Σ coeffs[k] x^(low + k)`; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct DensePoly<C> {
    pub low: i64,
    pub coeffs: Vec<C>,
}

impl<C: Coeff> DensePoly<C> {
    pub fn zero() -> Self {
        DensePoly { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut p = DensePoly { low: exp, coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// `self += sign · x^shift · other`; `None` on coefficient overflow.
    pub fn add_shifted(&mut self, other: &Self, shift: i64, negate: bool) -> Option<()> {
        if other.is_zero() {
            return Some(());
        }
        let o_low = other.low + shift;
        let o_high = other.high() + shift;
        if self.is_zero() {
            self.low = o_low;
            self.coeffs = Vec::with_capacity(other.coeffs.len());
            for c in &other.coeffs {
                self.coeffs.push(if negate { C::zero().checked_sub(c)? } else { c.clone() });
            }
            return Some(());
        }
        if o_low < self.low {
            let pad = (self.low - o_low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(C::zero(), pad));
            self.low = o_low;
        }
        if o_high > self.high() {
            let pad = (o_high - self.high()) as usize;
            self.coeffs.extend(std::iter::repeat_n(C::zero(), pad));
        }
        let start = (o_low - self.low) as usize;
        for (slot, c) in self.coeffs[start..].iter_mut().zip(&other.coeffs) {
            *slot = if negate { slot.checked_sub(c)? } else { slot.checked_add(c)? };
        }
        self.trim();
        Some(())
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return Some(DensePoly::zero());
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        let mut p = DensePoly { low: self.low + other.low, coeffs };
        p.trim();
        Some(p)
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs_bigint()).sum()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(|c| c.to_bigint()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_accumulation() {
        let mut acc = DensePoly::<i128>::zero();
        let one = DensePoly::monomial(0, 1i128);
        acc.add_shifted(&one, 2, false).unwrap();
        acc.add_shifted(&one, -1, true).unwrap();
        acc.add_shifted(&one, 2, true).unwrap();
        assert_eq!(acc.to_laurent(), LaurentPoly::monomial(-1, -1));
    }

    #[test]
    fn overflow_is_reported() {
        let big = DensePoly::monomial(0, i128::MAX);
        let mut acc = big.clone();
        assert!(acc.add_shifted(&big, 0, false).is_none());
        assert!(big.mul(&big).is_none());
    }
}
