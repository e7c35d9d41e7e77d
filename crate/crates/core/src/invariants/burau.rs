//! Alexander polynomial from the reduced Burau representation.
//!
//! For a closed braid on `n` strands with exponent sum `e`,
//! `det(I - B(t)) = t^((e-n+1)/2) · (1 + t + … + t^(n-1)) · Δ(t)`
//! with `Δ` symmetric and `Δ(1) = 1`. The determinant is computed by
//! evaluation at `c + 1` points modulo several 62-bit primes, interpolated,
//! and lifted by CRT; the number of primes comes from a bound on the
//! coefficients of the exact Burau matrix, so the result is exact.

use num_bigint::BigInt;
use num_traits::One;

use crate::braids::BraidWord;
use crate::dense::{Coeff, DensePoly};
use crate::error::{Error, Result};
use crate::modular::{self, add_mod, mul_mod, sub_mod};
use crate::poly::LaurentPoly;

/// Evaluation points for [`AlexanderHash`], modulo `2^61 - 1`.
const HASH_POINTS: [u64; 3] = [3, 5, 7];

/// Reduced Burau matrix of `b` at `t = r` modulo `p`, stored by columns.
fn burau_columns_mod(b: &BraidWord, r: u64, p: u64) -> Vec<Vec<u64>> {
    let d = b.strands() - 1;
    let r_inv = modular::inv_mod(r, p);
    let mut cols: Vec<Vec<u64>> = (0..d)
        .map(|j| {
            let mut c = vec![0; d];
            c[j] = 1;
            c
        })
        .collect();
    for g in b.gens() {
        let i = g.index - 1;
        let col = cols[i].clone();
        // Right multiplication touches columns i-1, i, i+1 through row i of the generator.
        let (left, right, diag) = if g.positive {
            (r, 1, sub_mod(0, r, p))
        } else {
            (1, r_inv, sub_mod(0, r_inv, p))
        };
        if i > 0 {
            for (x, &y) in cols[i - 1].iter_mut().zip(&col) {
                *x = add_mod(*x, mul_mod(left, y, p), p);
            }
        }
        if i + 1 < d {
            for (x, &y) in cols[i + 1].iter_mut().zip(&col) {
                *x = add_mod(*x, mul_mod(right, y, p), p);
            }
        }
        for x in cols[i].iter_mut() {
            *x = mul_mod(diag, *x, p);
        }
    }
    cols
}

/// `det(I - B(r))` modulo `p`.
pub(crate) fn burau_det_mod(b: &BraidWord, r: u64, p: u64) -> u64 {
    let cols = burau_columns_mod(b, r, p);
    let d = cols.len();
    // The determinant of the transpose is the same, so columns serve as rows.
    let m: Vec<Vec<u64>> = cols
        .into_iter()
        .enumerate()
        .map(|(j, col)| {
            col.into_iter()
                .enumerate()
                .map(|(i, v)| {
                    let id = u64::from(i == j);
                    sub_mod(id, v, p)
                })
                .collect()
        })
        .collect();
    debug_assert_eq!(m.len(), d);
    modular::det_mod(m, p)
}

/// Exact reduced Burau matrix (by columns), `None` on `i128` overflow.
fn burau_exact<C: Coeff>(b: &BraidWord) -> Option<Vec<Vec<DensePoly<C>>>> {
    let d = b.strands() - 1;
    let one = DensePoly::monomial(0, C::from_i64(1));
    let mut cols: Vec<Vec<DensePoly<C>>> = (0..d)
        .map(|j| (0..d).map(|i| if i == j { one.clone() } else { DensePoly::zero() }).collect())
        .collect();
    for g in b.gens() {
        let i = g.index - 1;
        let col = cols[i].clone();
        let (left_shift, right_shift, diag_shift) = if g.positive { (1, 0, 1) } else { (0, -1, -1) };
        if i > 0 {
            for (x, y) in cols[i - 1].iter_mut().zip(&col) {
                x.add_shifted(y, left_shift, false)?;
            }
        }
        if i + 1 < d {
            for (x, y) in cols[i + 1].iter_mut().zip(&col) {
                x.add_shifted(y, right_shift, false)?;
            }
        }
        for (x, y) in cols[i].iter_mut().zip(&col) {
            *x = DensePoly::zero();
            x.add_shifted(y, diag_shift, true)?;
        }
    }
    Some(cols)
}

/// Upper bound on the absolute coefficients of `det(I - B(t))`: the product
/// over rows of the summed coefficient norms.
fn det_coefficient_bound(b: &BraidWord) -> BigInt {
    fn bound<C: Coeff>(cols: Vec<Vec<DensePoly<C>>>) -> BigInt {
        let d = cols.len();
        // ||(I - B)_ij|| <= ||B_ij|| + [i == j]
        (0..d)
            .map(|i| (0..d).map(|j| cols[j][i].l1_norm()).sum::<BigInt>() + BigInt::one())
            .product()
    }
    match burau_exact::<i128>(b) {
        Some(cols) => bound(cols),
        None => bound(burau_exact::<BigInt>(b).expect("BigInt arithmetic does not overflow")),
    }
}

/// Normalized Alexander polynomial of the closure of `b` via reduced Burau.
pub fn alexander_burau(b: &BraidWord) -> Result<LaurentPoly> {
    b.ensure_knot()?;
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let c = b.crossing_count() as i64;
    let e = b.exponent_sum();
    let center = (e - (n as i64 - 1)) / 2;
    let genus_bound = (c - (n as i64 - 1)) / 2;
    let low = center - genus_bound;
    let degree = c as usize;

    let bound = det_coefficient_bound(b);
    let coeffs = modular::interpolate_exact(degree, &bound, |r, p| {
        // det(I - B(r)) · r^(-low)
        let scale = if low >= 0 {
            modular::inv_mod(modular::pow_mod(r, low as u64, p), p)
        } else {
            modular::pow_mod(r, low.unsigned_abs(), p)
        };
        mul_mod(burau_det_mod(b, r, p), scale, p)
    })
    .ok_or_else(|| Error::InternalInvariantViolation("coefficient bound exceeds the prime table".into()))?;
    let det = LaurentPoly::from_dense(low, coeffs);

    let quantum_n = LaurentPoly::from_dense(0, vec![1; n]);
    let quotient = det.div_exact(&quantum_n).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("det(I - B) of {b} is not divisible by [{n}]_t"))
    })?;
    let alexander = quotient.shift(-center);
    if !alexander.is_symmetric() || alexander.eval_at_one() != BigInt::one() {
        return Err(Error::InternalInvariantViolation(format!(
            "Burau route produced a non-normalized Alexander polynomial {alexander} for {b}"
        )));
    }
    Ok(alexander)
}

/// Values of the normalized Alexander polynomial at a few fixed points
/// modulo `2^61 - 1`. Equal polynomials have equal hashes; the hash of a
/// product is the product of hashes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlexanderHash(pub [u64; 3]);

impl AlexanderHash {
    pub fn of_poly(poly: &LaurentPoly) -> Self {
        AlexanderHash(HASH_POINTS.map(|r| poly.eval_mod(r, modular::MERSENNE_61)))
    }

    pub fn product(self, other: AlexanderHash) -> Self {
        let p = modular::MERSENNE_61;
        AlexanderHash([0, 1, 2].map(|k| mul_mod(self.0[k], other.0[k], p)))
    }

    pub fn is_trivial(self) -> bool {
        self.0 == [1, 1, 1]
    }
}

/// [`AlexanderHash`] of the closure of `b`, straight from the braid at a cost
/// of three modular determinants.
pub fn alexander_hash(b: &BraidWord) -> Result<AlexanderHash> {
    b.ensure_knot()?;
    let n = b.strands() as u64;
    if n == 1 {
        return Ok(AlexanderHash([1, 1, 1]));
    }
    let p = modular::MERSENNE_61;
    let center = (b.exponent_sum() - (n as i64 - 1)) / 2;
    let values = HASH_POINTS.map(|r| {
        let det = burau_det_mod(b, r, p);
        // [n]_r = (r^n - 1) / (r - 1)
        let qn = mul_mod(sub_mod(modular::pow_mod(r, n, p), 1, p), modular::inv_mod(r - 1, p), p);
        let shift = if center >= 0 {
            modular::inv_mod(modular::pow_mod(r, center as u64, p), p)
        } else {
            modular::pow_mod(r, center.unsigned_abs(), p)
        };
        mul_mod(mul_mod(det, modular::inv_mod(qn, p), p), shift, p)
    });
    Ok(AlexanderHash(values))
}
