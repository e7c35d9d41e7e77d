//! Seifert matrices of closed braids, signature, and the Seifert-form route
//! to the Alexander polynomial.
//!
//! Seifert's algorithm on a closed-braid diagram gives one disc per strand
//! and one half-twisted band per crossing. A basis of first homology is one
//! loop per pair of consecutive bands in the same column.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::braids::BraidWord;
use crate::error::{Error, Result};
use crate::modular;
use crate::poly::LaurentPoly;

/// Integer Seifert matrix, square of size `2g'` for the braid surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

/// Homology loop between bands at word positions `start < end` of one column.
#[derive(Clone, Copy, Debug)]
struct Loop {
    column: usize,
    start: usize,
    end: usize,
    start_positive: bool,
    end_positive: bool,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `det(V - V^T)`, which is `±1` for a knot.
    pub fn intersection_determinant(&self) -> BigInt {
        self.alexander_determinant().eval_at_one()
    }

    /// `det(V - t V^T)`, un-normalized, by evaluation modulo large primes.
    pub fn alexander_determinant(&self) -> LaurentPoly {
        let n = self.size();
        if n == 0 {
            return LaurentPoly::one();
        }
        // Row norms of V - tV^T bound every coefficient of the determinant.
        let bound: BigInt = (0..n)
            .map(|i| BigInt::from((0..n).map(|j| self.get(i, j).abs() + self.get(j, i).abs()).sum::<i64>()))
            .product();
        let coeffs = modular::interpolate_exact(n, &bound, |r, p| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let a = modular::bigint_mod(&BigInt::from(self.get(i, j)), p);
                            let b = modular::bigint_mod(&BigInt::from(self.get(j, i)), p);
                            modular::sub_mod(a, modular::mul_mod(r, b, p), p)
                        })
                        .collect()
                })
                .collect();
            modular::det_mod(m, p)
        })
        .expect("entries of a Seifert matrix are small");
        LaurentPoly::from_dense(0, coeffs)
    }

    /// Signature of the symmetrization `V + V^T`.
    pub fn signature(&self) -> i64 {
        let n = self.size();
        let sym: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer((self.get(i, j) + self.get(j, i)).into())).collect())
            .collect();
        symmetric_signature(sym)
    }
}

fn homology_loops(b: &BraidWord) -> Vec<Loop> {
    let mut loops = Vec::new();
    for column in 1..b.strands() {
        let bands: Vec<(usize, bool)> = b
            .gens()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.index == column)
            .map(|(pos, g)| (pos, g.positive))
            .collect();
        for pair in bands.windows(2) {
            loops.push(Loop {
                column,
                start: pair[0].0,
                end: pair[1].0,
                start_positive: pair[0].1,
                end_positive: pair[1].1,
            });
        }
    }
    loops
}

/// Linking number of loop `a` with the positive push-off of loop `b`.
fn seifert_entry(a: &Loop, b: &Loop) -> i64 {
    if a.column == b.column {
        if a.start == b.start {
            return match (a.start_positive, a.end_positive) {
                (true, true) => -1,
                (false, false) => 1,
                _ => 0,
            };
        }
        if a.end == b.start {
            // shared band, a below b in the word
            return if a.end_positive { 1 } else { 0 };
        }
        if b.end == a.start {
            return if a.start_positive { 0 } else { -1 };
        }
        return 0;
    }
    if b.column == a.column + 1 {
        // a in the left column of the pair, b in the right one; the reverse
        // ordering contributes nothing.
        if a.start < b.start && b.start < a.end && a.end < b.end {
            return 1;
        }
        if b.start < a.start && a.start < b.end && b.end < a.end {
            return -1;
        }
    }
    0
}

/// Seifert matrix of the closed braid from the brick-diagram surface.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix> {
    b.ensure_knot()?;
    let loops = homology_loops(b);
    let entries = loops
        .iter()
        .map(|a| loops.iter().map(|c| seifert_entry(a, c)).collect())
        .collect();
    Ok(SeifertMatrix { entries })
}

/// Normalized Alexander polynomial from `det(V - t V^T)`.
pub fn alexander_seifert(b: &BraidWord) -> Result<LaurentPoly> {
    let v = seifert_matrix(b)?;
    v.alexander_determinant().normalize_symmetric().ok_or_else(|| {
        Error::InternalInvariantViolation(format!("det(V - tV^T) of {b} is not a unit multiple of a symmetric polynomial"))
    })
}

/// Knot signature, normalized so that the closure of `σ1^3` has signature `-2`.
pub fn signature(b: &BraidWord) -> Result<i64> {
    Ok(seifert_matrix(b)?.signature())
}

/// Genus of a homogeneous-sign braid closure, `(c - ℓ + 1) / 2`.
pub fn genus_bennequin(b: &BraidWord) -> Result<u64> {
    if !(b.is_positive() || b.is_negative()) {
        return Err(Error::MixedSigns);
    }
    b.ensure_knot()?;
    Ok(((b.crossing_count() + 1 - b.strands()) / 2) as u64)
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub(crate) fn symmetric_signature(mut m: Vec<Vec<BigRational>>) -> i64 {
    let mut sig = 0;
    let mut active: Vec<usize> = (0..m.len()).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&k| !m[k][k].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                // Zero diagonal: fold a row with a nonzero off-diagonal entry into its partner.
                let pair = active.iter().find_map(|&i| {
                    active.iter().find(|&&j| j != i && !m[i][j].is_zero()).map(|&j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                for &r in &active {
                    let v = m[r][j].clone();
                    m[r][i] += v;
                }
                for &c in &active {
                    let v = m[j][c].clone();
                    m[i][c] += v;
                }
                i
            }
        };
        let pv = m[k][k].clone();
        sig += if pv.is_positive() { 1 } else { -1 };
        active.retain(|&x| x != k);
        let col: Vec<BigRational> = active.iter().map(|&r| m[r][k].clone()).collect();
        for (a, &r) in active.iter().enumerate() {
            if col[a].is_zero() {
                continue;
            }
            let factor = &col[a] / &pv;
            for (b, &c) in active.iter().enumerate() {
                if !col[b].is_zero() {
                    let delta = &factor * &col[b];
                    m[r][c] -= delta;
                }
            }
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn braid(strands: usize, gens: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, gens).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let v = seifert_matrix(&braid(2, &[1, 1, 1])).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!(alexander_seifert(&braid(2, &[1, 1, 1])).unwrap().to_string(), "t - 1 + t^-1");
        assert_eq!(v.signature(), -2);
        assert_eq!(v.intersection_determinant().abs(), BigInt::one());
    }

    #[test]
    fn unknots_have_empty_matrices() {
        assert_eq!(seifert_matrix(&BraidWord::trivial(1)).unwrap().size(), 0);
        assert_eq!(seifert_matrix(&braid(2, &[1])).unwrap().size(), 0);
        assert_eq!(signature(&BraidWord::trivial(1)).unwrap(), 0);
    }

    #[test]
    fn genus_of_homogeneous_braids() {
        assert_eq!(genus_bennequin(&braid(2, &[1])).unwrap(), 0);
        assert_eq!(genus_bennequin(&braid(2, &[1, 1, 1])).unwrap(), 1);
        assert_eq!(genus_bennequin(&braid(2, &[-1, -1, -1])).unwrap(), 1);
        assert_eq!(genus_bennequin(&braid(3, &[1, -2])), Err(Error::MixedSigns));
        assert!(matches!(genus_bennequin(&braid(2, &[1, 1])), Err(Error::NotAKnot { .. })));
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(seifert_matrix(&braid(2, &[1, 1])), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn signature_with_zero_diagonal() {
        let h = |v: i64| BigRational::from_integer(v.into());
        let m = vec![vec![h(0), h(1)], vec![h(1), h(0)]];
        assert_eq!(symmetric_signature(m), 0);
        let m = vec![vec![h(-2), h(1)], vec![h(1), h(-2)]];
        assert_eq!(symmetric_signature(m), -2);
    }
}
