//! Exact knot invariants of closed braids.

pub mod burau;
pub mod jones;
pub mod kauffman;
pub mod seifert;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::braids::{build_braid, simplify_braid, BraidWord};
use crate::error::{Error, Result};
use crate::orbits::{OrbitWord, TemplateSpec};
use crate::poly::LaurentPoly;

pub use burau::{alexander_burau, alexander_hash, AlexanderHash};
pub use jones::{jones_tl, JONES_STRAND_BUDGET};
pub use kauffman::{kauffman_oracle, ORACLE_CROSSING_BUDGET};
pub use seifert::{alexander_seifert, genus_bennequin, seifert_matrix, signature, SeifertMatrix};

/// Invariant bundle of one knot. Equal knots have equal fingerprints up to
/// `exponent_sum`, which belongs to the braid rather than the knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub alexander: LaurentPoly,
    #[serde(with = "crate::bigjson::bigint")]
    pub determinant: BigInt,
    pub signature: i64,
    pub exponent_sum: i64,
    pub jones: Option<LaurentPoly>,
    pub jones_computed: bool,
}

impl Fingerprint {
    pub fn unknot() -> Self {
        Fingerprint {
            alexander: LaurentPoly::one(),
            determinant: BigInt::from(1),
            signature: 0,
            exponent_sum: 0,
            jones: Some(LaurentPoly::one()),
            jones_computed: true,
        }
    }

    pub fn is_unknot_like(&self) -> bool {
        self.alexander.is_one() && self.signature == 0 && self.jones.as_ref().is_none_or(|j| j.is_one())
    }

    pub fn alexander_hash(&self) -> AlexanderHash {
        AlexanderHash::of_poly(&self.alexander)
    }

    /// Alexander polynomial, determinant and signature agree.
    pub fn classical_match(&self, other: &Fingerprint) -> bool {
        self.alexander == other.alexander && self.determinant == other.determinant && self.signature == other.signature
    }

    /// `Some(true/false)` when both sides carry a Jones polynomial.
    pub fn jones_match(&self, other: &Fingerprint) -> Option<bool> {
        match (&self.jones, &other.jones) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        }
    }

    /// Fingerprint of the connected sum. The exponent sum is that of
    /// [`BraidWord::connected_sum`] on the factor braids.
    pub fn connected_sum(&self, other: &Fingerprint) -> Fingerprint {
        let jones = match (&self.jones, &other.jones) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        Fingerprint {
            alexander: &self.alexander * &other.alexander,
            determinant: &self.determinant * &other.determinant,
            signature: self.signature + other.signature,
            exponent_sum: self.exponent_sum + other.exponent_sum + 1,
            jones_computed: jones.is_some(),
            jones,
        }
    }

    /// Fingerprint of the mirror knot.
    pub fn mirror(&self) -> Fingerprint {
        Fingerprint {
            alexander: self.alexander.clone(),
            determinant: self.determinant.clone(),
            signature: -self.signature,
            exponent_sum: -self.exponent_sum,
            jones: self.jones.as_ref().map(LaurentPoly::reciprocal),
            jones_computed: self.jones_computed,
        }
    }

    fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InternalInvariantViolation(format!("{what}: {self:?}")));
        if self.alexander.eval_at_one() != BigInt::from(1) || !self.alexander.is_symmetric() {
            return fail("Alexander polynomial is not normalized");
        }
        if self.determinant != self.alexander.eval_at_neg_one().abs() || self.determinant.is_even() {
            return fail("determinant is not |Δ(-1)| or is even");
        }
        if self.signature % 2 != 0 {
            return fail("odd signature");
        }
        if let Some(j) = &self.jones {
            if j.eval_at_one() != BigInt::from(1) {
                return fail("Jones polynomial has V(1) != 1");
            }
        }
        Ok(())
    }
}

/// Fingerprint of the closure of `b`. Invariants are computed on the
/// simplified braid; `exponent_sum` is that of `b` itself. Jones is skipped
/// when the simplified braid has more than `jones_budget` strands.
pub fn fingerprint_braid(b: &BraidWord, jones_budget: usize) -> Result<Fingerprint> {
    b.ensure_knot()?;
    let s = simplify_braid(b);
    let alexander = alexander_burau(&s)?;
    let jones = if s.strands() <= jones_budget.min(JONES_STRAND_BUDGET) {
        Some(jones_tl(&s)?)
    } else {
        None
    };
    let fp = Fingerprint {
        determinant: alexander.eval_at_neg_one().abs(),
        alexander,
        signature: signature(&s)?,
        exponent_sum: b.exponent_sum(),
        jones_computed: jones.is_some(),
        jones,
    };
    fp.check()?;
    Ok(fp)
}

/// Fingerprint of the orbit `word` on `spec`.
pub fn fingerprint(word: &OrbitWord, spec: TemplateSpec, jones_budget: usize) -> Result<Fingerprint> {
    fingerprint_braid(&build_braid(word, spec)?, jones_budget)
}
