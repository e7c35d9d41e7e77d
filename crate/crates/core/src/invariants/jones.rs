//! Jones polynomial through the Kauffman bracket, computed by a
//! Temperley–Lieb transfer over planar matchings.
//!
//! A state is a noncrossing matching of the `2n` boundary points of a
//! partial braid diagram: points `0..n` are the current top, points
//! `n..2n` the bottom. Generators act as `σ⁺ = A·1 + A⁻¹·e_i` and
//! `σ⁻ = A⁻¹·1 + A·e_i`; closure joins top `k` to bottom `n + k` and every
//! loop contributes `δ = -A² - A⁻²`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::braids::BraidWord;
use crate::dense::{Coeff, DensePoly};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest strand count accepted by [`jones_tl`].
pub const JONES_STRAND_BUDGET: usize = 12;

const BITS: u32 = 5;
const MASK: u128 = (1 << BITS) - 1;

fn partner(m: u128, k: usize) -> usize {
    ((m >> (BITS * k as u32)) & MASK) as usize
}

fn set_partner(m: u128, k: usize, v: usize) -> u128 {
    let shift = BITS * k as u32;
    (m & !(MASK << shift)) | ((v as u128) << shift)
}

fn pair(m: u128, a: usize, b: usize) -> u128 {
    set_partner(set_partner(m, a, b), b, a)
}

fn identity_matching(n: usize) -> u128 {
    (0..n).fold(0, |m, k| pair(m, k, n + k))
}

/// Number of loops after closing the matching.
fn closure_loops(m: u128, n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            let q = partner(m, p);
            seen[p] = true;
            seen[q] = true;
            p = (q + n) % (2 * n);
            if p == start {
                break;
            }
        }
    }
    loops
}

/// `Σ` over closed states of `coeff · δ^(loops - 1)`, in the variable `A`.
fn bracket_tl<C: Coeff>(b: &BraidWord) -> Option<LaurentPoly> {
    let n = b.strands();
    let mut states: HashMap<u128, DensePoly<C>> = HashMap::new();
    states.insert(identity_matching(n), DensePoly::monomial(0, C::from_i64(1)));
    for g in b.gens() {
        let (a, c) = (g.index - 1, g.index);
        // A-exponent of the identity term; the e_i term carries the opposite.
        let s = if g.positive { 1 } else { -1 };
        let mut next: HashMap<u128, DensePoly<C>> = HashMap::with_capacity(states.len() * 2);
        for (m, poly) in states {
            next.entry(m).or_insert_with(DensePoly::zero).add_shifted(&poly, s, false)?;
            let (pa, pc) = (partner(m, a), partner(m, c));
            if pa == c {
                // e_i closes a loop: δ · A^(-s) = -A^(2-s) - A^(-2-s)
                let slot = next.entry(m).or_insert_with(DensePoly::zero);
                slot.add_shifted(&poly, 2 - s, true)?;
                slot.add_shifted(&poly, -2 - s, true)?;
            } else {
                let e = pair(pair(m, a, c), pa, pc);
                next.entry(e).or_insert_with(DensePoly::zero).add_shifted(&poly, -s, false)?;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut delta = DensePoly::<C>::monomial(2, C::from_i64(-1));
    delta.add_shifted(&DensePoly::monomial(-2, C::from_i64(-1)), 0, false)?;
    let mut powers = vec![DensePoly::monomial(0, C::from_i64(1))];
    let mut total = DensePoly::<C>::zero();
    for (m, poly) in &states {
        let k = closure_loops(*m, n) - 1;
        while powers.len() <= k {
            let last = powers.last().expect("nonempty").mul(&delta)?;
            powers.push(last);
        }
        total.add_shifted(&poly.mul(&powers[k])?, 0, false)?;
    }
    Some(total.to_laurent())
}

/// Writhe-normalized Jones polynomial in `t = A⁻⁴` from the bracket
/// normalized so that the unknot diagram has bracket `1`.
pub(crate) fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly> {
    // (-A^3)^(-w)
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = bracket * &LaurentPoly::monomial(-3 * writhe, sign);
    let mut out = LaurentPoly::zero();
    for (e, c) in f.terms() {
        if e % 4 != 0 {
            return Err(Error::InternalInvariantViolation(format!("bracket exponent {e} is not a multiple of 4")));
        }
        out.add_term(-e / 4, c.clone());
    }
    if out.eval_at_one() != BigInt::from(1) {
        return Err(Error::InternalInvariantViolation(format!("Jones polynomial {out} has V(1) != 1")));
    }
    Ok(out)
}

/// Jones polynomial of the closure of `b` by Temperley–Lieb transfer.
pub fn jones_tl(b: &BraidWord) -> Result<LaurentPoly> {
    b.ensure_knot()?;
    if b.strands() > JONES_STRAND_BUDGET {
        return Err(Error::StrandBudgetExceeded { strands: b.strands(), budget: JONES_STRAND_BUDGET });
    }
    let bracket = match bracket_tl::<i128>(b) {
        Some(p) => p,
        None => bracket_tl::<BigInt>(b).expect("BigInt arithmetic does not overflow"),
    };
    jones_from_bracket(&bracket, b.exponent_sum())
}
