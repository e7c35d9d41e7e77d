//! Brute-force Kauffman state sum over all `2^c` smoothings, used as an
//! oracle for the transfer-matrix Jones polynomial.

use std::collections::BTreeMap;

use crate::braids::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::jones::jones_from_bracket;
use crate::poly::LaurentPoly;

/// Largest crossing count accepted by [`kauffman_oracle`].
pub const ORACLE_CROSSING_BUDGET: usize = 18;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when `a` and `b` were in different classes.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Jones polynomial of the closure of `b` from the state sum.
pub fn kauffman_oracle(b: &BraidWord) -> Result<LaurentPoly> {
    b.ensure_knot()?;
    let c = b.crossing_count();
    if c > ORACLE_CROSSING_BUDGET {
        return Err(Error::CrossingBudgetExceeded { crossings: c, budget: ORACLE_CROSSING_BUDGET });
    }
    let n = b.strands();
    if c == 0 {
        return jones_from_bracket(&delta_power(n - 1), 0);
    }
    // Arc (level, position); level c is level 0 again.
    let arc = |level: usize, pos: usize| (level % c) * n + pos;
    let arcs = c * n;

    // (A-exponent, loop count) -> number of states
    let mut tally: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    for state in 0u32..(1 << c) {
        let mut uf = UnionFind::new(arcs);
        let mut components = arcs;
        let mut a_exp = 0;
        for (k, g) in b.gens().iter().enumerate() {
            let i = g.index - 1;
            for pos in 0..n {
                if pos != i && pos != i + 1 && uf.union(arc(k, pos), arc(k + 1, pos)) {
                    components -= 1;
                }
            }
            // bit set: vertical smoothing (identity); clear: cup-cap
            let vertical = state >> k & 1 == 1;
            let joins = if vertical {
                [(arc(k, i), arc(k + 1, i)), (arc(k, i + 1), arc(k + 1, i + 1))]
            } else {
                [(arc(k, i), arc(k, i + 1)), (arc(k + 1, i), arc(k + 1, i + 1))]
            };
            for (x, y) in joins {
                if uf.union(x, y) {
                    components -= 1;
                }
            }
            a_exp += if vertical == g.positive { 1 } else { -1 };
        }
        *tally.entry((a_exp, components)).or_default() += 1;
    }

    let mut bracket = LaurentPoly::zero();
    for ((e, loops), count) in tally {
        bracket += &(&LaurentPoly::monomial(e, count) * &delta_power(loops - 1));
    }
    jones_from_bracket(&bracket, b.exponent_sum())
}

fn delta_power(k: usize) -> LaurentPoly {
    LaurentPoly::from_pairs([(2, -1), (-2, -1)]).pow(k as u32)
}
