//! Braid words for template orbits.
//!
//! An orbit word on `L(m,n)` becomes a closed braid on `ℓ = |w|` strands:
//! the X- and Y-bundles leave the branch line, pick up their half twists,
//! and then merge back onto the branch line through a positive permutation
//! braid in which X-strands pass in front of Y-strands.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{compare_shifts, OrbitWord, TemplateSpec};

/// Artin generator `σ_index^{±1}`, `index` counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub positive: bool,
}

impl Generator {
    pub fn pos(index: usize) -> Self {
        Generator { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        Generator { index, positive: false }
    }

    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Generator { positive: !self.positive, ..self }
    }

    pub fn to_signed(self) -> i64 {
        self.index as i64 * self.sign()
    }

    pub fn from_signed(v: i64) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidBraid("generator index 0".into()));
        }
        Ok(Generator { index: v.unsigned_abs() as usize, positive: v > 0 })
    }
}

/// A permutation of `0..len`, stored as the image of each point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        cycles
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }
}

/// A braid word on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidJson", into = "BraidJson")]
pub struct BraidWord {
    strands: usize,
    gens: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, gens: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.index == 0 || g.index >= strands) {
            return Err(Error::InvalidBraid(format!("generator {} out of range for {} strands", g.to_signed(), strands)));
        }
        Ok(BraidWord { strands, gens })
    }

    pub fn trivial(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), gens: Vec::new() }
    }

    pub fn from_signed(strands: usize, gens: &[i64]) -> Result<Self> {
        let gens = gens.iter().map(|&g| Generator::from_signed(g)).collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, gens)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn crossing_count(&self) -> usize {
        self.gens.len()
    }

    /// Writhe of the closed-braid diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.gens.iter().map(|g| g.sign()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.gens.iter().all(|g| g.positive)
    }

    pub fn is_negative(&self) -> bool {
        self.gens.iter().all(|g| !g.positive)
    }

    /// Where the strand entering at the top in position `i` leaves at the bottom.
    pub fn permutation(&self) -> Permutation {
        // line[pos] = strand currently at pos
        let mut line: Vec<usize> = (0..self.strands).collect();
        for g in &self.gens {
            line.swap(g.index - 1, g.index);
        }
        let mut image = vec![0; self.strands];
        for (pos, &strand) in line.iter().enumerate() {
            image[strand] = pos;
        }
        Permutation(image)
    }

    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn ensure_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Product braid `self · other` (same strand count).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidBraid("strand counts differ".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        BraidWord::new(self.strands, gens)
    }

    /// Braid whose closure is the connected sum of the closures of `a` and `b`:
    /// `b` is shifted to strands `a.strands ..`, joined by one positive crossing.
    pub fn connected_sum(a: &BraidWord, b: &BraidWord) -> BraidWord {
        let offset = a.strands;
        let mut gens = a.gens.clone();
        gens.extend(b.gens.iter().map(|g| Generator { index: g.index + offset, ..*g }));
        gens.push(Generator::pos(a.strands));
        BraidWord { strands: a.strands + b.strands, gens }
    }

    pub fn to_signed_string(&self) -> String {
        self.gens.iter().map(|g| g.to_signed().to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.strands, self.to_signed_string())
    }
}

/// Parses `"<strands>: g1 g2 ..."` with signed generator indices.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (strands, body) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidBraid(format!("expected \"strands: gens\", got {s:?}")))?;
        let strands = strands
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidBraid(format!("bad strand count {strands:?}")))?;
        let gens = body
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::InvalidBraid(format!("bad generator {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_signed(strands, &gens)
    }
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    strands: usize,
    gens: Vec<i64>,
}

impl From<BraidWord> for BraidJson {
    fn from(b: BraidWord) -> Self {
        BraidJson { strands: b.strands, gens: b.gens.iter().map(|g| g.to_signed()).collect() }
    }
}

impl TryFrom<BraidJson> for BraidWord {
    type Error = Error;

    fn try_from(j: BraidJson) -> Result<Self> {
        BraidWord::from_signed(j.strands, &j.gens)
    }
}

/// Positions of the cyclic shifts of `word` in the kneading order:
/// `rank[k]` is the branch-line position of the shift starting at letter `k`.
fn shift_ranks(word: &OrbitWord, spec: TemplateSpec) -> Vec<usize> {
    let letters = word.letters();
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by(|&i, &j| compare_shifts(letters, i, j, spec));
    let mut rank = vec![0; letters.len()];
    for (pos, &k) in order.iter().enumerate() {
        rank[k] = pos;
    }
    rank
}

/// First-return permutation of the orbit's punctures on the branch line.
pub fn lorenz_permutation(word: &OrbitWord, spec: TemplateSpec) -> Permutation {
    let len = word.len();
    let rank = shift_ranks(word, spec);
    let mut image = vec![0; len];
    for k in 0..len {
        image[rank[k]] = rank[(k + 1) % len];
    }
    Permutation(image)
}

/// `|count|` copies of the half twist `Δ_k` on strands `1..=k`.
pub fn half_twist_block(k: usize, count: i64) -> BraidWord {
    let mut gens = Vec::new();
    push_half_twists(&mut gens, 0, k, count);
    BraidWord { strands: k.max(1), gens }
}

fn push_half_twists(gens: &mut Vec<Generator>, offset: usize, k: usize, count: i64) {
    let positive = count > 0;
    for _ in 0..count.unsigned_abs() {
        // Δ_k = (σ1)(σ2 σ1)...(σ_{k-1} ... σ1)
        for top in 1..k {
            for i in (1..=top).rev() {
                gens.push(Generator { index: offset + i, positive });
            }
        }
    }
}

/// The closed braid carrying the orbit `word` on `spec`.
///
/// Twist blocks on the X-bundle (positions `1..=p`) and Y-bundle
/// (`p+1..=ℓ`) come first, followed by the positive permutation braid that
/// lands every strand on its return position. Mirrored templates flip every
/// crossing.
pub fn build_braid(word: &OrbitWord, spec: TemplateSpec) -> Result<BraidWord> {
    let len = word.len();
    let p = word.p();
    let q = word.q();
    let pi = lorenz_permutation(word, spec);

    let mut gens = Vec::new();
    push_half_twists(&mut gens, 0, p, spec.m);
    push_half_twists(&mut gens, p, q, spec.n);

    // Position of each branch-line strand after its bundle's twists.
    let after_twist = |i: usize| -> usize {
        if i < p {
            if spec.m.rem_euclid(2) == 1 { p - 1 - i } else { i }
        } else if spec.n.rem_euclid(2) == 1 {
            p + (len - 1 - i)
        } else {
            i
        }
    };
    let mut layer = vec![0; len];
    for i in 0..len {
        layer[after_twist(i)] = pi.apply(i);
    }
    if (1..p).any(|j| layer[j - 1] > layer[j]) || (p + 1..len).any(|j| layer[j - 1] > layer[j]) {
        return Err(Error::InternalInvariantViolation(format!(
            "merge layer of {word} on {spec} is not monotone within a branch"
        )));
    }
    // Move X-strands right, rightmost first; each passes in front of Y-strands only.
    for j in (0..p).rev() {
        for pos in j..layer[j] {
            gens.push(Generator::pos(pos + 1));
        }
    }

    if spec.mirrored {
        for g in &mut gens {
            g.positive = !g.positive;
        }
    }
    let braid = BraidWord::new(len, gens)?;
    match braid.component_count() {
        1 => Ok(braid),
        c => Err(Error::InternalInvariantViolation(format!(
            "closure of {word} on {spec} has {c} components"
        ))),
    }
}

/// Inversion count of the merge-layer permutation, i.e. the number of
/// crossings between X- and Y-strands in `build_braid`.
pub fn merge_crossings(word: &OrbitWord, spec: TemplateSpec) -> usize {
    let pi = lorenz_permutation(word, spec);
    let p = word.p();
    (0..p)
        .map(|i| (p..word.len()).filter(|&j| pi.apply(i) > pi.apply(j)).count())
        .sum()
}

pub fn mirror_braid(b: &BraidWord) -> BraidWord {
    BraidWord { strands: b.strands, gens: b.gens.iter().map(|g| g.inverse()).collect() }
}

/// Reduces a braid without changing the knot type of its closure: cancels
/// inverse pairs separated only by commuting generators (cyclically), drops
/// boundary strands no crossing touches, and destabilizes boundary strands
/// that take part in a single crossing. Repeats until nothing changes.
pub fn simplify_braid(b: &BraidWord) -> BraidWord {
    let mut strands = b.strands;
    let mut gens = b.gens.clone();
    loop {
        let before = (strands, gens.len());
        cancel_pairs(&mut gens);
        loop {
            let count = |idx: usize| gens.iter().filter(|g| g.index == idx).count();
            if strands <= 1 {
                break;
            }
            let last = strands - 1;
            if count(last) <= 1 {
                gens.retain(|g| g.index != last);
                strands -= 1;
                continue;
            }
            if count(1) <= 1 {
                gens.retain(|g| g.index != 1);
                for g in &mut gens {
                    g.index -= 1;
                }
                strands -= 1;
                continue;
            }
            break;
        }
        if (strands, gens.len()) == before {
            break;
        }
    }
    BraidWord { strands: strands.max(1), gens }
}

/// Removes `σ_i^ε … σ_i^{-ε}` pairs whose intervening letters all commute
/// with `σ_i`, treating the word as cyclic.
fn cancel_pairs(gens: &mut Vec<Generator>) {
    loop {
        let n = gens.len();
        let mut found = None;
        'search: for a in 0..n {
            let ga = gens[a];
            for step in 1..n {
                let b = (a + step) % n;
                let gb = gens[b];
                if gb.index == ga.index {
                    if gb.positive != ga.positive {
                        found = Some((a, b));
                        break 'search;
                    }
                    break;
                }
                if gb.index.abs_diff(ga.index) < 2 {
                    break;
                }
            }
        }
        match found {
            Some((a, b)) => {
                let (hi, lo) = if a > b { (a, b) } else { (b, a) };
                gens.remove(hi);
                gens.remove(lo);
            }
            None => break,
        }
    }
}
