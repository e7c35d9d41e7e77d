//! Templates, orbit words and the kneading order on the branch line.
//!
//! A periodic orbit of `L(m,n)` is named by the cyclic word of branches it
//! visits. Words are stored in canonical form: the lexicographically least
//! rotation (with `x < y`) of a primitive word, i.e. a Lyndon word.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'x' | 'X' => Ok(Letter::X),
            'y' | 'Y' => Ok(Letter::Y),
            other => Err(Error::InvalidLetter(other)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// The template `L(m,n)`, or its mirror image when `mirrored` is set.
///
/// `m` and `n` count signed half twists on the X- and Y-branch, left-handed
/// twists positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TemplateSpec {
    pub m: i64,
    pub n: i64,
    pub mirrored: bool,
}

impl TemplateSpec {
    pub const LORENZ: TemplateSpec = TemplateSpec::new(0, 0);

    pub const fn new(m: i64, n: i64) -> Self {
        TemplateSpec { m, n, mirrored: false }
    }

    pub const fn mirror_of(m: i64, n: i64) -> Self {
        TemplateSpec { m, n, mirrored: true }
    }

    /// The mirror image template.
    pub fn mirror(self) -> Self {
        TemplateSpec { mirrored: !self.mirrored, ..self }
    }

    /// `L(n,m)`: the same template with the branch names exchanged.
    pub fn swapped(self) -> Self {
        TemplateSpec { m: self.n, n: self.m, ..self }
    }

    pub fn twists(self, letter: Letter) -> i64 {
        match letter {
            Letter::X => self.m,
            Letter::Y => self.n,
        }
    }

    /// `-1` when the branch of `letter` reverses orientation (odd twist count).
    pub fn orientation(self, letter: Letter) -> i8 {
        if self.twists(letter).rem_euclid(2) == 1 {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for TemplateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            write!(f, "~")?;
        }
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for TemplateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTemplate(s.to_string());
        let trimmed = s.trim();
        let (mirrored, body) = match trimmed.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, trimmed),
        };
        let (m, n) = body.split_once(',').ok_or_else(bad)?;
        let m = m.trim().parse::<i64>().map_err(|_| bad())?;
        let n = n.trim().parse::<i64>().map_err(|_| bad())?;
        Ok(TemplateSpec { m, n, mirrored })
    }
}

impl From<TemplateSpec> for String {
    fn from(t: TemplateSpec) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for TemplateSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A primitive cyclic word over `{x, y}` in canonical (least-rotation) form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct OrbitWord {
    letters: Vec<Letter>,
}

impl OrbitWord {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of visits to the X-branch.
    pub fn p(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::X).count()
    }

    /// Number of visits to the Y-branch.
    pub fn q(&self) -> usize {
        self.len() - self.p()
    }

    /// The same orbit with branch names exchanged, re-canonicalized.
    pub fn swap_xy(&self) -> OrbitWord {
        let swapped: Vec<Letter> = self.letters.iter().map(|l| l.swapped()).collect();
        canonical_word(&swapped).expect("swapping letters preserves primitivity")
    }
}

impl fmt::Display for OrbitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for OrbitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        canonical_word(&parse_letters(s)?)
    }
}

impl From<OrbitWord> for String {
    fn from(w: OrbitWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for OrbitWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    s.trim().chars().map(Letter::from_char).collect()
}

pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

pub fn rotate(letters: &[Letter], k: usize) -> Vec<Letter> {
    if letters.is_empty() {
        return Vec::new();
    }
    let k = k % letters.len();
    letters[k..].iter().chain(&letters[..k]).copied().collect()
}

/// Smallest period `d` dividing the length with `letters = root^(len/d)`.
fn primitive_period(letters: &[Letter]) -> usize {
    let len = letters.len();
    (1..=len)
        .filter(|d| len.is_multiple_of(*d))
        .find(|&d| (d..len).all(|i| letters[i] == letters[i - d]))
        .unwrap_or(len)
}

pub fn canonical_word(letters: &[Letter]) -> Result<OrbitWord> {
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    let period = primitive_period(letters);
    if period < letters.len() {
        let root = canonical_rotation(&letters[..period]);
        return Err(Error::NonPrimitive {
            word: letters_to_string(letters),
            root: letters_to_string(&root),
        });
    }
    Ok(OrbitWord { letters: canonical_rotation(letters) })
}

fn canonical_rotation(letters: &[Letter]) -> Vec<Letter> {
    (0..letters.len())
        .map(|k| rotate(letters, k))
        .min()
        .unwrap_or_default()
}

/// Number of primitive binary necklaces of length `len`: `(1/len) Σ_{d|len} μ(d) 2^(len/d)`.
pub fn necklace_count(len: usize) -> u64 {
    if len == 0 {
        return 0;
    }
    let total: i128 = (1..=len)
        .filter(|d| len.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (1i128 << (len / d)))
        .sum();
    (total / len as i128) as u64
}

fn mobius(mut n: usize) -> i8 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// All canonical primitive words of length `1..=max_len`, ordered by length
/// and then lexicographically.
pub fn enumerate_orbits(max_len: usize) -> Vec<OrbitWord> {
    let mut words = Vec::new();
    if max_len == 0 {
        return words;
    }
    // Duval's algorithm yields the Lyndon words of length <= max_len in lex order.
    let mut w: Vec<Letter> = vec![Letter::X];
    loop {
        words.push(OrbitWord { letters: w.clone() });
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&Letter::Y) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last = Letter::Y,
            None => break,
        }
    }
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    words
}

/// Kneading order on the periodic itineraries `s^∞` and `t^∞`.
///
/// At the first index where the itineraries differ, letters compare with
/// `x < y`, reversed when the common prefix passes an odd number of times
/// through orientation-reversing branches.
pub fn twisted_compare(s: &[Letter], t: &[Letter], spec: TemplateSpec) -> Ordering {
    assert!(!s.is_empty() && !t.is_empty(), "itineraries must have a nonempty period");
    let horizon = s.len() + t.len();
    let mut sign = 1i8;
    for k in 0..horizon {
        let a = s[k % s.len()];
        let b = t[k % t.len()];
        if a != b {
            let ord = a.cmp(&b);
            return if sign > 0 { ord } else { ord.reverse() };
        }
        sign *= spec.orientation(a);
    }
    Ordering::Equal
}

/// Compares the shifts of `word^∞` starting at offsets `i` and `j`.
pub(crate) fn compare_shifts(word: &[Letter], i: usize, j: usize, spec: TemplateSpec) -> Ordering {
    let len = word.len();
    let mut sign = 1i8;
    for k in 0..len {
        let a = word[(i + k) % len];
        let b = word[(j + k) % len];
        if a != b {
            let ord = a.cmp(&b);
            return if sign > 0 { ord } else { ord.reverse() };
        }
        sign *= spec.orientation(a);
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        parse_letters(s).unwrap()
    }

    #[test]
    fn canonical_rotations() {
        assert_eq!(canonical_word(&w("yx")).unwrap().to_string(), "xy");
        assert_eq!(canonical_word(&w("yxy")).unwrap().to_string(), "xyy");
        let word = canonical_word(&w("yyxyx")).unwrap();
        assert_eq!(word.to_string(), "xyxyy");
        assert_eq!((word.p(), word.q(), word.len()), (2, 3, 5));
    }

    #[test]
    fn canonical_errors() {
        assert_eq!(canonical_word(&[]), Err(Error::EmptyWord));
        assert_eq!(
            canonical_word(&w("xyxy")),
            Err(Error::NonPrimitive { word: "xyxy".into(), root: "xy".into() })
        );
        assert!(matches!(canonical_word(&w("yyy")), Err(Error::NonPrimitive { .. })));
        assert_eq!("xaz".parse::<OrbitWord>(), Err(Error::InvalidLetter('a')));
    }

    #[test]
    fn small_enumerations() {
        let names = |n| enumerate_orbits(n).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(names(1), ["x", "y"]);
        assert_eq!(names(2), ["x", "y", "xy"]);
        assert_eq!(names(3), ["x", "y", "xy", "xxy", "xyy"]);
    }

    #[test]
    fn enumeration_matches_necklace_formula() {
        let words = enumerate_orbits(16);
        for len in 1..=16 {
            let count = words.iter().filter(|w| w.len() == len).count() as u64;
            assert_eq!(count, necklace_count(len), "length {len}");
        }
        assert_eq!(necklace_count(16), 4080);
    }

    #[test]
    fn template_parsing() {
        let t: TemplateSpec = "~1,-3".parse().unwrap();
        assert_eq!(t, TemplateSpec::mirror_of(1, -3));
        assert_eq!(t.to_string(), "~1,-3");
        assert_eq!("0,-2".parse::<TemplateSpec>().unwrap(), TemplateSpec::new(0, -2));
        assert!("0;2".parse::<TemplateSpec>().is_err());
        assert!("a,2".parse::<TemplateSpec>().is_err());
        assert!("1,2,3".parse::<TemplateSpec>().is_err());
    }

    #[test]
    fn plain_lexicographic_order_on_lorenz() {
        let lorenz = TemplateSpec::LORENZ;
        assert_eq!(twisted_compare(&w("x"), &w("xy"), lorenz), Ordering::Less);
        assert_eq!(twisted_compare(&w("xy"), &w("yx"), lorenz), Ordering::Less);
        assert_eq!(twisted_compare(&w("xy"), &w("xyxy"), lorenz), Ordering::Equal);
    }

    #[test]
    fn odd_twist_reverses_after_x() {
        let t = TemplateSpec::new(1, 0);
        // xx... versus xy...: the shared prefix x reverses the comparison.
        assert_eq!(twisted_compare(&w("x"), &w("xy"), t), Ordering::Greater);
        assert_eq!(twisted_compare(&w("xy"), &w("y"), t), Ordering::Less);
    }

    #[test]
    fn swap_xy_recanonicalizes() {
        let word: OrbitWord = "xxyxy".parse().unwrap();
        assert_eq!(word.swap_xy().to_string(), "xyxyy");
    }
}
