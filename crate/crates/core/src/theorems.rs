//! Fingerprint-level checks of template inclusions and connected sums.
//!
//! Nothing here proves isotopy. A match means the invariants agree at the
//! recorded [`EvidenceLevel`]; a miss means nothing was found within the
//! recorded budgets.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braids::{build_braid, simplify_braid};
use crate::error::Result;
use crate::invariants::{alexander_hash, fingerprint, AlexanderHash, Fingerprint, JONES_STRAND_BUDGET};
use crate::orbits::{enumerate_orbits, OrbitWord, TemplateSpec};
use crate::poly::LaurentPoly;

/// Version of every JSON document written by this module.
pub const SCHEMA_VERSION: u32 = 1;

/// Strength of a fingerprint match.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceLevel {
    AlexanderOnly,
    AlexanderSignature,
    FullJones,
}

/// Outcome of comparing two fingerprints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Match(EvidenceLevel),
    /// Classical invariants agree but the Jones polynomials differ.
    JonesMismatch,
    Different,
}

pub fn compare(a: &Fingerprint, b: &Fingerprint) -> Comparison {
    if !a.classical_match(b) {
        return Comparison::Different;
    }
    match a.jones_match(b) {
        Some(true) => Comparison::Match(EvidenceLevel::FullJones),
        Some(false) => Comparison::JonesMismatch,
        None => Comparison::Match(EvidenceLevel::AlexanderSignature),
    }
}

/// A candidate rejected by Jones after its classical invariants matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Demotion {
    pub word: OrbitWord,
    pub candidate: OrbitWord,
}

/// Orbits of one template up to a length, indexed by Alexander hash.
/// Full fingerprints are computed lazily for hash candidates only.
pub struct TemplateIndex {
    spec: TemplateSpec,
    max_len: usize,
    jones_budget: usize,
    by_hash: HashMap<AlexanderHash, Vec<OrbitWord>>,
    fingerprints: HashMap<OrbitWord, Fingerprint>,
}

impl TemplateIndex {
    pub fn build(spec: TemplateSpec, max_len: usize, jones_budget: usize) -> Result<Self> {
        let mut by_hash: HashMap<AlexanderHash, Vec<OrbitWord>> = HashMap::new();
        for w in enumerate_orbits(max_len) {
            let b = simplify_braid(&build_braid(&w, spec)?);
            by_hash.entry(alexander_hash(&b)?).or_default().push(w);
        }
        Ok(TemplateIndex { spec, max_len, jones_budget, by_hash, fingerprints: HashMap::new() })
    }

    pub fn spec(&self) -> TemplateSpec {
        self.spec
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn fingerprint(&mut self, w: &OrbitWord) -> Result<&Fingerprint> {
        if !self.fingerprints.contains_key(w) {
            let fp = fingerprint(w, self.spec, self.jones_budget)?;
            self.fingerprints.insert(w.clone(), fp);
        }
        Ok(&self.fingerprints[w])
    }

    /// Shortest (then least) orbit matching `target` at the strongest level
    /// available, plus every candidate that Jones rejected.
    pub fn find(&mut self, target: &Fingerprint) -> Result<Search> {
        let candidates = self.by_hash.get(&target.alexander_hash()).cloned().unwrap_or_default();
        let mut best: Option<(OrbitWord, EvidenceLevel)> = None;
        let mut rejected = Vec::new();
        for w in candidates {
            match compare(target, self.fingerprint(&w)?) {
                Comparison::Match(level) => {
                    if best.as_ref().is_none_or(|(_, l)| level > *l) {
                        best = Some((w, level));
                    }
                    if level == EvidenceLevel::FullJones {
                        break;
                    }
                }
                Comparison::JonesMismatch => rejected.push(w),
                Comparison::Different => {}
            }
        }
        Ok((best, rejected))
    }
}

/// Result of [`TemplateIndex::find`]: the witness, if any, and the
/// Jones-rejected candidates.
pub type Search = (Option<(OrbitWord, EvidenceLevel)>, Vec<OrbitWord>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionMatch {
    pub word: OrbitWord,
    pub witness: OrbitWord,
    pub evidence_level: EvidenceLevel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionReport {
    pub schema_version: u32,
    pub sub: TemplateSpec,
    #[serde(rename = "super")]
    pub sup: TemplateSpec,
    pub sub_max_len: usize,
    pub super_search_len: usize,
    pub jones_budget: usize,
    pub matched: Vec<InclusionMatch>,
    pub unmatched: Vec<OrbitWord>,
    pub demoted: Vec<Demotion>,
}

impl InclusionReport {
    pub fn is_complete(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// Looks for every knot of `sub` (orbits up to `sub_max_len`) among the
/// knots of `sup` (orbits up to `super_search_len`).
pub fn verify_inclusion(
    sub: TemplateSpec,
    sup: TemplateSpec,
    sub_max_len: usize,
    super_search_len: usize,
    jones_budget: usize,
) -> Result<InclusionReport> {
    let mut index = TemplateIndex::build(sup, super_search_len, jones_budget)?;
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    let mut demoted = Vec::new();
    for w in enumerate_orbits(sub_max_len) {
        let fp = fingerprint(&w, sub, jones_budget)?;
        let (found, rejected) = index.find(&fp)?;
        for candidate in rejected {
            log::warn!("{w} on {sub}: {candidate} on {sup} matches classically but not by Jones");
            demoted.push(Demotion { word: w.clone(), candidate });
        }
        match found {
            Some((witness, evidence_level)) => matched.push(InclusionMatch { word: w, witness, evidence_level }),
            None => unmatched.push(w),
        }
    }
    Ok(InclusionReport {
        schema_version: SCHEMA_VERSION,
        sub,
        sup,
        sub_max_len,
        super_search_len,
        jones_budget,
        matched,
        unmatched,
        demoted,
    })
}

/// Normalized Alexander polynomial of the torus knot `T(p, q)`.
pub fn torus_alexander(p: u32, q: u32) -> LaurentPoly {
    let cyclo = |k: u32| LaurentPoly::from_pairs([(k as i64, 1), (0, -1)]);
    let num = &cyclo(p * q) * &cyclo(1);
    let den = &cyclo(p) * &cyclo(q);
    num.div_exact(&den)
        .and_then(|d| d.normalize_symmetric())
        .expect("torus knot Alexander polynomial is a symmetric Laurent polynomial")
}

/// Torus-knot name for a fingerprint whose Alexander polynomial and signature
/// sign fit `T(p, q)` with `p < q` and genus at most `max_genus`.
fn torus_name(fp: &Fingerprint, max_genus: u32) -> Option<String> {
    if fp.is_unknot_like() {
        return Some("unknot".into());
    }
    for p in 2..=max_genus + 1 {
        for q in p + 1..=2 * max_genus / (p - 1) + 1 {
            if p.gcd(&q) != 1 || (p - 1) * (q - 1) > 2 * max_genus || torus_alexander(p, q) != fp.alexander {
                continue;
            }
            let base = if (p, q) == (2, 3) { "trefoil".to_string() } else { format!("T({p},{q})") };
            // Positive torus knots have negative signature.
            return Some(if fp.signature < 0 { base } else { format!("mirror {base}") });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub template: TemplateSpec,
    pub word: OrbitWord,
    pub fingerprint: Fingerprint,
}

/// Known prime knots keyed by fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCatalog {
    pub schema_version: u32,
    pub max_len: usize,
    pub jones_budget: usize,
    pub entries: Vec<CatalogEntry>,
}

impl PrimeCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, fp: &Fingerprint) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| matches!(compare(&e.fingerprint, fp), Comparison::Match(_)))
    }

    fn insert(&mut self, name: String, template: TemplateSpec, word: OrbitWord, fingerprint: Fingerprint) {
        if self.lookup(&fingerprint).is_none() {
            self.entries.push(CatalogEntry { name, template, word, fingerprint });
        }
    }
}

/// Knots of the Lorenz template up to `max_len` and their mirrors.
pub fn build_prime_catalog(max_len: usize, jones_budget: usize) -> Result<PrimeCatalog> {
    let mut catalog = PrimeCatalog { schema_version: SCHEMA_VERSION, max_len, jones_budget, entries: Vec::new() };
    let x: OrbitWord = "x".parse().expect("valid word");
    catalog.insert("unknot".into(), TemplateSpec::LORENZ, x, Fingerprint::unknot());
    for w in enumerate_orbits(max_len) {
        let fp = fingerprint(&w, TemplateSpec::LORENZ, jones_budget)?;
        let genus = (fp.alexander.span().unwrap_or(0) / 2) as u32;
        let name = torus_name(&fp, genus).unwrap_or_else(|| format!("lorenz {w}"));
        let mirror = fp.mirror();
        let mirror_name = torus_name(&mirror, genus).unwrap_or_else(|| format!("mirror lorenz {w}"));
        catalog.insert(name, TemplateSpec::LORENZ, w.clone(), fp);
        catalog.insert(mirror_name, TemplateSpec::LORENZ.mirror(), w, mirror);
    }
    Ok(catalog)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeReport {
    pub template: TemplateSpec,
    pub word: OrbitWord,
    pub fingerprint: Fingerprint,
    pub factor_names: (String, String),
    pub factor_fingerprints: (Fingerprint, Fingerprint),
    pub evidence_level: EvidenceLevel,
}

/// Products of two nontrivial catalog entries, indexed by Alexander hash.
fn pair_products(catalog: &PrimeCatalog) -> HashMap<AlexanderHash, Vec<(usize, usize)>> {
    let nontrivial: Vec<usize> = (0..catalog.len()).filter(|&i| !catalog.entries[i].fingerprint.alexander.is_one()).collect();
    let mut out: HashMap<AlexanderHash, Vec<(usize, usize)>> = HashMap::new();
    for (k, &i) in nontrivial.iter().enumerate() {
        for &j in &nontrivial[k..] {
            let h = catalog.entries[i].fingerprint.alexander_hash().product(catalog.entries[j].fingerprint.alexander_hash());
            out.entry(h).or_default().push((i, j));
        }
    }
    out
}

/// Orbits of `spec` up to `max_len` whose fingerprint is the connected sum
/// of two nontrivial catalog knots. Candidates whose Jones polynomial
/// contradicts every such product are dropped and logged.
pub fn find_composites(
    spec: TemplateSpec,
    max_len: usize,
    catalog: &PrimeCatalog,
    jones_budget: usize,
) -> Result<Vec<CompositeReport>> {
    let products = pair_products(catalog);
    let mut reports = Vec::new();
    for w in enumerate_orbits(max_len) {
        let b = simplify_braid(&build_braid(&w, spec)?);
        let Some(pairs) = products.get(&alexander_hash(&b)?) else { continue };
        let fp = fingerprint(&w, spec, jones_budget)?;
        let mut best: Option<(EvidenceLevel, usize, usize)> = None;
        let mut rejected = false;
        for &(i, j) in pairs {
            let product = catalog.entries[i].fingerprint.connected_sum(&catalog.entries[j].fingerprint);
            match compare(&product, &fp) {
                Comparison::Match(level) if best.is_none_or(|(l, _, _)| level > l) => best = Some((level, i, j)),
                Comparison::JonesMismatch => rejected = true,
                _ => {}
            }
        }
        match best {
            Some((evidence_level, i, j)) => {
                let (a, c) = (&catalog.entries[i], &catalog.entries[j]);
                reports.push(CompositeReport {
                    template: spec,
                    word: w,
                    fingerprint: fp,
                    factor_names: (a.name.clone(), c.name.clone()),
                    factor_fingerprints: (a.fingerprint.clone(), c.fingerprint.clone()),
                    evidence_level,
                });
            }
            None if rejected => log::info!("{w} on {spec}: catalog product rejected by Jones"),
            None => {}
        }
    }
    Ok(reports)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedSumReport {
    pub schema_version: u32,
    pub u: OrbitWord,
    pub u_template: TemplateSpec,
    pub v: OrbitWord,
    pub v_template: TemplateSpec,
    pub target: TemplateSpec,
    pub search_len: usize,
    pub jones_budget: usize,
    pub product: Fingerprint,
    pub witness: Option<OrbitWord>,
    pub evidence_level: Option<EvidenceLevel>,
    pub demoted: Vec<OrbitWord>,
}

/// Searches `index` for the connected sum of `u` on `L(0,2)` and `v` on
/// the mirror `L̃(0,2)`.
pub fn verify_connected_sum_in(index: &mut TemplateIndex, u: &OrbitWord, v: &OrbitWord, jones_budget: usize) -> Result<ConnectedSumReport> {
    let u_template = TemplateSpec::new(0, 2);
    let v_template = TemplateSpec::mirror_of(0, 2);
    let product = fingerprint(u, u_template, jones_budget)?.connected_sum(&fingerprint(v, v_template, jones_budget)?);
    let (found, demoted) = index.find(&product)?;
    Ok(ConnectedSumReport {
        schema_version: SCHEMA_VERSION,
        u: u.clone(),
        u_template,
        v: v.clone(),
        v_template,
        target: index.spec(),
        search_len: index.max_len(),
        jones_budget,
        product,
        witness: found.as_ref().map(|(w, _)| w.clone()),
        evidence_level: found.map(|(_, l)| l),
        demoted,
    })
}

/// [`verify_connected_sum_in`] with a fresh index of `target`.
pub fn verify_connected_sum(
    u: &OrbitWord,
    v: &OrbitWord,
    target: TemplateSpec,
    search_len: usize,
    jones_budget: usize,
) -> Result<ConnectedSumReport> {
    let mut index = TemplateIndex::build(target, search_len, jones_budget)?;
    verify_connected_sum_in(&mut index, u, v, jones_budget)
}

/// Default Jones strand budget for searches.
pub const DEFAULT_JONES_BUDGET: usize = JONES_STRAND_BUDGET;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_polynomials() {
        assert_eq!(torus_alexander(2, 3).to_string(), "t - 1 + t^-1");
        assert_eq!(torus_alexander(2, 5).to_string(), "t^2 - t + 1 - t^-1 + t^-2");
        assert_eq!(torus_alexander(3, 4).to_string(), "t^3 - t^2 + 1 - t^-2 + t^-3");
    }

    #[test]
    fn comparison_levels() {
        let tref = fingerprint(&"xxyxy".parse().unwrap(), TemplateSpec::LORENZ, 12).unwrap();
        assert_eq!(compare(&tref, &tref), Comparison::Match(EvidenceLevel::FullJones));
        let mut no_jones = tref.clone();
        no_jones.jones = None;
        no_jones.jones_computed = false;
        assert_eq!(compare(&tref, &no_jones), Comparison::Match(EvidenceLevel::AlexanderSignature));
        assert_eq!(compare(&tref, &tref.mirror()), Comparison::Different);
        let mut fake = tref.clone();
        fake.jones = Some(LaurentPoly::one());
        assert_eq!(compare(&tref, &fake), Comparison::JonesMismatch);
    }

    #[test]
    fn small_catalogs() {
        let c = build_prime_catalog(2, 12).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.entries[0].name, "unknot");
        let c = build_prime_catalog(5, 12).unwrap();
        let names: Vec<&str> = c.entries.iter().map(|e| e.name.as_str()).collect();
        assert!(names.contains(&"trefoil") && names.contains(&"mirror trefoil"), "{names:?}");
    }

    #[test]
    fn identity_inclusion() {
        let t = TemplateSpec::new(0, -1);
        let r = verify_inclusion(t, t, 6, 6, 12).unwrap();
        assert!(r.is_complete());
        assert_eq!(r.matched.len(), enumerate_orbits(6).len());
    }

    #[test]
    fn degenerate_sum() {
        let x: OrbitWord = "x".parse().unwrap();
        let r = verify_connected_sum(&x, &x, TemplateSpec::new(0, -2), 3, 12).unwrap();
        assert_eq!(r.witness, Some(x));
        assert_eq!(r.evidence_level, Some(EvidenceLevel::FullJones));
    }
}
