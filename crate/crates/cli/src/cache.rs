//! JSON Lines fingerprint cache.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use lorenz_knots::invariants::Fingerprint;
use lorenz_knots::orbits::{OrbitWord, TemplateSpec};
use lorenz_knots::theorems::SCHEMA_VERSION;
use serde::{Deserialize, Serialize};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "LORENZ_KNOTS_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub m: i64,
    pub n: i64,
    pub mirrored: bool,
    pub word: OrbitWord,
    #[serde(flatten)]
    pub fingerprint: Fingerprint,
    pub schema_version: u32,
}

pub type Key = (i64, i64, bool, OrbitWord);

impl CacheRecord {
    pub fn new(spec: TemplateSpec, word: OrbitWord, fingerprint: Fingerprint) -> Self {
        CacheRecord { m: spec.m, n: spec.n, mirrored: spec.mirrored, word, fingerprint, schema_version: SCHEMA_VERSION }
    }

    pub fn key(&self) -> Key {
        (self.m, self.n, self.mirrored, self.word.clone())
    }
}

/// Picks one of two records sharing a key. Symmetric, so merges do not
/// depend on the order records arrive in: a record carrying Jones wins,
/// then the smaller serialization.
fn prefer(a: CacheRecord, b: CacheRecord) -> CacheRecord {
    match (a.fingerprint.jones.is_some(), b.fingerprint.jones.is_some()) {
        (true, false) => a,
        (false, true) => b,
        _ => {
            let (sa, sb) = (serde_json::to_string(&a).unwrap_or_default(), serde_json::to_string(&b).unwrap_or_default());
            if sa <= sb {
                a
            } else {
                b
            }
        }
    }
}

/// Merges record sets, deduplicated by key and sorted by key.
pub fn merge(sets: impl IntoIterator<Item = Vec<CacheRecord>>) -> Vec<CacheRecord> {
    let mut by_key: BTreeMap<Key, CacheRecord> = BTreeMap::new();
    for r in sets.into_iter().flatten() {
        let key = r.key();
        let r = match by_key.remove(&key) {
            Some(old) => prefer(old, r),
            None => r,
        };
        by_key.insert(key, r);
    }
    by_key.into_values().collect()
}

pub fn read_jsonl(path: &Path) -> anyhow::Result<Vec<CacheRecord>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: CacheRecord =
            serde_json::from_str(&line).with_context(|| format!("{}:{}: bad cache record", path.display(), i + 1))?;
        if r.schema_version != SCHEMA_VERSION {
            bail!("{}:{}: schema version {} (expected {SCHEMA_VERSION})", path.display(), i + 1, r.schema_version);
        }
        out.push(r);
    }
    Ok(out)
}

pub fn write_jsonl(records: &[CacheRecord], out: &mut impl Write) -> anyhow::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Cache file for one template at one Jones budget.
pub fn template_file(dir: &Path, spec: TemplateSpec, jones_budget: usize) -> PathBuf {
    let mirror = if spec.mirrored { "mirror_" } else { "" };
    dir.join(format!("orbits_{mirror}m{}_n{}_j{jones_budget}.jsonl", spec.m, spec.n))
}

pub fn catalog_file(dir: &Path, max_len: usize, jones_budget: usize) -> PathBuf {
    dir.join(format!("catalog_len{max_len}_j{jones_budget}.json"))
}
