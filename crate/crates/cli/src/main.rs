//! `lorenz-knots`: enumerate Lorenz-template orbits, compute their knot
//! invariants and check template inclusions and connected sums.
//!
//! Exit codes: 0 success or verified, 1 verified false or unmatched,
//! 2 usage or input error.

mod cache;
mod diagram;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lorenz_knots::braids::{build_braid, simplify_braid, BraidWord};
use lorenz_knots::invariants::{fingerprint, Fingerprint, JONES_STRAND_BUDGET};
use lorenz_knots::orbits::{canonical_word, enumerate_orbits, parse_letters, OrbitWord, TemplateSpec};
use lorenz_knots::theorems::{
    build_prime_catalog, find_composites, verify_connected_sum, verify_inclusion, CompositeReport, PrimeCatalog,
    DEFAULT_JONES_BUDGET, SCHEMA_VERSION,
};
use rayon::prelude::*;
use serde::Serialize;

use cache::{CacheRecord, CACHE_ENV};

#[derive(Parser)]
#[command(name = "lorenz-knots", version, about = "Knots of periodic orbits on Lorenz-like templates L(m,n)")]
struct Cli {
    /// Cache directory for orbit records and catalogs.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    /// Strands allowed in the simplified braid before Jones is skipped.
    #[arg(long, global = true, default_value_t = DEFAULT_JONES_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(0..=JONES_STRAND_BUDGET as u64))]
    jones_budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fingerprint every orbit up to a length and write JSON Lines records.
    Enumerate {
        #[command(flatten)]
        template: TemplateArg,
        #[arg(long)]
        max_len: usize,
        /// Defaults to the template's file in the cache directory, else stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the fingerprint of one orbit as JSON.
    Invariants {
        #[command(flatten)]
        template: TemplateArg,
        #[arg(value_parser = parse_word)]
        word: OrbitWord,
    },
    /// Check that every knot of SUB up to --sub-len occurs in SUPER up to --search-len.
    VerifyInclusion {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_template)]
        sub: TemplateSpec,
        #[arg(long = "super", allow_hyphen_values = true, value_parser = parse_template)]
        sup: TemplateSpec,
        #[arg(long, default_value_t = 6)]
        sub_len: usize,
        #[arg(long, default_value_t = 12)]
        search_len: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report orbits whose fingerprint is a product of two catalog knots.
    FindComposites {
        #[command(flatten)]
        template: TemplateArg,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 10)]
        catalog_len: usize,
        /// Exit 1 unless at least one composite is found.
        #[arg(long, conflicts_with = "expect_none")]
        expect_some: bool,
        /// Exit 1 if any composite is found.
        #[arg(long)]
        expect_none: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search TARGET for the connected sum of U on L(0,2) and V on ~L(0,2).
    VerifySum {
        #[arg(long, value_parser = parse_word)]
        u: OrbitWord,
        #[arg(long, value_parser = parse_word)]
        v: OrbitWord,
        #[arg(long, default_value = "0,-2", allow_hyphen_values = true, value_parser = parse_template)]
        target: TemplateSpec,
        #[arg(long, default_value_t = 14)]
        search_len: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw the braid of one orbit.
    EmitDiagram {
        #[command(flatten)]
        template: TemplateArg,
        #[arg(value_parser = parse_word)]
        word: OrbitWord,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Draw the simplified braid instead of the braid as built.
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fingerprint the Lorenz knots up to a length, with their mirrors.
    BuildCatalog {
        #[arg(long)]
        max_len: usize,
        /// Defaults to the catalog file in the cache directory, else stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TemplateArg {
    /// "m,n" or "~m,n" for the mirror.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_template)]
    template: TemplateSpec,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Text,
}

fn parse_template(s: &str) -> Result<TemplateSpec, String> {
    s.parse().map_err(|e: lorenz_knots::Error| e.to_string())
}

fn parse_word(s: &str) -> Result<OrbitWord, String> {
    parse_letters(s).and_then(|l| canonical_word(&l)).map_err(|e| e.to_string())
}

#[derive(PartialEq)]
enum Verdict {
    Holds,
    Fails,
}

#[derive(Serialize)]
struct BraidJson {
    strands: usize,
    generators: Vec<i64>,
}

impl From<&BraidWord> for BraidJson {
    fn from(b: &BraidWord) -> Self {
        BraidJson { strands: b.strands(), generators: b.gens().iter().map(|g| g.to_signed()).collect() }
    }
}

#[derive(Serialize)]
struct InvariantsReport {
    schema_version: u32,
    template: TemplateSpec,
    word: OrbitWord,
    jones_budget: usize,
    braid: BraidJson,
    simplified: BraidJson,
    fingerprint: Fingerprint,
}

#[derive(Serialize)]
struct CompositesReport {
    schema_version: u32,
    template: TemplateSpec,
    max_len: usize,
    catalog_len: usize,
    catalog_size: usize,
    jones_budget: usize,
    composites: Vec<CompositeReport>,
}

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// so a failed run leaves no partial output. `None` means stdout.
fn write_output(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)?;
        return Ok(out.flush()?);
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn write_json(path: Option<&Path>, value: &impl Serialize) -> anyhow::Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    write_output(path, &bytes)
}

fn enumerate(
    spec: TemplateSpec,
    max_len: usize,
    jones_budget: usize,
    output: Option<PathBuf>,
    cache_dir: Option<&Path>,
) -> anyhow::Result<Verdict> {
    let output = output.or_else(|| cache_dir.map(|d| cache::template_file(d, spec, jones_budget)));
    let existing = match &output {
        Some(p) if p.exists() => cache::read_jsonl(p)?,
        _ => Vec::new(),
    };
    let known: std::collections::HashSet<cache::Key> = existing.iter().map(CacheRecord::key).collect();
    let todo: Vec<OrbitWord> = enumerate_orbits(max_len)
        .into_iter()
        .filter(|w| !known.contains(&(spec.m, spec.n, spec.mirrored, w.clone())))
        .collect();
    let fresh = todo
        .into_par_iter()
        .map(|w| Ok(CacheRecord::new(spec, w.clone(), fingerprint(&w, spec, jones_budget)?)))
        .collect::<lorenz_knots::Result<Vec<_>>>()?;
    let added = fresh.len();
    let records = cache::merge([existing, fresh]);
    let mut bytes = Vec::new();
    cache::write_jsonl(&records, &mut bytes)?;
    write_output(output.as_deref(), &bytes)?;
    if let Some(p) = &output {
        eprintln!("{} records ({added} new) in {}", records.len(), p.display());
    }
    Ok(Verdict::Holds)
}

fn load_or_build_catalog(max_len: usize, jones_budget: usize, cache_dir: Option<&Path>) -> anyhow::Result<PrimeCatalog> {
    let path = cache_dir.map(|d| cache::catalog_file(d, max_len, jones_budget));
    if let Some(p) = path.as_ref().filter(|p| p.exists()) {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        let catalog: PrimeCatalog = serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
        if catalog.schema_version != SCHEMA_VERSION || catalog.max_len != max_len || catalog.jones_budget != jones_budget {
            bail!("{} does not match the requested catalog", p.display());
        }
        return Ok(catalog);
    }
    let catalog = build_prime_catalog(max_len, jones_budget)?;
    if let Some(p) = &path {
        write_json(Some(p), &catalog)?;
    }
    Ok(catalog)
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let jones_budget = cli.jones_budget as usize;
    let cache_dir = cli.cache_dir.as_deref();
    match cli.command {
        Command::Enumerate { template, max_len, output } => {
            enumerate(template.template, max_len, jones_budget, output, cache_dir)
        }
        Command::Invariants { template, word } => {
            let spec = template.template;
            let braid = build_braid(&word, spec)?;
            let report = InvariantsReport {
                schema_version: SCHEMA_VERSION,
                template: spec,
                jones_budget,
                braid: (&braid).into(),
                simplified: (&simplify_braid(&braid)).into(),
                fingerprint: fingerprint(&word, spec, jones_budget)?,
                word,
            };
            write_json(None, &report)?;
            Ok(Verdict::Holds)
        }
        Command::VerifyInclusion { sub, sup, sub_len, search_len, output } => {
            let report = verify_inclusion(sub, sup, sub_len, search_len, jones_budget)?;
            write_json(output.as_deref(), &report)?;
            for w in &report.unmatched {
                eprintln!("unmatched: {w}");
            }
            Ok(if report.is_complete() { Verdict::Holds } else { Verdict::Fails })
        }
        Command::FindComposites { template, max_len, catalog_len, expect_some, expect_none, output } => {
            let catalog = load_or_build_catalog(catalog_len, jones_budget, cache_dir)?;
            let composites = find_composites(template.template, max_len, &catalog, jones_budget)?;
            let found = !composites.is_empty();
            write_json(
                output.as_deref(),
                &CompositesReport {
                    schema_version: SCHEMA_VERSION,
                    template: template.template,
                    max_len,
                    catalog_len,
                    catalog_size: catalog.len(),
                    jones_budget,
                    composites,
                },
            )?;
            let holds = (!expect_some || found) && (!expect_none || !found);
            Ok(if holds { Verdict::Holds } else { Verdict::Fails })
        }
        Command::VerifySum { u, v, target, search_len, output } => {
            let report = verify_connected_sum(&u, &v, target, search_len, jones_budget)?;
            write_json(output.as_deref(), &report)?;
            Ok(if report.witness.is_some() { Verdict::Holds } else { Verdict::Fails })
        }
        Command::EmitDiagram { template, word, format, simplify, output } => {
            let built = build_braid(&word, template.template)?;
            let b = if simplify { simplify_braid(&built) } else { built };
            let picture = match format {
                Format::Svg => diagram::svg(&b),
                Format::Text => diagram::text(&b),
            };
            write_output(output.as_deref(), picture.as_bytes())?;
            Ok(Verdict::Holds)
        }
        Command::BuildCatalog { max_len, output } => {
            if max_len == 0 {
                bail!("--max-len must be at least 1");
            }
            let output = output.or_else(|| cache_dir.map(|d| cache::catalog_file(d, max_len, jones_budget)));
            let catalog = build_prime_catalog(max_len, jones_budget)?;
            write_json(output.as_deref(), &catalog)?;
            Ok(Verdict::Holds)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
