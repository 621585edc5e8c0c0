//! Command-line front end for the `nilpair` library.
//!
//! Every subcommand returns a serialisable payload; `--json` prints it with
//! `serde_json`, otherwise a line-oriented text rendering is used.

use clap::{Parser, Subcommand};
use nilpair::classify::{
    almost_irreducible_star, bmp_certificate, decide, enumerate_empty, properness, table1, table2, table3, table4,
    Bmp, Decision, DimAssumption, Properness, Table1Row, Table2Row, TableRow,
};
use nilpair::orbits::{exceeds_minimal, m_real, n_min, omin_g, DualForm, OrbitDescriptor};
use nilpair::pairs::{associated, catalog_pairs, all_simple_forms, dump_pairs, dual, find_pairs, parse_pair_records, DualResult, SymmetricPair};
use nilpair::realform::catalog::{dump_forms, parse_form_records, FormRecord};
use nilpair::realform::{satake, SatakeDiagram};
use nilpair::{ComplexReductiveType, Error, RealForm, RealReductive};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::fmt::Write as _;

/// Version of the JSON payload layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nilpair", version, about = "Minimal nilpotent orbits against dual real forms of symmetric pairs")]
pub struct Cli {
    /// Print the payload as JSON
    #[arg(long, global = true)]
    pub json: bool,
    /// Rank bound for classical families in enumerations
    #[arg(long, global = true, default_value_t = 12)]
    pub bound: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbit invariants and Satake diagram of a real form
    Info { form: String },
    /// Full decision for a symmetric pair
    Pair { g: String, h: String },
    /// Dual real form and associated subalgebra of a symmetric pair
    Dual { g: String, h: String },
    /// Reproduce one of the four tables
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
    },
    /// All catalog pairs whose orbit misses the dual form
    EnumerateEmpty,
    /// Catalog summary, or the full text records with --dump
    Catalog {
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub form: RealForm,
    pub complexification: ComplexReductiveType,
    pub maximal_compact: ComplexReductiveType,
    pub m: u32,
    pub n: u32,
    pub hermitian: bool,
    pub minimal_real_orbits: u32,
    pub exceeds_minimal: bool,
    pub satake: Option<SatakeDiagram>,
    pub omin: OrbitDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub decision: Decision,
    pub associated: RealReductive,
    pub properness: Properness,
    pub bmp_dim_m: Bmp,
    pub bmp_dim_n: Bmp,
    pub star: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub pair: SymmetricPair,
    pub dual: DualResult,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberedRow {
    pub row: usize,
    pub g: RealForm,
    pub h: RealReductive,
    pub g_d: DualForm,
    pub h_a: RealReductive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDump {
    pub schema_version: u32,
    pub bound: u32,
    pub forms: Vec<FormRecord>,
    pub pairs: Vec<SymmetricPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub schema_version: u32,
    pub bound: u32,
    pub forms: usize,
    pub pairs: usize,
}

/// Structured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Info(InfoReport),
    Pair(Vec<PairReport>),
    Dual(Vec<DualReport>),
    Table1(Vec<Table1Row>),
    Table2(Vec<Table2Row>),
    Table34(Vec<NumberedRow>),
    Empty(Vec<Decision>),
    Summary(CatalogSummary),
    Dump { text: String, parsed: CatalogDump },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Integrity(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Integrity(_) => EXIT_INTEGRITY,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_) => Failure::Integrity(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let rendered = execute(&cli).and_then(|p| render(&p, cli.json));
    match rendered {
        Ok(stdout) => Output { code: EXIT_OK, stdout, stderr: String::new() },
        Err(f) => {
            let (kind, msg) = match &f {
                Failure::Usage(m) => ("error", m),
                Failure::Integrity(m) => ("integrity failure", m),
            };
            Output { code: f.code(), stdout: String::new(), stderr: format!("{kind}: {msg}\n") }
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Payload, Failure> {
    let bound = cli.bound;
    Ok(match &cli.command {
        Command::Info { form } => Payload::Info(info(&resolve_form(form, bound)?)?),
        Command::Pair { g, h } => {
            let pairs = resolve_pairs(g, h, bound)?;
            Payload::Pair(pairs.iter().map(pair_report).collect::<Result<_, _>>()?)
        }
        Command::Dual { g, h } => {
            let pairs = resolve_pairs(g, h, bound)?;
            let reports = pairs
                .into_iter()
                .map(|p| Ok(DualReport { dual: dual(&p)?, pair: p }))
                .collect::<Result<_, Error>>()?;
            Payload::Dual(reports)
        }
        Command::Tables { which } => match which {
            1 => Payload::Table1(table1(bound)?),
            2 => Payload::Table2(table2(bound)?),
            3 => Payload::Table34(numbered(table3(bound)?)),
            _ => Payload::Table34(numbered(table4(bound)?)),
        },
        Command::EnumerateEmpty => Payload::Empty(enumerate_empty(bound)?),
        Command::Catalog { dump: false } => {
            let forms = parse_form_records(&dump_forms(bound)?)?.len();
            let pairs = nilpair::pairs::all_pairs(bound)?.len();
            Payload::Summary(CatalogSummary { schema_version: SCHEMA_VERSION, bound, forms, pairs })
        }
        Command::Catalog { dump: true } => {
            let forms_text = dump_forms(bound)?;
            let pairs_text = dump_pairs(bound)?;
            let parsed = CatalogDump {
                schema_version: SCHEMA_VERSION,
                bound,
                forms: parse_form_records(&forms_text)?,
                pairs: parse_pair_records(&pairs_text)?,
            };
            Payload::Dump { text: format!("{forms_text}{pairs_text}"), parsed }
        }
    })
}

fn numbered(rows: Vec<(usize, TableRow)>) -> Vec<NumberedRow> {
    rows.into_iter()
        .map(|(row, r)| NumberedRow { row, g: r.g, h: r.h, g_d: r.g_d, h_a: r.h_a })
        .collect()
}

pub fn info(g: &RealForm) -> Result<InfoReport, Error> {
    let satake = if g.absolutely_simple() { Some(satake(g)?) } else { None };
    Ok(InfoReport {
        form: *g,
        complexification: g.complexification(),
        maximal_compact: g.maximal_compact(),
        m: m_real(g)?,
        n: n_min(&g.complexification()),
        hermitian: g.hermitian(),
        minimal_real_orbits: g.count_minimal_real_orbits(),
        exceeds_minimal: exceeds_minimal(g),
        satake,
        omin: omin_g(g)?,
    })
}

pub fn pair_report(p: &SymmetricPair) -> Result<PairReport, Error> {
    Ok(PairReport {
        decision: decide(p)?,
        associated: associated(p)?,
        properness: properness(p)?,
        bmp_dim_m: bmp_certificate(p, DimAssumption::EqualsM)?,
        bmp_dim_n: bmp_certificate(p, DimAssumption::EqualsN)?,
        star: almost_irreducible_star(p)?,
    })
}

fn squash(s: &str) -> String {
    s.to_lowercase().chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect()
}

/// Up to three candidates closest to `given` in edit distance.
pub fn suggestions(given: &str, candidates: impl IntoIterator<Item = String>) -> Vec<String> {
    let g = squash(given);
    let limit = (g.chars().count() / 3).max(2);
    let mut scored: Vec<(usize, String)> = candidates
        .into_iter()
        .map(|c| (strsim::damerau_levenshtein(&g, &squash(&c)), c))
        .filter(|(d, _)| *d <= limit)
        .collect();
    scored.sort();
    scored.dedup_by(|a, b| a.1 == b.1);
    scored.into_iter().take(3).map(|(_, c)| c).collect()
}

fn with_hint(msg: String, near: Vec<String>) -> Failure {
    if near.is_empty() {
        Failure::Usage(msg)
    } else {
        Failure::Usage(format!("{msg}; did you mean {}?", near.join(", ")))
    }
}

pub fn resolve_form(s: &str, bound: u32) -> Result<RealForm, Failure> {
    s.parse::<RealForm>().map_err(|e| {
        let names = all_simple_forms(bound.max(12)).into_iter().map(|f| f.to_string());
        with_hint(format!("unknown real form '{s}' ({e})"), suggestions(s, names))
    })
}

pub fn resolve_pairs(g: &str, h: &str, bound: u32) -> Result<Vec<SymmetricPair>, Failure> {
    let g = resolve_form(g, bound)?;
    let catalog = catalog_pairs(&g)?;
    let names = || catalog.iter().map(|p| p.h.to_string()).collect::<Vec<_>>();
    let parsed: RealReductive = h
        .parse()
        .map_err(|e| with_hint(format!("cannot read subalgebra '{h}' ({e})"), suggestions(h, names())))?;
    let found = find_pairs(&g, &parsed)?;
    if found.is_empty() {
        return Err(with_hint(
            format!("({g}, {parsed}) is not a symmetric pair in the catalog"),
            suggestions(&parsed.to_string(), names()),
        ));
    }
    Ok(found)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Integrity(format!("serialisation: {e}")))
}

pub fn render(p: &Payload, as_json: bool) -> Result<String, Failure> {
    if as_json {
        return match p {
            Payload::Info(r) => json(r),
            Payload::Pair(r) => json(r),
            Payload::Dual(r) => json(r),
            Payload::Table1(r) => json(r),
            Payload::Table2(r) => json(r),
            Payload::Table34(r) => json(r),
            Payload::Empty(r) => json(r),
            Payload::Summary(r) => json(r),
            Payload::Dump { parsed, .. } => json(parsed),
        };
    }
    let mut s = String::new();
    match p {
        Payload::Info(r) => {
            let _ = writeln!(s, "{}", r.form);
            let _ = writeln!(s, "  complexification={}", r.complexification);
            let _ = writeln!(s, "  maximal_compact={}", r.maximal_compact);
            let _ = writeln!(s, "  m={}", r.m);
            let _ = writeln!(s, "  n={}", r.n);
            let _ = writeln!(s, "  hermitian={}", yes(r.hermitian));
            let _ = writeln!(s, "  minimal_real_orbits={}", r.minimal_real_orbits);
            let _ = writeln!(s, "  exceeds_minimal={}", yes(r.exceeds_minimal));
            match &r.satake {
                Some(d) => {
                    let _ = writeln!(s, "  satake={d}");
                }
                None => {
                    let _ = writeln!(s, "  satake=none (complex)");
                }
            }
            let _ = writeln!(s, "  omin={}", r.omin);
        }
        Payload::Pair(rs) => {
            for r in rs {
                let d = &r.decision;
                let _ = writeln!(s, "{} [{}]", d.pair, d.pair.kind);
                let _ = writeln!(s, "  empty={}", d.empty_intersection);
                let _ = writeln!(s, "  g^d={}", d.dual.g_d);
                let _ = writeln!(s, "  h^a={}", r.associated);
                let _ = writeln!(
                    s,
                    "  route_a: m(g)={} n(g_C)={} m(g^d)={} empty={}",
                    d.route_a.m_g, d.route_a.n_gc, d.route_a.m_gd, d.route_a.empty
                );
                let _ = writeln!(
                    s,
                    "  route_b: orbit={} satake={} empty={}",
                    d.route_b.orbit, d.route_b.satake, d.route_b.empty
                );
                let _ = writeln!(s, "  proper={} ({})", r.properness.proper, r.properness.explanation);
                let _ = writeln!(s, "  bmp[DIM=m]={:?} bounded={}", r.bmp_dim_m.certificate, r.bmp_dim_m.bounded);
                let _ = writeln!(s, "  bmp[DIM=n]={:?} bounded={}", r.bmp_dim_n.certificate, r.bmp_dim_n.bounded);
                let _ = writeln!(s, "  star={}", r.star);
            }
        }
        Payload::Dual(rs) => {
            for r in rs {
                let _ = writeln!(s, "{}", r.pair);
                let _ = writeln!(s, "  g^d={}", r.dual.g_d);
                let _ = writeln!(s, "  h^a={}", r.dual.h_a);
                let _ = writeln!(s, "  k(g^d)_C={}", r.dual.certificate);
            }
        }
        Payload::Table1(rows) => {
            for r in rows {
                let _ = writeln!(s, "{}\tn={}\tcomputed={}", r.algebra, r.n_closed_form, r.n_computed);
            }
        }
        Payload::Table2(rows) => {
            for r in rows {
                let _ = writeln!(
                    s,
                    "{}\tm={}\tcomputed={}\tn(g_C)={}\torbit={}",
                    r.g, r.m_closed_form, r.m_computed, r.n_gc, r.orbit
                );
            }
        }
        Payload::Table34(rows) => {
            for r in rows {
                let _ = writeln!(s, "{}\t({}, {})\tg^d={}\th^a={}", r.row, r.g, r.h, r.g_d, r.h_a);
            }
        }
        Payload::Empty(ds) => {
            for d in ds {
                let _ = writeln!(s, "{}\t[{}]\tg^d={}\th^a={}", d.pair, d.pair.kind, d.dual.g_d, d.dual.h_a);
            }
        }
        Payload::Summary(c) => {
            let _ = writeln!(s, "bound={} forms={} pairs={}", c.bound, c.forms, c.pairs);
        }
        Payload::Dump { text, .. } => s.push_str(text),
    }
    Ok(s)
}
