//! The catalog of non-compact real forms and its text serialisation.
//!
//! Record grammar, one record per line, `#` starts a comment:
//!
//! ```text
//! form <name> | type=<cartan> | black=<i,j,..> | arrows=<a-b,..> | compact=<complex reductive> | hermitian=yes|no | source=<label>
//! ```
//!
//! Node numbers are one-based Bourbaki labels. `compact` lists the simple
//! factors of `k_C` by short name followed by `c<d>` for a centre of
//! dimension `d`, joined by `+`, or `0`.

use super::form::{Exceptional, RealForm};
use super::satake::{satake, SatakeDiagram};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, ComplexReductiveType, Family};
use serde::{Deserialize, Serialize};

/// Every non-compact absolutely simple real form of `t`, in a fixed order.
/// Complex Lie algebras viewed as real are not real forms of a simple `t`
/// and are not listed.
pub fn catalog_real_forms(t: CartanType) -> Vec<RealForm> {
    let r = t.rank();
    let mut out = Vec::new();
    match t.family() {
        Family::A => {
            let n = r + 1;
            out.push(RealForm::SlR(n));
            if n >= 4 && n % 2 == 0 {
                out.push(RealForm::SuStar(n));
            }
            if n >= 3 {
                out.extend((1..=n / 2).map(|q| RealForm::Su(n - q, q)));
            }
        }
        Family::B => out.extend((1..=r).map(|q| RealForm::So(2 * r + 1 - q, q))),
        Family::C => {
            out.push(RealForm::SpR(r));
            out.extend((1..=r / 2).map(|q| RealForm::Sp(r - q, q)));
        }
        Family::D => {
            out.extend((1..=r).map(|q| RealForm::So(2 * r - q, q)));
            if r >= 5 {
                out.push(RealForm::SoStar(2 * r));
            }
        }
        _ => out.extend(
            Exceptional::ALL
                .into_iter()
                .filter(|e| e.cartan_type() == t)
                .map(RealForm::Exceptional),
        ),
    }
    out
}

/// Non-compact absolutely simple real forms of every simple type within the
/// rank bound (exceptional types always included).
pub fn all_real_forms(bound: u32) -> Vec<RealForm> {
    CartanType::all_up_to(bound)
        .into_iter()
        .flat_map(catalog_real_forms)
        .collect()
}

/// Checks that each form is canonical and internally consistent.
pub fn validate_form(f: &RealForm) -> Result<()> {
    let canon: RealForm = f.to_string().parse()?;
    if canon != *f {
        return Err(Error::Integrity(format!("{f} is not canonical (re-parses as {canon})")));
    }
    if f.absolutely_simple() {
        satake(f)?.involution()?;
        super::restricted::restricted_root_system(f)?;
    }
    if f.hermitian() != (f.absolutely_simple() && f.maximal_compact().center_dim() > 0) {
        return Err(Error::Integrity(format!("{f}: hermitian flag disagrees with k")));
    }
    Ok(())
}

fn compact_descriptor(k: &ComplexReductiveType) -> String {
    let mut parts: Vec<String> = k.simple_factors().iter().map(|t| t.short_name()).collect();
    if k.center_dim() > 0 {
        parts.push(format!("c{}", k.center_dim()));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn parse_compact(s: &str) -> Result<ComplexReductiveType> {
    if s == "0" {
        return Ok(ComplexReductiveType::default());
    }
    s.split('+').try_fold(ComplexReductiveType::default(), |acc, p| {
        Ok(acc
            + match p.strip_prefix('c') {
                Some(d) => ComplexReductiveType::center(
                    d.parse().map_err(|_| Error::Parse(format!("bad centre '{p}'")))?,
                ),
                None => ComplexReductiveType::simple(p.parse()?),
            })
    })
}

fn join_nodes(v: impl Iterator<Item = String>) -> String {
    v.collect::<Vec<_>>().join(",")
}

/// One catalog record.
pub fn form_record(f: &RealForm) -> Result<String> {
    let d = satake(f)?;
    Ok(format!(
        "form {} | type={} | black={} | arrows={} | compact={} | hermitian={} | source={}",
        f,
        d.cartan_type,
        join_nodes(d.black.iter().map(|i| (i + 1).to_string())),
        join_nodes(d.arrows.iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1))),
        compact_descriptor(&f.maximal_compact()),
        if f.hermitian() { "yes" } else { "no" },
        f.source()
    ))
}

/// Serialises the catalog for the given bound.
pub fn dump_forms(bound: u32) -> Result<String> {
    let mut s = format!("# non-compact absolutely simple real forms, classical rank <= {bound}\n");
    for f in all_real_forms(bound) {
        s.push_str(&form_record(&f)?);
        s.push('\n');
    }
    Ok(s)
}

/// A parsed catalog record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub form: RealForm,
    pub diagram: SatakeDiagram,
    pub compact: ComplexReductiveType,
    pub hermitian: bool,
    pub source: String,
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    if s.is_empty() {
        Ok(vec![])
    } else {
        s.split(',').map(f).collect()
    }
}

fn node(s: &str) -> Result<usize> {
    s.parse::<usize>()
        .ok()
        .filter(|&n| n >= 1)
        .map(|n| n - 1)
        .ok_or_else(|| Error::Parse(format!("bad node '{s}'")))
}

pub fn parse_form_record(line: &str) -> Result<FormRecord> {
    let bad = |why: &str| Error::Parse(format!("{why}: {line}"));
    let mut fields = line.split('|').map(str::trim);
    let name = fields
        .next()
        .and_then(|h| h.strip_prefix("form "))
        .ok_or_else(|| bad("record must start with 'form'"))?;
    let form: RealForm = name.trim().parse()?;
    let mut kv = std::collections::BTreeMap::new();
    for f in fields {
        let (k, v) = f.split_once('=').ok_or_else(|| bad("field without '='"))?;
        kv.insert(k.trim(), v.trim());
    }
    let get = |k: &str| kv.get(k).copied().ok_or_else(|| bad(&format!("missing field '{k}'")));
    let cartan_type: CartanType = get("type")?.parse()?;
    let black = parse_list(get("black")?, node)?;
    let arrows = parse_list(get("arrows")?, |a| {
        let (x, y) = a.split_once('-').ok_or_else(|| bad("bad arrow"))?;
        Ok((node(x)?, node(y)?))
    })?;
    let hermitian = match get("hermitian")? {
        "yes" => true,
        "no" => false,
        _ => return Err(bad("hermitian must be yes or no")),
    };
    Ok(FormRecord {
        form,
        diagram: SatakeDiagram {
            cartan_type,
            black,
            arrows,
        },
        compact: parse_compact(get("compact")?)?,
        hermitian,
        source: get("source")?.to_string(),
    })
}

pub fn parse_form_records(text: &str) -> Result<Vec<FormRecord>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_form_record)
        .collect()
}

/// Compares parsed records against the generated catalog.
pub fn check_form_records(records: &[FormRecord]) -> Result<()> {
    for r in records {
        let d = satake(&r.form)?;
        if d != r.diagram || r.compact != r.form.maximal_compact() || r.hermitian != r.form.hermitian()
            || r.source != r.form.source()
        {
            return Err(Error::Integrity(format!("record for {} disagrees with the catalog", r.form)));
        }
    }
    Ok(())
}

/// The shipped catalog file (classical rank bound 12).
pub const REAL_FORMS_DATA: &str = include_str!("../../data/real_forms.txt");
