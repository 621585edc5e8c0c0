//! Real reductive Lie algebras, as needed for the subalgebras `h` of
//! symmetric pairs.

use super::form::{exceptional_from, RawForm, RealForm};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, ComplexReductiveType, Family};
use regex::Regex;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

/// A simple summand of a real reductive Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RealSimple {
    NonCompact(RealForm),
    /// The compact real form of the given complex type.
    Compact(CartanType),
}

impl RealSimple {
    pub fn dim(&self) -> u32 {
        match self {
            RealSimple::NonCompact(f) => f.dim(),
            RealSimple::Compact(t) => t.dim(),
        }
    }

    pub fn complexification(&self) -> ComplexReductiveType {
        match self {
            RealSimple::NonCompact(f) => f.complexification(),
            RealSimple::Compact(t) => ComplexReductiveType::simple(*t),
        }
    }

    pub fn maximal_compact(&self) -> ComplexReductiveType {
        match self {
            RealSimple::NonCompact(f) => f.maximal_compact(),
            RealSimple::Compact(t) => ComplexReductiveType::simple(*t),
        }
    }
}

impl fmt::Display for RealSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealSimple::NonCompact(g) => write!(f, "{g}"),
            RealSimple::Compact(t) => f.write_str(&compact_name(*t)),
        }
    }
}

/// Conventional name of the compact real form of `t`.
pub fn compact_name(t: CartanType) -> String {
    let r = t.rank();
    match t.family() {
        Family::A => format!("su_{}", r + 1),
        Family::B => format!("so_{}", 2 * r + 1),
        Family::C => format!("sp_{r}"),
        Family::D => format!("so_{}", 2 * r),
        _ => t.short_name().to_lowercase(),
    }
}

/// Real reductive Lie algebra: simple summands plus a centre split into
/// compact (`so_2`) and split (`R`) one-dimensional pieces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RealReductive {
    simple: Vec<RealSimple>,
    compact_center: u32,
    split_center: u32,
}

impl RealReductive {
    pub fn new(mut simple: Vec<RealSimple>, compact_center: u32, split_center: u32) -> Self {
        simple.sort();
        RealReductive {
            simple,
            compact_center,
            split_center,
        }
    }

    pub fn noncompact(f: RealForm) -> Self {
        Self::new(vec![RealSimple::NonCompact(f)], 0, 0)
    }

    /// Compact real form of a complex reductive type.
    pub fn compact(k: &ComplexReductiveType) -> Self {
        Self::new(
            k.simple_factors().iter().map(|t| RealSimple::Compact(*t)).collect(),
            k.center_dim(),
            0,
        )
    }

    /// A complex reductive algebra viewed as a real one.
    pub fn complex(k: &ComplexReductiveType) -> Self {
        Self::new(
            k.simple_factors()
                .iter()
                .map(|t| RealSimple::NonCompact(RealForm::Complex(*t)))
                .collect(),
            k.center_dim(),
            k.center_dim(),
        )
    }

    pub fn simple_summands(&self) -> &[RealSimple] {
        &self.simple
    }

    pub fn compact_center(&self) -> u32 {
        self.compact_center
    }

    pub fn split_center(&self) -> u32 {
        self.split_center
    }

    pub fn center_dim(&self) -> u32 {
        self.compact_center + self.split_center
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.simple.clone();
        s.extend_from_slice(&other.simple);
        Self::new(s, self.compact_center + other.compact_center, self.split_center + other.split_center)
    }

    pub fn dim(&self) -> u32 {
        self.simple.iter().map(|s| s.dim()).sum::<u32>() + self.center_dim()
    }

    pub fn complexification(&self) -> ComplexReductiveType {
        self.simple
            .iter()
            .fold(ComplexReductiveType::center(self.center_dim()), |acc, s| {
                acc + s.complexification()
            })
    }

    /// Complexified maximal compact subalgebra.
    pub fn maximal_compact(&self) -> ComplexReductiveType {
        self.simple
            .iter()
            .fold(ComplexReductiveType::center(self.compact_center), |acc, s| {
                acc + s.maximal_compact()
            })
    }

    pub fn as_noncompact_simple(&self) -> Option<RealForm> {
        match (self.simple.as_slice(), self.center_dim()) {
            ([RealSimple::NonCompact(f)], 0) => Some(*f),
            _ => None,
        }
    }

    pub fn is_compact(&self) -> bool {
        self.split_center == 0 && self.simple.iter().all(|s| matches!(s, RealSimple::Compact(_)))
    }

    /// Canonical reductive algebra denoted by `raw`.
    pub fn from_raw(raw: RawForm) -> Result<Self> {
        use RawForm as R;
        let nc = |f: RealForm| Ok(Self::noncompact(f));
        let sl2r = RealForm::SlR(2);
        match raw {
            R::SlR(n) => match n {
                0 | 1 => Ok(Self::default()),
                n => nc(RealForm::SlR(n)),
            },
            R::SlC(n) => Ok(Self::complex(&ComplexReductiveType::sl(n))),
            R::SuStar(n) => {
                if n % 2 == 1 {
                    return Err(Error::InvalidRealForm(format!("su*_{n} needs even size")));
                }
                match n / 2 {
                    0 => Ok(Self::default()),
                    1 => Ok(Self::compact(&ComplexReductiveType::sl(2))),
                    _ => nc(RealForm::SuStar(n)),
                }
            }
            R::Su(p, q) => {
                let (p, q) = (p.max(q), p.min(q));
                match (p, q) {
                    (_, 0) => Ok(Self::compact(&ComplexReductiveType::sl(p))),
                    (1, 1) => nc(sl2r),
                    _ => nc(RealForm::Su(p, q)),
                }
            }
            R::So(p, q) => {
                let (p, q) = (p.max(q), p.min(q));
                match (p, q) {
                    (_, 0) => Ok(Self::compact(&ComplexReductiveType::so(p))),
                    (1, 1) => Ok(Self::new(vec![], 0, 1)),
                    (2, 1) => nc(sl2r),
                    (2, 2) => Ok(Self::new(vec![RealSimple::NonCompact(sl2r); 2], 0, 0)),
                    (3, 1) => nc(RealForm::Complex(CartanType::a(1))),
                    (3, 3) => nc(RealForm::SlR(4)),
                    (4, 2) => nc(RealForm::Su(2, 2)),
                    (5, 1) => nc(RealForm::SuStar(4)),
                    _ => nc(RealForm::So(p, q)),
                }
            }
            R::SoC(n) => Ok(Self::complex(&ComplexReductiveType::so(n))),
            R::SoStar(n) => {
                if n % 2 == 1 {
                    return Err(Error::InvalidRealForm(format!("so*_{n} needs even size")));
                }
                match n / 2 {
                    0 => Ok(Self::default()),
                    1 => Ok(Self::new(vec![], 1, 0)),
                    2 => Ok(Self::new(
                        vec![RealSimple::NonCompact(sl2r), RealSimple::Compact(CartanType::a(1))],
                        0,
                        0,
                    )),
                    3 => nc(RealForm::Su(3, 1)),
                    4 => nc(RealForm::So(6, 2)),
                    _ => nc(RealForm::SoStar(n)),
                }
            }
            R::SpR(n) => match n {
                0 => Ok(Self::default()),
                1 => nc(sl2r),
                2 => nc(RealForm::So(3, 2)),
                n => nc(RealForm::SpR(n)),
            },
            R::SpC(n) => Ok(Self::complex(&ComplexReductiveType::sp(n))),
            R::Sp(p, q) => {
                let (p, q) = (p.max(q), p.min(q));
                match (p, q) {
                    (_, 0) => Ok(Self::compact(&ComplexReductiveType::sp(p))),
                    (1, 1) => nc(RealForm::So(4, 1)),
                    _ => nc(RealForm::Sp(p, q)),
                }
            }
            R::U(p, q) => Ok(Self::from_raw(R::Su(p, q))?.sum(&Self::new(vec![], 1, 0))),
            R::GlR(n) => Ok(Self::from_raw(R::SlR(n))?.sum(&Self::new(vec![], 0, 1))),
            R::GlC(n) => Ok(Self::from_raw(R::SlC(n))?.sum(&Self::new(vec![], 1, 1))),
            R::Exceptional(e) => nc(RealForm::Exceptional(e)),
            R::ExceptionalCompact(t) => Ok(Self::compact(&ComplexReductiveType::simple(t))),
            R::ExceptionalComplex(t) => nc(RealForm::Complex(t)),
            R::SplitLine => Ok(Self::new(vec![], 0, 1)),
            R::ComplexLine => Ok(Self::new(vec![], 1, 1)),
        }
    }

    /// Direct sum of the canonical forms of several raw summands.
    pub fn from_raws(raws: &[RawForm]) -> Result<Self> {
        raws.iter()
            .try_fold(Self::default(), |acc, r| Ok(acc.sum(&Self::from_raw(*r)?)))
    }
}

impl fmt::Display for RealReductive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple.iter().map(|s| s.to_string()).collect();
        parts.extend(std::iter::repeat("so_2".to_string()).take(self.compact_center as usize));
        parts.extend(std::iter::repeat("R".to_string()).take(self.split_center as usize));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Braces must follow `_`; neither braces nor parentheses nest with
/// themselves, and both must close.
fn check_brackets(s: &str) -> Result<()> {
    let (mut brace, mut paren) = (false, false);
    let mut prev = ' ';
    for c in s.chars() {
        let ok = match c {
            '{' => !brace && !paren && prev == '_',
            '}' => brace && !paren,
            '(' => !paren,
            ')' => paren,
            _ => true,
        };
        if !ok {
            return Err(Error::Parse(format!("'{s}': misplaced '{c}'")));
        }
        match c {
            '{' | '}' => brace = !brace,
            '(' | ')' => paren = !paren,
            _ => {}
        }
        prev = c;
    }
    if brace || paren {
        return Err(Error::Parse(format!("'{s}': unclosed bracket")));
    }
    Ok(())
}

fn normalise(s: &str) -> String {
    s.trim()
        .to_lowercase()
        .replace('⊕', "+")
        .replace('−', "-")
        .replace("-star-", "*")
        .replace("star", "*")
        .replace("^c", "(c)")
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}'))
        .collect()
}

fn summand_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^(sl|su\*|su|so\*|so|sp|u|gl|e|f|g)(\d+)(?:,(\d+))?(?:\((r|c|h|-?\d+)\))?$").unwrap()
    })
}

fn parse_summand(tok: &str) -> Result<RawForm> {
    let err = |why: &str| Error::Parse(format!("'{tok}': {why}"));
    match tok {
        "r" => return Ok(RawForm::SplitLine),
        "c" => return Ok(RawForm::ComplexLine),
        _ => {}
    }
    let caps = summand_regex()
        .captures(tok)
        .ok_or_else(|| err("unrecognised real Lie algebra"))?;
    let fam = &caps[1];
    let n: u32 = caps[2].parse().map_err(|_| err("bad number"))?;
    let m: Option<u32> = caps.get(3).map(|x| x.as_str().parse()).transpose().map_err(|_| err("bad number"))?;
    let suf = caps.get(4).map(|x| x.as_str());
    let exc = |fam: Family| -> Result<RawForm> {
        if m.is_some() {
            return Err(err("exceptional algebras take no second index"));
        }
        let t = CartanType::new(fam, n)?;
        match suf {
            None => Ok(RawForm::ExceptionalCompact(t)),
            Some("c") => Ok(RawForm::ExceptionalComplex(t)),
            Some(x) => {
                let ch: i32 = x.parse().map_err(|_| err("bad real form index"))?;
                Ok(RawForm::Exceptional(exceptional_from(t, ch)?))
            }
        }
    };
    let raw = match (fam, m, suf) {
        ("sl", None, Some("r")) => RawForm::SlR(n),
        ("sl", None, Some("c")) => RawForm::SlC(n),
        ("sl", None, Some("h")) => RawForm::SuStar(2 * n),
        ("su*", None, None) => RawForm::SuStar(n),
        ("su", Some(q), None) => RawForm::Su(n, q),
        ("su", None, None) => RawForm::Su(n, 0),
        ("so*", None, None) => RawForm::SoStar(n),
        ("so", Some(q), None) => RawForm::So(n, q),
        ("so", None, None) => RawForm::So(n, 0),
        ("so", None, Some("c")) => RawForm::SoC(n),
        ("sp", None, Some("r")) => RawForm::SpR(n),
        ("sp", None, Some("c")) => RawForm::SpC(n),
        ("sp", Some(q), None) => RawForm::Sp(n, q),
        ("sp", None, None) => RawForm::Sp(n, 0),
        ("u", Some(q), None) => RawForm::U(n, q),
        ("u", None, None) => RawForm::U(n, 0),
        ("gl", None, Some("r")) => RawForm::GlR(n),
        ("gl", None, Some("c")) => RawForm::GlC(n),
        ("e", _, _) => match n {
            6 => exc(Family::E6)?,
            7 => exc(Family::E7)?,
            8 => exc(Family::E8)?,
            _ => return Err(err("no such exceptional algebra")),
        },
        ("f", _, _) => exc(Family::F4)?,
        ("g", _, _) => exc(Family::G2)?,
        _ => return Err(err("unsupported index or field suffix")),
    };
    Ok(raw)
}

impl std::str::FromStr for RealReductive {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        check_brackets(s)?;
        let norm = normalise(s);
        if norm.is_empty() || norm == "0" {
            return Ok(Self::default());
        }
        let raws = norm
            .split('+')
            .map(parse_summand)
            .collect::<Result<Vec<_>>>()?;
        Self::from_raws(&raws)
    }
}

impl TryFrom<String> for RealReductive {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RealReductive> for String {
    fn from(r: RealReductive) -> String {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RealReductive {
        s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn parses_aliases() {
        assert_eq!(p("so_{2,1}"), p("sl_2(R)"));
        assert_eq!(p("e_{6(-26)}"), p("e6(-26)"));
        assert_eq!(p("su-star-6"), p("su*_6"));
        assert_eq!(p("sl_3(H)"), p("su*_6"));
        assert_eq!(p("so_5^C"), p("sp_2(C)"));
        assert_eq!(p("gl_3(R)"), p("sl_3(R) + R"));
        assert_eq!(p("u_{2,1}"), p("su_{2,1}+so_2"));
        assert_eq!(p("so_2"), RealReductive::new(vec![], 1, 0));
        assert_eq!(p("so_{1,1}"), RealReductive::new(vec![], 0, 1));
        assert!("sl_3".parse::<RealReductive>().is_err());
        assert!("e9(1)".parse::<RealReductive>().is_err());
        assert!("e6(5)".parse::<RealReductive>().is_err());
        for bad in ["so_{4,3", "so_4,3}", "so{4,3}", "sl_2(R", "sl_2R)", "so_{{4,3}}", "sl_2((R))"] {
            assert!(bad.parse::<RealReductive>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "so_{6,4}+so_2",
            "su*_6+su_2",
            "sl_2(R)+sl_2(R)",
            "e7(-25)+sl_2(R)",
            "sl_4(C)+so_2+R",
            "sp_{2,1}+su_2",
            "f4",
            "e6(-14)+so_2",
        ] {
            let r = p(s);
            assert_eq!(p(&r.to_string()), r, "{s}");
        }
    }

    #[test]
    fn dimensions_and_compacts() {
        let h = p("so_{5,5}+R");
        assert_eq!(h.dim(), 46);
        assert_eq!(h.maximal_compact(), ComplexReductiveType::so(5) + ComplexReductiveType::so(5));
        assert_eq!(p("sl_3(C)").maximal_compact(), ComplexReductiveType::sl(3));
        assert_eq!(p("sl_3(C)").complexification(), ComplexReductiveType::sl(3) + ComplexReductiveType::sl(3));
        assert_eq!(p("gl_2(C)").dim(), 8);
        assert!(p("su_3+so_2").is_compact());
    }
}
