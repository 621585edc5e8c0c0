//! Symmetric pairs `(g, h)`, their dual real forms `g^d` and associated
//! subalgebras `h^a = g ∩ g^d`.
//!
//! Record grammar of the pair catalog, one record per line, `#` starts a
//! comment:
//!
//! ```text
//! pair <g> | h=<real reductive> | ha=<real reductive> | kind=real|holomorphic|antiholomorphic | source=<label>
//! ```

use crate::error::{Error, Result};
use crate::orbits::DualForm;
use crate::realform::{all_real_forms, catalog_real_forms, RawForm, RealForm, RealReductive};
use crate::rootsys::{CartanType, ComplexReductiveType};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PairKind {
    RealAbsolutelySimple,
    /// `g` complex and `sigma` complex linear.
    ComplexHolomorphic,
    /// `g` complex and `sigma` antilinear.
    ComplexAntiholomorphic,
}

impl PairKind {
    fn tag(self) -> &'static str {
        match self {
            PairKind::RealAbsolutelySimple => "real",
            PairKind::ComplexHolomorphic => "holomorphic",
            PairKind::ComplexAntiholomorphic => "antiholomorphic",
        }
    }

    fn from_tag(s: &str) -> Result<Self> {
        match s {
            "real" => Ok(PairKind::RealAbsolutelySimple),
            "holomorphic" => Ok(PairKind::ComplexHolomorphic),
            "antiholomorphic" => Ok(PairKind::ComplexAntiholomorphic),
            _ => Err(Error::Parse(format!("unknown pair kind '{s}'"))),
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymmetricPair {
    pub g: RealForm,
    pub h: RealReductive,
    /// `h^a` as recorded in the catalog.
    pub h_a: RealReductive,
    pub kind: PairKind,
    pub source: String,
}

impl SymmetricPair {
    /// `dim q = dim g - dim h`.
    pub fn q_dim(&self) -> u32 {
        self.g.dim() - self.h.dim()
    }

    pub fn is_riemannian(&self) -> bool {
        self.h.is_compact() && self.h.dim() == self.g.maximal_compact().dim()
    }

    pub fn record(&self) -> String {
        format!(
            "pair {} | h={} | ha={} | kind={} | source={}",
            self.g, self.h, self.h_a, self.kind, self.source
        )
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g, self.h)
    }
}

struct Builder {
    g: RealForm,
    kind: PairKind,
    source: &'static str,
    out: Vec<SymmetricPair>,
}

impl Builder {
    fn new(g: RealForm, kind: PairKind, source: &'static str) -> Self {
        Builder {
            g,
            kind,
            source,
            out: Vec::new(),
        }
    }

    fn add(&mut self, h: RealReductive, h_a: RealReductive) {
        if h.dim() >= self.g.dim() {
            return;
        }
        self.out.push(SymmetricPair {
            g: self.g,
            h,
            h_a,
            kind: self.kind,
            source: self.source.to_string(),
        });
    }

    fn raw(&mut self, h: &[RawForm], h_a: &[RawForm]) -> Result<()> {
        self.add(RealReductive::from_raws(h)?, RealReductive::from_raws(h_a)?);
        Ok(())
    }

    /// A pair and its associated pair.
    fn both(&mut self, h: &[RawForm], h_a: &[RawForm]) -> Result<()> {
        self.raw(h, h_a)?;
        self.raw(h_a, h)
    }

    fn parsed(&mut self, h: &str, h_a: &str) -> Result<()> {
        let (h, h_a): (RealReductive, RealReductive) = (h.parse()?, h_a.parse()?);
        self.add(h.clone(), h_a.clone());
        self.add(h_a, h);
        Ok(())
    }

    fn finish(mut self) -> Vec<SymmetricPair> {
        self.out.sort();
        self.out.dedup();
        self.out
    }
}

/// `(p1, q1)` with `(p1, q1) <= (p - p1, q - q1)` and both blocks non-empty.
fn splittings(p: u32, q: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut v = Vec::new();
    for p1 in 0..=p {
        for q1 in 0..=q {
            let (p2, q2) = (p - p1, q - q1);
            if p1 + q1 > 0 && p2 + q2 > 0 && (p1, q1) <= (p2, q2) {
                v.push((p1, q1, p2, q2));
            }
        }
    }
    v
}

fn exceptional_pairs(b: &mut Builder, e: crate::realform::Exceptional) -> Result<()> {
    use crate::realform::Exceptional::*;
    let list: &[(&str, &str)] = match e {
        E6Split => &[
            ("sp_{2,2}", "so_{5,5}+R"),
            ("sp_4(R)", "sl_6(R)+sl_2(R)"),
            ("f4(4)", "su*_6+su_2"),
        ],
        E6Quasi => &[
            ("sp_{3,1}", "f4(4)"),
            ("sp_4(R)", "sp_4(R)"),
            ("su_{4,2}+su_2", "so_{6,4}+so_2"),
            ("su_{3,3}+sl_2(R)", "su_{3,3}+sl_2(R)"),
            ("so*_10+so_2", "so*_10+so_2"),
        ],
        E6Herm => &[
            ("sp_{2,2}", "sp_{2,2}"),
            ("su_{4,2}+su_2", "su_{4,2}+su_2"),
            ("su_{5,1}+sl_2(R)", "so*_10+so_2"),
            ("so_{8,2}+so_2", "so_{8,2}+so_2"),
            ("f4(-20)", "f4(-20)"),
        ],
        E6Rank2 => &[("sp_{3,1}", "su*_6+su_2"), ("so_{9,1}+R", "f4(-20)")],
        E7Split => &[
            ("su_{4,4}", "so_{6,6}+sl_2(R)"),
            ("su*_8", "e6(6)+R"),
            ("sl_8(R)", "sl_8(R)"),
            ("so*_12+su_2", "e6(2)+so_2"),
        ],
        E7Quat => &[
            ("su_{4,4}", "su_{4,4}"),
            ("su_{6,2}", "e6(2)+so_2"),
            ("so*_12+sl_2(R)", "so*_12+sl_2(R)"),
            ("so_{8,4}+su_2", "so_{8,4}+su_2"),
            ("e6(-14)+so_2", "e6(-14)+so_2"),
        ],
        E7Herm => &[
            ("su_{6,2}", "so*_12+su_2"),
            ("su*_8", "su*_8"),
            ("so_{10,2}+sl_2(R)", "e6(-14)+so_2"),
            ("e6(-26)+R", "e6(-26)+R"),
        ],
        E8Split => &[
            ("so_{8,8}", "so_{8,8}"),
            ("so*_16", "e7(7)+sl_2(R)"),
            ("e7(-5)+su_2", "e7(-5)+su_2"),
        ],
        E8Quat => &[
            ("so_{12,4}", "e7(-5)+su_2"),
            ("so*_16", "so*_16"),
            ("e7(-25)+sl_2(R)", "e7(-25)+sl_2(R)"),
        ],
        F4Split => &[("sp_{2,1}+su_2", "so_{5,4}"), ("sp_3(R)+sl_2(R)", "sp_3(R)+sl_2(R)")],
        F4Rank1 => &[("sp_{2,1}+su_2", "sp_{2,1}+su_2"), ("so_{8,1}", "so_{8,1}")],
        G2Split => &[("sl_2(R)+sl_2(R)", "sl_2(R)+sl_2(R)")],
    };
    for (h, ha) in list {
        b.parsed(h, ha)?;
    }
    Ok(())
}

/// Compact real form of `t` together with its non-compact real forms.
pub fn real_forms_with_compact(t: CartanType) -> Vec<RealReductive> {
    std::iter::once(RealReductive::compact(&ComplexReductiveType::simple(t)))
        .chain(catalog_real_forms(t).into_iter().map(RealReductive::noncompact))
        .collect()
}

/// All symmetric pairs `(g, h)` up to isomorphism, each with its `h^a`.
/// Always includes the Riemannian pair `(g, k)`, whose `h^a` is `g`.
pub fn catalog_pairs(g: &RealForm) -> Result<Vec<SymmetricPair>> {
    use RawForm as R;
    let kind = if g.absolutely_simple() {
        PairKind::RealAbsolutelySimple
    } else {
        PairKind::ComplexHolomorphic
    };
    let mut b = Builder::new(*g, kind, "berger");
    let gg = RealReductive::noncompact(*g);
    b.add(RealReductive::compact(&g.maximal_compact()), gg.clone());
    let so2 = R::So(2, 0);
    match *g {
        RealForm::SlR(n) => {
            for q in 1..=n / 2 {
                b.both(&[R::So(n - q, q)], &[R::SlR(n - q), R::SlR(q), R::SplitLine])?;
            }
            if n % 2 == 0 {
                b.both(&[R::SlC(n / 2), so2], &[R::SpR(n / 2)])?;
            }
        }
        RealForm::SuStar(size) => {
            let n = size / 2;
            for q in 1..=n / 2 {
                b.both(&[R::Sp(n - q, q)], &[R::SuStar(2 * (n - q)), R::SuStar(2 * q), R::SplitLine])?;
            }
            b.both(&[R::SlC(n), so2], &[R::SoStar(2 * n)])?;
        }
        RealForm::Su(p, q) => {
            let center = RealReductive::new(vec![], 1, 0);
            for (p1, q1, p2, q2) in splittings(p, q) {
                let h = RealReductive::from_raws(&[R::Su(p1, q1), R::Su(p2, q2)])?.sum(&center);
                let mut ha = RealReductive::from_raws(&[R::Su(p1, q2), R::Su(p2, q1)])?;
                if p1 + q2 > 0 && p2 + q1 > 0 {
                    ha = ha.sum(&center);
                }
                b.add(h, ha);
            }
            b.raw(&[R::So(p, q)], &[R::So(p, q)])?;
            if p % 2 == 0 && q % 2 == 0 {
                b.raw(&[R::Sp(p / 2, q / 2)], &[R::Sp(p / 2, q / 2)])?;
            }
            if p == q {
                b.both(&[R::SoStar(2 * p)], &[R::SpR(p)])?;
                b.raw(&[R::SlC(p), R::SplitLine], &[R::SlC(p), R::SplitLine])?;
            }
        }
        RealForm::So(p, q) => {
            for (p1, q1, p2, q2) in splittings(p, q) {
                b.raw(&[R::So(p1, q1), R::So(p2, q2)], &[R::So(p1, q2), R::So(p2, q1)])?;
            }
            if p % 2 == 0 && q % 2 == 0 {
                b.raw(&[R::U(p / 2, q / 2)], &[R::U(p / 2, q / 2)])?;
            }
            if p == q {
                b.both(&[R::SoC(p)], &[R::GlR(p)])?;
            }
        }
        RealForm::SoStar(size) => {
            let n = size / 2;
            for q in 0..=n / 2 {
                b.both(&[R::U(n - q, q)], &[R::SoStar(2 * (n - q)), R::SoStar(2 * q)])?;
            }
            b.raw(&[R::SoC(n)], &[R::SoC(n)])?;
            if n % 2 == 0 {
                b.raw(&[R::SuStar(n), R::SplitLine], &[R::SuStar(n), R::SplitLine])?;
            }
        }
        RealForm::SpR(n) => {
            for q in 0..=n / 2 {
                b.both(&[R::U(n - q, q)], &[R::SpR(n - q), R::SpR(q)])?;
            }
            b.raw(&[R::GlR(n)], &[R::GlR(n)])?;
            if n % 2 == 0 {
                b.raw(&[R::SpC(n / 2)], &[R::SpC(n / 2)])?;
            }
        }
        RealForm::Sp(p, q) => {
            for (p1, q1, p2, q2) in splittings(p, q) {
                b.raw(&[R::Sp(p1, q1), R::Sp(p2, q2)], &[R::Sp(p1, q2), R::Sp(p2, q1)])?;
            }
            b.raw(&[R::U(p, q)], &[R::U(p, q)])?;
            if p == q {
                b.both(&[R::SpC(p)], &[R::SuStar(2 * p), R::SplitLine])?;
            }
        }
        RealForm::Exceptional(e) => exceptional_pairs(&mut b, e)?,
        RealForm::Complex(t) => {
            // Holomorphic: h = (k0)_C for a non-compact real form g0 of t,
            // with h^a = g0.
            for g0 in catalog_real_forms(t) {
                b.add(RealReductive::complex(&g0.maximal_compact()), RealReductive::noncompact(g0));
            }
            // Antiholomorphic: h = g0 a real form of t, with h^a = (k0)_C.
            let mut anti = Builder::new(*g, PairKind::ComplexAntiholomorphic, "berger");
            for h in real_forms_with_compact(t) {
                let ha = if h.is_compact() {
                    gg.clone()
                } else {
                    RealReductive::complex(&h.maximal_compact())
                };
                anti.add(h, ha);
            }
            b.out.retain(|p| !p.h.is_compact());
            b.out.extend(anti.out);
        }
    }
    Ok(b.finish())
}

/// Every absolutely simple or complex simple `g` within the rank bound.
pub fn all_simple_forms(bound: u32) -> Vec<RealForm> {
    let mut v = all_real_forms(bound);
    v.extend(CartanType::all_up_to(bound).into_iter().map(RealForm::Complex));
    v
}

/// Catalog pairs for every `g` within the rank bound, in a fixed order.
pub fn all_pairs(bound: u32) -> Result<Vec<SymmetricPair>> {
    let mut v = Vec::new();
    for g in all_simple_forms(bound) {
        v.extend(catalog_pairs(&g)?);
    }
    Ok(v)
}

/// Pairs in the catalog of `g` whose `h` is isomorphic to `h`.
pub fn find_pairs(g: &RealForm, h: &RealReductive) -> Result<Vec<SymmetricPair>> {
    Ok(catalog_pairs(g)?.into_iter().filter(|p| &p.h == h).collect())
}

/// The dual real form of `g_C` and the matched maximal compact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualResult {
    pub g_d: DualForm,
    pub h_a: RealReductive,
    /// `k(g^d)_C`, equal to `h_C`.
    pub certificate: ComplexReductiveType,
}

fn dual_candidates(g: &RealForm) -> Vec<DualForm> {
    let t = g.cartan_type();
    if g.absolutely_simple() {
        return catalog_real_forms(t).into_iter().map(DualForm::Simple).collect();
    }
    let mut v = vec![DualForm::Simple(*g)];
    v.extend(catalog_real_forms(t).into_iter().map(DualForm::Doubled));
    v
}

/// The unique real form of `g_C` whose complexified maximal compact is
/// `h_C`.
pub fn dual(p: &SymmetricPair) -> Result<DualResult> {
    let hc = p.h.complexification();
    let found: Vec<DualForm> = dual_candidates(&p.g)
        .into_iter()
        .filter(|c| c.maximal_compact() == hc)
        .collect();
    let g_d = match found.as_slice() {
        [one] => *one,
        [] => {
            return Err(Error::Integrity(format!(
                "{p}: no real form of {} has maximal compact {hc}",
                p.g.complexification()
            )))
        }
        many => {
            let names: Vec<String> = many.iter().map(|m| m.to_string()).collect();
            return Err(Error::Integrity(format!(
                "{p}: several real forms have maximal compact {hc}: {}",
                names.join(", ")
            )));
        }
    };
    if !p.g.absolutely_simple() {
        let expected = match p.kind {
            PairKind::ComplexAntiholomorphic => matches!(g_d, DualForm::Simple(_)),
            _ => matches!(g_d, DualForm::Doubled(_)),
        };
        if !expected {
            return Err(Error::Integrity(format!("{p}: dual {g_d} does not fit a {} pair", p.kind)));
        }
    }
    Ok(DualResult {
        g_d,
        h_a: p.h_a.clone(),
        certificate: hc,
    })
}

/// `h^a = g ∩ g^d`, checked against the dimension and maximal-compact
/// identities `dim h^a = 2 dim(k∩h) + dim p - dim h` and
/// `k(h^a) = k ∩ h = k(h)`.
pub fn associated(p: &SymmetricPair) -> Result<RealReductive> {
    let kh = p.h.maximal_compact();
    let dim_kh = kh.dim();
    let dim_p = p.g.dim() - p.g.maximal_compact().dim();
    let expected = 2 * dim_kh + dim_p;
    if p.h_a.dim() + p.h.dim() != expected {
        return Err(Error::Integrity(format!(
            "{p}: dim h^a = {} but the Cartan decomposition gives {}",
            p.h_a.dim(),
            expected - p.h.dim()
        )));
    }
    if p.h_a.maximal_compact() != kh {
        return Err(Error::Integrity(format!(
            "{p}: h^a = {} has maximal compact {}, h has {kh}",
            p.h_a,
            p.h_a.maximal_compact()
        )));
    }
    Ok(p.h_a.clone())
}

/// `(g_C, h_C)` with `g_C` viewed as a real Lie algebra.
pub fn complexify_pair(p: &SymmetricPair) -> Result<SymmetricPair> {
    if p.kind != PairKind::RealAbsolutelySimple {
        return Err(Error::TypeMismatch(format!("{p} is not a pair with absolutely simple g")));
    }
    let gc = RealForm::Complex(p.g.cartan_type());
    let h = RealReductive::complex(&p.h.complexification());
    let mut found = find_pairs(&gc, &h)?;
    found.retain(|q| q.kind == PairKind::ComplexHolomorphic);
    match found.len() {
        1 => Ok(found.remove(0)),
        n => Err(Error::Integrity(format!("{p}: {n} complexified pairs ({gc}, {h}) in the catalog"))),
    }
}

pub fn parse_pair_record(line: &str) -> Result<SymmetricPair> {
    let bad = |why: &str| Error::Parse(format!("{why}: {line}"));
    let mut fields = line.split('|').map(str::trim);
    let g: RealForm = fields
        .next()
        .and_then(|h| h.strip_prefix("pair "))
        .ok_or_else(|| bad("record must start with 'pair'"))?
        .trim()
        .parse()?;
    let mut kv = std::collections::BTreeMap::new();
    for f in fields {
        let (k, v) = f.split_once('=').ok_or_else(|| bad("field without '='"))?;
        kv.insert(k.trim(), v.trim());
    }
    let get = |k: &str| kv.get(k).copied().ok_or_else(|| bad(&format!("missing field '{k}'")));
    Ok(SymmetricPair {
        g,
        h: get("h")?.parse()?,
        h_a: get("ha")?.parse()?,
        kind: PairKind::from_tag(get("kind")?)?,
        source: get("source")?.to_string(),
    })
}

pub fn parse_pair_records(text: &str) -> Result<Vec<SymmetricPair>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_pair_record)
        .collect()
}

/// Serialises the pair catalog for the given bound.
pub fn dump_pairs(bound: u32) -> Result<String> {
    let mut s = format!("# symmetric pairs (g, h) with h^a, classical rank <= {bound}\n");
    s.push_str("# su*_2n contains sp_{n-j,j}: a real form of sp_n(C), indexed so that the\n");
    s.push_str("# two indices sum to n. A printed variant writes sp_{2n-j,j} for this family.\n");
    for p in all_pairs(bound)? {
        s.push_str(&p.record());
        s.push('\n');
    }
    Ok(s)
}

/// The shipped pair catalog (classical rank bound 12).
pub const PAIRS_DATA: &str = include_str!("../data/symmetric_pairs.txt");

/// Checks the catalog of `g`: dual uniqueness, the `h^a` identities, and
/// that the associated pair is again in the catalog with `h^a` swapped.
pub fn validate_pairs(g: &RealForm) -> Result<()> {
    let pairs = catalog_pairs(g)?;
    let keys: BTreeSet<(RealReductive, RealReductive, PairKind)> =
        pairs.iter().map(|p| (p.h.clone(), p.h_a.clone(), p.kind)).collect();
    for p in &pairs {
        dual(p)?;
        associated(p)?;
        let back_kind = match p.kind {
            PairKind::RealAbsolutelySimple => PairKind::RealAbsolutelySimple,
            _ if p.h_a == RealReductive::noncompact(*g) => PairKind::ComplexHolomorphic,
            _ if p.h.is_compact() => PairKind::ComplexHolomorphic,
            PairKind::ComplexHolomorphic => PairKind::ComplexAntiholomorphic,
            PairKind::ComplexAntiholomorphic => PairKind::ComplexHolomorphic,
        };
        if p.h_a.dim() < g.dim() && !keys.contains(&(p.h_a.clone(), p.h.clone(), back_kind)) {
            return Err(Error::Integrity(format!("{p}: associated pair ({g}, {}) missing", p.h_a)));
        }
    }
    Ok(())
}
