//! Deciding whether the complex orbit through the minimal real nilpotent
//! orbits of `g` meets the dual real form `g^d`, by two independent routes,
//! and the consequences for properness, bounded multiplicity and almost
//! irreducibility.

use crate::error::{Error, Result};
use crate::orbits::{exceeds_minimal, m_real, min_complex_orbit, n_min, omin_g, orbit_meets_real_form, DualForm};
use crate::pairs::{all_pairs, dual, DualResult, PairKind, SymmetricPair};
use crate::realform::{all_real_forms, satake, Exceptional, RawForm, RealForm, RealReductive};
use crate::rootsys::{CartanType, ComplexReductiveType, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Route A: the invariants `m(g)`, `n(g_C)`, `m(g^d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteA {
    pub m_g: u32,
    pub n_gc: u32,
    pub m_gd: u32,
    pub empty: bool,
}

/// Route B: the orbit through the minimal real orbits of `g` matched
/// against the Satake diagram(s) of `g^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteB {
    pub orbit: String,
    pub satake: String,
    pub empty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub pair: SymmetricPair,
    pub dual: DualResult,
    pub empty_intersection: bool,
    pub route_a: RouteA,
    pub route_b: RouteB,
    pub agreement: bool,
}

fn satake_text(gd: &DualForm) -> Result<String> {
    Ok(match gd {
        DualForm::Simple(RealForm::Complex(t)) => format!("{t} viewed as real (no Satake diagram)"),
        DualForm::Simple(f) => satake(f)?.to_string(),
        DualForm::Doubled(f) => {
            let s = satake(f)?;
            format!("{s} (twice)")
        }
    })
}

/// Decides emptiness of `O^C_{min,g} ∩ g^d`. The answer does not depend on
/// which minimal real orbit is used in the Hermitian case, since both lie
/// in the same complex orbit.
pub fn decide(p: &SymmetricPair) -> Result<Decision> {
    let d = dual(p)?;
    let m_g = m_real(&p.g)?;
    let n_gc = n_min(&p.g.complexification());
    let m_gd = d.g_d.m()?;
    let by_invariants = m_g == n_gc && n_gc < m_gd;
    let route_a_empty = match (p.kind, d.g_d) {
        (PairKind::RealAbsolutelySimple, _) => by_invariants,
        (PairKind::ComplexHolomorphic, DualForm::Doubled(g0)) => {
            if exceeds_minimal(&g0) != by_invariants {
                return Err(Error::Integrity(format!(
                    "{p}: g_d0 = {g0} list membership disagrees with m(g) = {m_g}, n = {n_gc}, m(g^d) = {m_gd}"
                )));
            }
            exceeds_minimal(&g0)
        }
        (PairKind::ComplexAntiholomorphic, _) => {
            if !(m_g == n_gc && n_gc == m_gd) {
                return Err(Error::Integrity(format!(
                    "{p}: antiholomorphic pair with m(g) = {m_g}, n = {n_gc}, m(g^d) = {m_gd}"
                )));
            }
            false
        }
        (kind, gd) => return Err(Error::Integrity(format!("{p}: {kind} pair with dual {gd}"))),
    };
    let orbit = omin_g(&p.g)?;
    let route_b_empty = !orbit_meets_real_form(&orbit, &d.g_d)?;
    let route_a = RouteA {
        m_g,
        n_gc,
        m_gd,
        empty: route_a_empty,
    };
    let route_b = RouteB {
        orbit: orbit.to_string(),
        satake: satake_text(&d.g_d)?,
        empty: route_b_empty,
    };
    if route_a_empty != route_b_empty {
        return Err(Error::Integrity(format!(
            "routes disagree on {p} [{}]: g^d = {}, h^a = {}; route A {:?}; route B {:?}",
            p.kind, d.g_d, d.h_a, route_a, route_b
        )));
    }
    Ok(Decision {
        pair: p.clone(),
        dual: d,
        empty_intersection: route_a_empty,
        route_a,
        route_b,
        agreement: true,
    })
}

/// Decides every catalog pair within the bound, sorted by pair record.
pub fn decide_all(bound: u32) -> Result<Vec<Decision>> {
    let mut pairs = all_pairs(bound)?;
    pairs.sort_by_key(|p| p.record());
    pairs.iter().map(decide).collect()
}

/// The catalog pairs with empty intersection, sorted by pair record.
pub fn enumerate_empty(bound: u32) -> Result<Vec<Decision>> {
    Ok(decide_all(bound)?.into_iter().filter(|d| d.empty_intersection).collect())
}

/// One row of a reproduced table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TableRow {
    pub g: RealForm,
    pub h: RealReductive,
    pub g_d: DualForm,
    pub h_a: RealReductive,
}

impl TableRow {
    pub fn from_decision(d: &Decision) -> Self {
        TableRow {
            g: d.pair.g,
            h: d.pair.h.clone(),
            g_d: d.dual.g_d,
            h_a: d.dual.h_a.clone(),
        }
    }
}

fn within(g: &RealForm, bound: u32) -> bool {
    g.cartan_type().is_exceptional() || g.rank() <= bound
}

fn red(raws: &[RawForm]) -> Result<RealReductive> {
    RealReductive::from_raws(raws)
}

/// Closed-form instantiation of the list of empty pairs with absolutely
/// simple `g`, for classical rank at most `bound`. Row numbers start at 1.
pub fn table3(bound: u32) -> Result<Vec<(usize, TableRow)>> {
    use RawForm as R;
    let mut rows: Vec<(usize, TableRow)> = Vec::new();
    let mut push = |row: usize, g: RealForm, h: RealReductive, gd: RealForm, ha: RealReductive| {
        if within(&g, bound) {
            rows.push((
                row,
                TableRow {
                    g,
                    h,
                    g_d: DualForm::Simple(gd),
                    h_a: ha,
                },
            ));
        }
    };
    let so2 = R::So(2, 0);
    for n in 2..=bound {
        push(1, RealForm::sl_r(2 * n)?, red(&[R::SpR(n)])?, RealForm::su_star(2 * n)?, red(&[R::SlC(n), so2])?);
        for j in 1..n {
            push(2, RealForm::su(2 * n - 2 * j, 2 * j)?, red(&[R::Sp(n - j, j)])?, RealForm::su_star(2 * n)?, red(&[R::Sp(n - j, j)])?);
        }
        push(3, RealForm::su(n, n)?, red(&[R::SpR(n)])?, RealForm::su_star(2 * n)?, red(&[R::SoStar(2 * n)])?);
        for j in 1..n {
            push(5, RealForm::sp_r(n)?, red(&[R::SpR(n - j), R::SpR(j)])?, RealForm::sp(n - j, j)?, red(&[R::U(n - j, j)])?);
        }
    }
    for m in 2..=2 * bound + 1 {
        for n in 2..=2 * bound + 1 {
            if (m, n) == (2, 2) || m + n > 2 * bound + 1 {
                continue;
            }
            push(4, RealForm::so(m, n)?, red(&[R::So(m - 1, n)])?, RealForm::so(m + n - 1, 1)?, red(&[R::So(1, n), R::So(m - 1, 0)])?);
        }
    }
    for n in 1..=bound {
        push(6, RealForm::sp_r(2 * n)?, red(&[R::SpC(n)])?, RealForm::sp(n, n)?, red(&[R::SpC(n)])?);
    }
    let e = |x| RealForm::Exceptional(x);
    let p = |s: &str| s.parse::<RealReductive>();
    use Exceptional::*;
    push(7, e(E6Split), p("f4(4)")?, e(E6Rank2), p("su*_6+su_2")?);
    push(8, e(E6Quasi), p("f4(4)")?, e(E6Rank2), p("sp_{3,1}")?);
    push(9, e(E6Herm), p("f4(-20)")?, e(E6Rank2), p("f4(-20)")?);
    push(10, e(F4Split), p("so_{5,4}")?, e(F4Rank1), p("sp_{2,1}+su_2")?);
    rows.sort();
    rows.dedup();
    Ok(rows)
}

/// Closed-form instantiation of the list of empty pairs with complex `g`.
/// Here `h^a = g_d0`.
pub fn table4(bound: u32) -> Result<Vec<(usize, TableRow)>> {
    use RawForm as R;
    let mut rows: Vec<(usize, TableRow)> = Vec::new();
    let mut push = |row: usize, t: CartanType, h: ComplexReductiveType, g0: RealForm| {
        let g = RealForm::Complex(t);
        if within(&g, bound) {
            rows.push((
                row,
                TableRow {
                    g,
                    h: RealReductive::complex(&h),
                    g_d: DualForm::Doubled(g0),
                    h_a: RealReductive::noncompact(g0),
                },
            ));
        }
    };
    let one = |c: ComplexReductiveType| c.as_simple().unwrap();
    for n in 2..=bound {
        push(1, one(ComplexReductiveType::sl(2 * n)), ComplexReductiveType::sp(n), RealForm::su_star(2 * n)?);
    }
    for n in 5..=2 * bound + 1 {
        push(2, one(ComplexReductiveType::so(n)), ComplexReductiveType::so(n - 1), RealForm::so(n - 1, 1)?);
    }
    for m in 1..=bound {
        for n in 1..=bound.saturating_sub(m) {
            push(
                3,
                one(ComplexReductiveType::sp(m + n)),
                ComplexReductiveType::sp(m) + ComplexReductiveType::sp(n),
                RealForm::from_raw(R::Sp(m, n))?,
            );
        }
    }
    push(4, CartanType::e6(), ComplexReductiveType::simple(CartanType::f4()), RealForm::Exceptional(Exceptional::E6Rank2));
    push(5, CartanType::f4(), ComplexReductiveType::so(9), RealForm::Exceptional(Exceptional::F4Rank1));
    rows.sort();
    rows.dedup();
    Ok(rows)
}

/// A row of the `n(l_C)` table: closed form against the dimension computed
/// from the weighted Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub algebra: String,
    pub n_closed_form: u32,
    pub n_computed: u32,
}

pub fn table1(bound: u32) -> Result<Vec<Table1Row>> {
    CartanType::all_up_to(bound)
        .into_iter()
        .map(|t| {
            let rs = RootSystem::get(t);
            let w = crate::rootsys::minimal_orbit_wdd(&rs);
            Ok(Table1Row {
                algebra: t.algebra_name(),
                n_closed_form: n_min(&ComplexReductiveType::simple(t)),
                n_computed: crate::rootsys::orbit_half_dim(&rs, &w)?,
            })
        })
        .collect()
}

/// A row of the list of `g` with `n(g_C) < m(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub g: RealForm,
    pub m_closed_form: u32,
    pub m_computed: u32,
    pub g_c: ComplexReductiveType,
    pub k_c: ComplexReductiveType,
    pub n_gc: u32,
    pub orbit: String,
}

/// `m(g)` by the closed forms of the list.
pub fn m_closed_form(g: &RealForm) -> Option<u32> {
    match *g {
        RealForm::SuStar(size) => Some(4 * (size / 2) - 4),
        RealForm::So(p, 1) => Some(p + 1 - 2),
        RealForm::Sp(p, q) => Some(2 * (p + q) - 1),
        RealForm::Exceptional(Exceptional::E6Rank2) => Some(16),
        RealForm::Exceptional(Exceptional::F4Rank1) => Some(11),
        _ => None,
    }
}

pub fn table2(bound: u32) -> Result<Vec<Table2Row>> {
    all_real_forms(bound)
        .into_iter()
        .filter(exceeds_minimal)
        .map(|g| {
            let o = omin_g(&g)?;
            Ok(Table2Row {
                g,
                m_closed_form: m_closed_form(&g).unwrap_or(0),
                m_computed: o.half_dim(),
                g_c: g.complexification(),
                k_c: g.maximal_compact(),
                n_gc: n_min(&g.complexification()),
                orbit: o.to_string(),
            })
        })
        .collect()
}

/// Properness of the `SL_2(R)`-action on `G/H^a` through the minimal
/// nilpotent orbit, with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properness {
    pub proper: bool,
    pub explanation: String,
}

pub fn properness(p: &SymmetricPair) -> Result<Properness> {
    let d = decide(p)?;
    let bound = if p.g.cartan_type().is_exceptional() { 0 } else { p.g.rank() };
    let rows = if p.g.absolutely_simple() { table3(bound)? } else { table4(bound)? };
    let row = TableRow::from_decision(&d);
    let explanation = if d.empty_intersection {
        match rows.iter().find(|(_, r)| *r == row) {
            Some((k, _)) => format!(
                "O^C_min,g misses g^d = {}; the pair is row {k} of the {} list",
                d.dual.g_d,
                if p.g.absolutely_simple() { "absolutely simple" } else { "complex" }
            ),
            None => format!("O^C_min,g misses g^d = {}", d.dual.g_d),
        }
    } else if d.route_a.n_gc < d.route_a.m_g {
        format!(
            "O^C_min,g meets g^d = {}: n(g_C) = {} < m(g) = {} forces a meeting",
            d.dual.g_d, d.route_a.n_gc, d.route_a.m_g
        )
    } else {
        format!(
            "O^C_min,g meets g^d = {}: m(g^d) = {} is not larger than n(g_C) = {}",
            d.dual.g_d, d.route_a.m_gd, d.route_a.n_gc
        )
    };
    Ok(Properness {
        proper: d.empty_intersection,
        explanation,
    })
}

/// Assumption on the Gelfand-Kirillov dimension of the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimAssumption {
    /// `DIM(Pi) = m(g)`
    EqualsM,
    /// `DIM(Pi) = n(g_C)`
    EqualsN,
}

/// Which sufficient condition yields bounded multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BmpCertificate {
    /// `DIM(Pi) = n(g_C)`.
    MinimalDimension,
    /// `sigma mu = -mu`, equivalent to the orbit meeting `g^d`.
    SigmaMuIsMinusMu,
    /// Empty intersection forces `m(g) = n(g_C)`, reducing to the first.
    Combined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bmp {
    pub certificate: BmpCertificate,
    pub bounded: bool,
}

pub fn bmp_certificate(p: &SymmetricPair, dim: DimAssumption) -> Result<Bmp> {
    let certificate = match dim {
        DimAssumption::EqualsN => BmpCertificate::MinimalDimension,
        DimAssumption::EqualsM => {
            let d = decide(p)?;
            if !d.empty_intersection {
                BmpCertificate::SigmaMuIsMinusMu
            } else if d.route_a.m_g == d.route_a.n_gc {
                BmpCertificate::Combined
            } else {
                return Err(Error::Integrity(format!("{p}: empty intersection with m(g) != n(g_C)")));
            }
        }
    };
    Ok(Bmp {
        certificate,
        bounded: true,
    })
}

/// Condition `n(g_C) < m(g^d)`.
pub fn almost_irreducible_star(p: &SymmetricPair) -> Result<bool> {
    let d = dual(p)?;
    Ok(n_min(&p.g.complexification()) < d.g_d.m()?)
}

/// Set of `(g, h, g^d, h^a)` among decisions, for comparisons with tables.
pub fn row_set<'a>(ds: impl IntoIterator<Item = &'a Decision>) -> BTreeSet<TableRow> {
    ds.into_iter().map(TableRow::from_decision).collect()
}

/// The closed-form `n` of every simple type agrees with the weighted Dynkin
/// diagram computation.
pub fn check_table1(bound: u32) -> Result<()> {
    for r in table1(bound)? {
        if r.n_closed_form != r.n_computed {
            return Err(Error::Integrity(format!("{}: n = {} vs {}", r.algebra, r.n_closed_form, r.n_computed)));
        }
    }
    for t in CartanType::all_up_to(bound) {
        min_complex_orbit(t)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::find_pairs;

    fn pair(g: &str, h: &str) -> SymmetricPair {
        let g: RealForm = g.parse().unwrap();
        find_pairs(&g, &h.parse().unwrap()).unwrap().remove(0)
    }

    #[test]
    fn spot_decisions() {
        let d = decide(&pair("sl_4(R)", "sp_2(R)")).unwrap();
        assert!(d.empty_intersection);
        assert_eq!(d.dual.g_d, DualForm::Simple(RealForm::su_star(4).unwrap()));
        assert!(!decide(&pair("sl_4(R)", "so_4")).unwrap().empty_intersection);
        assert!(!decide(&pair("su*_4", "sp_{1,1}")).unwrap().empty_intersection);
        assert!(!decide(&pair("sl_2(C)", "sl_2(R)")).unwrap().empty_intersection);
        let d = decide(&pair("sp_2(C)", "sp_1(C)+sp_1(C)")).unwrap();
        assert!(d.empty_intersection);
        assert_eq!(d.dual.g_d, DualForm::Doubled(RealForm::sp(1, 1).unwrap()));
    }

    #[test]
    fn applications() {
        let p = pair("sl_4(R)", "sp_2(R)");
        assert!(properness(&p).unwrap().proper);
        assert_eq!(bmp_certificate(&p, DimAssumption::EqualsM).unwrap().certificate, BmpCertificate::Combined);
        assert!(properness(&pair("su_{2,2}", "sp_{1,1}")).unwrap().proper);
        let k = pair("f4(4)", "sp_3+su_2");
        assert!(!properness(&k).unwrap().proper);
        assert_eq!(bmp_certificate(&k, DimAssumption::EqualsM).unwrap().certificate, BmpCertificate::SigmaMuIsMinusMu);
        assert_eq!(bmp_certificate(&k, DimAssumption::EqualsN).unwrap().certificate, BmpCertificate::MinimalDimension);
        assert!(!almost_irreducible_star(&k).unwrap());
        assert!(almost_irreducible_star(&pair("e6(2)", "f4(4)")).unwrap());
        assert!(almost_irreducible_star(&pair("sp_2(R)", "sp_1(R)+sp_1(R)")).unwrap());
    }
}
