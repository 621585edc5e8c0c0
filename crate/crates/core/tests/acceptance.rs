//! One line per acceptance criterion; exits non-zero if any fails.

use nilpair::classify::{
    almost_irreducible_star, bmp_certificate, decide, decide_all, properness, row_set, table3, table4, DimAssumption,
    TableRow,
};
use nilpair::orbits::{exceeds_minimal, m_real, matches, min_complex_orbit, n_min, omin_g, DualForm};
use nilpair::pairs::{all_pairs, all_simple_forms, catalog_pairs, complexify_pair, dual, find_pairs, PairKind};
use nilpair::realform::{all_real_forms, restricted_root_system, satake, RealForm, RealReductive, RestrictedType};
use nilpair::rootsys::{graded_dims, CartanType, ComplexReductiveType, Family, RootSystem};
use std::collections::BTreeSet;

type Check = std::result::Result<String, String>;

const BOUND: u32 = 12;

fn rf(s: &str) -> RealForm {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn rr(s: &str) -> RealReductive {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn half_dim_from_grading(t: CartanType, w: &nilpair::WeightedDynkinDiagram) -> u32 {
    let gr = graded_dims(&RootSystem::get(t), w);
    let g0 = gr.get(&0).copied().unwrap_or(0);
    let g1 = gr.get(&1).copied().unwrap_or(0);
    (t.dim() - g0 - g1) / 2
}

fn criterion_1() -> Check {
    let mut n = 0;
    for t in CartanType::all_up_to(BOUND) {
        let r = t.rank();
        let expected = match t.family() {
            Family::A => (r + 1) - 1,
            Family::B => (2 * r + 1) - 3,
            Family::C => r,
            Family::D => 2 * r - 3,
            Family::E6 => 11,
            Family::E7 => 17,
            Family::E8 => 29,
            Family::F4 => 8,
            Family::G2 => 3,
        };
        let closed = n_min(&ComplexReductiveType::simple(t));
        let o = min_complex_orbit(t).map_err(|e| e.to_string())?;
        let computed = half_dim_from_grading(t, &o.wdd);
        ensure(closed == expected && computed == expected, || {
            format!("{t}: table {expected}, closed form {closed}, from grading {computed}")
        })?;
        n += 1;
    }
    Ok(format!("{n} simple types"))
}

fn criterion_2() -> Check {
    let mut expected: BTreeSet<(RealForm, u32)> = BTreeSet::new();
    for n in 2..=(BOUND + 1) / 2 {
        expected.insert((rf(&format!("su*_{}", 2 * n)), 4 * n - 4));
    }
    for n in 5..=2 * BOUND + 1 {
        expected.insert((rf(&format!("so_{{{},1}}", n - 1)), n - 2));
    }
    for m in 1..=BOUND {
        for n in 1..=BOUND - m.min(BOUND) {
            expected.insert((rf(&format!("sp_{{{m},{n}}}")), 2 * (m + n) - 1));
        }
    }
    expected.insert((rf("e6(-26)"), 16));
    expected.insert((rf("f4(-20)"), 11));
    let mut found = BTreeSet::new();
    for g in all_real_forms(BOUND).into_iter().filter(exceeds_minimal) {
        let m = m_real(&g).map_err(|e| e.to_string())?;
        let o = omin_g(&g).map_err(|e| e.to_string())?;
        let f = &o.factors[0];
        let graded = half_dim_from_grading(f.cartan_type(), &f.wdd);
        ensure(graded == m, || format!("{g}: m = {m}, from grading {graded}"))?;
        found.insert((g, m));
    }
    ensure(found == expected, || {
        let diff: Vec<String> = found.symmetric_difference(&expected).map(|(g, m)| format!("{g}:{m}")).collect();
        format!("differences {}", diff.join(", "))
    })?;
    Ok(format!("{} instances", found.len()))
}

fn criterion_3() -> Check {
    let forms = all_real_forms(BOUND);
    for g in &forms {
        let meets = matches(
            &min_complex_orbit(g.cartan_type()).map_err(|e| e.to_string())?.wdd,
            &satake(g).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let listed = matches!(g, RealForm::SuStar(_) | RealForm::So(_, 1) | RealForm::Sp(..))
            || *g == rf("e6(-26)")
            || *g == rf("f4(-20)");
        ensure(meets != listed, || format!("{g}: meets {meets}, listed {listed}"))?;
    }
    Ok(format!("{} real forms", forms.len()))
}

/// The absolutely simple table, instantiated from its printed rows.
fn table3_oracle(bound: u32) -> BTreeSet<TableRow> {
    let mut rows = BTreeSet::new();
    let mut add = |g: &str, h: &str, gd: &str, ha: &str| {
        let g = rf(g);
        if g.cartan_type().is_exceptional() || g.rank() <= bound {
            rows.insert(TableRow {
                g,
                h: rr(h),
                g_d: DualForm::Simple(rf(gd)),
                h_a: rr(ha),
            });
        }
    };
    for n in 2..=bound {
        add(&format!("sl_{}(R)", 2 * n), &format!("sp_{n}(R)"), &format!("su*_{}", 2 * n), &format!("sl_{n}(C)+so_2"));
        for j in 1..n {
            add(
                &format!("su_{{{},{}}}", 2 * n - 2 * j, 2 * j),
                &format!("sp_{{{},{j}}}", n - j),
                &format!("su*_{}", 2 * n),
                &format!("sp_{{{},{j}}}", n - j),
            );
        }
        add(&format!("su_{{{n},{n}}}"), &format!("sp_{n}(R)"), &format!("su*_{}", 2 * n), &format!("so*_{}", 2 * n));
        for j in 1..n {
            add(
                &format!("sp_{n}(R)"),
                &format!("sp_{}(R)+sp_{j}(R)", n - j),
                &format!("sp_{{{},{j}}}", n - j),
                &format!("su_{{{},{j}}}+so_2", n - j),
            );
        }
    }
    for m in 2..=2 * bound {
        for n in 2..=2 * bound {
            if (m, n) != (2, 2) && m + n <= 2 * bound + 1 {
                let ha = if m == 2 { format!("so_{{1,{n}}}+so_1") } else { format!("so_{{1,{n}}}+so_{}", m - 1) };
                add(&format!("so_{{{m},{n}}}"), &format!("so_{{{},{n}}}", m - 1), &format!("so_{{{},1}}", m + n - 1), &ha);
            }
        }
    }
    for n in 1..=bound / 2 {
        add(&format!("sp_{}(R)", 2 * n), &format!("sp_{n}(C)"), &format!("sp_{{{n},{n}}}"), &format!("sp_{n}(C)"));
    }
    add("e6(6)", "f4(4)", "e6(-26)", "su*_6+su_2");
    add("e6(2)", "f4(4)", "e6(-26)", "sp_{3,1}");
    add("e6(-14)", "f4(-20)", "e6(-26)", "f4(-20)");
    add("f4(4)", "so_{5,4}", "f4(-20)", "sp_{2,1}+su_2");
    rows
}

/// The complex table, instantiated from its printed rows.
fn table4_oracle(bound: u32) -> BTreeSet<TableRow> {
    let mut rows = BTreeSet::new();
    let mut add = |g: &str, h: &str, g0: &str| {
        let g = rf(g);
        if g.cartan_type().is_exceptional() || g.rank() <= bound {
            rows.insert(TableRow {
                g,
                h: rr(h),
                g_d: DualForm::Doubled(rf(g0)),
                h_a: rr(g0),
            });
        }
    };
    for n in 2..=bound {
        add(&format!("sl_{}(C)", 2 * n), &format!("sp_{n}(C)"), &format!("su*_{}", 2 * n));
    }
    for n in 5..=2 * bound + 1 {
        add(&format!("so_{n}(C)"), &format!("so_{}(C)", n - 1), &format!("so_{{{},1}}", n - 1));
    }
    for m in 1..=bound {
        for n in 1..=bound.saturating_sub(m) {
            add(&format!("sp_{}(C)", m + n), &format!("sp_{m}(C)+sp_{n}(C)"), &format!("sp_{{{m},{n}}}"));
        }
    }
    add("e6(C)", "f4(C)", "e6(-26)");
    add("f4(C)", "so_9(C)", "f4(-20)");
    rows
}

fn set_diff(a: &BTreeSet<TableRow>, b: &BTreeSet<TableRow>) -> String {
    a.symmetric_difference(b)
        .take(5)
        .map(|r| format!("({}, {}) g^d={} h^a={} [{}]", r.g, r.h, r.g_d, r.h_a, if a.contains(r) { "extra" } else { "missing" }))
        .collect::<Vec<_>>()
        .join("; ")
}

fn criterion_4() -> Check {
    let ds = decide_all(8).map_err(|e| e.to_string())?;
    let real: Vec<_> = ds.iter().filter(|d| d.pair.kind == PairKind::RealAbsolutelySimple).collect();
    let empty = row_set(real.iter().copied().filter(|d| d.empty_intersection));
    let oracle = table3_oracle(8);
    ensure(empty == oracle, || set_diff(&empty, &oracle))?;
    let lib: BTreeSet<_> = table3(8).map_err(|e| e.to_string())?.into_iter().map(|(_, r)| r).collect();
    ensure(lib == oracle, || format!("library table: {}", set_diff(&lib, &oracle)))?;
    let exc: BTreeSet<(String, String)> = empty
        .iter()
        .filter(|r| r.g.cartan_type().is_exceptional())
        .map(|r| (r.g.to_string(), r.h.to_string()))
        .collect();
    let want: BTreeSet<(String, String)> = [("e6(6)", "f4(4)"), ("e6(2)", "f4(4)"), ("e6(-14)", "f4(-20)"), ("f4(4)", "so_{5,4}")]
        .iter()
        .map(|(g, h)| (rf(g).to_string(), rr(h).to_string()))
        .collect();
    ensure(exc == want, || format!("exceptional rows {exc:?}"))?;
    Ok(format!("{} empty among {} pairs", empty.len(), real.len()))
}

fn criterion_5() -> Check {
    let ds = decide_all(8).map_err(|e| e.to_string())?;
    let cplx: Vec<_> = ds.iter().filter(|d| d.pair.kind != PairKind::RealAbsolutelySimple).collect();
    let empty = row_set(cplx.iter().copied().filter(|d| d.empty_intersection));
    let oracle = table4_oracle(8);
    ensure(empty == oracle, || set_diff(&empty, &oracle))?;
    let lib: BTreeSet<_> = table4(8).map_err(|e| e.to_string())?.into_iter().map(|(_, r)| r).collect();
    ensure(lib == oracle, || format!("library table: {}", set_diff(&lib, &oracle)))?;
    let anti: Vec<_> = cplx.iter().filter(|d| d.pair.kind == PairKind::ComplexAntiholomorphic).collect();
    ensure(anti.iter().all(|d| !d.empty_intersection), || "an antiholomorphic pair decided empty".into())?;
    Ok(format!("{} empty, {} antiholomorphic all non-empty", empty.len(), anti.len()))
}

fn criterion_6() -> Check {
    let ds = decide_all(BOUND).map_err(|e| e.to_string())?;
    let bad = ds.iter().filter(|d| !d.agreement || d.route_a.empty != d.route_b.empty).count();
    ensure(bad == 0, || format!("{bad} disagreements"))?;
    Ok(format!("{} pairs, all routes agree", ds.len()))
}

fn criterion_7() -> Check {
    let pairs = all_pairs(BOUND).map_err(|e| e.to_string())?;
    for p in &pairs {
        let d = dual(p).map_err(|e| e.to_string())?;
        ensure(d.g_d.maximal_compact() == p.h.complexification(), || format!("{p}: k(g^d) != h_C"))?;
        ensure(d.g_d.complexification() == p.g.complexification(), || format!("{p}: (g^d)_C != g_C"))?;
    }
    let mut n = 0;
    for g in all_simple_forms(BOUND) {
        let k = catalog_pairs(&g).map_err(|e| e.to_string())?.into_iter().find(|p| p.is_riemannian());
        let k = k.ok_or_else(|| format!("{g}: no Riemannian pair"))?;
        let d = dual(&k).map_err(|e| e.to_string())?;
        ensure(d.g_d == DualForm::Simple(g), || format!("{g}: dual of (g, k) is {}", d.g_d))?;
        n += 1;
    }
    Ok(format!("{} pairs with unique duals, {n} Riemannian fixed points", pairs.len()))
}

fn criterion_8() -> Check {
    let pairs = all_pairs(BOUND).map_err(|e| e.to_string())?;
    let mut n = 0;
    for p in pairs.iter().filter(|p| p.kind == PairKind::RealAbsolutelySimple) {
        if decide(p).map_err(|e| e.to_string())?.empty_intersection {
            let c = complexify_pair(p).map_err(|e| e.to_string())?;
            ensure(decide(&c).map_err(|e| e.to_string())?.empty_intersection, || format!("{p}: complexified pair {c} non-empty"))?;
            n += 1;
        }
    }
    let w = find_pairs(&rf("su*_4"), &rr("sp_{1,1}")).map_err(|e| e.to_string())?;
    let w = w.first().ok_or("witness (su*_4, sp_{1,1}) missing")?;
    let real = decide(w).map_err(|e| e.to_string())?.empty_intersection;
    let cplx = decide(&complexify_pair(w).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.empty_intersection;
    ensure(!real && cplx, || format!("witness: real empty {real}, complexified empty {cplx}"))?;
    Ok(format!("{n} empty real pairs stay empty; witness non-converse holds"))
}

fn criterion_9() -> Check {
    let pairs = all_pairs(BOUND).map_err(|e| e.to_string())?;
    let mut star_checked = 0;
    for p in &pairs {
        let d = decide(p).map_err(|e| e.to_string())?;
        let pr = properness(p).map_err(|e| e.to_string())?;
        ensure(pr.proper == d.empty_intersection, || format!("{p}: properness {}", pr.proper))?;
        for dim in [DimAssumption::EqualsM, DimAssumption::EqualsN] {
            let b = bmp_certificate(p, dim).map_err(|e| e.to_string())?;
            ensure(b.bounded, || format!("{p}: not bounded"))?;
        }
        if d.route_a.m_g == d.route_a.n_gc {
            let star = almost_irreducible_star(p).map_err(|e| e.to_string())?;
            ensure(star == d.empty_intersection, || format!("{p}: star {star}"))?;
            star_checked += 1;
        }
    }
    Ok(format!("{} pairs; condition star checked on {star_checked}", pairs.len()))
}

fn criterion_10() -> Check {
    let forms = all_real_forms(BOUND);
    for g in &forms {
        let rr = restricted_root_system(g).map_err(|e| format!("{g}: {e}"))?;
        let mult: u32 = rr.multiplicities.values().sum();
        let m_part = rr.compact_dim() - mult;
        ensure(m_part + rr.rank() as u32 + 2 * mult == g.cartan_type().dim(), || format!("{g}: bookkeeping"))?;
        ensure(rr.compact_dim() == g.maximal_compact().dim(), || format!("{g}: dim k"))?;
        let red = |t: CartanType| RestrictedType::Reduced(t);
        let expected = match *g {
            RealForm::SlR(n) => Some(red(CartanType::a(n - 1))),
            RealForm::SuStar(n) => {
                ensure(rr.multiplicities.values().all(|&m| m == 4), || format!("{g}: multiplicities"))?;
                Some(red(CartanType::a(n / 2 - 1)))
            }
            RealForm::So(p, q) if p > q => Some(red(if q == 1 { CartanType::a(1) } else { CartanType::b(q) })),
            RealForm::Sp(p, q) if p > q => Some(RestrictedType::BC(q)),
            RealForm::Sp(_, q) => Some(red(if q == 2 { CartanType::b(2) } else { CartanType::c(q) })),
            RealForm::Exceptional(_) if satake(g).map(|s| s.black.is_empty() && s.arrows.is_empty()).unwrap_or(false) => {
                Some(red(g.cartan_type()))
            }
            _ => None,
        };
        if let Some(e) = expected {
            ensure(rr.restricted_type == e, || format!("{g}: {} expected {e}", rr.restricted_type))?;
        }
    }
    Ok(format!("{} real forms", forms.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("1 minimal orbit dimensions n(l_C)", criterion_1),
        ("2 m(g) for the five exceptional-orbit families", criterion_2),
        ("3 minimal orbit meets g iff g is not listed", criterion_3),
        ("4 empty pairs with absolutely simple g", criterion_4),
        ("5 empty pairs with complex g", criterion_5),
        ("6 route agreement", criterion_6),
        ("7 duality characterisation", criterion_7),
        ("8 complexification monotonicity", criterion_8),
        ("9 properness, bounded multiplicity, condition star", criterion_9),
        ("10 restricted root systems", criterion_10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(e) => {
                failed += 1;
                println!("FAIL  criterion {name}: {e}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
