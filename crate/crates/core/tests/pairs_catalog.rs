use nilpair::orbits::DualForm;
use nilpair::pairs::{
    all_pairs, all_simple_forms, associated, catalog_pairs, complexify_pair, dual, validate_pairs, PairKind,
};
use nilpair::realform::{RealForm, RealReductive};

#[test]
fn every_catalog_is_consistent() {
    for g in all_simple_forms(12) {
        validate_pairs(&g).unwrap_or_else(|e| panic!("{g}: {e}"));
    }
}

#[test]
fn riemannian_pair_is_self_dual() {
    for g in all_simple_forms(12) {
        let pairs = catalog_pairs(&g).unwrap();
        let k: Vec<_> = pairs.iter().filter(|p| p.is_riemannian()).collect();
        assert_eq!(k.len(), 1, "{g}");
        assert_eq!(dual(k[0]).unwrap().g_d, DualForm::Simple(g));
        assert_eq!(associated(k[0]).unwrap(), RealReductive::noncompact(g));
    }
}

#[test]
fn duals_have_the_defining_property() {
    for p in all_pairs(12).unwrap() {
        let d = dual(&p).unwrap();
        assert_eq!(d.g_d.maximal_compact(), p.h.complexification(), "{p}");
        assert_eq!(d.g_d.complexification(), p.g.complexification(), "{p}");
    }
}

#[test]
fn complexified_dual_is_doubled() {
    for p in all_pairs(12).unwrap().into_iter().filter(|p| p.kind == PairKind::RealAbsolutelySimple) {
        let DualForm::Simple(gd) = dual(&p).unwrap().g_d else {
            panic!("{p}")
        };
        let c = complexify_pair(&p).unwrap();
        assert_eq!(dual(&c).unwrap().g_d, DualForm::Doubled(gd), "{p}");
    }
}

#[test]
fn published_counts() {
    let count = |s: &str| catalog_pairs(&s.parse::<RealForm>().unwrap()).unwrap().len();
    for (g, n) in [
        ("e6(6)", 7),
        ("e6(2)", 8),
        ("e6(-14)", 7),
        ("e6(-26)", 5),
        ("e7(7)", 8),
        ("e7(-5)", 7),
        ("e7(-25)", 7),
        ("e8(8)", 5),
        ("e8(-24)", 5),
        ("f4(4)", 4),
        ("f4(-20)", 3),
        ("g2(2)", 2),
        ("sl_2(R)", 2),
        ("sl_3(R)", 3),
    ] {
        assert_eq!(count(g), n, "{g}");
    }
}

#[test]
fn complex_pairs_split_by_kind() {
    let g = RealForm::complex("A3".parse().unwrap());
    let pairs = catalog_pairs(&g).unwrap();
    let anti = pairs.iter().filter(|p| p.kind == PairKind::ComplexAntiholomorphic).count();
    let holo = pairs.iter().filter(|p| p.kind == PairKind::ComplexHolomorphic).count();
    // four non-compact real forms plus the compact one; four complex symmetric subalgebras
    assert_eq!((anti, holo), (5, 4));
}
