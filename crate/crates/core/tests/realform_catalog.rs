use nilpair::realform::{
    all_real_forms, catalog_real_forms, restricted_root_system, satake, validate_form, Exceptional,
    RealForm, RestrictedType,
};
use nilpair::rootsys::{CartanType, RootSystem};
use proptest::prelude::*;

fn b(q: u32) -> RestrictedType {
    RestrictedType::Reduced(match q {
        1 => CartanType::a(1),
        q => CartanType::b(q),
    })
}

fn c(q: u32) -> RestrictedType {
    RestrictedType::Reduced(match q {
        1 => CartanType::a(1),
        2 => CartanType::b(2),
        q => CartanType::c(q),
    })
}

fn red(s: &str) -> RestrictedType {
    RestrictedType::Reduced(s.parse().unwrap())
}

/// Classical table of restricted root system types.
fn expected_type(f: &RealForm) -> RestrictedType {
    use Exceptional::*;
    match *f {
        RealForm::SlR(n) => RestrictedType::Reduced(CartanType::a(n - 1)),
        RealForm::SuStar(n) => RestrictedType::Reduced(CartanType::a(n / 2 - 1)),
        RealForm::Su(p, q) | RealForm::Sp(p, q) if p > q => RestrictedType::BC(q),
        RealForm::Su(_, q) | RealForm::Sp(_, q) => c(q),
        RealForm::So(p, q) if p > q => b(q),
        RealForm::So(_, q) => RestrictedType::Reduced(CartanType::d(q)),
        RealForm::SoStar(n) if (n / 2) % 2 == 0 => c(n / 4),
        RealForm::SoStar(n) => RestrictedType::BC(n / 4),
        RealForm::SpR(n) => c(n),
        RealForm::Exceptional(e) => match e {
            E6Split => red("E6"),
            E7Split => red("E7"),
            E8Split => red("E8"),
            F4Split | E6Quasi | E7Quat | E8Quat => red("F4"),
            G2Split => red("G2"),
            E6Herm => RestrictedType::BC(2),
            E6Rank2 => red("A2"),
            E7Herm => red("C3"),
            F4Rank1 => RestrictedType::BC(1),
        },
        RealForm::Complex(_) => unreachable!(),
    }
}

#[test]
fn every_form_validates_and_has_the_classical_restricted_type() {
    let forms = all_real_forms(12);
    for f in &forms {
        validate_form(f).unwrap_or_else(|e| panic!("{f}: {e}"));
        let rr = restricted_root_system(f).unwrap();
        assert_eq!(rr.restricted_type, expected_type(f), "{f}");
        // dim g = dim m + dim a + 2 * sum of positive multiplicities
        let t = f.cartan_type();
        let m = rr.compact_dim() - rr.multiplicities.values().sum::<u32>();
        let total = m + rr.rank() as u32 + 2 * rr.multiplicities.values().sum::<u32>();
        assert_eq!(total, t.dim(), "{f}");
    }
}

#[test]
fn split_forms_restrict_identically() {
    for n in 2..=8 {
        let rr = restricted_root_system(&RealForm::sl_r(n).unwrap()).unwrap();
        assert!(rr.multiplicities.values().all(|&m| m == 1));
        let rs = RootSystem::get(CartanType::a(n - 1));
        assert_eq!(rr.mu, rs.highest_root().clone());
    }
}

#[test]
fn form_counts_per_type() {
    // A_{n-1}: sl_n(R), su*_n (n even), su_{p,q} with 1 <= q <= n/2.
    for r in 2..=12u32 {
        let n = r + 1;
        let expect = 1 + (n % 2 == 0) as usize + (n / 2) as usize;
        assert_eq!(catalog_real_forms(CartanType::a(r)).len(), expect, "A{r}");
    }
    assert_eq!(catalog_real_forms(CartanType::e6()).len(), 4);
    assert_eq!(catalog_real_forms(CartanType::e7()).len(), 3);
    assert_eq!(catalog_real_forms(CartanType::e8()).len(), 2);
    assert_eq!(catalog_real_forms(CartanType::g2()).len(), 1);
}

#[test]
fn satake_diagrams_of_small_forms() {
    let s = satake(&RealForm::su(2, 2).unwrap()).unwrap();
    assert!(s.black.is_empty());
    assert_eq!(s.arrows, vec![(0, 2)]);
    s.involution().unwrap();
}

proptest! {
    #[test]
    fn su_is_symmetric(p in 1u32..10, q in 1u32..10) {
        prop_assume!(p + q >= 3);
        prop_assert_eq!(RealForm::su(p, q).unwrap(), RealForm::su(q, p).unwrap());
    }

    #[test]
    fn so_and_sp_are_symmetric(p in 1u32..12, q in 1u32..12) {
        prop_assert_eq!(RealForm::so(p, q).ok(), RealForm::so(q, p).ok());
        prop_assert_eq!(RealForm::sp(p, q).ok(), RealForm::sp(q, p).ok());
    }

    #[test]
    fn names_round_trip(i in 0usize..273) {
        let forms = all_real_forms(12);
        let f = forms[i % forms.len()];
        prop_assert_eq!(f.to_string().parse::<RealForm>().unwrap(), f);
    }

    #[test]
    fn complex_dim_is_twice(r in 1u32..12) {
        let f = RealForm::complex(CartanType::a(r));
        prop_assert_eq!(f.dim(), 2 * CartanType::a(r).dim());
        prop_assert!(!f.hermitian());
    }
}
