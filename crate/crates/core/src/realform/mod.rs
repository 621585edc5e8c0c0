//! Real forms of complex simple Lie algebras.

pub mod form;
pub mod reductive;

pub use form::{Exceptional, RawForm, RealForm};
pub use reductive::{compact_name, RealReductive, RealSimple};
pub mod satake;
pub use satake::{satake, Involution, SatakeDiagram};
pub mod restricted;
pub use restricted::{restrict, restricted_root_system, RestrictedRootSystem, RestrictedType};
pub mod catalog;
pub use catalog::{all_real_forms, catalog_real_forms, dump_forms, parse_form_records, validate_form};

/// Complexified maximal compact subalgebra of `g`.
pub fn maximal_compact(g: &RealForm) -> crate::rootsys::ComplexReductiveType {
    g.maximal_compact()
}

pub fn is_hermitian(g: &RealForm) -> bool {
    g.hermitian()
}

pub fn count_minimal_real_orbits(g: &RealForm) -> u32 {
    g.count_minimal_real_orbits()
}

pub fn satake_involution(s: &SatakeDiagram) -> crate::error::Result<Involution> {
    s.involution()
}
