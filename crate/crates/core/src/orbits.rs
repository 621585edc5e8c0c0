//! Minimal complex nilpotent orbits, the orbit through the minimal real
//! nilpotent orbits of a real form, and the Satake matching criterion.

use crate::error::{Error, Result};
use crate::realform::{satake, Exceptional, RealForm, SatakeDiagram};
use crate::rootsys::{
    minimal_orbit_wdd, orbit_half_dim, wdd_from_partition, CartanType, ComplexReductiveType, Family,
    Partition, RootSystem, WeightedDynkinDiagram,
};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Half the dimension of the minimal nilpotent orbit, summed over the simple
/// factors. The centre contributes nothing.
pub fn n_min(t: &ComplexReductiveType) -> u32 {
    t.simple_factors().iter().map(|&s| n_min_simple(s)).sum()
}

fn n_min_simple(t: CartanType) -> u32 {
    let r = t.rank();
    match t.family() {
        Family::A => r,
        Family::B => 2 * r - 2,
        Family::C => r,
        Family::D => 2 * r - 3,
        Family::E6 => 11,
        Family::E7 => 17,
        Family::E8 => 29,
        Family::F4 => 8,
        Family::G2 => 3,
    }
}

/// A nilpotent orbit in one simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorOrbit {
    pub wdd: WeightedDynkinDiagram,
    pub half_dim: u32,
    pub label: String,
}

impl FactorOrbit {
    pub fn new(wdd: WeightedDynkinDiagram, label: impl Into<String>) -> Result<Self> {
        let rs = RootSystem::get(wdd.cartan_type);
        let half_dim = orbit_half_dim(&rs, &wdd)?;
        Ok(FactorOrbit {
            wdd,
            half_dim,
            label: label.into(),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.wdd.cartan_type
    }
}

/// A complex nilpotent orbit in a simple complex Lie algebra, or a product of
/// two such orbits in `t + t` for a complex Lie algebra viewed as real.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub factors: Vec<FactorOrbit>,
}

impl OrbitDescriptor {
    pub fn simple(o: FactorOrbit) -> Self {
        OrbitDescriptor { factors: vec![o] }
    }

    pub fn pair(a: FactorOrbit, b: FactorOrbit) -> Self {
        OrbitDescriptor { factors: vec![a, b] }
    }

    pub fn ambient(&self) -> ComplexReductiveType {
        ComplexReductiveType::new(self.factors.iter().map(|f| f.cartan_type()).collect(), 0)
    }

    pub fn half_dim(&self) -> u32 {
        self.factors.iter().map(|f| f.half_dim).sum()
    }

    pub fn label(&self) -> String {
        self.factors.iter().map(|f| f.label.as_str()).collect::<Vec<_>>().join(" x ")
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|o| format!("{} ({})", o.wdd, o.label)).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// The minimal nilpotent orbit of a simple complex Lie algebra, through a
/// highest root vector.
pub fn min_complex_orbit(t: CartanType) -> Result<FactorOrbit> {
    let rs = RootSystem::get(t);
    let o = FactorOrbit::new(minimal_orbit_wdd(&rs), "minimal")?;
    if o.half_dim != n_min_simple(t) {
        return Err(Error::Integrity(format!(
            "{t}: minimal orbit has half-dimension {}, closed form gives {}",
            o.half_dim,
            n_min_simple(t)
        )));
    }
    Ok(o)
}

/// The five families for which the complex orbit through the minimal real
/// nilpotent orbits is larger than the minimal complex orbit.
pub fn exceeds_minimal(g: &RealForm) -> bool {
    match *g {
        RealForm::SuStar(_) | RealForm::Sp(..) => true,
        RealForm::So(_, 1) => true,
        RealForm::Exceptional(e) => matches!(e, Exceptional::E6Rank2 | Exceptional::F4Rank1),
        _ => false,
    }
}

/// The complex nilpotent orbit containing the minimal real nilpotent
/// orbit(s) of `g`. In the Hermitian case both minimal real orbits lie in it.
pub fn omin_g(g: &RealForm) -> Result<OrbitDescriptor> {
    let t = g.cartan_type();
    let part = |head: &[u32], n: u32| -> Result<FactorOrbit> {
        let p = Partition::with_ones(head, n - head.iter().sum::<u32>())?;
        FactorOrbit::new(wdd_from_partition(t, &p)?, p.to_string())
    };
    let o = match *g {
        RealForm::Complex(_) => return Ok(OrbitDescriptor::pair(min_complex_orbit(t)?, min_complex_orbit(t)?)),
        RealForm::SuStar(n) => part(&[2, 2], n)?,
        RealForm::So(p, 1) => part(&[3], p + 1)?,
        RealForm::Sp(p, q) => part(&[2, 2], 2 * (p + q))?,
        RealForm::Exceptional(Exceptional::E6Rank2) => FactorOrbit::new(WeightedDynkinDiagram::with_ones(t, &[1, 6]), "2A1")?,
        RealForm::Exceptional(Exceptional::F4Rank1) => FactorOrbit::new(WeightedDynkinDiagram::with_ones(t, &[4]), "Ã1")?,
        _ => min_complex_orbit(t)?,
    };
    Ok(OrbitDescriptor::simple(o))
}

/// Half the complex dimension of [`omin_g`].
pub fn m_real(g: &RealForm) -> Result<u32> {
    Ok(omin_g(g)?.half_dim())
}

/// Whether some diagram automorphism moves `w` so that it vanishes on the
/// black nodes of `s` and agrees across its arrows.
pub fn matches(w: &WeightedDynkinDiagram, s: &SatakeDiagram) -> Result<bool> {
    if w.cartan_type != s.cartan_type {
        return Err(Error::TypeMismatch(format!("{w} against Satake diagram of {}", s.cartan_type)));
    }
    Ok(w.cartan_type.diagram_automorphisms().iter().any(|phi| {
        let v = w.permuted(phi);
        s.black.iter().all(|&b| v.weights[b] == 0) && s.arrows.iter().all(|&(a, b)| v.weights[a] == v.weights[b])
    }))
}

fn same_orbit(a: &FactorOrbit, b: &FactorOrbit) -> bool {
    a.cartan_type() == b.cartan_type()
        && a.cartan_type().diagram_automorphisms().iter().any(|phi| a.wdd.permuted(phi) == b.wdd)
}

/// A real form of `g_C`: either a simple real Lie algebra (possibly a complex
/// one viewed as real), or `g0 + g0` inside `t + t` for a real form `g0` of
/// `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DualForm {
    Simple(RealForm),
    Doubled(RealForm),
}

impl DualForm {
    pub fn complexification(&self) -> ComplexReductiveType {
        match self {
            DualForm::Simple(f) => f.complexification(),
            DualForm::Doubled(f) => f.complexification() + f.complexification(),
        }
    }

    pub fn maximal_compact(&self) -> ComplexReductiveType {
        match self {
            DualForm::Simple(f) => f.maximal_compact(),
            DualForm::Doubled(f) => f.maximal_compact() + f.maximal_compact(),
        }
    }

    /// `m` of the form; for `g0 + g0` this is `2 m(g0)`.
    pub fn m(&self) -> Result<u32> {
        match self {
            DualForm::Simple(f) => m_real(f),
            DualForm::Doubled(f) => Ok(2 * m_real(f)?),
        }
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualForm::Simple(g) => write!(f, "{g}"),
            DualForm::Doubled(g) => write!(f, "{g}+{g}"),
        }
    }
}

/// Whether the complex orbit `o` meets the real form `gp`.
pub fn orbit_meets_real_form(o: &OrbitDescriptor, gp: &DualForm) -> Result<bool> {
    let mismatch = || Error::TypeMismatch(format!("orbit in {} against real form {gp}", o.ambient()));
    match (o.factors.as_slice(), gp) {
        ([a], DualForm::Simple(f)) if f.absolutely_simple() => {
            if a.cartan_type() != f.cartan_type() {
                return Err(mismatch());
            }
            matches(&a.wdd, &satake(f)?)
        }
        ([a, b], DualForm::Simple(RealForm::Complex(t))) => {
            if a.cartan_type() != *t || b.cartan_type() != *t {
                return Err(mismatch());
            }
            // The real form is {(X, c X)} for an antilinear c; the second
            // factor of any real point is the conjugate of the first.
            Ok(same_orbit(a, b))
        }
        ([a, b], DualForm::Doubled(f)) => {
            if a.cartan_type() != f.cartan_type() || b.cartan_type() != f.cartan_type() {
                return Err(mismatch());
            }
            let s = satake(f)?;
            Ok(matches(&a.wdd, &s)? && matches(&b.wdd, &s)?)
        }
        _ => Err(mismatch()),
    }
}
