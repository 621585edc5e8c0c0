//! Non-compact simple real Lie algebras, named canonically.

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, ComplexReductiveType, Family};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The exceptional non-compact absolutely simple real forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Exceptional {
    E6Split,
    E6Quasi,
    E6Herm,
    E6Rank2,
    E7Split,
    E7Quat,
    E7Herm,
    E8Split,
    E8Quat,
    F4Split,
    F4Rank1,
    G2Split,
}

impl Exceptional {
    pub const ALL: [Exceptional; 12] = [
        Exceptional::E6Split,
        Exceptional::E6Quasi,
        Exceptional::E6Herm,
        Exceptional::E6Rank2,
        Exceptional::E7Split,
        Exceptional::E7Quat,
        Exceptional::E7Herm,
        Exceptional::E8Split,
        Exceptional::E8Quat,
        Exceptional::F4Split,
        Exceptional::F4Rank1,
        Exceptional::G2Split,
    ];

    pub fn cartan_type(self) -> CartanType {
        use Exceptional::*;
        match self {
            E6Split | E6Quasi | E6Herm | E6Rank2 => CartanType::e6(),
            E7Split | E7Quat | E7Herm => CartanType::e7(),
            E8Split | E8Quat => CartanType::e8(),
            F4Split | F4Rank1 => CartanType::f4(),
            G2Split => CartanType::g2(),
        }
    }

    /// Signature `dim p - dim k` used in the conventional name.
    pub fn character(self) -> i32 {
        use Exceptional::*;
        match self {
            E6Split => 6,
            E6Quasi => 2,
            E6Herm => -14,
            E6Rank2 => -26,
            E7Split => 7,
            E7Quat => -5,
            E7Herm => -25,
            E8Split => 8,
            E8Quat => -24,
            F4Split => 4,
            F4Rank1 => -20,
            G2Split => 2,
        }
    }

    fn from_parts(t: CartanType, character: i32) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.cartan_type() == t && e.character() == character)
    }
}

/// A non-compact simple real Lie algebra in canonical form.
///
/// Construct through [`RealForm::from_raw`] or the named constructors, which
/// apply the low-rank isomorphisms (for instance `so_{4,2} = su_{2,2}` and
/// `sp_{1,1} = so_{4,1}`) and reject compact or non-simple inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RealForm {
    /// `sl_n(R)`
    SlR(u32),
    /// `su*_{2m}`, stored by its matrix size `2m`.
    SuStar(u32),
    /// `su_{p,q}` with `p >= q`.
    Su(u32, u32),
    /// `so_{p,q}` with `p >= q`.
    So(u32, u32),
    /// `so*_{2n}`, stored by its matrix size `2n`.
    SoStar(u32),
    /// `sp_n(R)`
    SpR(u32),
    /// `sp_{p,q}` with `p >= q`.
    Sp(u32, u32),
    Exceptional(Exceptional),
    /// A complex simple Lie algebra viewed as a real one.
    Complex(CartanType),
}

/// Any parametrised family member, before canonicalisation. Parameters may
/// denote compact, abelian or non-simple algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawForm {
    SlR(u32),
    SlC(u32),
    /// `su*_{n}` by matrix size.
    SuStar(u32),
    Su(u32, u32),
    So(u32, u32),
    SoC(u32),
    /// `so*_{n}` by matrix size.
    SoStar(u32),
    SpR(u32),
    SpC(u32),
    Sp(u32, u32),
    U(u32, u32),
    GlR(u32),
    GlC(u32),
    Exceptional(Exceptional),
    ExceptionalCompact(CartanType),
    ExceptionalComplex(CartanType),
    /// One-dimensional split abelian `R`.
    SplitLine,
    /// `C` viewed as a real abelian algebra.
    ComplexLine,
}

impl RealForm {
    /// Canonical simple form of `raw`; fails if `raw` is compact, abelian or
    /// not simple.
    pub fn from_raw(raw: RawForm) -> Result<RealForm> {
        let red = super::reductive::RealReductive::from_raw(raw)?;
        match red.as_noncompact_simple() {
            Some(f) => Ok(f),
            None => Err(Error::InvalidRealForm(format!(
                "{raw:?} is {red}, not a non-compact simple real form"
            ))),
        }
    }

    pub fn sl_r(n: u32) -> Result<Self> {
        Self::from_raw(RawForm::SlR(n))
    }
    pub fn su_star(size: u32) -> Result<Self> {
        Self::from_raw(RawForm::SuStar(size))
    }
    pub fn su(p: u32, q: u32) -> Result<Self> {
        Self::from_raw(RawForm::Su(p, q))
    }
    pub fn so(p: u32, q: u32) -> Result<Self> {
        Self::from_raw(RawForm::So(p, q))
    }
    pub fn so_star(size: u32) -> Result<Self> {
        Self::from_raw(RawForm::SoStar(size))
    }
    pub fn sp_r(n: u32) -> Result<Self> {
        Self::from_raw(RawForm::SpR(n))
    }
    pub fn sp(p: u32, q: u32) -> Result<Self> {
        Self::from_raw(RawForm::Sp(p, q))
    }
    pub fn complex(t: CartanType) -> Self {
        RealForm::Complex(t)
    }

    /// Simple type of `g_C` (of either factor, for complex forms).
    pub fn cartan_type(&self) -> CartanType {
        match *self {
            RealForm::SlR(n) | RealForm::SuStar(n) => CartanType::a(n - 1),
            RealForm::Su(p, q) => CartanType::a(p + q - 1),
            RealForm::So(p, q) => {
                let n = p + q;
                if n % 2 == 1 {
                    CartanType::b(n / 2)
                } else {
                    CartanType::d(n / 2)
                }
            }
            RealForm::SoStar(n) => CartanType::d(n / 2),
            RealForm::SpR(n) => CartanType::c(n),
            RealForm::Sp(p, q) => CartanType::c(p + q),
            RealForm::Exceptional(e) => e.cartan_type(),
            RealForm::Complex(t) => t,
        }
    }

    pub fn rank(&self) -> u32 {
        self.cartan_type().rank()
    }

    pub fn absolutely_simple(&self) -> bool {
        !matches!(self, RealForm::Complex(_))
    }

    pub fn complexification(&self) -> ComplexReductiveType {
        let t = self.cartan_type();
        match self {
            RealForm::Complex(_) => ComplexReductiveType::new(vec![t, t], 0),
            _ => ComplexReductiveType::simple(t),
        }
    }

    /// Real dimension.
    pub fn dim(&self) -> u32 {
        self.complexification().dim()
    }

    /// Complexified maximal compact subalgebra.
    pub fn maximal_compact(&self) -> ComplexReductiveType {
        use ComplexReductiveType as K;
        use Exceptional::*;
        let ty = |s: &str| K::simple(s.parse::<CartanType>().unwrap());
        match *self {
            RealForm::SlR(n) => K::so(n),
            RealForm::SuStar(n) => K::sp(n / 2),
            RealForm::Su(p, q) => K::sl(p) + K::sl(q) + K::center(1),
            RealForm::So(p, q) => K::so(p) + K::so(q),
            RealForm::SoStar(n) => K::sl(n / 2) + K::center(1),
            RealForm::SpR(n) => K::sl(n) + K::center(1),
            RealForm::Sp(p, q) => K::sp(p) + K::sp(q),
            RealForm::Exceptional(e) => match e {
                E6Split => ty("C4"),
                E6Quasi => ty("A5") + ty("A1"),
                E6Herm => ty("D5") + K::center(1),
                E6Rank2 => ty("F4"),
                E7Split => ty("A7"),
                E7Quat => ty("D6") + ty("A1"),
                E7Herm => ty("E6") + K::center(1),
                E8Split => ty("D8"),
                E8Quat => ty("E7") + ty("A1"),
                F4Split => ty("C3") + ty("A1"),
                F4Rank1 => ty("B4"),
                G2Split => ty("A1") + ty("A1"),
            },
            RealForm::Complex(t) => K::simple(t),
        }
    }

    /// Whether `(g, k)` is of Hermitian type. Only absolutely simple forms
    /// qualify.
    pub fn hermitian(&self) -> bool {
        match *self {
            RealForm::SlR(n) => n == 2,
            RealForm::Su(..) | RealForm::SoStar(_) | RealForm::SpR(_) => true,
            RealForm::So(_, q) => q == 2,
            RealForm::Exceptional(e) => matches!(e, Exceptional::E6Herm | Exceptional::E7Herm),
            _ => false,
        }
    }

    /// Number of minimal real nilpotent orbits: two exactly in the absolutely
    /// simple Hermitian case, where they are negatives of each other.
    pub fn count_minimal_real_orbits(&self) -> u32 {
        if self.absolutely_simple() && self.hermitian() {
            2
        } else {
            1
        }
    }

    /// Classification label of the Satake diagram source table.
    pub fn source(&self) -> String {
        let class = match *self {
            RealForm::SlR(_) => "AI",
            RealForm::SuStar(_) => "AII",
            RealForm::Su(..) => "AIII",
            RealForm::So(p, q) if (p + q) % 2 == 1 => "BI",
            RealForm::So(..) => "DI",
            RealForm::SoStar(_) => "DIII",
            RealForm::SpR(_) => "CI",
            RealForm::Sp(..) => "CII",
            RealForm::Exceptional(e) => match e {
                Exceptional::E6Split => "EI",
                Exceptional::E6Quasi => "EII",
                Exceptional::E6Herm => "EIII",
                Exceptional::E6Rank2 => "EIV",
                Exceptional::E7Split => "EV",
                Exceptional::E7Quat => "EVI",
                Exceptional::E7Herm => "EVII",
                Exceptional::E8Split => "EVIII",
                Exceptional::E8Quat => "EIX",
                Exceptional::F4Split => "FI",
                Exceptional::F4Rank1 => "FII",
                Exceptional::G2Split => "G",
            },
            RealForm::Complex(_) => return "complex".into(),
        };
        format!("araki:{class}")
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RealForm::SlR(n) => write!(f, "sl_{n}(R)"),
            RealForm::SuStar(n) => write!(f, "su*_{n}"),
            RealForm::Su(p, q) => write!(f, "su_{{{p},{q}}}"),
            RealForm::So(p, q) => write!(f, "so_{{{p},{q}}}"),
            RealForm::SoStar(n) => write!(f, "so*_{n}"),
            RealForm::SpR(n) => write!(f, "sp_{n}(R)"),
            RealForm::Sp(p, q) => write!(f, "sp_{{{p},{q}}}"),
            RealForm::Exceptional(e) => {
                let base = match e.cartan_type().family() {
                    Family::E6 => "e6",
                    Family::E7 => "e7",
                    Family::E8 => "e8",
                    Family::F4 => "f4",
                    _ => "g2",
                };
                write!(f, "{base}({})", e.character())
            }
            RealForm::Complex(t) => f.write_str(&t.algebra_name()),
        }
    }
}

impl std::str::FromStr for RealForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let red: super::reductive::RealReductive = s.parse()?;
        red.as_noncompact_simple().ok_or_else(|| {
            Error::InvalidRealForm(format!("'{s}' denotes {red}, not a non-compact simple real form"))
        })
    }
}

impl TryFrom<String> for RealForm {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RealForm> for String {
    fn from(f: RealForm) -> String {
        f.to_string()
    }
}

pub(crate) fn exceptional_from(t: CartanType, character: i32) -> Result<Exceptional> {
    Exceptional::from_parts(t, character)
        .ok_or_else(|| Error::InvalidRealForm(format!("no real form {t}({character})")))
}
