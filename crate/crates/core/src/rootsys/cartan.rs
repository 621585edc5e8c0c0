//! Cartan types of complex simple Lie algebras and complex reductive types.
//!
//! Node numbering follows Bourbaki throughout:
//!
//! ```text
//! A_n   1 - 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n        (n short)
//! C_n   1 - 2 - ... - (n-1) <= n        (n long)
//! D_n   1 - 2 - ... - (n-2) - (n-1)
//!                          \
//!                           n
//! E_n   1 - 3 - 4 - 5 - ... - n
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                   (1, 2 long)
//! G_2   1 <= 2                           (1 short, 2 long)
//! ```

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

/// A canonical simple Cartan type.
///
/// Low-rank coincidences are rejected: `B_1 = C_1 = A_1`, `C_2 = B_2`,
/// `D_3 = A_3`, and `D_2`, `D_1` are not simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CartanType {
    family: Family,
    rank: u32,
}

impl CartanType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let fixed = match family {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        };
        if let Some(r) = fixed {
            if rank != r {
                return Err(Error::InvalidCartanType(format!(
                    "{family:?} has rank {r}, got {rank}"
                )));
            }
            return Ok(CartanType { family, rank });
        }
        let bad = |msg: &str| Err(Error::InvalidCartanType(msg.to_string()));
        match (family, rank) {
            (Family::A, 0) => bad("A requires rank >= 1"),
            (Family::B, 0) => bad("B requires rank >= 2"),
            (Family::B, 1) => bad("B_1 coincides with A_1; use A_1"),
            (Family::C, 0) => bad("C requires rank >= 3"),
            (Family::C, 1) => bad("C_1 coincides with A_1; use A_1"),
            (Family::C, 2) => bad("C_2 coincides with B_2; use B_2"),
            (Family::D, 0..=2) => bad("D_n with n <= 2 is not simple; D requires rank >= 4"),
            (Family::D, 3) => bad("D_3 coincides with A_3; use A_3"),
            _ => Ok(CartanType { family, rank }),
        }
    }

    pub fn a(n: u32) -> Self {
        Self::new(Family::A, n).unwrap()
    }
    pub fn b(n: u32) -> Self {
        Self::new(Family::B, n).unwrap()
    }
    pub fn c(n: u32) -> Self {
        Self::new(Family::C, n).unwrap()
    }
    pub fn d(n: u32) -> Self {
        Self::new(Family::D, n).unwrap()
    }
    pub fn e6() -> Self {
        Self::new(Family::E6, 6).unwrap()
    }
    pub fn e7() -> Self {
        Self::new(Family::E7, 7).unwrap()
    }
    pub fn e8() -> Self {
        Self::new(Family::E8, 8).unwrap()
    }
    pub fn f4() -> Self {
        Self::new(Family::F4, 4).unwrap()
    }
    pub fn g2() -> Self {
        Self::new(Family::G2, 2).unwrap()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_exceptional(&self) -> bool {
        !matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Complex dimension of the simple Lie algebra.
    pub fn dim(&self) -> u32 {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
            Family::F4 => 52,
            Family::G2 => 14,
        }
    }

    /// Number of roots.
    pub fn root_count(&self) -> u32 {
        self.dim() - self.rank
    }

    /// Squared lengths of the simple roots, short roots normalised to 1.
    pub fn root_lengths(&self) -> Vec<i64> {
        let n = self.rank as usize;
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            Family::F4 => vec![2, 2, 1, 1],
            Family::G2 => vec![1, 3],
            _ => vec![1; n],
        }
    }

    /// Edges of the Dynkin diagram as zero-based node pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank as usize;
        let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F4 | Family::G2 => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                e
            }
            Family::E6 | Family::E7 | Family::E8 => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Cartan matrix with `m[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        let len = self.root_lengths();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            // The longer root sees the shorter one with -1; the shorter sees
            // the longer with minus the length ratio.
            let (li, lj) = (len[i], len[j]);
            if li >= lj {
                m[i][j] = -1;
                m[j][i] = -(li / lj);
            } else {
                m[j][i] = -1;
                m[i][j] = -(lj / li);
            }
        }
        m
    }

    /// Gram matrix of the simple roots, with short roots of squared length
    /// 1 scaled up by 2 so all entries are integral.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        let len = self.root_lengths();
        let c = self.cartan_matrix();
        c.iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|&a| a * len[i]).collect())
            .collect()
    }

    /// Dynkin diagram automorphisms used for matching, as permutations
    /// `perm[i] = phi(i)` of zero-based nodes.
    ///
    /// For `D_4` only the automorphism swapping the two spin nodes is
    /// included: triality does not preserve the partition-labelled orbits of
    /// the defining representation that the catalog markings refer to.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank as usize;
        let id: Vec<usize> = (0..n).collect();
        match self.family {
            Family::A if n > 1 => vec![id.clone(), id.iter().rev().copied().collect()],
            Family::D => {
                let mut s = id.clone();
                s.swap(n - 2, n - 1);
                vec![id, s]
            }
            Family::E6 => vec![id, vec![5, 1, 4, 3, 2, 0]],
            _ => vec![id],
        }
    }

    pub fn short_name(&self) -> String {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                format!("{:?}{}", self.family, self.rank)
            }
            f => format!("{f:?}"),
        }
    }

    /// Conventional name of the complex Lie algebra, e.g. `sl_4(C)`.
    pub fn algebra_name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("sl_{}(C)", n + 1),
            Family::B => format!("so_{}(C)", 2 * n + 1),
            Family::C => format!("sp_{n}(C)"),
            Family::D => format!("so_{}(C)", 2 * n),
            Family::E6 => "e6(C)".into(),
            Family::E7 => "e7(C)".into(),
            Family::E8 => "e8(C)".into(),
            Family::F4 => "f4(C)".into(),
            Family::G2 => "g2(C)".into(),
        }
    }

    /// Every canonical classical type with rank at most `bound`, followed by
    /// the five exceptional types.
    pub fn all_up_to(bound: u32) -> Vec<CartanType> {
        let mut out = Vec::new();
        for r in 1..=bound {
            out.push(Self::a(r));
        }
        for r in 2..=bound {
            out.push(Self::b(r));
        }
        for r in 3..=bound {
            out.push(Self::c(r));
        }
        for r in 4..=bound {
            out.push(Self::d(r));
        }
        // Exceptional types are always included.
        out.extend([Self::e6(), Self::e7(), Self::e8(), Self::f4(), Self::g2()]);
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.short_name())
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        let exc = match upper.as_str() {
            "E6" => Some(Self::e6()),
            "E7" => Some(Self::e7()),
            "E8" => Some(Self::e8()),
            "F4" => Some(Self::f4()),
            "G2" => Some(Self::g2()),
            _ => None,
        };
        if let Some(t) = exc {
            return Ok(t);
        }
        let (head, tail) = upper.split_at(1.min(upper.len()));
        let rank: u32 = tail
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::Parse(format!("bad Cartan type '{s}'")))?;
        let family = match head {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            _ => return Err(Error::Parse(format!("bad Cartan type '{s}'"))),
        };
        Self::new(family, rank)
    }
}

impl TryFrom<String> for CartanType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.short_name()
    }
}

/// Complex reductive Lie algebra: a multiset of simple factors plus an
/// abelian summand. Factors are kept sorted so equality is up to reordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ComplexReductiveType {
    simple_factors: Vec<CartanType>,
    center_dim: u32,
}

impl ComplexReductiveType {
    pub fn new(mut simple_factors: Vec<CartanType>, center_dim: u32) -> Self {
        simple_factors.sort();
        ComplexReductiveType {
            simple_factors,
            center_dim,
        }
    }

    pub fn simple(t: CartanType) -> Self {
        Self::new(vec![t], 0)
    }

    pub fn center(n: u32) -> Self {
        Self::new(vec![], n)
    }

    pub fn simple_factors(&self) -> &[CartanType] {
        &self.simple_factors
    }

    pub fn center_dim(&self) -> u32 {
        self.center_dim
    }

    pub fn dim(&self) -> u32 {
        self.simple_factors.iter().map(|t| t.dim()).sum::<u32>() + self.center_dim
    }

    pub fn as_simple(&self) -> Option<CartanType> {
        match (self.simple_factors.as_slice(), self.center_dim) {
            ([t], 0) => Some(*t),
            _ => None,
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut f = self.simple_factors.clone();
        f.extend_from_slice(&other.simple_factors);
        Self::new(f, self.center_dim + other.center_dim)
    }

    /// `sl_n(C)`, with `sl_1 = 0`.
    pub fn sl(n: u32) -> Self {
        if n <= 1 {
            Self::default()
        } else {
            Self::simple(CartanType::a(n - 1))
        }
    }

    /// `so_n(C)` with the low-rank identifications applied.
    pub fn so(n: u32) -> Self {
        match n {
            0 | 1 => Self::default(),
            2 => Self::center(1),
            3 => Self::simple(CartanType::a(1)),
            4 => Self::new(vec![CartanType::a(1), CartanType::a(1)], 0),
            5 => Self::simple(CartanType::b(2)),
            6 => Self::simple(CartanType::a(3)),
            n if n % 2 == 1 => Self::simple(CartanType::b((n - 1) / 2)),
            n => Self::simple(CartanType::d(n / 2)),
        }
    }

    /// `sp_n(C)` (rank n) with the low-rank identifications applied.
    pub fn sp(n: u32) -> Self {
        match n {
            0 => Self::default(),
            1 => Self::simple(CartanType::a(1)),
            2 => Self::simple(CartanType::b(2)),
            n => Self::simple(CartanType::c(n)),
        }
    }
}

impl std::ops::Add for ComplexReductiveType {
    type Output = ComplexReductiveType;
    fn add(self, rhs: Self) -> Self {
        self.sum(&rhs)
    }
}

impl fmt::Display for ComplexReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple_factors.iter().map(|t| t.algebra_name()).collect();
        if self.center_dim > 0 {
            parts.push(if self.center_dim == 1 {
                "C".to_string()
            } else {
                format!("C^{}", self.center_dim)
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_low_rank_coincidences() {
        for (fam, r, hint) in [
            (Family::B, 1, "A_1"),
            (Family::C, 2, "B_2"),
            (Family::D, 3, "A_3"),
            (Family::D, 2, "not simple"),
            (Family::A, 0, "rank >= 1"),
        ] {
            let err = CartanType::new(fam, r).unwrap_err().to_string();
            assert!(err.contains(hint), "{err}");
        }
        assert!(CartanType::new(Family::E6, 7).is_err());
    }

    #[test]
    fn cartan_matrix_shape() {
        for t in CartanType::all_up_to(8) {
            let m = t.cartan_matrix();
            for (i, row) in m.iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!(a <= 0);
                        assert_eq!(a == 0, m[j][i] == 0);
                    }
                }
            }
        }
        // B2: alpha_2 is short.
        assert_eq!(CartanType::b(2).cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(CartanType::g2().cartan_matrix(), vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn gram_matrix_is_symmetric() {
        for t in CartanType::all_up_to(6) {
            let g = t.gram_matrix();
            for i in 0..g.len() {
                for j in 0..g.len() {
                    assert_eq!(g[i][j], g[j][i], "{t}");
                }
            }
        }
    }

    #[test]
    fn low_rank_identifications() {
        assert_eq!(ComplexReductiveType::so(6), ComplexReductiveType::sl(4));
        assert_eq!(ComplexReductiveType::so(5), ComplexReductiveType::sp(2));
        assert_eq!(ComplexReductiveType::so(3), ComplexReductiveType::sp(1));
        assert_eq!(ComplexReductiveType::so(2).dim(), 1);
        let a = ComplexReductiveType::sl(2) + ComplexReductiveType::so(5);
        let b = ComplexReductiveType::sp(2) + ComplexReductiveType::so(3);
        assert_eq!(a, b);
    }

    #[test]
    fn parse_round_trip() {
        for t in CartanType::all_up_to(9) {
            assert_eq!(t.short_name().parse::<CartanType>().unwrap(), t);
        }
        assert!("C2".parse::<CartanType>().is_err());
    }
}
