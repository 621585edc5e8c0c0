//! Satake diagrams and the Cartan involution they determine on the root
//! lattice.

use super::form::{Exceptional, RealForm};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root, RootSystem};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Satake diagram on the Bourbaki-numbered Dynkin diagram. Node indices are
/// zero-based; `arrows` pairs white nodes exchanged by the diagram involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SatakeDiagram {
    pub cartan_type: CartanType,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    fn from_one_based(t: CartanType, black: impl IntoIterator<Item = u32>, arrows: &[(u32, u32)]) -> Self {
        let mut black: Vec<usize> = black.into_iter().map(|i| i as usize - 1).collect();
        black.sort();
        let mut arrows: Vec<(usize, usize)> = arrows
            .iter()
            .map(|&(a, b)| ((a.min(b) - 1) as usize, (a.max(b) - 1) as usize))
            .collect();
        arrows.sort();
        SatakeDiagram {
            cartan_type: t,
            black,
            arrows,
        }
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.black.contains(&i)
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.cartan_type.rank() as usize).filter(|i| !self.is_black(*i)).collect()
    }

    /// Partner of node `i` under the arrows (itself if unpaired).
    pub fn partner(&self, i: usize) -> usize {
        self.arrows
            .iter()
            .find_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .unwrap_or(i)
    }

    /// White nodes grouped into arrow orbits, ordered by smallest member.
    pub fn white_orbits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in self.white() {
            let j = self.partner(i);
            if j >= i {
                out.push(if j == i { vec![i] } else { vec![i, j] });
            }
        }
        out
    }

    /// Real rank of the form.
    pub fn real_rank(&self) -> usize {
        self.white_orbits().len()
    }

    /// The Cartan involution `theta` on the root lattice, given by its images
    /// of the simple roots.
    ///
    /// `theta = w0_B . (-eps)`, where `w0_B` is the longest element of the
    /// Weyl group of the black nodes and `eps` permutes the simple roots by
    /// the arrows on white nodes and by the opposition involution `-w0_B` on
    /// black nodes. Black simple roots are fixed.
    pub fn involution(&self) -> Result<Involution> {
        let rs = RootSystem::get(self.cartan_type);
        let n = rs.rank();
        let w0 = rs.longest_word(&self.black);
        let mut eps: Vec<usize> = (0..n).map(|i| self.partner(i)).collect();
        for &b in &self.black {
            let mut e = vec![0; n];
            e[b] = 1;
            let img: Vec<i64> = rs.apply_word(&w0, &e).iter().map(|x| -x).collect();
            let j = img
                .iter()
                .position(|&c| c == 1)
                .filter(|_| img.iter().map(|c| c.abs()).sum::<i64>() == 1)
                .ok_or_else(|| Error::Integrity(format!("{self}: -w0 does not permute black simple roots")))?;
            eps[b] = j;
        }
        let images = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[eps[i]] = -1;
                rs.apply_word(&w0, &e)
            })
            .collect();
        let inv = Involution { images };
        inv.validate(&rs, self)?;
        Ok(inv)
    }
}

impl fmt::Display for SatakeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.black.iter().map(|i| (i + 1).to_string()).collect();
        let a: Vec<String> = self.arrows.iter().map(|(x, y)| format!("{}-{}", x + 1, y + 1)).collect();
        write!(f, "{} black={{{}}} arrows={{{}}}", self.cartan_type, b.join(","), a.join(","))
    }
}

/// A linear involution of the root lattice, stored by its images of the
/// simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    images: Vec<Root>,
}

impl Involution {
    pub fn apply(&self, v: &[i64]) -> Root {
        let n = self.images.len();
        let mut out = vec![0; n];
        for (c, img) in v.iter().zip(&self.images) {
            for k in 0..n {
                out[k] += c * img[k];
            }
        }
        out
    }

    fn validate(&self, rs: &RootSystem, d: &SatakeDiagram) -> Result<()> {
        let n = rs.rank();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if self.apply(&self.apply(&e)) != e {
                return Err(Error::Integrity(format!("{d}: theta is not an involution")));
            }
            if d.is_black(i) && self.apply(&e) != e {
                return Err(Error::Integrity(format!("{d}: theta moves a black root")));
            }
        }
        if !rs.roots().iter().all(|r| rs.contains(&self.apply(r))) {
            return Err(Error::Integrity(format!("{d}: theta does not permute the roots")));
        }
        Ok(())
    }
}

/// Satake diagram of an absolutely simple non-compact real form.
pub fn satake(form: &RealForm) -> Result<SatakeDiagram> {
    use Exceptional::*;
    let t = form.cartan_type();
    let r = t.rank();
    let d = |black: Vec<u32>, arrows: &[(u32, u32)]| SatakeDiagram::from_one_based(t, black, arrows);
    let diagram = match *form {
        RealForm::SlR(_) | RealForm::SpR(_) => d(vec![], &[]),
        RealForm::SuStar(_) => d((1..=r).step_by(2).collect(), &[]),
        RealForm::Su(p, q) => {
            let n = p + q;
            let arrows: Vec<(u32, u32)> = (1..=q).filter(|&i| i < n - i).map(|i| (i, n - i)).collect();
            d((q + 1..n - q).collect(), &arrows)
        }
        RealForm::So(p, q) if (p + q) % 2 == 1 => d((q + 1..=r).collect(), &[]),
        RealForm::So(_, q) => {
            if q + 2 <= r {
                d((q + 1..=r).collect(), &[])
            } else if q + 1 == r {
                d(vec![], &[(r - 1, r)])
            } else {
                d(vec![], &[])
            }
        }
        RealForm::SoStar(_) => {
            if r % 2 == 0 {
                d((1..r).step_by(2).collect(), &[])
            } else {
                d((1..r - 1).step_by(2).collect(), &[(r - 1, r)])
            }
        }
        RealForm::Sp(_, q) => d((1..=r).filter(|&i| i % 2 == 1 || i > 2 * q).collect(), &[]),
        RealForm::Exceptional(e) => match e {
            E6Split | E7Split | E8Split | F4Split | G2Split => d(vec![], &[]),
            E6Quasi => d(vec![], &[(1, 6), (3, 5)]),
            E6Herm => d(vec![3, 4, 5], &[(1, 6)]),
            E6Rank2 | E8Quat | E7Herm => d(vec![2, 3, 4, 5], &[]),
            E7Quat => d(vec![2, 5, 7], &[]),
            F4Rank1 => d(vec![1, 2, 3], &[]),
        },
        RealForm::Complex(_) => {
            return Err(Error::NotAbsolutelySimple(format!(
                "{form} is a complex Lie algebra viewed as real"
            )))
        }
    };
    Ok(diagram)
}
