//! Restricted root systems of real forms.

use super::form::RealForm;
use super::satake::{satake, SatakeDiagram};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, Root, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Type of a possibly non-reduced irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RestrictedType {
    Reduced(CartanType),
    BC(u32),
}

impl RestrictedType {
    pub fn rank(&self) -> u32 {
        match self {
            RestrictedType::Reduced(t) => t.rank(),
            RestrictedType::BC(r) => *r,
        }
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedType::Reduced(t) => write!(f, "{t}"),
            RestrictedType::BC(r) => write!(f, "BC{r}"),
        }
    }
}

/// Restricted roots of a real form, in the basis of restricted simple roots
/// (one per white arrow orbit), with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    pub diagram: SatakeDiagram,
    pub restricted_type: RestrictedType,
    /// Positive restricted roots and their multiplicities.
    pub multiplicities: BTreeMap<Root, u32>,
    /// Restriction of the highest root.
    pub mu: Root,
    /// Scaled Gram matrix of the restricted simple roots.
    pub gram: Vec<Vec<i64>>,
}

impl RestrictedRootSystem {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn multiplicity(&self, lambda: &[i64]) -> u32 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    /// `dim_R k` predicted by the root decomposition `k = m + sum k_lambda`.
    pub fn compact_dim(&self) -> u32 {
        let t = self.diagram.cartan_type;
        let rs = RootSystem::get(t);
        let m = t.rank() - self.rank() as u32 + rs.subsystem_roots(&self.diagram.black).len() as u32;
        m + self.multiplicities.values().sum::<u32>()
    }
}

/// Restriction of a root to the split Cartan: sums of coefficients over each
/// white arrow orbit. Black simple roots restrict to zero.
pub fn restrict(d: &SatakeDiagram, alpha: &[i64]) -> Root {
    d.white_orbits()
        .iter()
        .map(|o| o.iter().map(|&i| alpha[i]).sum())
        .collect()
}

pub fn restricted_root_system(form: &RealForm) -> Result<RestrictedRootSystem> {
    let d = satake(form)?;
    let rs = RootSystem::get(d.cartan_type);
    let theta = d.involution()?;
    let orbits = d.white_orbits();
    let n = rs.rank();
    // alpha - theta(alpha) for one representative per orbit.
    let reps: Vec<Root> = orbits
        .iter()
        .map(|o| {
            let mut e = vec![0; n];
            e[o[0]] = 1;
            let t = theta.apply(&e);
            e.iter().zip(&t).map(|(a, b)| a - b).collect()
        })
        .collect();
    for (o, rep) in orbits.iter().zip(&reps) {
        // Cross-check the orbit-sum restriction against (alpha - theta alpha)/2.
        let direct = restrict(&d, rep);
        let expect: Root = (0..orbits.len()).map(|k| if orbits[k] == *o { 2 } else { 0 }).collect();
        if direct != expect {
            return Err(Error::Integrity(format!("{d}: restriction of theta disagrees")));
        }
    }
    let gram: Vec<Vec<i64>> = reps
        .iter()
        .map(|a| reps.iter().map(|b| rs.inner(a, b)).collect())
        .collect();

    let mut multiplicities: BTreeMap<Root, u32> = BTreeMap::new();
    for r in rs.positive_roots() {
        let l = restrict(&d, r);
        if l.iter().any(|&c| c != 0) {
            if l.iter().any(|&c| c < 0) {
                return Err(Error::Integrity(format!("{d}: positive root restricts to a negative one")));
            }
            *multiplicities.entry(l).or_insert(0) += 1;
        }
    }
    let mu = restrict(&d, rs.highest_root());
    for l in multiplicities.keys() {
        if l.iter().zip(&mu).any(|(a, b)| a > b) {
            return Err(Error::Integrity(format!("{d}: restricted highest root is not maximal")));
        }
    }
    let restricted_type = identify(&gram, &multiplicities)?;
    let out = RestrictedRootSystem {
        diagram: d,
        restricted_type,
        multiplicities,
        mu,
        gram,
    };
    let k = form.maximal_compact().dim();
    if out.compact_dim() != k {
        return Err(Error::Integrity(format!(
            "{form}: restricted bookkeeping gives dim k = {}, catalog says {k}",
            out.compact_dim()
        )));
    }
    Ok(out)
}

/// Identifies the type from the Gram matrix of the simple restricted roots,
/// then checks the root count.
fn identify(gram: &[Vec<i64>], roots: &BTreeMap<Root, u32>) -> Result<RestrictedType> {
    let r = gram.len();
    let fail = |why: &str| Error::Integrity(format!("restricted root system: {why}"));
    let bond = |i: usize, j: usize| -> i64 {
        // a_ij * a_ji = 4 (i,j)^2 / (i,i)(j,j)
        4 * gram[i][j] * gram[i][j] / (gram[i][i] * gram[j][j])
    };
    let mut nbrs: Vec<Vec<usize>> = vec![vec![]; r];
    let mut bonds: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let b = bond(i, j);
            if b > 0 {
                nbrs[i].push(j);
                nbrs[j].push(i);
                bonds.push((i, j, b));
            }
        }
    }
    let reduced = if r == 1 {
        CartanType::a(1)
    } else if bonds.iter().any(|b| b.2 == 3) {
        CartanType::g2()
    } else if let Some(&(i, j, _)) = bonds.iter().find(|b| b.2 == 2) {
        if r == 2 {
            CartanType::b(2)
        } else {
            let end = [i, j].into_iter().find(|&x| nbrs[x].len() == 1);
            match end {
                None => CartanType::f4(),
                Some(e) => {
                    let o = if e == i { j } else { i };
                    if gram[e][e] < gram[o][o] {
                        CartanType::b(r as u32)
                    } else {
                        CartanType::c(r as u32)
                    }
                }
            }
        }
    } else if let Some(c) = (0..r).find(|&x| nbrs[x].len() == 3) {
        let mut arms: Vec<usize> = nbrs[c]
            .iter()
            .map(|&start| {
                let (mut prev, mut cur, mut len) = (c, start, 1);
                while let Some(&nx) = nbrs[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = nx;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort();
        match arms.as_slice() {
            [1, 1, k] => CartanType::d(*k as u32 + 3),
            [1, 2, 2] => CartanType::e6(),
            [1, 2, 3] => CartanType::e7(),
            [1, 2, 4] => CartanType::e8(),
            _ => return Err(fail("unrecognised branched diagram")),
        }
    } else {
        CartanType::a(r as u32)
    };
    let divisible = roots
        .keys()
        .filter(|l| l.iter().all(|c| c % 2 == 0) && roots.contains_key(&l.iter().map(|c| c / 2).collect::<Root>()))
        .count() as u32;
    let indivisible = roots.len() as u32 - divisible;
    if 2 * indivisible != reduced.root_count() {
        return Err(fail("root count does not match the identified type"));
    }
    if divisible == 0 {
        Ok(RestrictedType::Reduced(reduced))
    } else if matches!(reduced.family(), Family::A | Family::B) && divisible == reduced.rank() {
        Ok(RestrictedType::BC(r as u32))
    } else {
        Err(fail("unexpected non-reduced system"))
    }
}
