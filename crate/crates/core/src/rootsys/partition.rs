//! Partitions labelling nilpotent orbits of the classical algebras.

use super::cartan::{CartanType, Family};
use super::wdd::WeightedDynkinDiagram;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "empty partition".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// `head` followed by `ones` parts equal to 1.
    pub fn with_ones(head: &[u32], ones: u32) -> Result<Self> {
        let mut p = head.to_vec();
        p.extend(std::iter::repeat(1).take(ones as usize));
        Self::new(p)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn multiplicity(&self, m: u32) -> usize {
        self.parts.iter().filter(|&&p| p == m).count()
    }

    /// Concatenated `sl_2` weight strings `m-1, m-3, ..., 1-m`, sorted
    /// decreasingly.
    pub fn h_values(&self) -> Vec<i64> {
        let mut h: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&m| (0..m).map(move |k| m as i64 - 1 - 2 * k as i64))
            .collect();
        h.sort_unstable_by(|a, b| b.cmp(a));
        h
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let k = self.multiplicity(p);
            out.push(if k == 1 { p.to_string() } else { format!("{p}^{k}") });
            i += k;
        }
        write!(f, "[{}]", out.join(","))
    }
}

/// Size of the defining representation.
fn natural_size(t: CartanType) -> Option<u32> {
    let n = t.rank();
    match t.family() {
        Family::A => Some(n + 1),
        Family::B => Some(2 * n + 1),
        Family::C | Family::D => Some(2 * n),
        _ => None,
    }
}

/// Weighted Dynkin diagram of the classical orbit with Jordan type `p`.
///
/// For very even partitions in type D this returns the member of the pair
/// whose weight sits on node `n`.
pub fn wdd_from_partition(t: CartanType, p: &Partition) -> Result<WeightedDynkinDiagram> {
    let invalid = |reason: String| Error::InvalidPartition {
        parts: p.parts.clone(),
        reason,
    };
    let size = natural_size(t).ok_or_else(|| invalid(format!("{t} is not classical")))?;
    if p.total() != size {
        return Err(invalid(format!("total {} differs from {size} for {t}", p.total())));
    }
    match t.family() {
        Family::B | Family::D => {
            if let Some(m) = p.parts.iter().find(|&&m| m % 2 == 0 && p.multiplicity(m) % 2 == 1) {
                return Err(invalid(format!("even part {m} has odd multiplicity (orthogonal)")));
            }
        }
        Family::C => {
            if let Some(m) = p.parts.iter().find(|&&m| m % 2 == 1 && p.multiplicity(m) % 2 == 1) {
                return Err(invalid(format!("odd part {m} has odd multiplicity (symplectic)")));
            }
        }
        _ => {}
    }
    let h = p.h_values();
    let n = t.rank() as usize;
    let weights: Vec<i64> = match t.family() {
        Family::A => h.windows(2).map(|w| w[0] - w[1]).collect(),
        _ => {
            // The n largest entries are the non-negative half of a symmetric
            // multiset: epsilon-coordinates of the dominant characteristic.
            let e = &h[..n];
            let mut w: Vec<i64> = e.windows(2).map(|x| x[0] - x[1]).collect();
            w.push(match t.family() {
                Family::B => e[n - 1],
                Family::C => 2 * e[n - 1],
                _ => e[n - 2] + e[n - 1],
            });
            w
        }
    };
    let wdd = WeightedDynkinDiagram::new(t, weights)?;
    if wdd.weights.iter().any(|&x| x > 2) {
        return Err(invalid("diagram weight exceeds 2".into()));
    }
    Ok(wdd)
}
