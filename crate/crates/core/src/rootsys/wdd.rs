//! Characteristics, weighted Dynkin diagrams and the grading they induce.

use super::cartan::CartanType;
use super::roots::RootSystem;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Non-negative integer weights on the Dynkin nodes (Bourbaki order).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightedDynkinDiagram {
    pub cartan_type: CartanType,
    pub weights: Vec<i64>,
}

impl WeightedDynkinDiagram {
    pub fn new(cartan_type: CartanType, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != cartan_type.rank() as usize {
            return Err(Error::InvalidCharacteristic(format!(
                "{} weights for {cartan_type}",
                weights.len()
            )));
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::InvalidCharacteristic(format!("negative weight in {weights:?}")));
        }
        Ok(WeightedDynkinDiagram {
            cartan_type,
            weights,
        })
    }

    pub fn zero(cartan_type: CartanType) -> Self {
        WeightedDynkinDiagram {
            cartan_type,
            weights: vec![0; cartan_type.rank() as usize],
        }
    }

    /// Diagram with weight 1 at the given one-based nodes.
    pub fn with_ones(cartan_type: CartanType, nodes: &[usize]) -> Self {
        let mut w = Self::zero(cartan_type);
        for &i in nodes {
            w.weights[i - 1] = 1;
        }
        w
    }

    /// `phi . w`, so that `(phi . w)[phi(i)] = w[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = self.weights.clone();
        for (i, &pi) in perm.iter().enumerate() {
            out[pi] = self.weights[i];
        }
        WeightedDynkinDiagram {
            cartan_type: self.cartan_type,
            weights: out,
        }
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(|x| x.to_string()).collect();
        write!(f, "{}[{}]", self.cartan_type, w.join(","))
    }
}

/// The Weyl-dominant conjugate of a characteristic given by its evaluations
/// on the simple roots, obtained by reflecting in negative simple roots until
/// none remain.
pub fn dominant_representative<T: Scalar>(rs: &RootSystem, v: &[T]) -> Vec<T> {
    let n = rs.rank();
    assert_eq!(v.len(), n, "characteristic has wrong length");
    let c = rs.cartan_matrix();
    let mut v = v.to_vec();
    while let Some(i) = (0..n).find(|&i| v[i].is_negative()) {
        let vi = v[i].clone();
        for (j, vj) in v.iter_mut().enumerate() {
            let a = c[i][j];
            if a != 0 {
                *vj = vj.clone() - T::from_int(a) * vi.clone();
            }
        }
    }
    v
}

/// Weighted Dynkin diagram of the characteristic `h` (coweight coordinates).
pub fn wdd_from_characteristic<T: Scalar>(rs: &RootSystem, h: &[T]) -> Result<WeightedDynkinDiagram> {
    let dom = dominant_representative(rs, h);
    let mut weights = Vec::with_capacity(dom.len());
    for x in &dom {
        match x.as_integer() {
            Some(w) if (0..=2).contains(&w) => weights.push(w),
            Some(w) => {
                return Err(Error::InvalidCharacteristic(format!(
                    "weight {w} outside {{0,1,2}}"
                )))
            }
            None => {
                return Err(Error::InvalidCharacteristic(format!("non-integral weight {x}")))
            }
        }
    }
    WeightedDynkinDiagram::new(rs.cartan_type(), weights)
}

fn level(root: &[i64], w: &WeightedDynkinDiagram) -> i64 {
    root.iter().zip(&w.weights).map(|(c, x)| c * x).sum()
}

/// `k -> dim g(k)` for the grading defined by `w`.
pub fn graded_dims(rs: &RootSystem, w: &WeightedDynkinDiagram) -> BTreeMap<i64, u32> {
    let mut out = BTreeMap::new();
    out.insert(0, rs.rank() as u32);
    for r in rs.roots() {
        *out.entry(level(r, w)).or_insert(0) += 1;
    }
    out
}

/// Half the complex dimension of the orbit with diagram `w`, from
/// `dim z(e) = dim g(0) + dim g(1)`.
pub fn orbit_half_dim(rs: &RootSystem, w: &WeightedDynkinDiagram) -> Result<u32> {
    let dims = graded_dims(rs, w);
    let total = rs.cartan_type().dim();
    let centralizer = dims.get(&0).copied().unwrap_or(0) + dims.get(&1).copied().unwrap_or(0);
    let orbit = total - centralizer;
    if orbit % 2 != 0 {
        return Err(Error::InvalidCharacteristic(format!(
            "odd orbit dimension {orbit} for {w}"
        )));
    }
    Ok(orbit / 2)
}

/// Diagram of the minimal nilpotent orbit: the highest-root coroot.
pub fn minimal_orbit_wdd(rs: &RootSystem) -> WeightedDynkinDiagram {
    let h = rs.coroot_evaluations(rs.highest_root());
    wdd_from_characteristic(rs, &h).expect("highest coroot is a characteristic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use std::collections::BTreeSet;

    fn all_weyl_images(rs: &RootSystem, v: &[i64]) -> BTreeSet<Vec<i64>> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![v.to_vec()];
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            for i in 0..rs.rank() {
                let mut y = x.clone();
                for j in 0..rs.rank() {
                    y[j] -= rs.cartan_matrix()[i][j] * x[i];
                }
                stack.push(y);
            }
        }
        seen
    }

    #[test]
    fn dominant_by_orbit_enumeration() {
        let rs = RootSystem::get(CartanType::a(2));
        // (-1, 1) is conjugate to the fundamental coweight (1, 0); its orbit
        // has W/W_{s_2} = 3 elements.
        let orbit = all_weyl_images(&rs, &[-1, 1]);
        assert_eq!(orbit.len(), 3);
        assert_eq!(all_weyl_images(&rs, &[1, 1]).len(), 6);
        let dominant: Vec<_> = orbit.iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
        assert_eq!(dominant, vec![&vec![1, 0]]);
        assert_eq!(dominant_representative(&rs, &[-1i64, 1]), vec![1, 0]);
        let rs1 = RootSystem::get(CartanType::a(1));
        assert_eq!(dominant_representative(&rs1, &[-2i64]), vec![2]);
        assert_eq!(dominant_representative(&rs, &[0i64, 0]), vec![0, 0]);
    }

    #[test]
    fn dominant_with_rationals() {
        let rs = RootSystem::get(CartanType::b(2));
        let v = vec![Rational::new(-1, 2), Rational::new(3, 2)];
        let d = dominant_representative(&rs, &v);
        assert!(d.iter().all(|x| *x >= Rational::from_int(0)));
        assert!(wdd_from_characteristic(&rs, &v).is_err());
    }

    #[test]
    fn highest_coroot_diagrams() {
        let sl4 = RootSystem::get(CartanType::a(3));
        assert_eq!(minimal_orbit_wdd(&sl4).weights, vec![1, 0, 1]);
        let so7 = RootSystem::get(CartanType::b(3));
        assert_eq!(minimal_orbit_wdd(&so7).weights, vec![0, 1, 0]);
        let zero = wdd_from_characteristic(&so7, &[0i64, 0, 0]).unwrap();
        assert_eq!(zero, WeightedDynkinDiagram::zero(CartanType::b(3)));
    }

    #[test]
    fn sl4_minimal_grading() {
        let rs = RootSystem::get(CartanType::a(3));
        let w = WeightedDynkinDiagram::new(CartanType::a(3), vec![1, 0, 1]).unwrap();
        let d = graded_dims(&rs, &w);
        // Enumerated by hand over the 12 roots e_i - e_j with h = (1,0,0,-1).
        let expected: BTreeMap<i64, u32> = [(-2, 1), (-1, 4), (0, 5), (1, 4), (2, 1)].into();
        assert_eq!(d, expected);
        assert_eq!(orbit_half_dim(&rs, &w).unwrap(), 3);
    }

    #[test]
    fn f4_short_end_grading() {
        let rs = RootSystem::get(CartanType::f4());
        let w = WeightedDynkinDiagram::with_ones(CartanType::f4(), &[4]);
        let d = graded_dims(&rs, &w);
        assert_eq!(d.values().sum::<u32>(), 52);
        let positive: u32 = d.iter().filter(|(k, _)| **k > 0).map(|(_, v)| v).sum();
        assert_eq!(positive, 15);
        assert_eq!(d[&0], 22);
        assert_eq!((d[&1], d[&2]), (8, 7));
        for (k, v) in &d {
            assert_eq!(d[&-k], *v);
        }
        assert_eq!(orbit_half_dim(&rs, &w).unwrap(), 11);
    }

    #[test]
    fn e6_two_a1() {
        let rs = RootSystem::get(CartanType::e6());
        let w = WeightedDynkinDiagram::with_ones(CartanType::e6(), &[1, 6]);
        assert_eq!(orbit_half_dim(&rs, &w).unwrap(), 16);
    }

    #[test]
    fn zero_diagram_is_zero_orbit() {
        for t in CartanType::all_up_to(5) {
            let rs = RootSystem::get(t);
            let w = WeightedDynkinDiagram::zero(t);
            let d = graded_dims(&rs, &w);
            assert_eq!(d.len(), 1);
            assert_eq!(d[&0], t.dim());
            assert_eq!(orbit_half_dim(&rs, &w).unwrap(), 0);
        }
    }
}
