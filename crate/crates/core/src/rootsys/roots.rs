//! Root systems in simple-root coordinates.

use super::cartan::CartanType;
use crate::error::Result;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

/// A root written in the basis of simple roots.
pub type Root = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    positive_roots: Vec<Root>,
    highest_root: Root,
}

impl RootSystem {
    /// Closure of the simple roots under the simple reflections.
    pub fn build(t: CartanType) -> Self {
        let n = t.rank() as usize;
        let cartan_matrix = t.cartan_matrix();
        let gram = t.gram_matrix();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let s = reflect_root(&cartan_matrix, i, &r);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let roots: Vec<Root> = seen.into_iter().collect();
        let mut positive_roots: Vec<Root> =
            roots.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let highest_root = positive_roots.last().cloned().expect("non-empty root system");
        RootSystem {
            cartan_type: t,
            cartan_matrix,
            gram,
            roots,
            positive_roots,
            highest_root,
        }
    }

    /// Shared, lazily built root system for `t`.
    pub fn get(t: CartanType) -> Arc<RootSystem> {
        static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rs) = cache.lock().unwrap().get(&t) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::build(t));
        cache.lock().unwrap().entry(t).or_insert(rs).clone()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        self.roots.binary_search_by(|x| x.as_slice().cmp(r)).is_ok()
    }

    /// Scaled inner product (short roots have squared length 2).
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                s += x * y * self.gram[i][j];
            }
        }
        s
    }

    /// `<beta, alpha_i^vee>` for a root (or lattice vector) `beta`.
    pub fn pairing_with_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan_matrix[i]).map(|(c, a)| c * a).sum()
    }

    /// Simple reflection `s_i` acting on the root lattice.
    pub fn reflect(&self, i: usize, beta: &[i64]) -> Root {
        reflect_root(&self.cartan_matrix, i, beta)
    }

    /// Evaluations `alpha_j(beta^vee)` of the coroot of `beta` on the simple
    /// roots, i.e. its coweight coordinates.
    pub fn coroot_evaluations(&self, beta: &[i64]) -> Vec<i64> {
        let bb = self.inner(beta, beta);
        (0..self.rank())
            .map(|j| {
                let mut e = vec![0; self.rank()];
                e[j] = 1;
                let v = 2 * self.inner(&e, beta);
                debug_assert_eq!(v % bb, 0);
                v / bb
            })
            .collect()
    }

    /// Roots lying in the span of the given simple roots.
    pub fn subsystem_roots(&self, nodes: &[usize]) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(&i)))
            .cloned()
            .collect()
    }

    /// A reduced word for the longest element of the parabolic subgroup
    /// generated by the reflections in `nodes`.
    pub fn longest_word(&self, nodes: &[usize]) -> Vec<usize> {
        // Walk a strictly dominant coweight for the subsystem to its negative
        // chamber; each step is a simple reflection decreasing length by one.
        let n = self.rank();
        let mut v: Vec<i64> = (0..n).map(|i| if nodes.contains(&i) { 1 } else { 0 }).collect();
        let mut word = Vec::new();
        loop {
            let Some(&i) = nodes.iter().find(|&&i| v[i] > 0) else {
                break;
            };
            let vi = v[i];
            for (j, vj) in v.iter_mut().enumerate() {
                *vj -= self.cartan_matrix[i][j] * vi;
            }
            word.push(i);
        }
        word
    }

    /// Applies a word of simple reflections, rightmost letter first.
    pub fn apply_word(&self, word: &[usize], beta: &[i64]) -> Root {
        word.iter().rev().fold(beta.to_vec(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn validate(&self) -> Result<()> {
        use crate::error::Error;
        let t = self.cartan_type;
        if self.roots.len() as u32 != t.root_count() {
            return Err(Error::Integrity(format!(
                "{t}: {} roots, expected {}",
                self.roots.len(),
                t.root_count()
            )));
        }
        for r in &self.positive_roots {
            let diff: Vec<i64> = self.highest_root.iter().zip(r).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&d| d < 0) {
                return Err(Error::Integrity(format!("{t}: highest root not maximal")));
            }
        }
        Ok(())
    }
}

fn reflect_root(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Root {
    let p: i64 = beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}

pub fn build_root_system(t: CartanType) -> RootSystem {
    RootSystem::build(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_has_two_roots() {
        let rs = build_root_system(CartanType::a(1));
        assert_eq!(rs.roots().len(), 2);
        assert_eq!(rs.highest_root(), &vec![1]);
    }

    #[test]
    fn counts_and_highest_roots() {
        for t in CartanType::all_up_to(9) {
            let rs = RootSystem::get(t);
            rs.validate().unwrap();
        }
        assert_eq!(RootSystem::get(CartanType::f4()).roots().len(), 48);
        let e8 = RootSystem::get(CartanType::e8());
        assert_eq!(e8.roots().len(), 240);
        assert_eq!(e8.highest_root(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(RootSystem::get(CartanType::f4()).highest_root(), &vec![2, 3, 4, 2]);
        assert_eq!(RootSystem::get(CartanType::g2()).highest_root(), &vec![3, 2]);
        assert_eq!(RootSystem::get(CartanType::e6()).highest_root(), &vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(RootSystem::get(CartanType::b(3)).highest_root(), &vec![1, 2, 2]);
        assert_eq!(RootSystem::get(CartanType::c(3)).highest_root(), &vec![2, 2, 1]);
    }

    #[test]
    fn longest_word_negates_subsystem() {
        let rs = RootSystem::get(CartanType::d(5));
        let nodes = [1, 2, 3, 4];
        let w = rs.longest_word(&nodes);
        assert_eq!(w.len(), 12); // positive roots of D4
        for r in rs.subsystem_roots(&nodes) {
            let img = rs.apply_word(&w, &r);
            let pos = r.iter().all(|&c| c >= 0);
            assert_eq!(img.iter().all(|&c| c <= 0), pos);
        }
    }
}
