//! Equivalence relations on the index set `0..m` of a finite monoid.

use std::collections::HashMap;
use std::hash::Hash;

use petgraph::unionfind::UnionFind;

/// An equivalence on `0..m`, stored as restricted growth labels so that
/// equal relations compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivRelation {
    labels: Vec<u32>,
}

impl EquivRelation {
    pub fn from_labels(raw: &[u32]) -> Self {
        let mut remap: HashMap<u32, u32> = HashMap::new();
        let labels = raw
            .iter()
            .map(|&l| {
                let next = remap.len() as u32;
                *remap.entry(l).or_insert(next)
            })
            .collect();
        EquivRelation { labels }
    }

    /// Elements are related iff their keys are equal.
    pub fn from_keys<K: Hash + Eq, I: IntoIterator<Item = K>>(keys: I) -> Self {
        let mut seen: HashMap<K, u32> = HashMap::new();
        let labels = keys
            .into_iter()
            .map(|k| {
                let next = seen.len() as u32;
                *seen.entry(k).or_insert(next)
            })
            .collect();
        EquivRelation { labels }
    }

    pub(crate) fn from_union_find(uf: &UnionFind<u32>, m: usize) -> Self {
        let roots: Vec<u32> = (0..m as u32).map(|i| uf.find(i)).collect();
        Self::from_labels(&roots)
    }

    /// The equality relation `Δ`.
    pub fn discrete(m: usize) -> Self {
        EquivRelation {
            labels: (0..m as u32).collect(),
        }
    }

    /// The universal relation `∇`.
    pub fn full(m: usize) -> Self {
        EquivRelation { labels: vec![0; m] }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.labels[i] as usize
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().max().map_or(0, |&l| l as usize + 1)
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.labels[i] == self.labels[j]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(i);
        }
        out
    }

    /// The least element of each class, in class order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = Vec::with_capacity(self.num_classes());
        for (i, &l) in self.labels.iter().enumerate() {
            if l as usize == reps.len() {
                reps.push(i);
            }
        }
        reps
    }

    pub fn is_discrete(&self) -> bool {
        self.num_classes() == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() <= 1
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_contained_in(&self, other: &EquivRelation) -> bool {
        let mut image = vec![u32::MAX; self.num_classes()];
        for (&mine, &theirs) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[mine as usize];
            if *slot == u32::MAX {
                *slot = theirs;
            } else if *slot != theirs {
                return false;
            }
        }
        true
    }

    /// The least equivalence containing both.
    pub fn join(&self, other: &EquivRelation) -> EquivRelation {
        let m = self.len();
        let mut uf = UnionFind::<u32>::new(m);
        for rel in [self, other] {
            let mut first = vec![u32::MAX; rel.num_classes()];
            for (i, &l) in rel.labels.iter().enumerate() {
                if first[l as usize] == u32::MAX {
                    first[l as usize] = i as u32;
                } else {
                    uf.union(first[l as usize], i as u32);
                }
            }
        }
        Self::from_union_find(&uf, m)
    }

    /// Closed under `x ↦ x·s` for every `s`, with `mul` giving product indices.
    pub fn is_right_compatible(&self, mul: impl Fn(usize, usize) -> usize) -> bool {
        let reps = self.representatives();
        (0..self.len()).all(|i| {
            let r = reps[self.class_of(i)];
            i == r || (0..self.len()).all(|s| self.related(mul(i, s), mul(r, s)))
        })
    }

    pub fn is_left_compatible(&self, mul: impl Fn(usize, usize) -> usize) -> bool {
        self.is_right_compatible(|i, s| mul(s, i))
    }
}
