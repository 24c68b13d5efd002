//! Brute force over multiplication tables, for cross-checking the
//! constructions on tiny monoids.

use std::collections::{HashSet, VecDeque};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::families::EnumeratedMonoid;
use crate::{EquivRelation, Error, Result};

/// Default element cap for right-congruence lattice enumeration.
pub const LATTICE_CAP: usize = 20;

/// Default element cap for minimal-congruence search, which only needs
/// principal congruences.
pub const MINIMAL_CAP: usize = 256;

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMonoid {
    size: usize,
    identity: usize,
    table: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    size: usize,
    identity: usize,
    table: Vec<Vec<u32>>,
}

fn cap_error(what: &str, size: usize, cap: usize) -> Error {
    Error::BudgetExceeded {
        needed: format!("{what} on a monoid with {size} elements"),
        budget: cap,
    }
}

impl TableMonoid {
    /// Validates ranges, the identity laws and associativity.
    pub fn new(size: usize, identity: usize, table: Vec<u32>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                size * size,
                table.len()
            )));
        }
        if identity >= size && size > 0 {
            return Err(Error::InvalidTable(format!(
                "identity {identity} out of range"
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= size) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let t = TableMonoid {
            size,
            identity,
            table,
        };
        for i in 0..size {
            if t.mul(identity, i) != i || t.mul(i, identity) != i {
                return Err(Error::InvalidTable(format!(
                    "{identity} is not an identity at {i}"
                )));
            }
        }
        let assoc = (0..size).into_par_iter().all(|a| {
            (0..size).all(|b| {
                let ab = t.mul(a, b);
                (0..size).all(|c| t.mul(ab, c) == t.mul(a, t.mul(b, c)))
            })
        });
        if !assoc {
            return Err(Error::InvalidTable("not associative".into()));
        }
        Ok(t)
    }

    pub fn from_enumerated(m: &EnumeratedMonoid) -> Result<Self> {
        Self::new(m.len(), m.identity_index(), m.table()?.to_vec())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TableJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidTable(e.to_string()))?;
        if raw.table.iter().any(|row| row.len() != raw.size) {
            return Err(Error::InvalidTable("ragged table".into()));
        }
        Self::new(raw.size, raw.identity, raw.table.concat())
    }

    pub fn to_json(&self) -> String {
        let raw = TableJson {
            size: self.size,
            identity: self.identity,
            table: self
                .table
                .chunks(self.size.max(1))
                .map(<[u32]>::to_vec)
                .collect(),
        };
        serde_json::to_string(&raw).expect("serialising a table")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    fn close(&self, pairs: &[(usize, usize)], two_sided: bool) -> EquivRelation {
        let m = self.size;
        let mut uf = UnionFind::<u32>::new(m);
        let mut queue = VecDeque::new();
        for &(a, b) in pairs {
            if uf.union(a as u32, b as u32) {
                queue.push_back((a, b));
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            for s in 0..m {
                let (p, q) = (self.mul(x, s), self.mul(y, s));
                if uf.union(p as u32, q as u32) {
                    queue.push_back((p, q));
                }
                if two_sided {
                    let (p, q) = (self.mul(s, x), self.mul(s, y));
                    if uf.union(p as u32, q as u32) {
                        queue.push_back((p, q));
                    }
                }
            }
        }
        EquivRelation::from_union_find(&uf, m)
    }

    /// The least right congruence containing `(a, b)`.
    pub fn principal_right_congruence(&self, a: usize, b: usize) -> EquivRelation {
        self.close(&[(a, b)], false)
    }

    /// The least two-sided congruence containing `(a, b)`.
    pub fn principal_congruence(&self, a: usize, b: usize) -> EquivRelation {
        self.close(&[(a, b)], true)
    }

    pub fn right_congruence_generated(&self, pairs: &[(usize, usize)]) -> EquivRelation {
        self.close(pairs, false)
    }

    pub fn congruence_generated(&self, pairs: &[(usize, usize)]) -> EquivRelation {
        self.close(pairs, true)
    }

    pub fn is_right_congruence(&self, sigma: &EquivRelation) -> bool {
        sigma.len() == self.size && sigma.is_right_compatible(|a, b| self.mul(a, b))
    }

    pub fn is_congruence(&self, sigma: &EquivRelation) -> bool {
        self.is_right_congruence(sigma) && sigma.is_left_compatible(|a, b| self.mul(a, b))
    }

    fn distinct_principal(&self, two_sided: bool) -> Vec<EquivRelation> {
        let m = self.size;
        let found: HashSet<EquivRelation> = (0..m)
            .into_par_iter()
            .flat_map_iter(|a| (a + 1..m).map(move |b| self.close(&[(a, b)], two_sided)))
            .collect();
        let mut out: Vec<EquivRelation> = found.into_iter().collect();
        out.sort();
        out
    }

    /// Every right congruence, as joins of principal ones. Sorted.
    pub fn all_right_congruences(&self, cap: usize) -> Result<Vec<EquivRelation>> {
        if self.size > cap {
            return Err(cap_error("right congruence enumeration", self.size, cap));
        }
        let principal = self.distinct_principal(false);
        let mut all: HashSet<EquivRelation> = principal.iter().cloned().collect();
        all.insert(EquivRelation::discrete(self.size));
        let mut frontier = principal.clone();
        while !frontier.is_empty() {
            let next: HashSet<EquivRelation> = frontier
                .par_iter()
                .flat_map_iter(|c| principal.iter().map(move |p| c.join(p)))
                .filter(|j| !all.contains(j))
                .collect();
            all.extend(next.iter().cloned());
            frontier = next.into_iter().collect();
        }
        let mut out: Vec<EquivRelation> = all.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `{(a, b) : xa σ xb for all x}`, the largest congruence inside the
    /// right congruence `σ`.
    pub fn largest_congruence_within(&self, sigma: &EquivRelation) -> EquivRelation {
        EquivRelation::from_keys((0..self.size).map(|a| {
            (0..self.size)
                .map(|x| sigma.class_of(self.mul(x, a)))
                .collect::<Vec<_>>()
        }))
    }

    /// The minimal non-trivial congruences. Each is principal, so they are
    /// the minimal members among the principal congruences.
    pub fn minimal_congruences(&self, cap: usize) -> Result<Vec<EquivRelation>> {
        if self.size > cap {
            return Err(cap_error("minimal congruence search", self.size, cap));
        }
        let principal = self.distinct_principal(true);
        Ok(principal
            .iter()
            .filter(|c| !principal.iter().any(|d| d != *c && d.is_contained_in(c)))
            .cloned()
            .collect())
    }

    /// The least number of classes of a right congruence containing no
    /// non-trivial congruence. Only faithful right congruences are explored:
    /// faithfulness passes to smaller relations, so every faithful right
    /// congruence is reached through faithful joins.
    pub fn degrc_bruteforce(&self, cap: usize) -> Result<usize> {
        if self.size > cap {
            return Err(cap_error("degrc search", self.size, cap));
        }
        let faithful = |s: &EquivRelation| self.largest_congruence_within(s).is_discrete();
        let principal: Vec<EquivRelation> = self
            .distinct_principal(false)
            .into_iter()
            .filter(|p| faithful(p))
            .collect();
        let start = EquivRelation::discrete(self.size);
        let mut best = start.num_classes();
        let mut seen: HashSet<EquivRelation> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let next: HashSet<EquivRelation> = frontier
                .par_iter()
                .flat_map_iter(|c| principal.iter().map(move |p| c.join(p)))
                .filter(|j| !seen.contains(j) && faithful(j))
                .collect();
            for j in &next {
                best = best.min(j.num_classes());
            }
            seen.extend(next.iter().cloned());
            frontier = next.into_iter().collect();
        }
        Ok(best)
    }

    /// Least `d ≥ 1` such that the monoid embeds in the monoid of partial
    /// maps of a `d`-set (acting on the right, identity to identity), by
    /// exhaustive search. Meant for monoids with a handful of elements.
    pub fn min_partial_degree(&self, max_d: usize) -> Option<usize> {
        (1..=max_d).find(|&d| self.embeds_in_partial_maps(d))
    }

    fn embeds_in_partial_maps(&self, d: usize) -> bool {
        fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
            let d = f.len();
            f.iter().map(|&x| if x == d { d } else { g[x] }).collect()
        }

        // a partial map is a vector over 0..d with the value d meaning undefined
        let count = (d + 1).pow(d as u32);
        let maps: Vec<Vec<usize>> = (0..count)
            .map(|mut c| {
                (0..d)
                    .map(|_| {
                        let v = c % (d + 1);
                        c /= d + 1;
                        v
                    })
                    .collect()
            })
            .collect();
        let id: Vec<usize> = (0..d).collect();
        let mut image: Vec<Option<Vec<usize>>> = vec![None; self.size];
        image[self.identity] = Some(id);
        let order: Vec<usize> = (0..self.size).filter(|&i| i != self.identity).collect();

        fn search(
            t: &TableMonoid,
            order: &[usize],
            k: usize,
            image: &mut Vec<Option<Vec<usize>>>,
            maps: &[Vec<usize>],
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let a = order[k];
            'next: for f in maps {
                if image.iter().flatten().any(|g| g == f) {
                    continue;
                }
                image[a] = Some(f.clone());
                for x in 0..t.size {
                    for y in 0..t.size {
                        let xy = t.mul(x, y);
                        if x != a && y != a && xy != a {
                            continue;
                        }
                        if let (Some(fx), Some(fy), Some(fxy)) = (&image[x], &image[y], &image[xy])
                        {
                            if compose(fx, fy) != *fxy {
                                image[a] = None;
                                continue 'next;
                            }
                        }
                    }
                }
                if search(t, order, k + 1, image, maps) {
                    return true;
                }
                image[a] = None;
            }
            false
        }
        search(self, &order, 0, &mut image, &maps)
    }
}
