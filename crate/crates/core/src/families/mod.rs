//! Enumeration of the diagram monoids, their projections and generators,
//! Green's relations, and the Brauer stabiliser structure.

mod brauer;
mod enumerate;
mod generators;

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

pub use brauer::{BrauerClass, BrauerContext};
pub use enumerate::expected_size;
pub use generators::generators;

use crate::{Budget, Diagram, Error, Family, Result};

/// Largest multiplication table (in entries) [`EnumeratedMonoid::table`] will build.
pub const TABLE_CAP: usize = 25_000_000;

/// All elements of one family at one degree, sorted, with index lookup.
#[derive(Debug)]
pub struct EnumeratedMonoid {
    family: Family,
    n: usize,
    elements: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    table: OnceLock<Vec<u32>>,
}

impl EnumeratedMonoid {
    pub fn new(family: Family, n: usize, budget: Budget) -> Result<Self> {
        enumerate::check_budget(family, n, budget)?;
        Ok(Self::from_elements(
            family,
            n,
            enumerate::elements(family, n),
        ))
    }

    /// Wraps a sorted, duplicate-free element list.
    pub(crate) fn from_elements(family: Family, n: usize, elements: Vec<Diagram>) -> Self {
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, d)| (d, i))
            .collect();
        EnumeratedMonoid {
            family,
            n,
            elements,
            index,
            table: OnceLock::new(),
        }
    }

    /// The submonoid generated by `gens`, by breadth-first right multiplication.
    pub fn closure(family: Family, n: usize, gens: &[Diagram], budget: Budget) -> Result<Self> {
        let mut seen: HashMap<Diagram, ()> = HashMap::new();
        let mut frontier = vec![Diagram::identity(n)];
        seen.insert(frontier[0].clone(), ());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.multiply(g)?;
                    if !seen.contains_key(&y) {
                        seen.insert(y.clone(), ());
                        next.push(y);
                        if seen.len() > budget.max_elements {
                            return Err(Error::BudgetExceeded {
                                needed: format!("more than {} elements", budget.max_elements),
                                budget: budget.max_elements,
                            });
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Diagram> = seen.into_keys().collect();
        elements.sort_unstable();
        Ok(Self::from_elements(family, n, elements))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Diagram] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Diagram {
        &self.elements[i]
    }

    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn identity_index(&self) -> usize {
        self.index_of(&Diagram::identity(self.n))
            .expect("every family contains the identity")
    }

    /// Index of the product of elements `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        if let Some(t) = self.table.get() {
            return t[i * self.len() + j] as usize;
        }
        let d = self.elements[i].product(&self.elements[j]);
        self.index[&d]
    }

    /// The dense multiplication table, row `i` holding the products `i·j`.
    pub fn table(&self) -> Result<&[u32]> {
        let m = self.len();
        if m.checked_mul(m).is_none_or(|c| c > TABLE_CAP) {
            return Err(Error::BudgetExceeded {
                needed: format!("a {m}×{m} multiplication table"),
                budget: TABLE_CAP,
            });
        }
        Ok(self.table.get_or_init(|| {
            (0..m)
                .into_par_iter()
                .flat_map_iter(|i| {
                    (0..m).map(move |j| {
                        let d = self.elements[i].product(&self.elements[j]);
                        self.index[&d] as u32
                    })
                })
                .collect()
        }))
    }

    /// Index of `star` of element `i`.
    pub fn star(&self, i: usize) -> usize {
        self.index[&self.elements[i].star()]
    }
}

/// All rank-`r` projections of the family at degree `n`, sorted.
pub fn projections(family: Family, n: usize, r: usize) -> Result<Vec<Diagram>> {
    if r > n {
        return Err(Error::RankOutOfRange { rank: r, n });
    }
    Ok(enumerate::projections(family, n, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    L,
    R,
    H,
    D,
}

/// Green's relations in a regular `*`-monoid of diagrams: `a L b` iff
/// `a*a = b*b`, `a R b` iff `aa* = bb*`, and `D` by equal rank.
pub fn green_related(a: &Diagram, b: &Diagram, rel: GreenRelation) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let l = || a.star().product(a) == b.star().product(b);
    let r = || a.product(&a.star()) == b.product(&b.star());
    Ok(match rel {
        GreenRelation::L => l(),
        GreenRelation::R => r(),
        GreenRelation::H => l() && r(),
        GreenRelation::D => a.rank() == b.rank(),
    })
}
