//! Structural maps between diagrams: flattening, pairing up, the projection
//! normal form `bar`, the rank-lowering embedding `plus`, and the isomorphism
//! between planar partitions and Temperley–Lieb diagrams of twice the degree.

use petgraph::unionfind::UnionFind;

use super::Diagram;
use crate::{Error, Family, Result};

impl Diagram {
    /// Splits every transversal into its upper and lower parts.
    pub fn hat_flatten(&self) -> Diagram {
        let n = self.degree();
        let shift = 2 * n as u32;
        let raw: Vec<u32> = self
            .labels()
            .iter()
            .enumerate()
            .map(|(p, &l)| if p < n { l } else { l + shift })
            .collect();
        Diagram::from_raw_labels(n, &raw)
    }

    /// Replaces the transversals `{a_i, b_i'}` of an even-rank Brauer diagram by
    /// the arcs `{a_1, a_2}, {a_3, a_4}, ...` and `{b_1', b_2'}, ...`.
    pub fn hat_pairup(&self) -> Result<Diagram> {
        if !self.in_family(Family::B) {
            return Err(Error::Precondition(
                "hat_pairup needs a Brauer diagram".into(),
            ));
        }
        let parts = self.parts();
        let (trans, rest): (Vec<_>, Vec<_>) = parts.into_iter().partition(|b| b.is_transversal());
        if trans.len() % 2 != 0 {
            return Err(Error::Precondition(format!(
                "hat_pairup needs even rank, got {}",
                trans.len()
            )));
        }
        let arcs = trans.chunks(2).flat_map(|pair| {
            [
                (vec![pair[0].upper[0], pair[1].upper[0]], vec![]),
                (vec![], vec![pair[0].lower[0], pair[1].lower[0]]),
            ]
        });
        let kept = rest.into_iter().map(|b| (b.upper, b.lower));
        Diagram::from_parts(self.degree(), arcs.chain(kept).collect::<Vec<_>>())
    }

    /// The normal form `ᾱ`: transversal `i` (ordered by least upper vertex)
    /// becomes `{i} ∪ B_i'`, lower non-transversals are kept, and the free
    /// upper vertices `r+1..n` become singletons, or consecutive arcs for `B`.
    ///
    /// For `B` any Brauer diagram is accepted; otherwise the input must be a
    /// projection.
    pub fn bar(&self, family: Family) -> Result<Diagram> {
        if family == Family::B {
            if !self.in_family(Family::B) {
                return Err(Error::Precondition(
                    "bar for B needs a Brauer diagram".into(),
                ));
            }
        } else if !self.is_projection() {
            return Err(Error::Precondition("bar needs a projection".into()));
        }
        let n = self.degree();
        let mut parts = Vec::new();
        let mut r = 0;
        for b in self.parts() {
            if b.is_transversal() {
                r += 1;
                parts.push((vec![r], b.lower));
            } else if b.upper.is_empty() {
                parts.push((vec![], b.lower));
            }
        }
        let free: Vec<usize> = (r + 1..=n).collect();
        if family == Family::B {
            parts.extend(free.chunks(2).map(|c| (c.to_vec(), vec![])));
        } else {
            parts.extend(free.into_iter().map(|i| (vec![i], vec![])));
        }
        Diagram::from_parts(n, parts)
    }

    /// Sends a rank-`r` projection of degree `n` to a rank-0 projection of
    /// degree `n + r`: transversal `A_i ∪ A_i'` becomes the two blocks
    /// `A_i ∪ {n+r+1-i}` and its mirror image.
    pub fn plus(&self) -> Result<Diagram> {
        if !self.is_projection() {
            return Err(Error::Precondition("plus needs a projection".into()));
        }
        let n = self.degree();
        let big = n + self.rank();
        let mut parts = Vec::new();
        let mut i = 0;
        for b in self.parts() {
            if b.is_transversal() {
                i += 1;
                let mut upper = b.upper;
                upper.push(big + 1 - i);
                parts.push((upper.clone(), vec![]));
                parts.push((vec![], upper));
            } else {
                parts.push((b.upper, b.lower));
            }
        }
        Diagram::from_parts(big, parts)
    }

    /// The isomorphism `PP_n → TL_{2n}`.
    ///
    /// Upper vertex `i` owns the slots `2i-1` (left) and `2i` (right); lower
    /// vertex `i'` owns `(2i)'` (left) and `(2i-1)'` (right), left and right
    /// taken along the boundary walk `1, ..., n, n', ..., 1'`. Walking a block
    /// in that order, each member's right slot is joined to the next member's
    /// left slot, cyclically.
    pub fn tilde(&self) -> Result<Diagram> {
        if !self.is_planar() {
            return Err(Error::Precondition("tilde needs a planar diagram".into()));
        }
        let n = self.degree();
        let m = 2 * n;
        // (left, right) slot positions in the degree-2n label vector
        let slots = |pos: usize| -> (usize, usize) {
            if pos < n {
                (2 * pos, 2 * pos + 1)
            } else {
                let i = pos - n;
                (m + 2 * i + 1, m + 2 * i)
            }
        };
        let mut members = vec![Vec::new(); self.num_blocks()];
        for pos in (0..n).chain((n..2 * n).rev()) {
            members[self.labels()[pos] as usize].push(pos);
        }
        let mut raw = vec![0u32; 2 * m];
        let mut next = 0u32;
        for block in &members {
            for (j, &pos) in block.iter().enumerate() {
                let succ = block[(j + 1) % block.len()];
                raw[slots(pos).1] = next;
                raw[slots(succ).0] = next;
                next += 1;
            }
        }
        Ok(Diagram::from_raw_labels(m, &raw))
    }

    /// Inverse of [`Diagram::tilde`]: `TL_{2n} → PP_n`.
    pub fn untilde(&self) -> Result<Diagram> {
        let m = self.degree();
        if !m.is_multiple_of(2) || !self.in_family(Family::TL) {
            return Err(Error::Precondition(
                "untilde needs a Temperley–Lieb diagram of even degree".into(),
            ));
        }
        let n = m / 2;
        let owner = |pos: usize| if pos < m { pos / 2 } else { n + (pos - m) / 2 };
        let mut uf = UnionFind::<u32>::new(2 * n);
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (pos, &l) in self.labels().iter().enumerate() {
            let slot = &mut first[l as usize];
            if *slot == usize::MAX {
                *slot = pos;
            } else {
                uf.union(owner(*slot) as u32, owner(pos) as u32);
            }
        }
        let raw: Vec<u32> = (0..2 * n as u32).map(|v| uf.find_mut(v)).collect();
        let planar = Diagram::from_raw_labels(n, &raw);
        if planar.tilde().as_ref() != Ok(self) {
            return Err(Error::Precondition(
                "diagram is not in the image of tilde".into(),
            ));
        }
        Ok(planar)
    }

    /// `TL_{2k-1} → TLM_k`: add the through line `{1, 1'}` on the left and
    /// pull back along `tilde`.
    pub fn tl_to_model(&self) -> Result<Diagram> {
        let n = self.degree();
        if n.is_multiple_of(2) || !self.in_family(Family::TL) {
            return Err(Error::Precondition(
                "tl_to_model needs a Temperley–Lieb diagram of odd degree".into(),
            ));
        }
        let fresh = self.num_blocks() as u32;
        let (upper, lower) = self.labels().split_at(n);
        let raw: Vec<u32> = std::iter::once(fresh)
            .chain(upper.iter().copied())
            .chain(std::iter::once(fresh))
            .chain(lower.iter().copied())
            .collect();
        Diagram::from_raw_labels(n + 1, &raw).untilde()
    }

    /// Inverse of [`Diagram::tl_to_model`].
    pub fn model_to_tl(&self) -> Result<Diagram> {
        if !self.in_family(Family::TLM) {
            return Err(Error::Precondition(
                "model_to_tl needs an element of TLM".into(),
            ));
        }
        let t = self.tilde()?;
        let m = t.degree();
        let labels = t.labels();
        debug_assert_eq!(labels[0], labels[m]);
        let raw: Vec<u32> = labels[1..m]
            .iter()
            .chain(&labels[m + 1..])
            .copied()
            .collect();
        Ok(Diagram::from_raw_labels(m - 1, &raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str, n: usize) -> Diagram {
        Diagram::parse(text, n).unwrap()
    }

    #[test]
    fn flatten() {
        let alpha = d("[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]", 6);
        assert_eq!(
            alpha.hat_flatten().to_string(),
            "[[1,4],[2,3],[5,6],[-1,-2,-6],[-3],[-4,-5]]"
        );
        let gamma = d("[[1,-1],[2],[-2]]", 2);
        assert_eq!(gamma.hat_flatten(), d("[[1],[2],[-1],[-2]]", 2));
        let rank0 = d("[[1,2],[-1],[-2]]", 2);
        assert_eq!(rank0.hat_flatten(), rank0);
    }

    #[test]
    fn pairup() {
        let a = d("[[1,-3],[2,-4],[3,4],[-1,-2]]", 4);
        assert_eq!(
            a.hat_pairup().unwrap().to_string(),
            "[[1,2],[3,4],[-1,-2],[-3,-4]]"
        );
        let rank0 = d("[[1,4],[2,3],[-1,-2],[-3,-4]]", 4);
        assert_eq!(rank0.hat_pairup().unwrap(), rank0);
        assert!(Diagram::identity(3).hat_pairup().is_err());
        assert!(d("[[1,-1],[2],[-2]]", 2).hat_pairup().is_err());
    }

    #[test]
    fn bar_projection_and_brauer() {
        let e = d("[[1,2,-1,-2],[3,-3]]", 3);
        assert_eq!(
            e.bar(Family::P).unwrap().to_string(),
            "[[1,-1,-2],[2,-3],[3]]"
        );
        let pi = d("[[1,-1],[2,-2],[3],[-3]]", 3);
        assert_eq!(pi.bar(Family::P).unwrap(), pi);
        let zeta = d("[[1,-1],[2,3],[-2,-3]]", 3);
        assert_eq!(zeta.bar(Family::B).unwrap(), zeta);
        let a = d("[[1,-3],[2,3],[-1,-2]]", 3);
        assert_eq!(
            a.bar(Family::B).unwrap().to_string(),
            "[[1,-3],[2,3],[-1,-2]]"
        );
        let b = d("[[1,2],[3,-2],[-1,-3]]", 3);
        assert_eq!(
            b.bar(Family::B).unwrap().to_string(),
            "[[1,-2],[2,3],[-1,-3]]"
        );
        assert!(d("[[1,2],[-1],[-2]]", 2).bar(Family::P).is_err());
    }

    #[test]
    fn plus_examples() {
        let id2 = Diagram::identity(2);
        assert_eq!(
            id2.plus().unwrap().to_string(),
            "[[1,4],[2,3],[-1,-4],[-2,-3]]"
        );
        let rank0 = d("[[1,2],[-1,-2]]", 2);
        assert_eq!(rank0.plus().unwrap(), rank0);
        assert!(d("[[1,-2],[2,-1]]", 2).plus().is_err());
    }

    #[test]
    fn plus_on_motzkin_projection_of_degree_23() {
        let n = 23;
        let mut parts: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (a, b) in [(1, 5), (7, 11), (13, 17), (19, 23)] {
            parts.push((vec![a, b], vec![]));
            parts.push((vec![], vec![a, b]));
        }
        for t in [6, 12, 18] {
            parts.push((vec![t], vec![t]));
        }
        for i in 1..=n {
            if ![1, 5, 7, 11, 13, 17, 19, 23, 6, 12, 18].contains(&i) {
                parts.push((vec![i], vec![]));
                parts.push((vec![], vec![i]));
            }
        }
        let e = Diagram::from_parts(n, parts).unwrap();
        assert!(e.in_family(Family::M) && e.is_projection() && e.rank() == 3);
        let p = e.plus().unwrap();
        assert_eq!(p.degree(), 26);
        assert_eq!(p.rank(), 0);
        assert!(p.is_projection());
        assert!(p.in_family(Family::M));
        let blocks = p.blocks();
        for arc in [vec![6, 26], vec![12, 25], vec![18, 24], vec![-6, -26]] {
            assert!(blocks.contains(&arc), "{arc:?} missing from {p}");
        }
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(Diagram::identity(3).tilde().unwrap(), Diagram::identity(6));
        // upper arc {2,3} becomes the TL arcs {3,6} and {4,5}
        let a = d("[[1,-1],[2,3],[-2],[-3]]", 3);
        let t = a.tilde().unwrap();
        assert!(t.blocks().contains(&vec![3, 6]));
        assert!(t.blocks().contains(&vec![4, 5]));
        assert!(t.in_family(Family::TL));
        assert_eq!(t.untilde().unwrap(), a);
        assert!(d("[[1,-2],[2,-1]]", 2).tilde().is_err());
    }

    #[test]
    fn tl_model_round_trip() {
        let t = d("[[1,2],[3,-1],[-2,-3]]", 3);
        let m = t.tl_to_model().unwrap();
        assert_eq!(m.degree(), 2);
        assert!(m.in_family(Family::TLM));
        assert_eq!(m.model_to_tl().unwrap(), t);
        assert_eq!(
            Diagram::identity(5).tl_to_model().unwrap(),
            Diagram::identity(3)
        );
    }
}
