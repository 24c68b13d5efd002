//! Partitions of `{1..n} ∪ {1'..n'}` and their arithmetic.
//!
//! A [`Diagram`] stores one block label per vertex, upper vertices `1..n`
//! first and lower vertices `1'..n'` after them. Labels are a restricted growth
//! string, so two diagrams are equal exactly when their label vectors are. The
//! derived ordering (degree first, then labels lexicographically) is the
//! global ordering used whenever a class needs a least representative.

mod maps;
mod setpart;
mod special;

use std::fmt;
use std::ops::Mul;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

pub use setpart::SetPartitionOfN;
pub use special::{minimal_pairs, special, SpecialName};

use crate::{Error, Family, Result};

/// A signed vertex: `v > 0` is the upper vertex `v`, `v < 0` the lower vertex `|v|'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex(i32);

impl Vertex {
    pub fn new(v: i32, n: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidDiagram("vertex 0 does not exist".into()));
        }
        if v.unsigned_abs() as usize > n {
            return Err(Error::InvalidDiagram(format!(
                "vertex {v} exceeds degree {n}"
            )));
        }
        Ok(Vertex(v))
    }

    pub fn upper(i: usize) -> Self {
        Vertex(i as i32)
    }

    pub fn lower(i: usize) -> Self {
        Vertex(-(i as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn is_upper(self) -> bool {
        self.0 > 0
    }

    /// Position in the label vector of a degree-`n` diagram.
    fn position(self, n: usize) -> usize {
        let i = self.0.unsigned_abs() as usize - 1;
        if self.0 > 0 {
            i
        } else {
            n + i
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    UpperNonTransversal,
    LowerNonTransversal,
    Transversal,
}

/// One block split into its upper and lower vertices (1-based, ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Block {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

impl Block {
    pub fn kind(&self) -> BlockKind {
        match (self.upper.is_empty(), self.lower.is_empty()) {
            (false, false) => BlockKind::Transversal,
            (false, true) => BlockKind::UpperNonTransversal,
            _ => BlockKind::LowerNonTransversal,
        }
    }

    pub fn len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_transversal(&self) -> bool {
        self.kind() == BlockKind::Transversal
    }
}

/// Rank, domain, codomain, kernel and cokernel of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub rank: usize,
    pub dom: Vec<usize>,
    pub codom: Vec<usize>,
    pub ker: SetPartitionOfN,
    pub coker: SetPartitionOfN,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    n: usize,
    labels: Vec<u32>,
}

/// Relabels `raw` into restricted growth form.
fn canonical_labels(raw: &[u32]) -> Vec<u32> {
    let bound = raw.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut remap = vec![u32::MAX; bound];
    let mut next = 0u32;
    raw.iter()
        .map(|&l| {
            let slot = &mut remap[l as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect()
}

impl Diagram {
    /// Builds a diagram from any labelling of the `2n` vertex positions.
    pub(crate) fn from_raw_labels(n: usize, raw: &[u32]) -> Diagram {
        debug_assert_eq!(raw.len(), 2 * n);
        Diagram {
            n,
            labels: canonical_labels(raw),
        }
    }

    /// Builds a diagram from `(upper, lower)` vertex lists, 1-based.
    ///
    /// Every vertex must be covered exactly once; this is checked.
    pub fn from_parts<I>(n: usize, parts: I) -> Result<Diagram>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>)>,
    {
        let mut raw = vec![u32::MAX; 2 * n];
        for (label, (upper, lower)) in parts.into_iter().enumerate() {
            if upper.is_empty() && lower.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            let verts = upper
                .iter()
                .map(|&i| (i, 0))
                .chain(lower.iter().map(|&i| (i, n)));
            for (i, offset) in verts {
                if i == 0 || i > n {
                    return Err(Error::InvalidDiagram(format!(
                        "vertex {i} out of range for degree {n}"
                    )));
                }
                let slot = &mut raw[offset + i - 1];
                if *slot != u32::MAX {
                    return Err(Error::InvalidDiagram(format!("vertex {i} repeated")));
                }
                *slot = label as u32;
            }
        }
        if raw.contains(&u32::MAX) {
            return Err(Error::InvalidDiagram("some vertex is missing".into()));
        }
        Ok(Diagram::from_raw_labels(n, &raw))
    }

    /// Builds a diagram from signed blocks, as in the text format.
    pub fn from_blocks(n: usize, blocks: &[Vec<i64>]) -> Result<Diagram> {
        let mut raw = vec![u32::MAX; 2 * n];
        for (label, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            for &v in block {
                let v = i32::try_from(v)
                    .map_err(|_| Error::InvalidDiagram(format!("vertex {v} out of range")))?;
                let pos = Vertex::new(v, n)?.position(n);
                if raw[pos] != u32::MAX {
                    return Err(Error::InvalidDiagram(format!("vertex {v} repeated")));
                }
                raw[pos] = label as u32;
            }
        }
        if let Some(pos) = raw.iter().position(|&l| l == u32::MAX) {
            let v = if pos < n {
                (pos + 1) as i64
            } else {
                -((pos - n + 1) as i64)
            };
            return Err(Error::InvalidDiagram(format!("vertex {v} is missing")));
        }
        Ok(Diagram::from_raw_labels(n, &raw))
    }

    /// Parses the bracketed signed-block format, e.g. `[[1,-1],[2],[-2]]`.
    pub fn parse(text: &str, n: usize) -> Result<Diagram> {
        let blocks: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        Diagram::from_blocks(n, &blocks)
    }

    pub fn identity(n: usize) -> Diagram {
        let labels = (0..n as u32).chain(0..n as u32).collect();
        Diagram { n, labels }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub(crate) fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks in canonical order, each split into upper and lower vertices.
    pub fn parts(&self) -> Vec<Block> {
        let mut blocks = vec![Block::default(); self.num_blocks()];
        for (pos, &l) in self.labels.iter().enumerate() {
            if pos < self.n {
                blocks[l as usize].upper.push(pos + 1);
            } else {
                blocks[l as usize].lower.push(pos - self.n + 1);
            }
        }
        blocks
    }

    /// Blocks as signed vertex lists, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<i32>> {
        self.parts()
            .into_iter()
            .map(|b| {
                b.upper
                    .iter()
                    .map(|&i| i as i32)
                    .chain(b.lower.iter().map(|&i| -(i as i32)))
                    .collect()
            })
            .collect()
    }

    /// Transversals ordered by their least upper vertex.
    pub fn transversals(&self) -> Vec<Block> {
        self.parts()
            .into_iter()
            .filter(Block::is_transversal)
            .collect()
    }

    pub fn same_block(&self, x: Vertex, y: Vertex) -> bool {
        self.labels[x.position(self.n)] == self.labels[y.position(self.n)]
    }

    fn check_degree(&self, other: &Diagram) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// The product `self · rhs`: components of the product graph, traced on the
    /// outer rows.
    pub fn multiply(&self, rhs: &Diagram) -> Result<Diagram> {
        self.check_degree(rhs)?;
        Ok(self.product(rhs))
    }

    /// Product without the degree check. Rows of the product graph are laid
    /// out as `0..n` (upper), `n..2n` (middle), `2n..3n` (lower); position `p`
    /// of `self` is vertex `p`, position `p` of `rhs` is vertex `n + p`.
    pub(crate) fn product(&self, rhs: &Diagram) -> Diagram {
        let n = self.n;
        let mut uf = UnionFind::<u32>::new(3 * n);
        let mut first = vec![u32::MAX; 2 * n];
        for (offset, labels) in [(0, &self.labels), (n, &rhs.labels)] {
            first.iter_mut().for_each(|f| *f = u32::MAX);
            for (p, &l) in labels.iter().enumerate() {
                let v = (offset + p) as u32;
                let slot = &mut first[l as usize];
                if *slot == u32::MAX {
                    *slot = v;
                } else {
                    uf.union(*slot, v);
                }
            }
        }
        let raw: Vec<u32> = (0..n)
            .chain(2 * n..3 * n)
            .map(|v| uf.find_mut(v as u32))
            .collect();
        Diagram::from_raw_labels(n, &raw)
    }

    /// The involution: reflect in the horizontal axis.
    pub fn star(&self) -> Diagram {
        let (upper, lower) = self.labels.split_at(self.n);
        let raw: Vec<u32> = lower.iter().chain(upper).copied().collect();
        Diagram::from_raw_labels(self.n, &raw)
    }

    /// Bitmask over labels: bit 0 = has an upper vertex, bit 1 = has a lower vertex.
    fn label_sides(&self) -> Vec<u8> {
        let mut sides = vec![0u8; self.num_blocks()];
        for (pos, &l) in self.labels.iter().enumerate() {
            sides[l as usize] |= if pos < self.n { 1 } else { 2 };
        }
        sides
    }

    pub fn rank(&self) -> usize {
        self.label_sides().iter().filter(|&&s| s == 3).count()
    }

    pub fn dom(&self) -> Vec<usize> {
        let sides = self.label_sides();
        (1..=self.n)
            .filter(|&i| sides[self.labels[i - 1] as usize] == 3)
            .collect()
    }

    pub fn codom(&self) -> Vec<usize> {
        let sides = self.label_sides();
        (1..=self.n)
            .filter(|&i| sides[self.labels[self.n + i - 1] as usize] == 3)
            .collect()
    }

    pub fn ker(&self) -> SetPartitionOfN {
        SetPartitionOfN::from_labels(&self.labels[..self.n])
    }

    pub fn coker(&self) -> SetPartitionOfN {
        SetPartitionOfN::from_labels(&self.labels[self.n..])
    }

    /// Whether `ker(self) = ker(other)`, without building either partition.
    pub(crate) fn same_ker(&self, other: &Diagram) -> bool {
        same_pattern(&self.labels[..self.n], &other.labels[..other.n])
    }

    pub fn stats(&self) -> Stats {
        Stats {
            rank: self.rank(),
            dom: self.dom(),
            codom: self.codom(),
            ker: self.ker(),
            coker: self.coker(),
        }
    }

    /// Non-crossing test in the cyclic order `1, 2, ..., n, n', ..., 1'`.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let order: Vec<usize> = (0..n).chain((n..2 * n).rev()).collect();
        let mut last = vec![0usize; self.num_blocks()];
        for (idx, &p) in order.iter().enumerate() {
            last[self.labels[p] as usize] = idx;
        }
        let mut seen = vec![false; self.num_blocks()];
        let mut open: Vec<u32> = Vec::new();
        for (idx, &p) in order.iter().enumerate() {
            let l = self.labels[p];
            if seen[l as usize] {
                if open.last() != Some(&l) {
                    return false;
                }
                if last[l as usize] == idx {
                    open.pop();
                }
            } else {
                seen[l as usize] = true;
                if last[l as usize] != idx {
                    open.push(l);
                }
            }
        }
        true
    }

    fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.num_blocks()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    pub fn in_family(&self, family: Family) -> bool {
        let sizes = || self.block_sizes();
        match family {
            Family::P => true,
            Family::PB => sizes().iter().all(|&s| s <= 2),
            Family::B => sizes().iter().all(|&s| s == 2),
            Family::PP => self.is_planar(),
            Family::M => self.is_planar() && sizes().iter().all(|&s| s <= 2),
            Family::TL => self.is_planar() && sizes().iter().all(|&s| s == 2),
            Family::S => self.rank() == self.n && sizes().iter().all(|&s| s == 2),
            Family::TLM => self.n >= 1 && self.labels[0] == self.labels[self.n] && self.is_planar(),
        }
    }

    /// `p² = p = p*`.
    pub fn is_projection(&self) -> bool {
        self.star() == *self && self.product(self) == *self
    }

    /// Relabels the upper row: vertex `i` of the result takes the role of vertex
    /// `perm[i-1]` of `self` (0-based `perm`). This is `θ·self` for the
    /// permutation `θ` with transversals `{i, perm[i-1]'}`.
    pub(crate) fn permute_upper(&self, perm: &[usize]) -> Diagram {
        let n = self.n;
        let raw: Vec<u32> = perm
            .iter()
            .map(|&j| self.labels[j])
            .chain(self.labels[n..].iter().copied())
            .collect();
        Diagram::from_raw_labels(n, &raw)
    }
}

/// Whether two label slices induce the same partition of their positions.
fn same_pattern(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let bound = a
        .iter()
        .chain(b)
        .copied()
        .max()
        .map_or(0, |m| m as usize + 1);
    let mut fwd = vec![u32::MAX; bound];
    let mut back = vec![u32::MAX; bound];
    for (&x, &y) in a.iter().zip(b) {
        let (f, r) = (&mut fwd[x as usize], &mut back[y as usize]);
        if *f == u32::MAX && *r == u32::MAX {
            *f = y;
            *r = x;
        } else if *f != y || *r != x {
            return false;
        }
    }
    true
}

impl Mul for &Diagram {
    type Output = Diagram;

    /// Panics on a degree mismatch; use [`Diagram::multiply`] for a checked product.
    fn mul(self, rhs: &Diagram) -> Diagram {
        assert_eq!(
            self.n, rhs.n,
            "cannot multiply diagrams of different degree"
        );
        self.product(rhs)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({}; {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str, n: usize) -> Diagram {
        Diagram::parse(text, n).unwrap()
    }

    const SAMPLE_A: &str = "[[1,4],[2,3,-4,-5],[5,6],[-1,-2,-6],[-3]]";
    const SAMPLE_B: &str = "[[1,2],[3,4,-1],[5,-4,-5,-6],[6],[-2,-3]]";

    #[test]
    fn parse_identity_and_round_trip() {
        assert_eq!(d("[[1,-1]]", 1), Diagram::identity(1));
        assert_eq!(d(SAMPLE_A, 6).to_string(), SAMPLE_A);
        assert_eq!(
            d(" [ [ -4,4 ,1],[2, -1,-2],[3,-3]] ", 4).to_string(),
            "[[1,4,-4],[2,-1,-2],[3,-3]]"
        );
        assert_eq!(Diagram::identity(0).to_string(), "[]");
        assert_eq!(d("[]", 0), Diagram::identity(0));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Diagram::parse("[[1],[1]]", 1),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            Diagram::parse("[[1,-1]]", 2),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            Diagram::parse("[[1,2,-1]]", 1),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            Diagram::parse("[[0,1,-1]]", 1),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            Diagram::parse("[[1,-1],[]]", 1),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(matches!(
            Diagram::parse("[[1,-1]", 1),
            Err(Error::Syntax(_))
        ));
        assert!(matches!(
            Diagram::parse("[[1,x]]", 1),
            Err(Error::Syntax(_))
        ));
    }

    #[test]
    fn sample_product() {
        let alpha = d(SAMPLE_A, 6);
        let beta = d(SAMPLE_B, 6);
        let prod = alpha.multiply(&beta).unwrap();
        assert_eq!(prod.to_string(), "[[1,4],[2,3,-1,-4,-5,-6],[5,6],[-2,-3]]");
    }

    #[test]
    fn multiply_checks_degree() {
        let err = Diagram::identity(2)
            .multiply(&Diagram::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn star_of_sample() {
        let alpha = d(SAMPLE_A, 6);
        assert_eq!(
            alpha.star().to_string(),
            "[[1,2,6],[3],[4,5,-2,-3],[-1,-4],[-5,-6]]"
        );
        assert_eq!(Diagram::identity(4).star(), Diagram::identity(4));
    }

    #[test]
    fn stats_of_sample() {
        let s = d(SAMPLE_A, 6).stats();
        assert_eq!(s.rank, 1);
        assert_eq!(s.dom, vec![2, 3]);
        assert_eq!(s.codom, vec![4, 5]);
        assert_eq!(s.ker.to_string(), "(1,4|2,3|5,6)");
        assert_eq!(s.coker.to_string(), "(1,2,6|3|4,5)");

        let id = Diagram::identity(3).stats();
        assert_eq!(id.rank, 3);
        assert_eq!(id.ker, SetPartitionOfN::discrete(3));
        assert_eq!(id.coker, SetPartitionOfN::discrete(3));
    }

    #[test]
    fn planarity() {
        assert!(d(SAMPLE_B, 6).is_planar());
        assert!(!d(SAMPLE_A, 6).is_planar());
        assert!(Diagram::identity(5).is_planar());
        assert!(!d("[[1,-2],[2,-1]]", 2).is_planar());
        // an arc nested under a transversal-free upper block is fine
        assert!(d("[[1,4],[2,3],[-1,-2],[-3,-4]]", 4).is_planar());
        assert!(!d("[[1,3],[2,4],[-1],[-2],[-3],[-4]]", 4).is_planar());
    }

    #[test]
    fn family_membership() {
        let alpha = d(SAMPLE_A, 6);
        assert!(alpha.in_family(Family::P));
        assert!(!alpha.in_family(Family::PB));
        assert!(!alpha.in_family(Family::PP));
        for f in Family::ALL {
            assert!(Diagram::identity(4).in_family(f), "{f}");
        }
        let swap = d("[[1,-2],[2,-1]]", 2);
        assert!(swap.in_family(Family::S));
        assert!(swap.in_family(Family::B));
        assert!(!swap.in_family(Family::TL));
    }

    #[test]
    fn projections() {
        assert!(d("[[1],[2],[3],[-1],[-2],[-3]]", 3).is_projection());
        assert!(!d("[[1,2],[3],[-1],[-2],[-3]]", 3).is_projection());
        assert!(d("[[1,2,-1,-2],[3,-3]]", 3).is_projection());
    }

    #[test]
    fn same_ker_agrees_with_ker() {
        let a = d("[[1,2],[3,-1],[-2,-3]]", 3);
        let b = d("[[1,2,-3],[3],[-1,-2]]", 3);
        let c = d("[[1,3],[2,-1],[-2,-3]]", 3);
        assert!(a.same_ker(&b));
        assert!(!a.same_ker(&c));
        assert_eq!(a.same_ker(&c), a.ker() == c.ker());
    }

    #[test]
    fn permute_upper_is_left_multiplication() {
        let a = d(SAMPLE_A, 6);
        let perm = [2usize, 0, 1, 5, 3, 4];
        let theta = Diagram::from_parts(
            6,
            perm.iter()
                .enumerate()
                .map(|(i, &j)| (vec![i + 1], vec![j + 1])),
        )
        .unwrap();
        assert_eq!(a.permute_upper(&perm), &theta * &a);
    }
}
