use std::fmt;

/// A set partition of `{1..n}`, stored as a restricted growth string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionOfN {
    labels: Vec<u32>,
}

impl SetPartitionOfN {
    pub(crate) fn from_labels(raw: &[u32]) -> Self {
        SetPartitionOfN {
            labels: super::canonical_labels(raw),
        }
    }

    /// Builds a partition from its blocks (1-based); blocks must cover `{1..n}` exactly.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut raw = vec![u32::MAX; n];
        for (label, block) in blocks.iter().enumerate() {
            for &i in block {
                if i == 0 || i > n || raw[i - 1] != u32::MAX {
                    return None;
                }
                raw[i - 1] = label as u32;
            }
        }
        if raw.contains(&u32::MAX) {
            return None;
        }
        Some(Self::from_labels(&raw))
    }

    pub fn discrete(n: usize) -> Self {
        SetPartitionOfN {
            labels: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i + 1);
        }
        blocks
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.labels[i - 1] == self.labels[j - 1]
    }

    /// `self ⊆ other`: every block of `self` lies inside a block of `other`.
    pub fn is_contained_in(&self, other: &SetPartitionOfN) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut image = vec![u32::MAX; self.num_blocks()];
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
}

impl fmt::Display for SetPartitionOfN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for (j, i) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment() {
        let fine = SetPartitionOfN::from_blocks(4, &[vec![1], vec![2, 3], vec![4]]).unwrap();
        let coarse = SetPartitionOfN::from_blocks(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        let other = SetPartitionOfN::from_blocks(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(fine.is_contained_in(&coarse));
        assert!(!coarse.is_contained_in(&fine));
        assert!(!fine.is_contained_in(&other));
        assert!(SetPartitionOfN::discrete(4).is_contained_in(&other));
        assert!(other.is_contained_in(&other));
    }

    #[test]
    fn display_and_blocks() {
        let p = SetPartitionOfN::from_blocks(5, &[vec![2, 5], vec![1], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1|2,5|3,4)");
        assert_eq!(p.num_blocks(), 3);
        assert!(p.same_block(2, 5));
        assert!(SetPartitionOfN::from_blocks(2, &[vec![1]]).is_none());
        assert!(SetPartitionOfN::from_blocks(2, &[vec![1, 2], vec![2]]).is_none());
    }
}
