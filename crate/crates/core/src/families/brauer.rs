use std::collections::{BTreeSet, VecDeque};

use crate::{Diagram, Error, Family, Result, SetPartitionOfN, SpecialName};

/// Where a Brauer diagram sits relative to `ζ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrauerClass {
    /// `a·ζ = ζ`
    pub in_t: bool,
    /// `ker(a) ⊆ κ`
    pub in_k: bool,
    pub in_i: bool,
    /// in `K` with rank at most 2
    pub in_j: bool,
}

/// The structure attached to the Brauer monoid around the rank-0 or rank-1
/// projection `ζ`: its kernel `κ`, the blocks `Z_i`, and the stabiliser
/// `U = {u ∈ S_n : u·ζ = ζ}` of order `2^k k!`.
#[derive(Debug, Clone)]
pub struct BrauerContext {
    pub n: usize,
    pub k: usize,
    pub zeta: Diagram,
    pub kappa: SetPartitionOfN,
    pub z_blocks: Vec<[usize; 2]>,
    /// `U` as 0-based permutations `p`, meaning transversals `{i, p(i)'}`.
    perms: Vec<Vec<usize>>,
}

impl BrauerContext {
    pub fn new(n: usize) -> Result<Self> {
        Family::B.check_range(n)?;
        let k = n / 2;
        let first = if n % 2 == 1 { 2 } else { 1 };
        let z_blocks: Vec<[usize; 2]> =
            (0..k).map(|i| [first + 2 * i, first + 2 * i + 1]).collect();
        let zeta = crate::diagram::special(Family::B, n, SpecialName::Zeta)?;
        let kappa = zeta.ker();

        let mut gens: Vec<Vec<usize>> = Vec::new();
        let swap = |a: usize, b: usize| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(a - 1, b - 1);
            p
        };
        for z in &z_blocks {
            gens.push(swap(z[0], z[1]));
        }
        for w in z_blocks.windows(2) {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(w[0][0] - 1, w[1][0] - 1);
            p.swap(w[0][1] - 1, w[1][1] - 1);
            gens.push(p);
        }
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q: Vec<usize> = g.iter().map(|&j| p[j]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        Ok(BrauerContext {
            n,
            k,
            zeta,
            kappa,
            z_blocks,
            perms: seen.into_iter().collect(),
        })
    }

    /// The elements of `U` as permutation diagrams.
    pub fn u(&self) -> Vec<Diagram> {
        self.perms
            .iter()
            .map(|p| {
                Diagram::from_parts(
                    self.n,
                    p.iter()
                        .enumerate()
                        .map(|(i, &j)| (vec![i + 1], vec![j + 1])),
                )
                .expect("permutation")
            })
            .collect()
    }

    pub fn u_len(&self) -> usize {
        self.perms.len()
    }

    pub fn in_k(&self, a: &Diagram) -> bool {
        a.ker().is_contained_in(&self.kappa)
    }

    pub fn classify(&self, a: &Diagram) -> Result<BrauerClass> {
        if a.degree() != self.n || !a.in_family(Family::B) {
            return Err(Error::Precondition(format!(
                "expected an element of B_{}",
                self.n
            )));
        }
        let in_k = self.in_k(a);
        Ok(BrauerClass {
            in_t: a.product(&self.zeta) == self.zeta,
            in_k,
            in_i: !in_k,
            in_j: in_k && a.rank() <= 2,
        })
    }

    /// Least element of the orbit `U·a`; this names the `L^U`-class of `a ∈ K`.
    pub fn canonical(&self, a: &Diagram) -> Diagram {
        self.perms
            .iter()
            .map(|p| a.permute_upper(p))
            .min()
            .expect("U contains the identity")
    }

    /// The class of `a` under `σ`: `None` for the ideal `I`, otherwise the
    /// canonical representative of its `L^U`-class.
    pub fn sigma_class(&self, a: &Diagram) -> Option<Diagram> {
        self.in_k(a).then(|| self.canonical(a))
    }
}
