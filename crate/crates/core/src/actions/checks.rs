use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ActionTable;
use crate::families::generators;
use crate::{Diagram, EnumeratedMonoid, EquivRelation, Result};

/// How many pairs the action law is checked on.
#[derive(Debug, Clone, Copy)]
pub enum LawMode {
    /// Every pair of elements of the enumerated monoid.
    Full,
    /// `samples` pairs of random generator words of length at most `max_len`.
    Sampled {
        samples: usize,
        max_len: usize,
        seed: u64,
    },
}

/// A witness that `(s·a)·b ≠ s·(ab)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub state: usize,
    pub a: Diagram,
    pub b: Diagram,
    pub left: usize,
    pub right: usize,
}

/// Row `i` is the transformation induced by `elements[i]`.
pub fn transformations(t: &ActionTable, elements: &[Diagram]) -> Result<Vec<Vec<u32>>> {
    elements.par_iter().map(|a| t.transformation(a)).collect()
}

fn first_violation(
    t: &ActionTable,
    ta: &[u32],
    tb: &[u32],
    tab: &[u32],
) -> Option<(usize, usize, usize)> {
    (0..t.len()).find_map(|s| {
        let left = tb[ta[s] as usize] as usize;
        let right = tab[s] as usize;
        (left != right).then_some((s, left, right))
    })
}

fn random_word(gens: &[Diagram], n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> Diagram {
    let len = rng.random_range(0..=max_len);
    (0..len).fold(Diagram::identity(n), |x, _| {
        x.product(&gens[rng.random_range(0..gens.len())])
    })
}

/// Checks `(s·a)·b = s·(ab)` and returns the first failure found.
pub fn check_action_law(
    t: &ActionTable,
    monoid: Option<&EnumeratedMonoid>,
    mode: LawMode,
) -> Result<Option<Violation>> {
    let n = t.degree();
    let wrap = |s, a: &Diagram, b: &Diagram, l, r| Violation {
        state: s,
        a: a.clone(),
        b: b.clone(),
        left: l,
        right: r,
    };
    match mode {
        LawMode::Full => {
            let m = monoid.ok_or_else(|| {
                crate::Error::Precondition("a full check needs the enumerated monoid".into())
            })?;
            let rows = transformations(t, m.elements())?;
            let found = (0..m.len()).into_par_iter().find_map_first(|i| {
                (0..m.len()).find_map(|j| {
                    let k = m.product(i, j);
                    first_violation(t, &rows[i], &rows[j], &rows[k])
                        .map(|(s, l, r)| (s, i, j, l, r))
                })
            });
            Ok(found.map(|(s, i, j, l, r)| wrap(s, m.get(i), m.get(j), l, r)))
        }
        LawMode::Sampled {
            samples,
            max_len,
            seed,
        } => {
            let gens = generators(t.family(), n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let a = random_word(&gens, n, max_len, &mut rng);
                let b = random_word(&gens, n, max_len, &mut rng);
                let ab = a.product(&b);
                let (ta, tb, tab) = (
                    t.transformation(&a)?,
                    t.transformation(&b)?,
                    t.transformation(&ab)?,
                );
                if let Some((s, l, r)) = first_violation(t, &ta, &tb, &tab) {
                    return Ok(Some(wrap(s, &a, &b, l, r)));
                }
            }
            Ok(None)
        }
    }
}

/// Elements are related when they induce the same transformation.
pub fn kernel(t: &ActionTable, monoid: &EnumeratedMonoid) -> Result<EquivRelation> {
    Ok(EquivRelation::from_keys(transformations(
        t,
        monoid.elements(),
    )?))
}

/// Two distinct elements acting identically, if there are any.
pub fn check_faithful_full(
    t: &ActionTable,
    monoid: &EnumeratedMonoid,
) -> Result<Option<(Diagram, Diagram)>> {
    let rows = transformations(t, monoid.elements())?;
    let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if let Some(&j) = seen.get(row.as_slice()) {
            return Ok(Some((monoid.get(j).clone(), monoid.get(i).clone())));
        }
        seen.insert(row, i);
    }
    Ok(None)
}

/// Faithfulness through the minimal congruences: the kernel of an action is
/// a congruence, so it is trivial as soon as no minimal pair is identified.
/// Returns the first pair acting identically.
pub fn check_faithful_minpairs(t: &ActionTable) -> Result<Option<(Diagram, Diagram)>> {
    for (a, b) in crate::diagram::minimal_pairs(t.family(), t.degree())? {
        if t.transformation(&a)? == t.transformation(&b)? {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// States reachable from `seed` under the generators of the family, in
/// breadth-first order.
pub fn orbit(t: &ActionTable, seed: usize) -> Result<Vec<usize>> {
    let gens = generators(t.family(), t.degree());
    let mut seen = vec![false; t.len()];
    let mut order = vec![seed];
    seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    while let Some(s) = queue.pop_front() {
        for g in &gens {
            let u = t.act(s, g)?;
            if !seen[u] {
                seen[u] = true;
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    Ok(order)
}

/// Whether the seed state generates the whole action.
pub fn check_monogenic(t: &ActionTable) -> Result<bool> {
    Ok(orbit(t, t.seed()?)?.len() == t.len())
}
