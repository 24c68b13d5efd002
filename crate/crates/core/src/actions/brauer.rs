//! State sets of the two Brauer actions.

use std::collections::BTreeSet;

use crate::{BrauerContext, Diagram};

/// All perfect matchings of `points`, as lists of pairs.
fn matchings(points: &[usize]) -> Vec<Vec<[usize; 2]>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let mut out = Vec::new();
    for j in 1..points.len() {
        let rest: Vec<usize> = points[1..]
            .iter()
            .copied()
            .filter(|&p| p != points[j])
            .collect();
        for mut m in matchings(&rest) {
            m.insert(0, [first, points[j]]);
            out.push(m);
        }
    }
    out
}

/// Ordered selections of `r` distinct elements of `1..=n`.
fn arrangements(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 1..=n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// Brauer diagrams whose upper row is fixed: `{i}` joined to `lower[i-1]'`
/// for `i ≤ r`, and `upper_arcs` as upper blocks. The lower row ranges over
/// all completions.
fn with_upper(n: usize, r: usize, upper_arcs: &[[usize; 2]]) -> Vec<Diagram> {
    let mut out = Vec::new();
    for ends in arrangements(n, r) {
        let free: Vec<usize> = (1..=n).filter(|i| !ends.contains(i)).collect();
        for m in matchings(&free) {
            let parts = ends
                .iter()
                .enumerate()
                .map(|(i, &b)| (vec![i + 1], vec![b]))
                .chain(upper_arcs.iter().map(|a| (a.to_vec(), vec![])))
                .chain(m.iter().map(|a| (vec![], a.to_vec())));
            out.push(Diagram::from_parts(n, parts.collect::<Vec<_>>()).expect("Brauer diagram"));
        }
    }
    out
}

/// Rank-`r` diagrams of the form `ᾱ`: transversals from `1..r`, free upper
/// vertices paired consecutively.
pub(super) fn bar_forms(n: usize, r: usize) -> Vec<Diagram> {
    let arcs: Vec<[usize; 2]> = (r + 1..n).step_by(2).map(|i| [i, i + 1]).collect();
    with_upper(n, r, &arcs)
}

/// Canonical representatives of the `L^U`-classes of rank-`r` elements of `K`.
pub(super) fn lu_classes(ctx: &BrauerContext, r: usize) -> BTreeSet<Diagram> {
    bar_forms(ctx.n, r)
        .into_iter()
        .filter(|d| ctx.in_k(d))
        .map(|d| ctx.canonical(&d))
        .collect()
}

/// The `R`-class of `γ` (kernel `{1}, {2}, {3,4}, ...`).
pub(super) fn r_class_of_gamma(n: usize) -> Vec<Diagram> {
    let arcs: Vec<[usize; 2]> = (3..n).step_by(2).map(|i| [i, i + 1]).collect();
    with_upper(n, 2, &arcs)
}

/// The `R`-class of `ζ` for even `n`: rank 0, kernel `{1,2}, {3,4}, ...`.
pub(super) fn r_class_of_zeta(n: usize) -> Vec<Diagram> {
    let arcs: Vec<[usize; 2]> = (1..n).step_by(2).map(|i| [i, i + 1]).collect();
    with_upper(n, 0, &arcs)
}
