use crate::{Diagram, Family};

/// Identity on every vertex outside `touched`, plus the given blocks.
fn local(n: usize, touched: &[usize], parts: Vec<(Vec<usize>, Vec<usize>)>) -> Diagram {
    let rest = (1..=n)
        .filter(|i| !touched.contains(i))
        .map(|i| (vec![i], vec![i]));
    Diagram::from_parts(n, parts.into_iter().chain(rest).collect::<Vec<_>>())
        .expect("generator is well formed")
}

fn transposition(n: usize, i: usize) -> Diagram {
    local(
        n,
        &[i, i + 1],
        vec![(vec![i], vec![i + 1]), (vec![i + 1], vec![i])],
    )
}

fn cup_cap(n: usize, i: usize) -> Diagram {
    local(
        n,
        &[i, i + 1],
        vec![(vec![i, i + 1], vec![]), (vec![], vec![i, i + 1])],
    )
}

fn cut(n: usize, i: usize) -> Diagram {
    local(n, &[i], vec![(vec![i], vec![]), (vec![], vec![i])])
}

fn glue(n: usize, i: usize) -> Diagram {
    local(n, &[i, i + 1], vec![(vec![i, i + 1], vec![i, i + 1])])
}

fn adjacent_transpositions(n: usize) -> impl Iterator<Item = Diagram> {
    (1..n).map(move |i| transposition(n, i))
}

/// A generating set for the family as a monoid (the identity is implied).
pub fn generators(family: Family, n: usize) -> Vec<Diagram> {
    let mut gens: Vec<Diagram> = match family {
        Family::S => adjacent_transpositions(n).collect(),
        Family::P => {
            let mut g: Vec<_> = adjacent_transpositions(n).collect();
            if n >= 2 {
                g.push(glue(n, 1));
            }
            if n >= 1 {
                g.push(cut(n, 1));
            }
            g
        }
        Family::PB => {
            let mut g: Vec<_> = adjacent_transpositions(n).collect();
            if n >= 2 {
                g.push(cup_cap(n, 1));
            }
            if n >= 1 {
                g.push(cut(n, 1));
            }
            g
        }
        Family::B => {
            let mut g: Vec<_> = adjacent_transpositions(n).collect();
            if n >= 2 {
                g.push(cup_cap(n, 1));
            }
            g
        }
        Family::PP => (1..=n)
            .map(|i| cut(n, i))
            .chain((1..n).map(|i| glue(n, i)))
            .collect(),
        Family::M => {
            let mut g: Vec<_> = (1..=n).map(|i| cut(n, i)).collect();
            for i in 1..n {
                g.push(cup_cap(n, i));
                let shift = local(
                    n,
                    &[i, i + 1],
                    vec![
                        (vec![i], vec![]),
                        (vec![i + 1], vec![i]),
                        (vec![], vec![i + 1]),
                    ],
                );
                g.push(shift.star());
                g.push(shift);
            }
            g
        }
        Family::TL => (1..n).map(|i| cup_cap(n, i)).collect(),
        Family::TLM if n >= 1 => generators(Family::TL, 2 * n - 1)
            .iter()
            .map(|t| t.tl_to_model().expect("TL generators map into the model"))
            .collect(),
        Family::TLM => Vec::new(),
    };
    gens.sort_unstable();
    gens.dedup();
    gens
}
