use crate::degrees::big_sequences;
use crate::{BigCount, Budget, Diagram, Error, Family, Result, SequenceKind};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Any,
    AtMostTwo,
    ExactlyTwo,
}

/// Recursive generator of set partitions of the `2n` vertex positions,
/// visited in `order`, subject to a block-size shape and optionally the
/// non-crossing condition with respect to `order`.
struct Generator<'a> {
    n: usize,
    order: &'a [usize],
    shape: Shape,
    planar: bool,
    labels: Vec<u32>,
    sizes: Vec<u8>,
    out: Vec<Diagram>,
}

impl Generator<'_> {
    fn run(&mut self, idx: usize, open: Vec<u32>) {
        let total = self.order.len();
        if idx == total {
            if self.shape == Shape::ExactlyTwo && self.sizes.iter().any(|&s| s != 2) {
                return;
            }
            let mut raw = vec![0u32; total];
            for (i, &pos) in self.order.iter().enumerate() {
                raw[pos] = self.labels[i];
            }
            self.out.push(Diagram::from_raw_labels(self.n, &raw));
            return;
        }
        if self.shape == Shape::ExactlyTwo {
            let singles = self.sizes.iter().filter(|&&s| s == 1).count();
            if singles > total - idx {
                return;
            }
        }
        let joinable: Vec<usize> = if self.planar {
            (0..open.len()).collect()
        } else {
            (0..self.sizes.len()).collect()
        };
        for j in joinable {
            let block = if self.planar { open[j] } else { j as u32 };
            let size = self.sizes[block as usize];
            if self.shape != Shape::Any && size >= 2 {
                continue;
            }
            self.labels[idx] = block;
            self.sizes[block as usize] += 1;
            let next_open = if self.planar {
                let mut o = open[..=j].to_vec();
                if self.shape != Shape::Any {
                    o.pop();
                }
                o
            } else {
                Vec::new()
            };
            self.run(idx + 1, next_open);
            self.sizes[block as usize] -= 1;
        }
        let fresh = self.sizes.len() as u32;
        self.labels[idx] = fresh;
        self.sizes.push(1);
        let mut next_open = open;
        if self.planar {
            next_open.push(fresh);
        }
        self.run(idx + 1, next_open);
        self.sizes.pop();
    }
}

fn generate(n: usize, shape: Shape, planar: bool) -> Vec<Diagram> {
    let order: Vec<usize> = if planar {
        (0..n).chain((n..2 * n).rev()).collect()
    } else {
        (0..2 * n).collect()
    };
    let mut g = Generator {
        n,
        order: &order,
        shape,
        planar,
        labels: vec![0; 2 * n],
        sizes: Vec::new(),
        out: Vec::new(),
    };
    g.run(0, Vec::new());
    g.out
}

fn permutations(n: usize) -> Vec<Diagram> {
    fn rec(n: usize, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Diagram>) {
        if perm.len() == n {
            let raw: Vec<u32> = (0..n as u32)
                .chain((0..n).map(|j| perm.iter().position(|&p| p == j).unwrap() as u32))
                .collect();
            out.push(Diagram::from_raw_labels(n, &raw));
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                perm.push(j);
                rec(n, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `|family_n|`, from the closed-form counts.
pub fn expected_size(family: Family, n: usize) -> Result<BigCount> {
    let seq = big_sequences();
    let double_factorial = |m: usize| seq.odd_double_factorial(m as i64 - 1);
    match family {
        Family::P => seq.get(SequenceKind::Bell, 2 * n),
        Family::PB => seq.get(SequenceKind::Involution, 2 * n),
        Family::B => double_factorial(2 * n),
        Family::PP => seq.get(SequenceKind::Catalan, 2 * n),
        Family::M => seq.get(SequenceKind::Motzkin, 2 * n),
        Family::TL => seq.get(SequenceKind::Catalan, n),
        Family::S => Ok((1..=n).map(BigCount::from).product()),
        Family::TLM if n == 0 => Ok(BigCount::from(0u8)),
        Family::TLM => seq.get(SequenceKind::Catalan, 2 * n - 1),
    }
}

pub(super) fn check_budget(family: Family, n: usize, budget: Budget) -> Result<()> {
    let needed = expected_size(family, n)?;
    if needed > BigCount::from(budget.max_elements) {
        return Err(Error::BudgetExceeded {
            needed: format!("{family}_{n} has {needed} elements"),
            budget: budget.max_elements,
        });
    }
    Ok(())
}

/// All elements of the family, sorted.
pub(super) fn elements(family: Family, n: usize) -> Vec<Diagram> {
    let mut out = match family {
        Family::P => generate(n, Shape::Any, false),
        Family::PB => generate(n, Shape::AtMostTwo, false),
        Family::B => generate(n, Shape::ExactlyTwo, false),
        Family::PP => generate(n, Shape::Any, true),
        Family::M => generate(n, Shape::AtMostTwo, true),
        Family::TL => generate(n, Shape::ExactlyTwo, true),
        Family::S => permutations(n),
        Family::TLM => generate(n, Shape::Any, true)
            .into_iter()
            .filter(|d| d.in_family(Family::TLM))
            .collect(),
    };
    out.sort_unstable();
    out
}

/// Set partitions of `{1..n}` as restricted growth strings.
pub(super) fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur.push(l);
            rec(i + 1, n, cur, max.max(l + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// All rank-`r` projections of the family, sorted.
pub(super) fn projections(family: Family, n: usize, r: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    for part in set_partitions(n) {
        let blocks = part.iter().max().map_or(0, |&m| m as usize + 1);
        if r > blocks {
            continue;
        }
        // choose which r blocks are transversals
        let mut chosen = vec![false; blocks];
        choose(&mut chosen, 0, r, &mut |chosen| {
            let shift = blocks as u32;
            let lower = part
                .iter()
                .map(|&l| if chosen[l as usize] { l } else { l + shift });
            let raw: Vec<u32> = part.iter().copied().chain(lower).collect();
            let d = Diagram::from_raw_labels(n, &raw);
            if d.in_family(family) {
                out.push(d);
            }
        });
    }
    out.sort_unstable();
    out
}

fn choose(chosen: &mut Vec<bool>, start: usize, left: usize, f: &mut dyn FnMut(&[bool])) {
    if left == 0 {
        f(chosen);
        return;
    }
    for i in start..chosen.len() {
        if chosen.len() - i < left {
            break;
        }
        chosen[i] = true;
        choose(chosen, i + 1, left - 1, f);
        chosen[i] = false;
    }
}
