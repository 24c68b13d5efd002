use std::fmt;
use std::str::FromStr;

use super::Diagram;
use crate::{Error, Family, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialName {
    Zeta,
    Alpha,
    Beta,
    Gamma,
    Delta,
    Pi,
}

impl SpecialName {
    pub const ALL: [SpecialName; 6] = [
        SpecialName::Zeta,
        SpecialName::Alpha,
        SpecialName::Beta,
        SpecialName::Gamma,
        SpecialName::Delta,
        SpecialName::Pi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialName::Zeta => "zeta",
            SpecialName::Alpha => "alpha",
            SpecialName::Beta => "beta",
            SpecialName::Gamma => "gamma",
            SpecialName::Delta => "delta",
            SpecialName::Pi => "pi",
        }
    }
}

impl fmt::Display for SpecialName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let name = match s.trim().to_lowercase().as_str() {
            "zeta" | "ζ" => SpecialName::Zeta,
            "alpha" | "α" => SpecialName::Alpha,
            "beta" | "β" => SpecialName::Beta,
            "gamma" | "γ" => SpecialName::Gamma,
            "delta" | "δ" => SpecialName::Delta,
            "pi" | "π" => SpecialName::Pi,
            _ => {
                return Err(Error::Unknown {
                    kind: "special element",
                    name: s.to_string(),
                })
            }
        };
        Ok(name)
    }
}

fn unknown(family: Family, n: usize, name: SpecialName) -> Error {
    Error::Unknown {
        kind: "special element",
        name: format!("{name} for {family} with n = {n}"),
    }
}

/// Pairs `{a, a+1}, {a+2, a+3}, ...` up to `n`, on one row.
fn arcs_from(a: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (a..n).step_by(2).map(|i| vec![i, i + 1])
}

fn both_rows(a: usize, n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    arcs_from(a, n)
        .map(|arc| (arc, vec![]))
        .chain(arcs_from(a, n).map(|arc| (vec![], arc)))
        .collect()
}

fn build(n: usize, parts: Vec<(Vec<usize>, Vec<usize>)>) -> Diagram {
    Diagram::from_parts(n, parts).expect("special elements are well formed")
}

/// Fills every vertex not yet covered with a singleton block.
fn pad_singletons(n: usize, mut parts: Vec<(Vec<usize>, Vec<usize>)>) -> Diagram {
    let mut upper = vec![false; n + 1];
    let mut lower = vec![false; n + 1];
    for (u, l) in &parts {
        u.iter().for_each(|&i| upper[i] = true);
        l.iter().for_each(|&i| lower[i] = true);
    }
    parts.extend((1..=n).filter(|&i| !upper[i]).map(|i| (vec![i], vec![])));
    parts.extend((1..=n).filter(|&i| !lower[i]).map(|i| (vec![], vec![i])));
    build(n, parts)
}

fn p_type(n: usize, name: SpecialName) -> Option<Diagram> {
    let parts = match name {
        SpecialName::Zeta => vec![],
        SpecialName::Alpha => vec![(vec![1, 2], vec![])],
        SpecialName::Beta => vec![(vec![], vec![1, 2])],
        SpecialName::Gamma => vec![(vec![1], vec![1])],
        SpecialName::Pi => vec![(vec![1], vec![1]), (vec![2], vec![2])],
        SpecialName::Delta => return None,
    };
    Some(pad_singletons(n, parts))
}

fn tl_model(n: usize, name: SpecialName) -> Option<Diagram> {
    let parts = match name {
        SpecialName::Zeta => vec![(vec![1], vec![1])],
        SpecialName::Alpha => vec![(vec![1, 2], vec![1])],
        SpecialName::Beta => vec![(vec![1], vec![1, 2])],
        SpecialName::Pi => vec![(vec![1], vec![1]), (vec![2], vec![2])],
        SpecialName::Gamma | SpecialName::Delta => return None,
    };
    Some(pad_singletons(n, parts))
}

fn brauer_odd(n: usize, name: SpecialName) -> Option<Diagram> {
    let mut parts = match name {
        SpecialName::Zeta => {
            let mut p = both_rows(2, n);
            p.push((vec![1], vec![1]));
            p
        }
        SpecialName::Alpha | SpecialName::Beta => {
            let mut p = vec![
                (vec![1, 2], vec![]),
                (vec![3], vec![1]),
                (vec![], vec![2, 3]),
            ];
            p.extend(both_rows(4, n));
            let alpha = build(n, p);
            return Some(if name == SpecialName::Alpha {
                alpha
            } else {
                alpha.star()
            });
        }
        SpecialName::Pi => both_rows(4, n),
        SpecialName::Gamma | SpecialName::Delta => return None,
    };
    if name == SpecialName::Pi {
        parts.extend((1..=3).map(|i| (vec![i], vec![i])));
    }
    Some(build(n, parts))
}

fn brauer_even(n: usize, name: SpecialName) -> Diagram {
    let mut parts = match name {
        SpecialName::Zeta => both_rows(1, n),
        SpecialName::Alpha | SpecialName::Beta => {
            let mut p = vec![(vec![1, 4], vec![]), (vec![2, 3], vec![])];
            p.extend(arcs_from(5, n).map(|arc| (arc, vec![])));
            p.extend(arcs_from(1, n).map(|arc| (vec![], arc)));
            let alpha = build(n, p);
            return if name == SpecialName::Alpha {
                alpha
            } else {
                alpha.star()
            };
        }
        SpecialName::Gamma => vec![(vec![1], vec![1]), (vec![2], vec![2])],
        SpecialName::Delta => vec![(vec![1], vec![2]), (vec![2], vec![1])],
        SpecialName::Pi => (1..=4).map(|i| (vec![i], vec![i])).collect(),
    };
    match name {
        SpecialName::Gamma | SpecialName::Delta => parts.extend(both_rows(3, n)),
        SpecialName::Pi => parts.extend(both_rows(5, n)),
        _ => {}
    }
    build(n, parts)
}

/// The distinguished elements used to generate the minimal congruences and
/// to seed the actions.
///
/// For `TL` the elements are transported from `PP_{n/2}` (even `n`) or from
/// the planar model `TLM_{(n+1)/2}` (odd `n`).
pub fn special(family: Family, n: usize, name: SpecialName) -> Result<Diagram> {
    family.check_range(n)?;
    let found = match family {
        Family::P | Family::PB | Family::PP | Family::M => p_type(n, name),
        Family::TLM => tl_model(n, name),
        Family::B if n % 2 == 1 => brauer_odd(n, name),
        Family::B => Some(brauer_even(n, name)),
        Family::TL if n.is_multiple_of(2) => p_type(n / 2, name).map(|d| d.tilde()).transpose()?,
        Family::TL => tl_model(n.div_ceil(2), name)
            .map(|d| d.model_to_tl())
            .transpose()?,
        Family::S => None,
    };
    found.ok_or_else(|| unknown(family, n, name))
}

/// Generating pairs of the minimal congruences.
pub fn minimal_pairs(family: Family, n: usize) -> Result<Vec<(Diagram, Diagram)>> {
    use SpecialName::*;
    let names: &[(SpecialName, SpecialName)] = match family {
        Family::P | Family::PB | Family::PP | Family::M => {
            &[(Zeta, Alpha), (Zeta, Beta), (Zeta, Gamma)]
        }
        Family::TL if n.is_multiple_of(2) => &[(Zeta, Alpha), (Zeta, Beta), (Zeta, Gamma)],
        Family::TL | Family::TLM => &[(Zeta, Alpha), (Zeta, Beta)],
        Family::B if n % 2 == 1 => &[(Zeta, Alpha), (Zeta, Beta)],
        Family::B => &[(Zeta, Alpha), (Zeta, Beta), (Gamma, Delta)],
        Family::S => {
            return Err(Error::Unknown {
                kind: "minimal pairs",
                name: family.to_string(),
            })
        }
    };
    names
        .iter()
        .map(|&(a, b)| Ok((special(family, n, a)?, special(family, n, b)?)))
        .collect()
}
