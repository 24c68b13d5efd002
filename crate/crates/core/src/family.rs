use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Which submonoid of the partition monoid an operation targets.
///
/// `TLM` is the planar model of the odd Temperley–Lieb monoid: planar partitions
/// of degree `k` in which `1` and `1'` share a block. It is isomorphic to
/// `TL_{2k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    P,
    PB,
    B,
    PP,
    M,
    TL,
    S,
    TLM,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::P,
        Family::PB,
        Family::B,
        Family::PP,
        Family::M,
        Family::TL,
        Family::S,
        Family::TLM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::PB => "PB",
            Family::B => "B",
            Family::PP => "PP",
            Family::M => "M",
            Family::TL => "TL",
            Family::S => "S",
            Family::TLM => "TLM",
        }
    }

    pub fn is_planar(self) -> bool {
        matches!(self, Family::PP | Family::M | Family::TL | Family::TLM)
    }

    /// The four families handled by the rank-at-most-two projection action.
    pub fn is_p_type(self) -> bool {
        matches!(self, Family::P | Family::PB | Family::PP | Family::M)
    }

    /// Least degree from which the degree formulae and constructions apply.
    pub fn min_degree(self, n: usize) -> usize {
        match self {
            Family::B if n.is_multiple_of(2) => 4,
            Family::B | Family::TL => 3,
            Family::S => 0,
            _ => 2,
        }
    }

    pub fn range_text(self) -> &'static str {
        match self {
            Family::B => "n ≥ 3 (n ≥ 4 for even n)",
            Family::TL => "n ≥ 3",
            Family::S => "n ≥ 0",
            _ => "n ≥ 2",
        }
    }

    pub fn in_range(self, n: usize) -> bool {
        n >= self.min_degree(n)
    }

    pub fn check_range(self, n: usize) -> Result<(), Error> {
        if self.in_range(n) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                family: self,
                n,
                range: self.range_text(),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.trim().to_ascii_uppercase();
        let family = match upper.as_str() {
            "P" => Family::P,
            "PB" => Family::PB,
            "B" => Family::B,
            "PP" => Family::PP,
            "M" => Family::M,
            "TL" => Family::TL,
            "S" => Family::S,
            "TLM" | "TL-MODEL" | "TL_MODEL" => Family::TLM,
            _ => {
                return Err(Error::Unknown {
                    kind: "family",
                    name: s.to_string(),
                })
            }
        };
        Ok(family)
    }
}

/// Upper bound on how many elements an enumeration may materialise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_elements: usize,
}

impl Budget {
    pub const DEFAULT_ELEMENTS: usize = 5_000_000;
    pub const ENV_VAR: &'static str = "DIAGRAMDEG_BUDGET";

    pub fn new(max_elements: usize) -> Self {
        Budget { max_elements }
    }

    /// Reads `DIAGRAMDEG_BUDGET`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn admits(&self, count: usize) -> bool {
        count <= self.max_elements
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_ELEMENTS)
    }
}
