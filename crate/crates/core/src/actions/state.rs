use std::fmt;

use crate::Diagram;

/// A point of one of the constructed action sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionState {
    /// The adjoined global fixed point (for Brauer actions, the class of the ideal `I`).
    Sink,
    /// A projection, for the projection actions.
    Proj(Diagram),
    /// An `L^U`-class of a rank-1 or rank-3 element, odd Brauer case.
    SigmaClass(Diagram),
    /// An element `R`-related to `γ`, even Brauer case.
    Omega1(Diagram),
    /// An `L^U`-class of a rank-4 element of `K`, even Brauer case.
    LuClass(Diagram),
    /// A rank-0 Brauer diagram with the kernel of `ζ`, shared by both halves
    /// of the even Brauer push-out.
    ChiClass(Diagram),
    /// A class of a right congruence, by index.
    Class(usize),
}

impl ActionState {
    pub fn is_sink(&self) -> bool {
        matches!(self, ActionState::Sink)
    }

    pub fn diagram(&self) -> Option<&Diagram> {
        match self {
            ActionState::Proj(d)
            | ActionState::SigmaClass(d)
            | ActionState::Omega1(d)
            | ActionState::LuClass(d)
            | ActionState::ChiClass(d) => Some(d),
            ActionState::Sink | ActionState::Class(_) => None,
        }
    }
}

impl fmt::Display for ActionState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionState::Sink => f.write_str("-"),
            ActionState::Proj(d) => write!(f, "proj:{d}"),
            ActionState::SigmaClass(d) => write!(f, "sigma:{d}"),
            ActionState::Omega1(d) => write!(f, "omega1:{d}"),
            ActionState::LuClass(d) => write!(f, "lu:{d}"),
            ActionState::ChiClass(d) => write!(f, "chi:{d}"),
            ActionState::Class(i) => write!(f, "class:{i}"),
        }
    }
}
