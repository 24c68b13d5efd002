//! The constructed actions and their verification.
//!
//! An [`ActionTable`] is a finite state set with a rule `(state, a) ↦ state`.
//! Depending on the construction the rule is evaluated symbolically (so the
//! monoid never needs enumerating) or read from an explicit table.

mod brauer;
mod checks;
mod state;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use checks::{
    check_action_law, check_faithful_full, check_faithful_minpairs, check_monogenic, kernel, orbit,
    transformations, LawMode, Violation,
};
pub use state::ActionState;

use crate::families::{generators, projections, EnumeratedMonoid};
use crate::{BrauerContext, Diagram, EquivRelation, Error, Family, Result, SpecialName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// `ε ↦ a*εa` on projections of small rank, when the kernel is kept.
    Projection,
    /// The variant on all projections, conditioned on `R` instead.
    MuPrime,
    BrauerOdd,
    BrauerEven,
    /// Right multiplication on the classes of a right congruence.
    Quotient,
    /// An explicit table over an enumerated monoid.
    Dense,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Projection => "projection",
            Construction::MuPrime => "mu-prime",
            Construction::BrauerOdd => "brauer-odd",
            Construction::BrauerEven => "brauer-even",
            Construction::Quotient => "quotient",
            Construction::Dense => "dense",
        })
    }
}

/// How an element of the acting family is carried to the monoid the states live in.
#[derive(Debug, Clone, Copy)]
enum Conversion {
    None,
    /// `TL_{2k} → PP_k`
    TildeInverse,
    /// `TL_{2k-1} → TLM_k`
    TlOddToModel,
}

impl Conversion {
    fn apply<'a>(&self, a: &'a Diagram) -> Result<std::borrow::Cow<'a, Diagram>> {
        use std::borrow::Cow;
        Ok(match self {
            Conversion::None => Cow::Borrowed(a),
            Conversion::TildeInverse => Cow::Owned(a.untilde()?),
            Conversion::TlOddToModel => Cow::Owned(a.tl_to_model()?),
        })
    }
}

#[derive(Debug, Clone)]
enum Engine {
    Projection(Conversion),
    MuPrime,
    BrauerOdd(BrauerContext),
    BrauerEven(BrauerContext),
    Quotient {
        monoid: Arc<EnumeratedMonoid>,
        relation: EquivRelation,
        reps: Vec<usize>,
    },
    Dense {
        elements: HashMap<Diagram, usize>,
        rows: Vec<Vec<u32>>,
    },
}

/// A finite action, with the sink (if any) first and the other states sorted.
#[derive(Debug, Clone)]
pub struct ActionTable {
    family: Family,
    n: usize,
    construction: Construction,
    states: Vec<ActionState>,
    index: HashMap<ActionState, usize>,
    engine: Engine,
}

#[derive(Serialize)]
struct ActionJson<'a> {
    family: String,
    n: usize,
    construction: Construction,
    states: Vec<String>,
    generators: Vec<String>,
    transitions: Vec<Vec<usize>>,
    sink_index: Option<usize>,
    #[serde(skip)]
    _marker: std::marker::PhantomData<&'a ()>,
}

impl ActionTable {
    fn assemble(
        family: Family,
        n: usize,
        construction: Construction,
        states: impl IntoIterator<Item = ActionState>,
        engine: Engine,
    ) -> Self {
        let mut states: Vec<ActionState> = states.into_iter().collect();
        states.sort();
        states.dedup();
        let index = states
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        ActionTable {
            family,
            n,
            construction,
            states,
            index,
            engine,
        }
    }

    /// The minimum-degree action for the family.
    pub fn standard(family: Family, n: usize) -> Result<Self> {
        family.check_range(n)?;
        match family {
            Family::P | Family::PB | Family::PP | Family::M => Ok(Self::projection_action(
                family,
                n,
                family,
                n,
                Conversion::None,
            )),
            Family::TLM => Ok(Self::projection_action(
                family,
                n,
                family,
                n,
                Conversion::None,
            )),
            Family::TL if n.is_multiple_of(2) => Ok(Self::projection_action(
                family,
                n,
                Family::PP,
                n / 2,
                Conversion::TildeInverse,
            )),
            Family::TL => Ok(Self::projection_action(
                family,
                n,
                Family::TLM,
                n.div_ceil(2),
                Conversion::TlOddToModel,
            )),
            Family::B if n % 2 == 1 => Self::brauer_odd(n),
            Family::B => Self::brauer_even(n),
            Family::S => Err(Error::Precondition("no standard action for S".into())),
        }
    }

    fn projection_action(
        family: Family,
        n: usize,
        inner: Family,
        m: usize,
        conv: Conversion,
    ) -> Self {
        let ranks = if inner == Family::TLM { 1..=2 } else { 0..=2 };
        let q = ranks
            .filter(|&r| r <= m)
            .flat_map(|r| projections(inner, m, r).expect("rank within degree"));
        let states = std::iter::once(ActionState::Sink).chain(q.map(ActionState::Proj));
        Self::assemble(
            family,
            n,
            Construction::Projection,
            states,
            Engine::Projection(conv),
        )
    }

    /// The action on all projections, `p ↦ a*pa` when `p R pa`.
    pub fn mu_prime(family: Family, n: usize) -> Result<Self> {
        if !family.is_p_type() {
            return Err(Error::Precondition(format!(
                "mu-prime is defined for P, PB, PP, M, not {family}"
            )));
        }
        family.check_range(n)?;
        let all = (0..=n).flat_map(|r| projections(family, n, r).expect("rank within degree"));
        let states = std::iter::once(ActionState::Sink).chain(all.map(ActionState::Proj));
        Ok(Self::assemble(
            family,
            n,
            Construction::MuPrime,
            states,
            Engine::MuPrime,
        ))
    }

    /// Odd `n`: `I` collapsed to the sink, and the `L^U`-classes of ranks 1 and 3.
    pub fn brauer_odd(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::Precondition(
                "the odd Brauer action needs odd n".into(),
            ));
        }
        let ctx = BrauerContext::new(n)?;
        let classes = [1, 3]
            .into_iter()
            .flat_map(|r| brauer::lu_classes(&ctx, r))
            .map(ActionState::SigmaClass)
            .collect::<Vec<_>>();
        let states = std::iter::once(ActionState::Sink).chain(classes);
        Ok(Self::assemble(
            Family::B,
            n,
            Construction::BrauerOdd,
            states,
            Engine::BrauerOdd(ctx),
        ))
    }

    /// Even `n`: right multiplication on `R_γ ∪ R_ζ`, glued along `R_ζ` to
    /// the quotient action on `I`, the rank-4 `L^U`-classes of `K`, and the
    /// classes of `J`.
    pub fn brauer_even(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::Precondition(
                "the even Brauer action needs even n".into(),
            ));
        }
        let ctx = BrauerContext::new(n)?;
        let omega1 = brauer::r_class_of_gamma(n)
            .into_iter()
            .map(ActionState::Omega1);
        let chi = brauer::r_class_of_zeta(n)
            .into_iter()
            .map(ActionState::ChiClass);
        let lu: Vec<_> = brauer::lu_classes(&ctx, 4)
            .into_iter()
            .map(ActionState::LuClass)
            .collect();
        let states = std::iter::once(ActionState::Sink)
            .chain(omega1)
            .chain(chi)
            .chain(lu);
        Ok(Self::assemble(
            Family::B,
            n,
            Construction::BrauerEven,
            states,
            Engine::BrauerEven(ctx),
        ))
    }

    /// Right multiplication on the classes of `relation`, which must be a
    /// right congruence on `monoid`.
    pub fn quotient(monoid: Arc<EnumeratedMonoid>, relation: EquivRelation) -> Result<Self> {
        if relation.len() != monoid.len() {
            return Err(Error::Precondition(
                "relation and monoid differ in size".into(),
            ));
        }
        if !relation.is_right_compatible(|a, b| monoid.product(a, b)) {
            return Err(Error::Precondition("not a right congruence".into()));
        }
        let states = (0..relation.num_classes()).map(ActionState::Class);
        let reps = relation.representatives();
        let (family, n) = (monoid.family(), monoid.degree());
        Ok(Self::assemble(
            family,
            n,
            Construction::Quotient,
            states,
            Engine::Quotient {
                monoid,
                relation,
                reps,
            },
        ))
    }

    /// The right regular action of the monoid on itself.
    pub fn cayley(monoid: Arc<EnumeratedMonoid>) -> Result<Self> {
        let m = monoid.len();
        Self::quotient(monoid, EquivRelation::discrete(m))
    }

    /// Evaluates this action on every element of `monoid` and stores the result.
    pub fn tabulate(&self, monoid: &EnumeratedMonoid) -> Result<Self> {
        let rows = transformations(self, monoid.elements())?;
        let elements = monoid
            .elements()
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, d)| (d, i))
            .collect();
        Ok(ActionTable {
            family: self.family,
            n: self.n,
            construction: Construction::Dense,
            states: self.states.clone(),
            index: self.index.clone(),
            engine: Engine::Dense { elements, rows },
        })
    }

    /// Overwrites one entry of a tabulated action.
    pub fn override_transition(&mut self, a: &Diagram, state: usize, target: usize) -> Result<()> {
        let Engine::Dense { elements, rows } = &mut self.engine else {
            return Err(Error::Precondition(
                "only tabulated actions can be edited".into(),
            ));
        };
        let i = *elements
            .get(a)
            .ok_or_else(|| Error::Precondition(format!("{a} is not tabulated")))?;
        if state >= self.states.len() || target >= self.states.len() {
            return Err(Error::Precondition("state index out of range".into()));
        }
        rows[i][state] = target as u32;
        Ok(())
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn states(&self) -> &[ActionState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, s: &ActionState) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn sink_index(&self) -> Option<usize> {
        self.index_of(&ActionState::Sink)
    }

    /// `|states| - 1` when there is a global fixed point, else `|states|`.
    pub fn partial_degree(&self) -> usize {
        self.len() - usize::from(self.sink_index().is_some())
    }

    /// The state the monogenicity proofs start from.
    pub fn seed(&self) -> Result<usize> {
        let seed = match &self.engine {
            Engine::Projection(Conversion::None) => ActionState::Proj(crate::diagram::special(
                self.family,
                self.n,
                SpecialName::Pi,
            )?),
            Engine::Projection(Conversion::TildeInverse) => ActionState::Proj(
                crate::diagram::special(Family::PP, self.n / 2, SpecialName::Pi)?,
            ),
            Engine::Projection(Conversion::TlOddToModel) => ActionState::Proj(
                crate::diagram::special(Family::TLM, self.n.div_ceil(2), SpecialName::Pi)?,
            ),
            Engine::BrauerOdd(ctx) => {
                let pi = crate::diagram::special(Family::B, self.n, SpecialName::Pi)?;
                ActionState::SigmaClass(ctx.canonical(&pi))
            }
            Engine::Quotient {
                monoid, relation, ..
            } => ActionState::Class(relation.class_of(monoid.identity_index())),
            _ => {
                return Err(Error::Precondition(format!(
                    "no seed for the {} construction",
                    self.construction
                )))
            }
        };
        self.index_of(&seed)
            .ok_or_else(|| Error::InvalidTable(format!("seed {seed} is not a state")))
    }

    fn lookup(&self, s: ActionState) -> Result<usize> {
        self.index_of(&s)
            .ok_or_else(|| Error::InvalidTable(format!("transition leaves the state set: {s}")))
    }

    /// The image of `state` under `a`.
    pub fn act(&self, state: usize, a: &Diagram) -> Result<usize> {
        if a.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: a.degree(),
            });
        }
        let current = self
            .states
            .get(state)
            .ok_or_else(|| Error::Precondition(format!("no state {state}")))?;
        if let Engine::Dense { elements, rows } = &self.engine {
            let i = elements
                .get(a)
                .ok_or_else(|| Error::Precondition(format!("{a} is not tabulated")))?;
            return Ok(rows[*i][state] as usize);
        }
        if current.is_sink() {
            return Ok(state);
        }
        let next = match (&self.engine, current) {
            (Engine::Projection(conv), ActionState::Proj(e)) => {
                let a = conv.apply(a)?;
                let ea = e.product(&a);
                if e.same_ker(&ea) {
                    ActionState::Proj(a.star().product(&ea))
                } else {
                    ActionState::Sink
                }
            }
            (Engine::MuPrime, ActionState::Proj(p)) => {
                let pa = p.product(a);
                if pa.product(&pa.star()) == *p {
                    ActionState::Proj(a.star().product(&pa))
                } else {
                    ActionState::Sink
                }
            }
            (Engine::BrauerOdd(ctx), ActionState::SigmaClass(x)) => {
                match ctx.sigma_class(&x.product(a)) {
                    Some(c) => ActionState::SigmaClass(c),
                    None => ActionState::Sink,
                }
            }
            (Engine::BrauerEven(_), ActionState::Omega1(x)) => {
                let y = x.product(a);
                if y.rank() == 2 {
                    ActionState::Omega1(y)
                } else {
                    ActionState::ChiClass(y)
                }
            }
            (Engine::BrauerEven(_), ActionState::ChiClass(x)) => {
                ActionState::ChiClass(x.product(a))
            }
            (Engine::BrauerEven(ctx), ActionState::LuClass(x)) => {
                let y = x.product(a);
                if !ctx.in_k(&y) {
                    ActionState::Sink
                } else if y.rank() == 4 {
                    ActionState::LuClass(ctx.canonical(&y))
                } else {
                    ActionState::ChiClass(y.hat_pairup()?)
                }
            }
            (
                Engine::Quotient {
                    monoid,
                    relation,
                    reps,
                },
                ActionState::Class(c),
            ) => {
                let i = monoid
                    .index_of(a)
                    .ok_or_else(|| Error::Precondition(format!("{a} is not in the monoid")))?;
                ActionState::Class(relation.class_of(monoid.product(reps[*c], i)))
            }
            (_, s) => {
                return Err(Error::InvalidTable(format!(
                    "state {s} does not fit the construction"
                )))
            }
        };
        self.lookup(next)
    }

    /// The images of every state under `a`.
    pub fn transformation(&self, a: &Diagram) -> Result<Vec<u32>> {
        (0..self.len())
            .map(|s| self.act(s, a).map(|t| t as u32))
            .collect()
    }

    /// Deterministic JSON export; transitions are listed per state, one
    /// entry per generator of the family.
    pub fn to_json(&self) -> Result<String> {
        let gens = generators(self.family, self.n);
        let rows: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| self.transformation(g))
            .collect::<Result<_>>()?;
        let transitions = (0..self.len())
            .map(|s| rows.iter().map(|row| row[s] as usize).collect())
            .collect();
        let json = ActionJson {
            family: self.family.to_string(),
            n: self.n,
            construction: self.construction,
            states: self.states.iter().map(ToString::to_string).collect(),
            generators: gens.iter().map(ToString::to_string).collect(),
            transitions,
            sink_index: self.sink_index(),
            _marker: std::marker::PhantomData,
        };
        Ok(serde_json::to_string_pretty(&json).expect("serialising an action"))
    }
}
