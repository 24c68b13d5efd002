//! Diagram monoids and their minimum-degree transformation representations.
//!
//! The crate covers the partition monoid `P_n` and its regular `*`-submonoids
//! (partial Brauer, Brauer, planar partition, Motzkin, Temperley–Lieb), the
//! explicit faithful actions of minimum degree, checkers for those actions,
//! closed-form degree formulae, and a brute-force oracle for tiny monoids.
//!
//! Module map:
//!
//! * [`diagram`]: the [`Diagram`] value type, products, involution, statistics and
//!   the auxiliary maps (bar, hat, plus, tilde), plus the special elements.
//! * [`families`]: enumeration of each family, projections, Green's relations and
//!   the Brauer stabiliser structure.
//! * [`actions`]: right-congruence and projection actions, their construction and
//!   verification.
//! * [`degrees`]: number sequences and degree formulae, generic over the integer
//!   scalar used for counting.
//! * [`oracle`]: independent brute force over multiplication tables.

pub mod actions;
pub mod degrees;
pub mod diagram;
mod error;
pub mod families;
mod family;
pub mod oracle;
pub mod relation;

pub use actions::{ActionState, ActionTable, Construction};
pub use degrees::{Count, DegreeReport, SequenceCache, SequenceKind};
pub use diagram::{BlockKind, Diagram, SetPartitionOfN, SpecialName, Stats, Vertex};
pub use error::{Error, Result};
pub use families::{BrauerContext, EnumeratedMonoid, GreenRelation};
pub use family::{Budget, Family};
pub use oracle::TableMonoid;
pub use relation::EquivRelation;

/// Exact counts: every count in the crate that can outgrow a machine word.
pub type BigCount = num_bigint::BigUint;

/// Memoised sequences over exact integers.
pub type BigSequences = SequenceCache<BigCount>;

/// Degree reports with exact integer fields.
pub type BigDegreeReport = DegreeReport<BigCount>;
