//! Counting sequences and the closed-form degree formulae.
//!
//! Everything here is generic over the integer type through [`Count`]; the
//! crate-root aliases fix it to an arbitrary-precision integer.

mod formulas;
mod sequences;
mod table;

pub use formulas::{brauer_deg_prime_closed, brauer_deg_prime_sum, brauer_p, q_size, DegreeReport};
pub use sequences::{big_sequences, Count, SequenceCache, SequenceKind};
pub use table::{
    degree_table, degree_table_csv, degree_table_json, TableEntry, GRAY_MARKER, TABLE_FAMILIES,
};
