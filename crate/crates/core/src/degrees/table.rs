use std::fmt::Write;

use super::formulas::DegreeReport;
use super::sequences::{Count, SequenceCache};
use crate::{Family, Result};

/// Row order of the degree table.
pub const TABLE_FAMILIES: [Family; 6] = [
    Family::P,
    Family::PB,
    Family::B,
    Family::PP,
    Family::M,
    Family::TL,
];

pub const GRAY_MARKER: &str = "outside formula validity";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry<T> {
    pub family: Family,
    pub n: usize,
    /// `(deg', deg)` from the formulae, or `None` below the validity range.
    pub values: Option<(T, T)>,
}

/// All entries for `n = 0..=max_n`, family by family.
pub fn degree_table<T: Count>(seq: &SequenceCache<T>, max_n: usize) -> Result<Vec<TableEntry<T>>> {
    let mut out = Vec::new();
    for family in TABLE_FAMILIES {
        for n in 0..=max_n {
            let values = if family.in_range(n) {
                let r = DegreeReport::compute(seq, family, n)?;
                Some((r.deg_prime, r.deg))
            } else {
                None
            };
            out.push(TableEntry { family, n, values });
        }
    }
    Ok(out)
}

pub fn degree_table_csv<T: Count>(entries: &[TableEntry<T>]) -> String {
    let mut s = String::from("family,n,deg_prime,deg,source\n");
    for e in entries {
        match &e.values {
            Some((dp, d)) => writeln!(s, "{},{},{},{},formula", e.family, e.n, dp, d),
            None => writeln!(s, "{},{},,,{}", e.family, e.n, GRAY_MARKER),
        }
        .expect("writing to a String");
    }
    s
}

/// One JSON object per line inside a top-level array. Numbers are written
/// exactly, whatever their size.
pub fn degree_table_json<T: Count>(entries: &[TableEntry<T>]) -> String {
    let mut s = String::from("[\n");
    for (i, e) in entries.iter().enumerate() {
        let sep = if i + 1 == entries.len() { "" } else { "," };
        match &e.values {
            Some((dp, d)) => writeln!(
                s,
                "  {{\"family\":\"{}\",\"n\":{},\"deg_prime\":{},\"deg\":{},\"source\":\"formula\"}}{sep}",
                e.family, e.n, dp, d
            ),
            None => writeln!(
                s,
                "  {{\"family\":\"{}\",\"n\":{},\"source\":\"{GRAY_MARKER}\"}}{sep}",
                e.family, e.n
            ),
        }
        .expect("writing to a String");
    }
    s.push_str("]\n");
    s
}
