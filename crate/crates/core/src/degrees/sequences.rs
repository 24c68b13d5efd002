use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::sync::{Mutex, OnceLock};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Unsigned};

use crate::{BigCount, Error, Result};

/// The integer type used for counting. Implemented for every unsigned type
/// with checked arithmetic, so `u64` works until it overflows and
/// [`BigCount`] always works.
pub trait Count:
    Clone
    + Debug
    + Display
    + Ord
    + Unsigned
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Unsigned
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}

pub(crate) fn lift<T: Count>(v: usize) -> Result<T> {
    T::from_usize(v).ok_or_else(|| Error::Overflow(format!("converting {v}")))
}

pub(crate) fn add<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b)
        .ok_or_else(|| Error::Overflow("a sum".into()))
}

pub(crate) fn sub<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b)
        .ok_or_else(|| Error::Overflow("a difference (negative result)".into()))
}

pub(crate) fn mul<T: Count>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Overflow("a product".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    /// Set partitions of an `n`-set (A000110).
    Bell,
    /// Involutions of an `n`-set (A000085).
    Involution,
    /// A000108.
    Catalan,
    /// A001006.
    Motzkin,
    /// `n!!`, the product `n(n-2)(n-4)...` down to 1 or 2.
    DoubleFactorial,
}

/// Memoised sequence values, safe to share between threads.
#[derive(Debug, Default)]
pub struct SequenceCache<T> {
    memo: Mutex<HashMap<SequenceKind, Vec<T>>>,
}

impl<T: Count> SequenceCache<T> {
    pub fn new() -> Self {
        SequenceCache {
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, kind: SequenceKind, n: usize) -> Result<T> {
        let mut memo = self.memo.lock().expect("sequence cache poisoned");
        let values = memo.entry(kind).or_default();
        while values.len() <= n {
            let next = next_term(kind, values)?;
            values.push(next);
        }
        Ok(values[n].clone())
    }

    /// `m!!` for odd `m ≥ -1`, with `(-1)!! = 1`.
    pub fn odd_double_factorial(&self, m: i64) -> Result<T> {
        if m == -1 {
            return Ok(T::one());
        }
        if m < -1 || m % 2 == 0 {
            return Err(Error::Precondition(format!(
                "{m}!! is not an odd double factorial"
            )));
        }
        self.get(SequenceKind::DoubleFactorial, m as usize)
    }

    pub fn binomial(&self, n: usize, k: usize) -> Result<T> {
        if k > n {
            return Ok(T::zero());
        }
        let k = k.min(n - k);
        let mut acc = T::one();
        for i in 0..k {
            // exact at each step: acc = C(n, i) * (n - i) / (i + 1)
            acc = mul(&acc, &lift(n - i)?)? / lift(i + 1)?;
        }
        Ok(acc)
    }
}

/// The next term given all earlier ones.
fn next_term<T: Count>(kind: SequenceKind, prev: &[T]) -> Result<T> {
    let n = prev.len();
    match kind {
        SequenceKind::Bell => {
            // first entry of row n of the Bell triangle
            let mut row = vec![T::one()];
            for _ in 0..n {
                let mut next = vec![row.last().expect("non-empty row").clone()];
                for (j, above) in row.iter().enumerate() {
                    let v = add(&next[j], above)?;
                    next.push(v);
                }
                row = next;
            }
            Ok(row.swap_remove(0))
        }
        SequenceKind::Involution => match n {
            0 | 1 => Ok(T::one()),
            _ => add(&prev[n - 1], &mul(&lift(n - 1)?, &prev[n - 2])?),
        },
        SequenceKind::Catalan => {
            let mut acc = T::zero();
            if n == 0 {
                return Ok(T::one());
            }
            for i in 0..n {
                acc = add(&acc, &mul(&prev[i], &prev[n - 1 - i])?)?;
            }
            Ok(acc)
        }
        SequenceKind::Motzkin => {
            if n <= 1 {
                return Ok(T::one());
            }
            let mut acc = prev[n - 1].clone();
            for k in 0..=n - 2 {
                acc = add(&acc, &mul(&prev[k], &prev[n - 2 - k])?)?;
            }
            Ok(acc)
        }
        SequenceKind::DoubleFactorial => match n {
            0 | 1 => Ok(T::one()),
            _ => mul(&lift(n)?, &prev[n - 2]),
        },
    }
}

/// The process-wide exact cache.
pub fn big_sequences() -> &'static SequenceCache<BigCount> {
    static CACHE: OnceLock<SequenceCache<BigCount>> = OnceLock::new();
    CACHE.get_or_init(SequenceCache::new)
}
