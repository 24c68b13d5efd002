use super::sequences::{add, lift, mul, sub, Count, SequenceCache, SequenceKind};
use crate::{Error, Family, Result};

/// `|Q|`, the number of projections the projection action is built on:
/// ranks 0–2 for `P`, `PB`, `PP`, `M` and even `TL`, ranks 1 and 3 for odd
/// `TL` (ranks 1 and 2 in the planar model `TLM`).
pub fn q_size<T: Count>(seq: &SequenceCache<T>, family: Family, n: usize) -> Result<T> {
    use SequenceKind::*;
    let two = lift::<T>(2)?;
    match family {
        Family::P => {
            let b = |k| seq.get(Bell, k);
            Ok(sub(&add(&b(n + 2)?, &b(n)?)?, &b(n + 1)?)? / two)
        }
        Family::PB => Ok(seq.get(Involution, n + 2)? / two),
        Family::PP => catalan_second_difference(seq, n),
        Family::M => sub(&seq.get(Motzkin, n + 2)?, &seq.get(Motzkin, n + 1)?),
        Family::TL if n.is_multiple_of(2) => catalan_second_difference(seq, n / 2),
        Family::TL => {
            let k = n.div_ceil(2);
            sub(&seq.get(Catalan, k + 1)?, &seq.get(Catalan, k)?)
        }
        Family::TLM if n >= 1 => q_size(seq, Family::TL, 2 * n - 1),
        _ => Err(Error::Precondition(format!(
            "no projection count |Q| for {family}"
        ))),
    }
}

fn catalan_second_difference<T: Count>(seq: &SequenceCache<T>, k: usize) -> Result<T> {
    let c = |i| seq.get(SequenceKind::Catalan, i);
    sub(&add(&c(k + 2)?, &c(k)?)?, &mul(&lift(2)?, &c(k + 1)?)?)
}

/// `p_r(B_n) = C(n, r)·(n-r-1)!!`, zero when `r` and `n` differ in parity.
pub fn brauer_p<T: Count>(seq: &SequenceCache<T>, n: usize, r: usize) -> Result<T> {
    if r > n {
        return Err(Error::RankOutOfRange { rank: r, n });
    }
    if (n - r) % 2 == 1 {
        return Ok(T::zero());
    }
    mul(
        &seq.binomial(n, r)?,
        &seq.odd_double_factorial(n as i64 - r as i64 - 1)?,
    )
}

/// `3p_3 + p_1` for odd `n`, `3p_4 + 2p_2 + p_0` for even `n`.
pub fn brauer_deg_prime_sum<T: Count>(seq: &SequenceCache<T>, n: usize) -> Result<T> {
    let p = |r: usize| {
        if r <= n {
            brauer_p(seq, n, r)
        } else {
            Ok(T::zero())
        }
    };
    let three = lift::<T>(3)?;
    if n % 2 == 1 {
        add(&mul(&three, &p(3)?)?, &p(1)?)
    } else {
        let two = lift::<T>(2)?;
        add(&add(&mul(&three, &p(4)?)?, &mul(&two, &p(2)?)?)?, &p(0)?)
    }
}

/// `(n+1)/2 · n!!` for odd `n`, `(n+4)(n+2)/8 · (n-1)!!` for even `n`.
pub fn brauer_deg_prime_closed<T: Count>(seq: &SequenceCache<T>, n: usize) -> Result<T> {
    if n % 2 == 1 {
        mul(&lift(n.div_ceil(2))?, &seq.odd_double_factorial(n as i64)?)
    } else {
        let num = mul(
            &lift((n + 4) * (n + 2))?,
            &seq.odd_double_factorial(n as i64 - 1)?,
        )?;
        Ok(num / lift(8)?)
    }
}

/// Degrees of one monoid, from the closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport<T> {
    pub family: Family,
    pub n: usize,
    /// `|Q|`; absent for `B`, whose states are not projections.
    pub q_size: Option<T>,
    pub deg_prime: T,
    pub deg: T,
    /// Equal to `deg` except for even `B`, where it is strictly larger and
    /// not given by a formula.
    pub degrc: Option<T>,
    /// Whether `n` lies in the range where the formulae are theorems.
    pub valid: bool,
}

impl<T: Count> DegreeReport<T> {
    pub fn compute(seq: &SequenceCache<T>, family: Family, n: usize) -> Result<Self> {
        let (q, deg_prime) = match family {
            Family::B => (None, brauer_deg_prime_closed(seq, n)?),
            Family::S => {
                return Err(Error::Precondition(
                    "no degree formula for the symmetric group here".into(),
                ))
            }
            _ => {
                let q = q_size(seq, family, n)?;
                (Some(q.clone()), q)
            }
        };
        let deg = add(&deg_prime, &T::one())?;
        let degrc = (family != Family::B || n % 2 == 1).then(|| deg.clone());
        Ok(DegreeReport {
            family,
            n,
            q_size: q,
            deg_prime,
            deg,
            degrc,
            valid: family.in_range(n),
        })
    }

    /// Like [`DegreeReport::compute`], but an error outside the validity range.
    pub fn checked(seq: &SequenceCache<T>, family: Family, n: usize) -> Result<Self> {
        family.check_range(n)?;
        Self::compute(seq, family, n)
    }
}
