//! Numerical conditions on h-vectors: Macaulay growth bounds (M-vectors),
//! nonnegativity of the binomial tail sums that hold for complexes with
//! Serre condition (S_r), the zero-tail condition, and the two Hilbert
//! series routes (from h and from f).

use serde::Serialize;

use crate::arith::binomial;
use crate::complex::{FVector, HVector};
use crate::poly::{HilbertSeries, IntPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HVectorError {
    #[error("Macaulay bound index must be at least 1, got {0}")]
    InvalidIndex(u32),
    #[error("rank r={r} out of range 2..={d}")]
    RankOutOfRange { r: u32, d: u32 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

/// Largest m with C(m, i) <= a, found by exponential then binary search.
fn greedy_top(a: u64, i: u64) -> u64 {
    debug_assert!(a >= 1 && i >= 1);
    if i == 1 {
        return a;
    }
    let le = |m: u64| match binomial(m, i) {
        Some(b) => b <= a as u128,
        None => false,
    };
    let mut hi = i;
    while le(hi * 2) {
        hi *= 2;
    }
    let mut lo = hi.max(i);
    hi *= 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if le(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The i-th Macaulay upper bound a^<i>: write a as the unique greedy sum
/// C(m_i, i) + C(m_{i-1}, i-1) + ... and shift every binomial up by one in
/// both arguments. This bounds the next entry of an M-vector.
pub fn macaulay_bound(a: u64, i: u32) -> Result<u64, HVectorError> {
    if i == 0 {
        return Err(HVectorError::InvalidIndex(0));
    }
    let mut rem = a as u128;
    let mut idx = i as u64;
    let mut bound: u128 = 0;
    while rem > 0 {
        debug_assert!(idx >= 1);
        let m = greedy_top(rem.min(u64::MAX as u128) as u64, idx);
        rem -= binomial(m, idx).expect("greedy term fits by construction");
        let term = binomial(m + 1, idx + 1).ok_or(HVectorError::Overflow)?;
        bound = bound.checked_add(term).ok_or(HVectorError::Overflow)?;
        idx -= 1;
    }
    u64::try_from(bound).map_err(|_| HVectorError::Overflow)
}

/// Whether the sequence is an M-vector (the Hilbert function of some
/// standard graded algebra): starts at 1, is nonnegative, and each entry
/// respects the Macaulay bound of its predecessor. A bound too large to
/// represent can never be violated.
pub fn is_m_vector(v: &[i64]) -> bool {
    if v.first() != Some(&1) {
        return false;
    }
    if v.iter().any(|&x| x < 0) {
        return false;
    }
    for i in 1..v.len().saturating_sub(1) {
        match macaulay_bound(v[i] as u64, i as u32) {
            Ok(bound) => {
                if v[i + 1] as u64 > bound {
                    return false;
                }
            }
            Err(HVectorError::Overflow) => {}
            Err(_) => unreachable!("index is positive"),
        }
    }
    true
}

/// The tail sums sum_{k=r}^{d} C(i+k-r, i) * h_k for i = 0..=r. For the
/// h-vector of a complex satisfying (S_r) these are all nonnegative.
pub fn gpsy_sums(h: &HVector, r: u32) -> Result<Vec<i64>, HVectorError> {
    let d = h.d();
    if r < 2 || r > d {
        return Err(HVectorError::RankOutOfRange { r, d });
    }
    let mut sums = Vec::with_capacity(r as usize + 1);
    for i in 0..=r {
        let mut acc: i128 = 0;
        for k in r..=d {
            let c = binomial((i + k - r) as u64, i as u64)
                .and_then(|b| i128::try_from(b).ok())
                .ok_or(HVectorError::Overflow)?;
            let term = c.checked_mul(h.h(k) as i128).ok_or(HVectorError::Overflow)?;
            acc = acc.checked_add(term).ok_or(HVectorError::Overflow)?;
        }
        sums.push(i64::try_from(acc).map_err(|_| HVectorError::Overflow)?);
    }
    Ok(sums)
}

/// Once a zero appears among h_0..h_r, everything after it must vanish.
/// Ranks beyond d are clamped to d.
pub fn zero_tail_ok(h: &HVector, r: u32) -> bool {
    let d = h.d();
    let limit = r.min(d);
    for i in 0..=limit {
        if h.h(i) == 0 {
            return (i..=d).all(|k| h.h(k) == 0);
        }
    }
    true
}

/// Joint report on the known numerical conditions satisfied by h-vectors of
/// (S_r) complexes: M-vector prefix, nonnegative tail sums, zero tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub r: u32,
    pub m_vector_prefix_ok: bool,
    pub gpsy: Vec<i64>,
    pub gpsy_nonnegative: bool,
    pub zero_tail: bool,
    pub all_pass: bool,
}

/// Evaluates every necessary condition at rank r (2 <= r <= d): the prefix
/// (h_0, ..., h_r) must be an M-vector, the tail sums must be nonnegative,
/// and the zero-tail condition must hold.
pub fn check_necessary_conditions(h: &HVector, r: u32) -> Result<ConditionReport, HVectorError> {
    let d = h.d();
    if r < 2 || r > d {
        return Err(HVectorError::RankOutOfRange { r, d });
    }
    let prefix: Vec<i64> = h.entries()[..=r as usize].to_vec();
    let m_vector_prefix_ok = is_m_vector(&prefix);
    let gpsy = gpsy_sums(h, r)?;
    let gpsy_nonnegative = gpsy.iter().all(|&s| s >= 0);
    let zero_tail = zero_tail_ok(h, r);
    let all_pass = m_vector_prefix_ok && gpsy_nonnegative && zero_tail;
    Ok(ConditionReport { r, m_vector_prefix_ok, gpsy, gpsy_nonnegative, zero_tail, all_pass })
}

/// Hilbert series of the face ring from the h-vector: the h-polynomial over
/// (1-t)^d, reduced.
pub fn hilbert_from_h(h: &HVector) -> HilbertSeries {
    let num = IntPolynomial::from_coeffs(h.entries().to_vec());
    HilbertSeries::new(num, h.d())
}

/// Hilbert series from the face counts: sum_k f_{k-1} t^k / (1-t)^k, put
/// over the common denominator (1-t)^d and reduced. Independent of
/// `hilbert_from_h` but always equal to it.
pub fn hilbert_from_f(f: &FVector) -> Result<HilbertSeries, PolyError> {
    let d = f.d();
    let one_minus_t = IntPolynomial::one_minus_t();
    let mut num = IntPolynomial::zero();
    for (k, &fk) in f.entries().iter().enumerate() {
        let term = IntPolynomial::monomial(fk, k).mul(&one_minus_t.pow(d - k as u32)?)?;
        num = num.add(&term)?;
    }
    Ok(HilbertSeries::new(num, d))
}
