//! Small exact-integer helpers shared across the crate.

/// Binomial coefficient C(n, k), or `None` when the running product
/// overflows u128 (slightly conservative: the product is one factor larger
/// than the final value).
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Binomial coefficient as i128, or `None` if it does not fit.
pub fn binomial_i128(n: u64, k: u64) -> Option<i128> {
    let b = binomial(n, k)?;
    i128::try_from(b).ok()
}
