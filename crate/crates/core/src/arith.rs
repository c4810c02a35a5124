//! Small integer helpers shared by the constructors and the checks.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `n = p^k`, `k >= 1`, when `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= n && n % p != 0 {
        p += 1;
    }
    if n % p != 0 {
        p = n;
    }
    let mut rest = n;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

/// Exact logarithm: `Some(k)` iff `n = base^k`.
pub fn exact_log(base: u64, n: u64) -> Option<u32> {
    if base < 2 || n == 0 {
        return None;
    }
    let mut rest = n;
    let mut k = 0;
    while rest % base == 0 {
        rest /= base;
        k += 1;
    }
    (rest == 1).then_some(k)
}
