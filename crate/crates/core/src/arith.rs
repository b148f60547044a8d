//! Small integer helpers: primality, prime powers, binomials, integer roots.

/// Deterministic trial-division primality test; inputs here are at most a few million.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Returns `(p, e)` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

/// Exact `floor(sqrt(n))`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let n = n as u128;
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x as u64
}

pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// `C(n, 2)` as a signed value so formula code can subtract freely.
pub const fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Smallest prime `p` with `p >= sqrt(n) + 1/2`, i.e. `(2p - 1)^2 >= 4n`.
pub fn smallest_prime_at_least_sqrt_plus_half(n: u64) -> u64 {
    let mut p = isqrt(n);
    loop {
        let lhs = (2 * p).saturating_sub(1) as u128;
        if p >= 1 && lhs * lhs >= 4 * n as u128 && is_prime(p) {
            return p;
        }
        p += 1;
    }
}
