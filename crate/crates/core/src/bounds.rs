//! Closed-form bounds on r(C4, B_n^(k)).
//!
//! Everything is exact integer or rational arithmetic. The one irrational
//! quantity, `floor(sqrt(n) - c * n^alpha)` for rational `alpha`, is decided
//! exactly in `Z[sqrt n]` (see [`floor_sqrt_minus_power`]).

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{choose2, is_prime_power, is_square, isqrt, prime_power};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, BoundsError> {
    Err(BoundsError::Domain(msg.into()))
}

/// `n + floor(sqrt(n-1)) + 2`, one less when `n - 1` is a perfect square.
pub fn parsons_upper(n: u64) -> Result<u64, BoundsError> {
    if n < 2 {
        return domain(format!("n must be at least 2, got {n}"));
    }
    let base = n + isqrt(n - 1) + 2;
    Ok(if is_square(n - 1) { base - 1 } else { base })
}

/// One step of the recurrence `g(m) = m + floor(sqrt(m-1)) + 2`.
pub fn g_step(m: u64) -> u64 {
    m + isqrt(m - 1) + 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GSequence {
    /// `[g_0(n), ..., g_k(n)]`.
    pub values: Vec<u64>,
    /// `n + k*floor(sqrt n) + ceil((k^2 + 9k)/4)`.
    pub cap: u64,
    pub within_cap: bool,
}

pub fn g_sequence(n: u64, k: u32) -> Result<GSequence, BoundsError> {
    if n < 2 {
        return domain(format!("n must be at least 2, got {n}"));
    }
    let mut values = Vec::with_capacity(k as usize + 1);
    values.push(n);
    for _ in 0..k {
        let last = *values.last().unwrap();
        values.push(g_step(last));
    }
    let k = k as u64;
    let cap = n + k * isqrt(n) + (k * k + 9 * k).div_ceil(4);
    Ok(GSequence { within_cap: *values.last().unwrap() <= cap, values, cap })
}

/// `(320 k^4)^(k+1) / eps^(2k)` exactly.
pub fn q_threshold(k: u32, eps: &BigRational) -> BigRational {
    let base = BigInt::from(320u32) * BigInt::from(k).pow(4);
    let num = BigRational::from_integer(base.pow(k + 1));
    num / eps.pow(2 * k as i32)
}

/// Parses `"0.3"`, `"3/10"` or `"1"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, BoundsError> {
    let bad = || BoundsError::Domain(format!("cannot parse {s:?} as a rational number"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Derived quantities for the parameterisation `n = q^2 - kq + t + a_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsParams {
    pub k: u32,
    pub q: i64,
    pub t: i64,
    pub eps: String,
    /// `C(k,2) - k`.
    pub a_k: i64,
    /// `a_k - ceil(k/2) + 2`.
    pub b_k: i64,
    pub n: i64,
    /// `[N_1, ..., N_k]`.
    pub ladder: Vec<i64>,
    /// `(320k^4)^(k+1) / eps^(2k)`, as an exact fraction string.
    pub q_threshold: String,
    pub q_meets_threshold: bool,
    /// `0 <= t <= (1 - eps) q`.
    pub t_in_range: bool,
}

pub fn a_k(k: i64) -> i64 {
    choose2(k) - k
}

pub fn b_k(k: i64) -> i64 {
    a_k(k) - (k + 1) / 2 + 2
}

/// The vertex-count ladder `N_1 < ... < N_k`.
pub fn ladder(k: i64, q: i64, t: i64) -> Vec<i64> {
    let b = b_k(k);
    (1..=k)
        .map(|i| {
            if i == k {
                q * q + t
            } else if i == k - 1 {
                q * q - q + t + b + 1
            } else {
                q * q - (k - i) * q + t + b
            }
        })
        .collect()
}

pub fn bounds_params(k: u32, q: i64, t: i64, eps: &BigRational) -> Result<BoundsParams, BoundsError> {
    if k < 3 {
        return domain(format!("k must be at least 3, got {k}"));
    }
    if q < 2 {
        return domain(format!("q must be at least 2, got {q}"));
    }
    if !eps.is_positive() || *eps >= BigRational::one() {
        return domain(format!("eps must lie in (0,1), got {eps}"));
    }
    let ki = k as i64;
    let threshold = q_threshold(k, eps);
    let t_in_range = t >= 0 && BigRational::from_integer(t.into()) <= (BigRational::one() - eps) * BigRational::from_integer(q.into());
    Ok(BoundsParams {
        k,
        q,
        t,
        eps: eps.to_string(),
        a_k: a_k(ki),
        b_k: b_k(ki),
        n: q * q - ki * q + t + a_k(ki),
        ladder: ladder(ki, q, t),
        q_meets_threshold: BigRational::from_integer(q.into()) >= threshold,
        q_threshold: threshold.to_string(),
        t_in_range,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: String,
}

/// Whether `(q, t)` lies in the parameter range where the exact value
/// `q^2 + t` is claimed for large q. Does not test `q >= Q(k, eps)`.
pub fn theorem15_admissible(k: u32, q: u64, t: i64, eps: &BigRational) -> Result<Admissibility, BoundsError> {
    if k < 3 {
        return domain(format!("k must be at least 3, got {k}"));
    }
    if !eps.is_positive() || *eps >= BigRational::one() {
        return domain(format!("eps must lie in (0,1), got {eps}"));
    }
    if !is_prime_power(q) {
        return Err(BoundsError::NotPrimePower(q));
    }
    let upper = (BigRational::one() - eps) * BigRational::from_integer(q.into());
    let within_upper = BigRational::from_integer(t.into()) <= upper;
    let qi = q as i64;
    let (lower, excluded, case) = if q.is_multiple_of(2) {
        (0, 1, "q even")
    } else if q % 4 == 3 {
        ((qi + 1) / 2, (qi + 3) / 2, "q = 3 mod 4")
    } else {
        ((qi - 1) / 2, (qi + 1) / 2, "q = 1 mod 4")
    };
    let (admissible, reason) = if t < lower {
        (false, format!("{case}: t = {t} is below {lower}"))
    } else if !within_upper {
        (false, format!("{case}: t = {t} exceeds (1 - eps) q = {}", upper))
    } else if t == excluded {
        (false, format!("{case}: t = {excluded} is excluded"))
    } else {
        (true, format!("{case}: {lower} <= t <= (1 - eps) q and t != {excluded}"))
    };
    Ok(Admissibility { admissible, reason })
}

/// `(A, B)` representing `A + B sqrt(n)`.
type QuadInt = (BigInt, BigInt);

fn quad_mul(x: &QuadInt, y: &QuadInt, n: &BigInt) -> QuadInt {
    (&x.0 * &y.0 + &x.1 * &y.1 * n, &x.0 * &y.1 + &x.1 * &y.0)
}

fn quad_pow(base: QuadInt, mut exp: u32, n: &BigInt) -> QuadInt {
    let mut acc: QuadInt = (BigInt::one(), BigInt::zero());
    let mut b = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = quad_mul(&acc, &b, n);
        }
        b = quad_mul(&b, &b, n);
        exp >>= 1;
    }
    acc
}

/// Sign of `a + b sqrt(n)`, `n >= 0`.
fn quad_sign(a: &BigInt, b: &BigInt, n: &BigInt) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let sa = a.sign();
    let sb = if n.is_zero() { num_bigint::Sign::NoSign } else { b.sign() };
    let to_ord = |s: num_bigint::Sign| match s {
        num_bigint::Sign::Minus => Less,
        num_bigint::Sign::NoSign => Equal,
        num_bigint::Sign::Plus => Greater,
    };
    match (to_ord(sa), to_ord(sb)) {
        (x, Equal) => x,
        (Equal, y) => y,
        (x, y) if x == y => x,
        (x, _) => {
            // Opposite signs: compare a^2 with b^2 n.
            let lhs = a * a;
            let rhs = b * b * n;
            match lhs.cmp(&rhs) {
                Greater => x,
                Less => x.reverse(),
                Equal => Equal,
            }
        }
    }
}

/// Decides `m <= sqrt(n) - c * n^(p/r)` exactly.
fn floor_predicate(m: i64, n: u64, c: u64, alpha: Ratio<u32>) -> bool {
    // a = sqrt(n) - m must be nonnegative.
    if m > 0 && (m as u128) * (m as u128) > n as u128 {
        return false;
    }
    let nb = BigInt::from(n);
    let (num, den) = (*alpha.numer(), *alpha.denom());
    // (sqrt n - m)^den >= c^den * n^num
    let (a, b) = quad_pow((BigInt::from(-m), BigInt::one()), den, &nb);
    let rhs = BigInt::from(c).pow(den) * nb.pow(num);
    quad_sign(&(a - rhs), &b, &nb) != std::cmp::Ordering::Less
}

/// `floor(sqrt(n) - c * n^alpha)` for rational `alpha >= 0`, computed exactly.
pub fn floor_sqrt_minus_power(n: u64, c: u64, alpha: Ratio<u32>) -> i64 {
    let estimate = (n as f64).sqrt() - c as f64 * (n as f64).powf(alpha.to_f64().unwrap_or(0.0));
    let mut m = estimate.floor() as i64;
    while !floor_predicate(m, n, c, alpha) {
        m -= 1;
    }
    while floor_predicate(m + 1, n, c, alpha) {
        m += 1;
    }
    m
}

/// The exponent 0.2625 = 21/80.
pub fn default_alpha() -> Ratio<u32> {
    Ratio::new(21, 80)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticLower {
    pub value: i64,
    /// `floor(sqrt n - 6 n^0.2625)`.
    pub floor_term: i64,
    pub regime_reached: bool,
}

/// `n + k*floor(sqrt n - 6 n^0.2625) - k^2/2 + 3k/2`, valid for large n only.
/// When the floor term is below 1 the trivial `n + k` is returned and flagged.
pub fn theorem16_lower(n: u64, k: u32) -> AsymptoticLower {
    let floor_term = floor_sqrt_minus_power(n, 6, default_alpha());
    let (k, ni) = (k as i64, n as i64);
    if k == 0 {
        return AsymptoticLower { value: ni, floor_term, regime_reached: true };
    }
    if floor_term < 1 {
        return AsymptoticLower { value: ni + k, floor_term, regime_reached: false };
    }
    AsymptoticLower { value: ni + k * floor_term - k * (k - 3) / 2, floor_term, regime_reached: true }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub k: u32,
    pub lower: Bound,
    pub upper: Option<Bound>,
    pub exact: Option<u64>,
    /// Reported separately: holds only for sufficiently large n.
    pub asymptotic_lower: Option<AsymptoticLower>,
}

/// Known small values, `(k, n, r)`.
pub const KNOWN_VALUES: &[(u32, u64, u64, &str)] = &[
    (2, 3, 9, "known value r(C4,B_3^(2)) = 9 (Tse)"),
    (2, 13, 22, "known value r(C4,B_13^(2)) = 22 (Tse)"),
];

fn improve_lower(best: &mut Bound, value: u64, source: impl Into<String>) {
    if value > best.value {
        *best = Bound { value, source: source.into() };
    }
}

fn improve_upper(best: &mut Option<Bound>, value: u64, source: impl Into<String>) {
    if best.as_ref().is_none_or(|b| value < b.value) {
        *best = Some(Bound { value, source: source.into() });
    }
}

/// Whether the polarity-subgraph construction gives `r >= q^2 + t`
/// (a C4-free graph on `q^2 + t - 1` vertices with minimum degree q).
pub fn construction_t_allowed(q: u64, t: i64) -> bool {
    if !is_prime_power(q) || q < 4 || t > q as i64 {
        return false;
    }
    let qi = q as i64;
    if q.is_multiple_of(2) {
        t >= 0 && t != 1
    } else if q % 4 == 3 {
        t >= (qi + 1) / 2 && t != (qi + 3) / 2
    } else {
        t >= (qi - 1) / 2 && t != (qi + 1) / 2
    }
}

/// Upper bound `q^2 + t` for `k >= 3` requires `q >= Q(k, eps)` with `t <= (1-eps) q`.
fn large_q_upper_applies(k: u32, q: u64, t: i64) -> bool {
    if t < 0 || t >= q as i64 {
        return false;
    }
    let qr = BigRational::from_integer(q.into());
    if t == 0 {
        let base = BigUint::from(320u32) * BigUint::from(k).pow(4);
        return BigRational::from_integer(BigInt::from(base.pow(k + 1))) < qr;
    }
    let eps = BigRational::one() - BigRational::new(t.into(), (q as i64).into());
    qr >= q_threshold(k, &eps)
}

pub fn bound_report(n: u64, k: u32) -> Result<BoundReport, BoundsError> {
    if n < 1 || k < 1 {
        return domain(format!("need n >= 1 and k >= 1, got n={n}, k={k}"));
    }
    let mut lower = Bound { value: (n + k as u64).max(4), source: "trivial: max(4, n + k)".into() };
    let mut upper: Option<Bound> = None;

    if n >= 2 {
        let g = g_sequence(n, k)?;
        improve_upper(&mut upper, *g.values.last().unwrap(), format!("g_{k}(n) recurrence"));
    }

    if k == 1 && n >= 2 {
        improve_upper(&mut upper, parsons_upper(n)?, "Parsons: n + floor(sqrt(n-1)) + 2, minus 1 if n-1 is a square");
        let r = isqrt(n);
        if r * r == n && is_prime_power(r) {
            improve_lower(&mut lower, n + r + 1, format!("Parsons: q^2 + q + 1 at q = {r}"));
        }
        let r1 = isqrt(n - 1);
        if r1 * r1 == n - 1 && is_prime_power(r1) {
            improve_lower(&mut lower, n - 1 + r1 + 2, format!("Parsons: q^2 + q + 2 at q = {r1}"));
        }
    }

    if k == 2 {
        for q in 2..=isqrt(n) + 2 {
            if q * q - q + 1 == n && is_prime_power(q) {
                improve_lower(&mut lower, q * q + q + 2, format!("Faudree-Rousseau-Sheehan: q^2 + q + 2 at q = {q}"));
                improve_upper(&mut upper, q * q + q + 4, format!("Faudree-Rousseau-Sheehan: q^2 + q + 4 at q = {q}"));
            }
            // n = (q-1)^2 + t - 2, 0 <= t <= q - 1, q >= 4
            let t = n as i64 - (q as i64 - 1).pow(2) + 2;
            if q >= 4 && (0..q as i64).contains(&t) {
                improve_upper(&mut upper, q * q + t as u64, format!("n = (q-1)^2 + t - 2 with q = {q}, t = {t}: at most q^2 + t"));
            }
        }
        for &(kk, nn, r, src) in KNOWN_VALUES {
            if kk == k && nn == n {
                improve_lower(&mut lower, r, src);
                improve_upper(&mut upper, r, src);
            }
        }
    }

    // n = q^2 - kq + t + a_k
    let ki = k as i64;
    let mut q = 2u64;
    loop {
        let qi = q as i64;
        let base = qi * qi - ki * qi + a_k(ki);
        if base > n as i64 && qi > ki {
            break;
        }
        let t = n as i64 - base;
        if construction_t_allowed(q, t) {
            let value = (qi * qi + t) as u64;
            improve_lower(&mut lower, value, format!("polarity-subgraph construction at q = {q}, t = {t}: q^2 + t"));
        }
        if k >= 3 && is_prime_power(q) && large_q_upper_applies(k, q, t) {
            improve_upper(&mut upper, (qi * qi + t) as u64, format!("large-q upper bound at q = {q}, t = {t}"));
        }
        q += 1;
    }

    let exact = upper.as_ref().filter(|u| u.value == lower.value).map(|u| u.value);
    let asymptotic_lower = (k >= 3).then(|| theorem16_lower(n, k));
    Ok(BoundReport { n, k, lower, upper, exact, asymptotic_lower })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedValue {
    pub q: u64,
    pub t: i64,
    pub n: i64,
    pub r: i64,
}

/// Predicted exact values `r(C4, B_n^(k)) = q^2 + t` over admissible `(q, t)`.
pub fn predicted_table(qmin: u64, qmax: u64, k: u32, eps: &BigRational) -> Result<Vec<PredictedValue>, BoundsError> {
    let mut rows = Vec::new();
    for q in qmin.max(2)..=qmax {
        if prime_power(q).is_none() {
            continue;
        }
        for t in 0..=q as i64 {
            if theorem15_admissible(k, q, t, eps)?.admissible {
                let qi = q as i64;
                rows.push(PredictedValue { q, t, n: qi * qi - k as i64 * qi + t + a_k(k as i64), r: qi * qi + t });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parsons() {
        assert_eq!(parsons_upper(4), Ok(7));
        assert_eq!(parsons_upper(10), Ok(14));
        assert_eq!(parsons_upper(2), Ok(4)); // n - 1 = 1 is a square
        assert!(parsons_upper(1).is_err());
    }

    #[test]
    fn g_values() {
        let g = g_sequence(10, 3).unwrap();
        assert_eq!(g.values, vec![10, 15, 20, 26]);
        assert_eq!(g.cap, 28);
        assert!(g.within_cap);
        assert_eq!(g_sequence(2, 1).unwrap().values, vec![2, 5]);
        assert!(g_sequence(1, 1).is_err());
        // n = 3, k = 6 is the smallest violation of the cap.
        let g = g_sequence(3, 6).unwrap();
        assert_eq!((g.values[6], g.cap, g.within_cap), (33, 32, false));
    }

    #[test]
    fn params() {
        let p = bounds_params(3, 10, 2, &rat("0.5")).unwrap();
        assert_eq!((p.a_k, p.b_k, p.n), (0, 0, 72));
        assert_eq!(p.ladder, vec![82, 93, 102]);
        let p = bounds_params(4, 10, 0, &rat("0.5")).unwrap();
        assert_eq!((p.a_k, p.b_k, p.n), (2, 2, 62));
        assert!(!p.q_meets_threshold);
        assert!(bounds_params(3, 10, 2, &rat("1")).is_err());
        assert!(bounds_params(2, 10, 2, &rat("0.5")).is_err());
    }

    #[test]
    fn threshold_identity() {
        for k in 3..7u32 {
            for eps in ["0.5", "1/3", "0.01"] {
                let e = rat(eps);
                let lhs = q_threshold(k, &e) * e.pow(2 * k as i32);
                let expected = BigInt::from(320u64 * (k as u64).pow(4)).pow(k + 1);
                assert_eq!(lhs, BigRational::from_integer(expected));
            }
        }
        // Q(3, 1/2) exceeds 10^19.
        assert!(q_threshold(3, &rat("0.5")) > BigRational::from_integer(BigInt::from(10u64.pow(19))));
    }

    #[test]
    fn admissibility() {
        let e = rat("0.3");
        assert!(!theorem15_admissible(3, 8, 1, &e).unwrap().admissible);
        assert!(theorem15_admissible(3, 8, 5, &e).unwrap().admissible);
        assert!(!theorem15_admissible(3, 8, 6, &e).unwrap().admissible);
        assert!(!theorem15_admissible(3, 7, 5, &rat("0.1")).unwrap().admissible);
        assert!(theorem15_admissible(3, 7, 4, &rat("0.1")).unwrap().admissible);
        assert!(!theorem15_admissible(3, 5, 3, &rat("0.1")).unwrap().admissible);
        assert!(theorem15_admissible(3, 5, 2, &rat("0.1")).unwrap().admissible);
        assert_eq!(theorem15_admissible(3, 12, 2, &e), Err(BoundsError::NotPrimePower(12)));
    }

    #[test]
    fn exact_floor() {
        // sqrt(10^6) - 6 * 10^1.575 = 774.4975...
        assert_eq!(floor_sqrt_minus_power(1_000_000, 6, default_alpha()), 774);
        // sqrt(100) - 6 * 100^0.2625 = 10 - 20.097... = -10.097...
        assert_eq!(floor_sqrt_minus_power(100, 6, default_alpha()), -11);
        // Integer-valued cases: alpha = 1/2, c = 0 gives floor(sqrt n) exactly.
        for n in [1u64, 2, 15, 16, 17, 99, 100, 10_000] {
            assert_eq!(floor_sqrt_minus_power(n, 0, Ratio::new(1, 2)), isqrt(n) as i64);
        }
        // sqrt(n) - n^(1/4) at n = 16 is exactly 2.
        assert_eq!(floor_sqrt_minus_power(16, 1, Ratio::new(1, 4)), 2);
        assert_eq!(floor_sqrt_minus_power(81, 1, Ratio::new(1, 4)), 6);
    }

    #[test]
    fn asymptotic_lower() {
        let r = theorem16_lower(1_000_000, 3);
        assert_eq!(r.value, 1_002_322);
        assert!(r.regime_reached);
        let r = theorem16_lower(100, 2);
        assert!(!r.regime_reached);
        assert_eq!(r.value, 102);
        assert_eq!(theorem16_lower(100, 0).value, 100);
    }

    #[test]
    fn reports() {
        assert_eq!(bound_report(3, 2).unwrap().exact, Some(9));
        assert_eq!(bound_report(13, 2).unwrap().exact, Some(22));
        assert_eq!(bound_report(9, 1).unwrap().exact, Some(13));
        assert_eq!(bound_report(10, 1).unwrap().exact, Some(14));
        assert_eq!(bound_report(4, 1).unwrap().exact, Some(7));
        // (q-1)^2 + t - 2 with q = 4, t = 0.
        assert_eq!(bound_report(7, 2).unwrap().exact, Some(16));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(rat("0.3"), BigRational::new(3.into(), 10.into()));
        assert_eq!(rat("3/10"), rat(".3"));
        assert_eq!(rat("-1.5"), BigRational::new((-3).into(), 2.into()));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn table_rows() {
        let rows = predicted_table(4, 8, 3, &rat("0.3")).unwrap();
        let q8: Vec<i64> = rows.iter().filter(|r| r.q == 8).map(|r| r.t).collect();
        assert_eq!(q8, vec![0, 2, 3, 4, 5]);
        assert!(rows.iter().all(|r| r.r == (r.q * r.q) as i64 + r.t));
    }
}
