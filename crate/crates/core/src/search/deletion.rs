//! Random deletion from `ER_p`: remove `d` uniformly random vertices so that
//! every survivor keeps degree at least `m`.

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::arith::smallest_prime_at_least_sqrt_plus_half;
use crate::bounds::{default_alpha, floor_sqrt_minus_power};
use crate::geometry::polarity_graph;
use crate::graph::Graph;
use crate::ramsey::{certify_lower_bound, graph_digest, LowerBoundCertificate};

pub const DEFAULT_C: u64 = 6;
pub const DEFAULT_MAX_ATTEMPTS: u64 = 1000;

#[derive(Clone, Debug)]
pub struct DeletionOverrides {
    pub m: Option<i64>,
    pub c: u64,
    pub alpha: Ratio<u32>,
    pub max_attempts: u64,
    pub jobs: usize,
}

impl Default for DeletionOverrides {
    fn default() -> Self {
        DeletionOverrides { m: None, c: DEFAULT_C, alpha: default_alpha(), max_attempts: DEFAULT_MAX_ATTEMPTS, jobs: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionRun {
    pub n: u64,
    pub k: u64,
    /// Exponent applied to `n`, as a fraction.
    pub alpha: String,
    pub c: u64,
    /// Smallest prime with `p >= sqrt(n) + 1/2`.
    pub p: u64,
    /// `p^2 + p + 1`.
    #[serde(rename = "N")]
    pub base_order: u64,
    pub m: i64,
    pub m_overridden: bool,
    pub d: u64,
    pub seed: u64,
    /// 1-based index of the successful attempt.
    pub attempts: u64,
    pub deleted: Vec<usize>,
    pub graph_digest: String,
    pub prime_gap_note: String,
}

/// Smallest `n` with `floor(sqrt(n) - c n^alpha) >= 1`. The set of such `n`
/// is upward closed for `alpha < 1/2`.
pub fn min_n_for_positive_m(c: u64, alpha: Ratio<u32>) -> u64 {
    let ok = |n: u64| floor_sqrt_minus_power(n, c, alpha) >= 1;
    let mut hi = 1u64;
    while !ok(hi) {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Order kept by the construction: `n + mk - k^2/2 + 3k/2 - 1`.
pub fn kept_order(n: u64, k: u64, m: i64) -> i64 {
    let (n, k) = (n as i64, k as i64);
    n + m * k - k * (k - 3) / 2 - 1
}

pub fn random_delete_construction(
    n: u64,
    k: u64,
    seed: u64,
    overrides: &DeletionOverrides,
) -> Result<(Graph, DeletionRun, LowerBoundCertificate), SearchError> {
    if k == 0 {
        return Err(SearchError::Domain("k must be at least 1".into()));
    }
    if n == 0 {
        return Err(SearchError::Domain("n must be at least 1".into()));
    }
    if *overrides.alpha.numer() * 2 >= *overrides.alpha.denom() {
        return Err(SearchError::Domain("alpha must be below 1/2".into()));
    }
    let m = match overrides.m {
        Some(m) if m < 1 => return Err(SearchError::Domain(format!("m must be at least 1, got {m}"))),
        Some(m) => m,
        None => {
            let m = floor_sqrt_minus_power(n, overrides.c, overrides.alpha);
            if m < 1 {
                return Err(SearchError::AsymptoticRegimeNotReached {
                    m,
                    min_n: min_n_for_positive_m(overrides.c, overrides.alpha),
                });
            }
            m
        }
    };
    let p = smallest_prime_at_least_sqrt_plus_half(n);
    let base_order = p * p + p + 1;
    let keep = kept_order(n, k, m);
    if keep < 0 || keep as u64 > base_order {
        return Err(SearchError::Domain(format!("kept order {keep} does not fit in ER_{p} with {base_order} vertices")));
    }
    let d = base_order - keep as u64;
    let (er, _) = polarity_graph(p)?;
    let total = base_order as usize;
    let floor = m as usize;

    let attempt = |a: u64| -> Option<Vec<usize>> {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(a);
        let mut deleted = sample(&mut rng, total, d as usize).into_vec();
        deleted.sort_unstable();
        let mut gone = vec![false; total];
        for &x in &deleted {
            gone[x] = true;
        }
        let fine = (0..total)
            .filter(|&v| !gone[v])
            .all(|v| er.neighbor_iter(v).filter(|&u| !gone[u]).count() >= floor);
        fine.then_some(deleted)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(overrides.jobs.max(1))
        .build()
        .map_err(|e| SearchError::Construction(e.to_string()))?;
    let found = pool.install(|| (0..overrides.max_attempts).into_par_iter().find_first(|&a| attempt(a).is_some()));
    let Some(index) = found else {
        return Err(SearchError::AttemptsExhausted { attempts: overrides.max_attempts });
    };
    let deleted = attempt(index).expect("attempt is deterministic");
    let kept: Vec<usize> = (0..total).filter(|v| deleted.binary_search(v).is_err()).collect();
    let g = er.induced_subgraph(&kept).map_err(|e| SearchError::Construction(e.to_string()))?;
    debug_assert!(g.min_degree() >= floor);

    let note = format!("ER_{p} minus {d} random vertices, seed {seed}, attempt {}", index + 1);
    let cert = certify_lower_bound(&g, k as usize, &note)?;
    let run = DeletionRun {
        n,
        k,
        alpha: overrides.alpha.to_string(),
        c: overrides.c,
        p,
        base_order,
        m,
        m_overridden: overrides.m.is_some(),
        d,
        seed,
        attempts: index + 1,
        deleted,
        graph_digest: graph_digest(&g),
        prime_gap_note: "p lies in (x, x + x^0.525] for x = sqrt(n) + 1/2 once n is large (prime gaps)".into(),
    };
    Ok((g, run, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_c4_free;

    fn with_m(m: i64) -> DeletionOverrides {
        DeletionOverrides { m: Some(m), ..Default::default() }
    }

    #[test]
    fn parameters_for_n100() {
        assert_eq!(kept_order(100, 2, 7), 114);
        let (g, run, cert) = random_delete_construction(100, 2, 1, &with_m(7)).unwrap();
        assert_eq!((run.p, run.base_order, run.d), (11, 133, 19));
        assert_eq!(g.order(), 114);
        assert!(g.min_degree() >= 7);
        assert!(is_c4_free(&g).c4_free);
        assert!(cert.implies(100));
        assert_eq!(cert.implied_lower_bound, 115);
    }

    #[test]
    fn defaults_below_regime() {
        let err = random_delete_construction(100, 2, 0, &DeletionOverrides::default()).unwrap_err();
        let SearchError::AsymptoticRegimeNotReached { m, min_n } = err else { panic!("{err:?}") };
        assert!(m < 1);
        assert!(floor_sqrt_minus_power(min_n, 6, default_alpha()) >= 1);
        assert!(floor_sqrt_minus_power(min_n - 1, 6, default_alpha()) < 1);
    }

    #[test]
    fn k_zero_is_a_domain_error() {
        assert!(matches!(random_delete_construction(100, 0, 0, &with_m(7)), Err(SearchError::Domain(_))));
    }

    #[test]
    fn deterministic_across_jobs() {
        let a = random_delete_construction(100, 2, 42, &with_m(7)).unwrap().1;
        let b = random_delete_construction(100, 2, 42, &DeletionOverrides { jobs: 4, ..with_m(7) }).unwrap().1;
        assert_eq!(a, b);
    }

    #[test]
    fn attempts_can_run_out() {
        let o = DeletionOverrides { m: Some(12), max_attempts: 5, ..Default::default() };
        assert_eq!(
            random_delete_construction(100, 2, 0, &o).unwrap_err(),
            SearchError::AttemptsExhausted { attempts: 5 }
        );
    }
}
