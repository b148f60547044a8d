//! Books in complements, Ramsey witnesses, and the minimum-degree certificate.
//!
//! `B_n^(k)` sits inside the complement of `G` exactly when some independent
//! k-set of `G` has at least `n` common non-neighbours. A C4-free graph with
//! minimum degree `d` satisfies `|N(u_1) ∪ ... ∪ N(u_k)| >= kd - C(k,2)` for
//! every k-set, which bounds that count without any search; the certificate
//! records the resulting book size.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::choose2;
use crate::graph::{g6_encode, is_c4_free, Graph, VertexSet};

/// Above this order the certificate is not re-checked against an exhaustive book search.
pub const CROSS_CHECK_MAX_ORDER: usize = 80;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamseyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("graph contains the 4-cycle {0:?}; certificate refused")]
    NotC4Free([usize; 4]),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A book in the complement: `spine` is independent in `G`, every page is a
/// common non-neighbour of the spine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookWitness {
    pub spine: Vec<usize>,
    pub pages: Vec<usize>,
    pub page_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookNumber {
    pub nmax: usize,
    pub witness: BookWitness,
}

struct BookSearch<'a> {
    non_adj: &'a Graph,
    k: usize,
    best: Option<(usize, Vec<usize>)>,
}

impl BookSearch<'_> {
    /// `common` holds the common non-neighbours of `spine` (outside `spine`).
    fn extend(&mut self, spine: &mut Vec<usize>, common: &VertexSet) {
        let pages = common.len();
        if spine.len() == self.k {
            if self.best.as_ref().is_none_or(|(b, _)| pages > *b) {
                self.best = Some((pages, spine.clone()));
            }
            return;
        }
        let remaining = self.k - spine.len();
        // Later spine vertices come out of `common`, so at most this many pages remain.
        if pages < remaining {
            return;
        }
        if let Some((b, _)) = &self.best {
            if pages - remaining <= *b {
                return;
            }
        }
        let last = spine.last().copied();
        let candidates: Vec<usize> = common.iter().filter(|&c| last.is_none_or(|l| c > l)).collect();
        for c in candidates {
            let mut next = common.clone();
            next.intersect_with(&self.non_adj.neighbors(c));
            next.remove(c);
            spine.push(c);
            self.extend(spine, &next);
            spine.pop();
        }
    }
}

fn best_from_first(non_adj: &Graph, k: usize, first: usize) -> Option<(usize, Vec<usize>)> {
    let mut search = BookSearch { non_adj, k, best: None };
    let mut common = non_adj.neighbors(first);
    common.remove(first);
    search.extend(&mut vec![first], &common);
    search.best
}

fn book_witness(g: &Graph, spine: Vec<usize>) -> BookWitness {
    let mut pages = VertexSet::full(g.order());
    for &s in &spine {
        pages.difference_with(&g.neighbors(s));
        pages.remove(s);
    }
    let pages = pages.to_vec();
    BookWitness { page_count: pages.len(), spine, pages }
}

/// Largest `n` with `B_n^(k)` in the complement of `g`, with the
/// lexicographically smallest maximising spine. Work is split by first spine
/// vertex over `jobs` threads; the result does not depend on `jobs`.
pub fn complement_book_number_par(g: &Graph, k: usize, jobs: usize) -> Result<BookNumber, RamseyError> {
    if k == 0 || k > g.order() {
        return Err(RamseyError::Domain(format!("k must lie in 1..={}, got {k}", g.order())));
    }
    let non_adj = g.complement();
    let per_first: Vec<Option<(usize, Vec<usize>)>> = if jobs <= 1 {
        (0..g.order()).map(|v| best_from_first(&non_adj, k, v)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| (0..g.order()).into_par_iter().map(|v| best_from_first(&non_adj, k, v)).collect())
    };
    let best = per_first.into_iter().flatten().fold(None::<(usize, Vec<usize>)>, |acc, cand| match acc {
        Some(a) if a.0 >= cand.0 => Some(a),
        _ => Some(cand),
    });
    Ok(match best {
        Some((nmax, spine)) => {
            let witness = book_witness(g, spine);
            debug_assert_eq!(witness.page_count, nmax);
            BookNumber { nmax, witness }
        }
        None => BookNumber { nmax: 0, witness: BookWitness { spine: vec![], pages: vec![], page_count: 0 } },
    })
}

pub fn complement_book_number(g: &Graph, k: usize) -> Result<BookNumber, RamseyError> {
    complement_book_number_par(g, k, 1)
}

/// True iff `g` is C4-free and its complement has no `B_n^(k)`; on `N`
/// vertices this proves `r(C4, B_n^(k)) >= N + 1`. With `k = 0` the book is
/// `n` isolated vertices, so only `N < n` qualifies.
pub fn is_ramsey_witness(g: &Graph, k: usize, n: usize) -> bool {
    if !is_c4_free(g).c4_free {
        return false;
    }
    if k == 0 {
        return g.order() < n;
    }
    if k > g.order() {
        return true;
    }
    complement_book_number(g, k).map(|b| b.nmax < n).unwrap_or(false)
}

/// Machine-checkable evidence that `r(C4, B_n^(k)) >= order + 1` for every
/// `n >= guaranteed_book_free_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundCertificate {
    /// SHA-256 of the graph6 string, hex.
    pub graph_hash: String,
    pub graph6: String,
    pub order: usize,
    pub k: usize,
    pub min_degree: usize,
    pub c4_free: bool,
    /// `order - k(min_degree + 1) + C(k,2) + 1`.
    pub guaranteed_book_free_n: i64,
    pub implied_lower_bound: usize,
    pub implied_bound: String,
    pub construction_note: String,
    /// Exhaustive book number of the complement, when it was computed.
    pub cross_check_nmax: Option<usize>,
}

impl LowerBoundCertificate {
    /// Whether the certificate proves `r(C4, B_n^(k)) >= order + 1`.
    pub fn implies(&self, n: i64) -> bool {
        self.c4_free && n >= 1 && n >= self.guaranteed_book_free_n
    }
}

pub fn graph_digest(g: &Graph) -> String {
    let digest = Sha256::digest(g6_encode(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Minimum-degree certificate. Refused unless `g` is C4-free. For orders up
/// to [`CROSS_CHECK_MAX_ORDER`] the claim is re-checked against the exact
/// complement book number.
pub fn certify_lower_bound(g: &Graph, k: usize, note: &str) -> Result<LowerBoundCertificate, RamseyError> {
    if k == 0 {
        return Err(RamseyError::Domain("k must be at least 1".into()));
    }
    if let Some(w) = is_c4_free(g).witness {
        return Err(RamseyError::NotC4Free(w));
    }
    let order = g.order();
    let min_degree = g.min_degree();
    let ki = k as i64;
    let n_star = order as i64 - ki * (min_degree as i64 + 1) + choose2(ki) + 1;

    let cross_check_nmax = if order <= CROSS_CHECK_MAX_ORDER && k <= order {
        let nmax = complement_book_number(g, k)?.nmax;
        if (nmax as i64) > n_star - 1 {
            return Err(RamseyError::InternalInconsistency(format!(
                "complement has a book with {nmax} pages but the certificate allows at most {}",
                n_star - 1
            )));
        }
        Some(nmax)
    } else {
        None
    };

    let g6 = g6_encode(g);
    Ok(LowerBoundCertificate {
        graph_hash: graph_digest(g),
        graph6: g6,
        order,
        k,
        min_degree,
        c4_free: true,
        guaranteed_book_free_n: n_star,
        implied_lower_bound: order + 1,
        implied_bound: format!("r(C4, B_{n_star}^({k})) >= {}", order + 1),
        construction_note: note.to_string(),
        cross_check_nmax,
    })
}

/// Enumerates admissible k-sets around `v`: independent, every member of
/// degree at most `deg_cap`, one member in each of k distinct sets
/// `A_i = N(v_i) \ (N(v) ∪ {v})` for neighbours `v_i` of `v`, and no three
/// members with a common neighbour. Expects a C4-free graph. Index sets are
/// visited in lexicographic order and members chosen greedily from the
/// pruned candidate sets; stops after `limit` sets.
pub fn find_admissible_sets(g: &Graph, v: usize, k: usize, deg_cap: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || limit == 0 {
        return out;
    }
    let mut closed = g.neighbors(v);
    closed.insert(v);
    let nbrs: Vec<usize> = g.neighbor_iter(v).collect();
    if nbrs.len() < k {
        return out;
    }
    let low: Vec<Vec<usize>> = nbrs
        .iter()
        .map(|&vi| g.neighbor_iter(vi).filter(|&x| !closed.contains(x) && g.degree(x) <= deg_cap).collect())
        .collect();

    let mut indices: Vec<usize> = (0..k).collect();
    loop {
        if indices.iter().all(|&i| !low[i].is_empty()) {
            let mut chosen = Vec::with_capacity(k);
            pick_members(g, &low, &indices, &mut chosen, &mut out, limit);
            if out.len() >= limit {
                return out;
            }
        }
        // next k-combination of 0..d
        let d = nbrs.len();
        let mut pos = k;
        while pos > 0 && indices[pos - 1] == d - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        indices[pos - 1] += 1;
        for j in pos..k {
            indices[j] = indices[j - 1] + 1;
        }
    }
}

fn pick_members(g: &Graph, low: &[Vec<usize>], indices: &[usize], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    let j = chosen.len();
    if j == indices.len() {
        out.push(chosen.clone());
        return;
    }
    // Remove neighbours of chosen members, then neighbours of each
    // common neighbour of a chosen pair.
    let mut blocked = VertexSet::empty(g.order());
    for &x in chosen.iter() {
        blocked.union_with(&g.neighbors(x));
    }
    for a in 0..j {
        for b in a + 1..j {
            let mut w = g.neighbors(chosen[a]);
            w.intersect_with(&g.neighbors(chosen[b]));
            for wv in w.iter() {
                blocked.union_with(&g.neighbors(wv));
            }
        }
    }
    for &x in &low[indices[j]] {
        if blocked.contains(x) || chosen.contains(&x) {
            continue;
        }
        chosen.push(x);
        pick_members(g, low, indices, chosen, out, limit);
        chosen.pop();
        if out.len() >= limit {
            return;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodPairs {
    pub count: u64,
    pub sample: Vec<(usize, usize)>,
}

pub const GOOD_PAIR_SAMPLE: usize = 16;

/// Pairs of vertices of degree at most `deg_cap` with disjoint neighbourhoods.
pub fn good_pairs(g: &Graph, deg_cap: usize) -> GoodPairs {
    let low: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) <= deg_cap).collect();
    let mut count = 0;
    let mut sample = Vec::new();
    for (i, &u) in low.iter().enumerate() {
        for &v in &low[i + 1..] {
            if g.common_neighbor_count(u, v) == 0 {
                count += 1;
                if sample.len() < GOOD_PAIR_SAMPLE {
                    sample.push((u, v));
                }
            }
        }
    }
    GoodPairs { count, sample }
}
