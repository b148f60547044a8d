//! Isomorph-free generation of (C4-free) graphs by canonical augmentation.
//!
//! A graph on `i + 1` vertices is generated from its parent on `i` vertices
//! by adding a vertex `v` adjacent to a set `S`. The child is accepted iff
//! `v` lies in the orbit of the canonical deletion vertex: among vertices of
//! minimum degree, the one with the largest canonical label. Isomorphic
//! siblings are merged by canonical form. Every C4-free graph has a unique
//! parent class, so each class is emitted exactly once.
//!
//! Work is split at a fixed depth: prefix graphs are generated sequentially,
//! their subtrees searched in parallel and merged in prefix order.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_rows, CanonForm};
use super::SearchError;
use crate::bounds::{g_sequence, parsons_upper};
use crate::graph::Graph;
use crate::ramsey::is_ramsey_witness;

pub const MAX_C4_FREE_ORDER: usize = 13;
pub const MAX_UNFILTERED_ORDER: usize = 9;

/// Cuts subtrees none of whose order-`target` descendants can be accepted.
/// Must be monotone: if it prunes a graph it must prune every supergraph
/// reachable by adding vertices.
pub trait Pruner: Sync {
    /// `adj[v]` has bit `u` set iff `uv` is an edge.
    fn prune(&self, adj: &[u64], target: usize) -> bool;
}

pub struct NoPrune;

impl Pruner for NoPrune {
    fn prune(&self, _: &[u64], _: usize) -> bool {
        false
    }
}

/// Prunes when some vertex cannot reach degree `required` even if joined to
/// every vertex still to come.
#[derive(Clone, Copy, Debug)]
pub struct MinDegreePruner {
    pub required: usize,
}

impl MinDegreePruner {
    /// A C4-free graph on `order` vertices whose complement has no `B_n^(k)`
    /// has minimum degree at least `order - U`, where `U` bounds
    /// `r(C4, B_n^(k-1))`: the non-neighbourhood of any vertex induces a
    /// C4-free graph whose complement has no `B_n^(k-1)`.
    pub fn for_witness(order: usize, k: usize, n: usize) -> Self {
        let upper = match k {
            0 => None,
            1 => Some(n as u64),
            2 => parsons_upper(n as u64).ok(),
            _ => g_sequence(n as u64, k as u32 - 1).ok().map(|s| *s.values.last().unwrap()),
        };
        let required = upper.map_or(0, |u| (order as u64).saturating_sub(u) as usize);
        MinDegreePruner { required }
    }
}

impl Pruner for MinDegreePruner {
    fn prune(&self, adj: &[u64], target: usize) -> bool {
        let slack = target - adj.len();
        adj.iter().any(|r| (r.count_ones() as usize) + slack < self.required)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn same_cell_after_refinement(adj: &[u64], u: usize, v: usize) -> bool {
    // Iterated degree refinement from the unit partition; vertices that end
    // in different cells lie in different orbits.
    let n = adj.len();
    let mut color: Vec<usize> = vec![0; n];
    loop {
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|x| {
                let mut nb: Vec<usize> = (0..n).filter(|&y| adj[x] >> y & 1 == 1).map(|y| color[y]).collect();
                nb.sort_unstable();
                (color[x], nb, x)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut classes = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                classes += 1;
            }
            next[sig[i].2] = classes;
        }
        let before = color.iter().copied().max().unwrap_or(0);
        color = next;
        if classes == before {
            break;
        }
    }
    color[u] == color[v]
}

/// Accepted children of `adj` in a fixed order, each as parent rows plus the new vertex.
fn children(adj: &[u64], c4_filter: bool) -> Vec<Vec<u64>> {
    let i = adj.len();
    if i == 0 {
        return vec![vec![0]];
    }
    let degree: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    let max_size = degree.iter().copied().min().unwrap() + 1;
    let two_step: Vec<u64> = (0..i)
        .map(|a| {
            let mut m = 0u64;
            let mut bits = adj[a];
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                m |= adj[x];
            }
            m & !(1 << a)
        })
        .collect();

    let mut subsets = Vec::new();
    collect_subsets(0, i, 0, 0, max_size, c4_filter, &two_step, &mut subsets);

    let mut seen: HashSet<CanonForm> = HashSet::new();
    let mut out = Vec::new();
    for s in subsets {
        let size = s.count_ones() as usize;
        if (0..i).any(|u| degree[u] + usize::from(s >> u & 1 == 1) < size) {
            continue;
        }
        let mut child: Vec<u64> = adj.to_vec();
        for (u, row) in child.iter_mut().enumerate() {
            if s >> u & 1 == 1 {
                *row |= 1 << i;
            }
        }
        child.push(s);
        let canon = canonical_rows(&child, None);
        let candidates = (0..=i).filter(|&u| child[u].count_ones() as usize == size);
        let m = candidates.max_by_key(|&u| canon.labeling[u]).unwrap();
        if m != i && !in_same_orbit(&child, &canon.generators, m, i) {
            continue;
        }
        if seen.insert(canon.form) {
            out.push(child);
        }
    }
    out
}

fn in_same_orbit(adj: &[u64], generators: &[Vec<usize>], u: usize, v: usize) -> bool {
    let mut parent: Vec<usize> = (0..adj.len()).collect();
    for sigma in generators {
        for x in 0..adj.len() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, sigma[x]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    if find(&mut parent, u) == find(&mut parent, v) {
        return true;
    }
    same_cell_after_refinement(adj, u, v) && super::canon::same_orbit(adj, u, v)
}

#[allow(clippy::too_many_arguments)]
fn collect_subsets(
    from: usize,
    i: usize,
    chosen: u64,
    blocked: u64,
    max_size: usize,
    c4_filter: bool,
    two_step: &[u64],
    out: &mut Vec<u64>,
) {
    out.push(chosen);
    if chosen.count_ones() as usize == max_size {
        return;
    }
    for b in from..i {
        if c4_filter && blocked >> b & 1 == 1 {
            continue;
        }
        let next_blocked = if c4_filter { blocked | two_step[b] } else { blocked };
        collect_subsets(b + 1, i, chosen | 1 << b, next_blocked, max_size, c4_filter, two_step, out);
    }
}

fn rows_to_graph(adj: &[u64]) -> Graph {
    let mut g = Graph::empty(adj.len());
    for (u, &r) in adj.iter().enumerate() {
        for v in u + 1..adj.len() {
            if r >> v & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

struct Walk<'a, P: Pruner> {
    target: usize,
    c4_filter: bool,
    pruner: &'a P,
    leaves: u64,
}

impl<P: Pruner> Walk<'_, P> {
    /// Depth-first over descendants of `adj`. `on_leaf` returns true to stop;
    /// `cancelled` is polled between subtrees.
    fn walk(&mut self, adj: &[u64], on_leaf: &mut dyn FnMut(&[u64]) -> bool, cancelled: &dyn Fn() -> bool) -> bool {
        if adj.len() == self.target {
            self.leaves += 1;
            return on_leaf(adj);
        }
        for child in children(adj, self.c4_filter) {
            if self.pruner.prune(&child, self.target) {
                continue;
            }
            if cancelled() || self.walk(&child, on_leaf, cancelled) {
                return true;
            }
        }
        false
    }

    fn prefixes(&self, depth: usize) -> Vec<Vec<u64>> {
        let mut level: Vec<Vec<u64>> = vec![vec![]];
        for _ in 0..depth {
            level = level
                .iter()
                .flat_map(|g| children(g, self.c4_filter))
                .filter(|c| !self.pruner.prune(c, self.target))
                .collect();
        }
        level
    }
}

fn check_cap(order: usize, c4_filter: bool) -> Result<(), SearchError> {
    let cap = if c4_filter { MAX_C4_FREE_ORDER } else { MAX_UNFILTERED_ORDER };
    if order > cap {
        return Err(SearchError::CapExceeded { order, cap });
    }
    Ok(())
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, SearchError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| SearchError::Construction(e.to_string()))
}

fn split_depth(order: usize) -> usize {
    order * 2 / 3
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Order-`N` graphs generated (after pruning). Partial when a witness was found.
    pub graphs_examined: u64,
    /// First accepted graph in canonical enumeration order.
    pub witness: Option<Graph>,
}

/// Runs `visitor` on one representative of each isomorphism class of C4-free
/// graphs on `order` vertices that survives `pruner`, stopping at the first
/// graph it accepts. The witness returned does not depend on `jobs`.
pub fn enumerate_c4_free<P, V>(order: usize, pruner: &P, visitor: &V, jobs: usize) -> Result<Enumeration, SearchError>
where
    P: Pruner,
    V: Fn(&Graph) -> bool + Sync,
{
    check_cap(order, true)?;
    let walk = Walk { target: order, c4_filter: true, pruner, leaves: 0 };
    if pruner.prune(&[], order) {
        return Ok(Enumeration { graphs_examined: 0, witness: None });
    }
    let prefixes = walk.prefixes(split_depth(order));
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<(u64, Option<Vec<u64>>)> = pool(jobs)?.install(|| {
        prefixes
            .par_iter()
            .enumerate()
            .map(|(idx, prefix)| {
                let mut w = Walk { target: order, c4_filter: true, pruner, leaves: 0 };
                let mut found = None;
                let cancelled = || best.load(Ordering::Relaxed) < idx;
                if !cancelled() {
                    w.walk(
                        prefix,
                        &mut |adj| {
                            if visitor(&rows_to_graph(adj)) {
                                found = Some(adj.to_vec());
                                true
                            } else {
                                false
                            }
                        },
                        &cancelled,
                    );
                }
                if found.is_some() {
                    best.fetch_min(idx, Ordering::Relaxed);
                }
                (w.leaves, found)
            })
            .collect()
    });
    let graphs_examined = results.iter().map(|r| r.0).sum();
    let witness = results.into_iter().find_map(|r| r.1).map(|adj| rows_to_graph(&adj));
    Ok(Enumeration { graphs_examined, witness })
}

/// All isomorphism classes on `order` vertices (C4-free ones only when
/// `c4_filter`), in canonical enumeration order.
pub fn enumerate_graphs(order: usize, c4_filter: bool, jobs: usize) -> Result<Vec<Graph>, SearchError> {
    check_cap(order, c4_filter)?;
    let walk = Walk { target: order, c4_filter, pruner: &NoPrune, leaves: 0 };
    let prefixes = walk.prefixes(split_depth(order));
    let per_prefix: Vec<Vec<Graph>> = pool(jobs)?.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut w = Walk { target: order, c4_filter, pruner: &NoPrune, leaves: 0 };
                let mut out = Vec::new();
                w.walk(
                    prefix,
                    &mut |adj| {
                        out.push(rows_to_graph(adj));
                        false
                    },
                    &|| false,
                );
                out
            })
            .collect()
    });
    Ok(per_prefix.into_iter().flatten().collect())
}

/// Proof that no C4-free graph on `order` vertices has a `B_n^(k)`-free
/// complement, so `r(C4, B_n^(k)) <= order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionProof {
    #[serde(rename = "N")]
    pub order: usize,
    pub k: usize,
    pub n: usize,
    pub graphs_examined: u64,
    pub min_degree_pruned_below: usize,
    pub all_rejected: bool,
    pub generator_version: String,
}

#[derive(Clone, Debug)]
pub enum ExactOutcome {
    /// A C4-free graph on `order` vertices whose complement has no `B_n^(k)`.
    Witness(Graph),
    Exhausted(ExhaustionProof),
}

/// Decides whether `r(C4, B_n^(k)) > order`. Without `prune` every C4-free
/// class on `order` vertices is tested.
pub fn search_exact(order: usize, k: usize, n: usize, jobs: usize, prune: bool) -> Result<ExactOutcome, SearchError> {
    if k == 0 || n == 0 {
        return Err(SearchError::Domain("k and n must be positive".into()));
    }
    let pruner = if prune { MinDegreePruner::for_witness(order, k, n) } else { MinDegreePruner { required: 0 } };
    let run = enumerate_c4_free(order, &pruner, &|g: &Graph| is_ramsey_witness(g, k, n), jobs)?;
    Ok(match run.witness {
        Some(g) => ExactOutcome::Witness(g),
        None => ExactOutcome::Exhausted(ExhaustionProof {
            order,
            k,
            n,
            graphs_examined: run.graphs_examined,
            min_degree_pruned_below: pruner.required,
            all_rejected: true,
            generator_version: crate::GENERATOR_VERSION.to_string(),
        }),
    })
}
