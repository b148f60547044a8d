//! Heuristic search for C4-free graphs on `q^2 + q + 3` vertices whose
//! complement has no `B_{q^2-q+1}^(2)`.
//!
//! Simulated annealing over edge flips. The cost counts 4-cycles through
//! common-neighbour pairs plus, for each non-adjacent pair, the number of
//! common non-neighbours above `n - 1`; cost zero is exactly a witness.
//! Failure says nothing about existence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::SearchError;
use crate::geometry::polarity_graph;
use crate::graph::Graph;
use crate::ramsey::is_ramsey_witness;

#[derive(Clone, Debug)]
pub struct ProbeConfig {
    /// Total edge-flip proposals.
    pub budget: u64,
    pub seed: u64,
    /// Proposals per annealing round before a restart.
    pub round: u64,
    pub t_start: f64,
    pub t_end: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { budget: 100_000_000, seed: 0, round: 200_000, t_start: 2.0, t_end: 0.05 }
    }
}

struct State {
    adj: Vec<u64>,
    order: usize,
    /// Maximum allowed common non-neighbours of a non-adjacent pair.
    limit: i64,
}

impl State {
    fn pair_cost(&self, u: usize, v: usize) -> i64 {
        let common = (self.adj[u] & self.adj[v]).count_ones() as i64;
        let mut cost = common * (common - 1) / 2;
        if self.adj[u] >> v & 1 == 0 {
            let union = (self.adj[u] | self.adj[v]) & !(1 << u | 1 << v);
            let non = self.order as i64 - 2 - union.count_ones() as i64;
            cost += (non - self.limit).max(0);
        }
        cost
    }

    /// Cost of every pair touching `u` or `v`.
    fn local_cost(&self, u: usize, v: usize) -> i64 {
        let mut c = self.pair_cost(u, v);
        for x in 0..self.order {
            if x != u && x != v {
                c += self.pair_cost(u, x) + self.pair_cost(v, x);
            }
        }
        c
    }

    fn total_cost(&self) -> i64 {
        (0..self.order).flat_map(|u| (u + 1..self.order).map(move |v| (u, v))).map(|(u, v)| self.pair_cost(u, v)).sum()
    }

    fn flip(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.adj[u] >> v & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// `ER_q` plus two isolated vertices.
fn seed_graph(q: u64) -> Result<Vec<u64>, SearchError> {
    let (er, _) = polarity_graph(q)?;
    let order = er.order() + 2;
    let mut adj = vec![0u64; order];
    for (u, v) in er.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(adj)
}

/// Returns a verified member of the target family or `BudgetExhausted`.
pub fn probe_gq(q: u64, config: &ProbeConfig) -> Result<Graph, SearchError> {
    if !crate::arith::is_prime_power(q) {
        return Err(SearchError::Domain(format!("{q} is not a prime power")));
    }
    let order = (q * q + q + 3) as usize;
    if order > 64 {
        return Err(SearchError::CapExceeded { order, cap: 64 });
    }
    let n = (q * q - q + 1) as i64;
    let start = seed_graph(q)?;
    let mut rng = ChaCha20Rng::seed_from_u64(config.seed);
    let mut state = State { adj: start.clone(), order, limit: n - 1 };
    let mut cost = state.total_cost();
    let round = config.round.max(1);
    let ratio = (config.t_end / config.t_start).ln();

    for step in 0..config.budget {
        if cost == 0 {
            let g = state.graph();
            if is_ramsey_witness(&g, 2, n as usize) {
                return Ok(g);
            }
            return Err(SearchError::Construction("zero-cost graph failed verification".into()));
        }
        let phase = step % round;
        if phase == 0 && step > 0 {
            state.adj = start.clone();
            cost = state.total_cost();
        }
        let temp = config.t_start * (ratio * phase as f64 / round as f64).exp();
        let u = rng.gen_range(0..order);
        let mut v = rng.gen_range(0..order - 1);
        if v >= u {
            v += 1;
        }
        let before = state.local_cost(u, v);
        state.flip(u, v);
        let delta = state.local_cost(u, v) - before;
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
            cost += delta;
        } else {
            state.flip(u, v);
        }
    }
    if cost == 0 {
        let g = state.graph();
        if is_ramsey_witness(&g, 2, n as usize) {
            return Ok(g);
        }
    }
    Err(SearchError::BudgetExhausted { budget: config.budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cost_zero_iff_witness() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..200 {
            let order = 9;
            let mut s = State { adj: vec![0; order], order, limit: 2 };
            for u in 0..order {
                for v in u + 1..order {
                    if rng.gen_bool(0.35) {
                        s.flip(u, v);
                    }
                }
            }
            assert_eq!(s.total_cost() == 0, is_ramsey_witness(&s.graph(), 2, 3));
        }
    }

    #[test]
    fn local_cost_tracks_total() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        let mut s = State { adj: seed_graph(3).unwrap(), order: 15, limit: 6 };
        let mut cost = s.total_cost();
        for _ in 0..500 {
            let u = rng.gen_range(0..15);
            let v = (u + rng.gen_range(1..15)) % 15;
            let before = s.local_cost(u, v);
            s.flip(u, v);
            cost += s.local_cost(u, v) - before;
            assert_eq!(cost, s.total_cost());
        }
    }

    #[test]
    fn q2_never_succeeds() {
        let cfg = ProbeConfig { budget: 200_000, round: 20_000, ..Default::default() };
        assert!(matches!(probe_gq(2, &cfg), Err(SearchError::BudgetExhausted { .. })));
    }
}
