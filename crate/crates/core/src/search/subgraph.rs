//! Induced subgraphs with prescribed order and minimum degree.
//!
//! Depth-first search over delete/keep decisions with propagation:
//! a vertex whose degree drops below the floor must be deleted, and a kept
//! vertex sitting exactly at the floor pins all its neighbours. The search
//! is complete, so `Ok(None)` means no such subgraph exists.

use super::SearchError;
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    Kept,
    Deleted,
}

struct Dfs<'a> {
    g: &'a Graph,
    min_deg: usize,
    max_deletions: usize,
    budget: u64,
    nodes: u64,
}

#[derive(Clone)]
struct Node {
    state: Vec<State>,
    degree: Vec<usize>,
    deletions: usize,
}

impl Dfs<'_> {
    /// Applies `delete` and `keep` requests until a fixed point. False on conflict.
    fn propagate(&self, node: &mut Node, mut delete: Vec<usize>, mut keep: Vec<usize>) -> bool {
        while !delete.is_empty() || !keep.is_empty() {
            if let Some(x) = delete.pop() {
                match node.state[x] {
                    State::Deleted => continue,
                    State::Kept => return false,
                    State::Open => {}
                }
                node.state[x] = State::Deleted;
                node.deletions += 1;
                if node.deletions > self.max_deletions {
                    return false;
                }
                for y in self.g.neighbor_iter(x) {
                    if node.state[y] == State::Deleted {
                        continue;
                    }
                    node.degree[y] -= 1;
                    if node.degree[y] < self.min_deg {
                        if node.state[y] == State::Kept {
                            return false;
                        }
                        delete.push(y);
                    } else if node.degree[y] == self.min_deg && node.state[y] == State::Kept {
                        keep.extend(self.g.neighbor_iter(y).filter(|&z| node.state[z] == State::Open));
                    }
                }
            } else if let Some(x) = keep.pop() {
                match node.state[x] {
                    State::Kept => continue,
                    State::Deleted => return false,
                    State::Open => {}
                }
                if node.degree[x] < self.min_deg {
                    return false;
                }
                node.state[x] = State::Kept;
                if node.degree[x] == self.min_deg {
                    keep.extend(self.g.neighbor_iter(x).filter(|&z| node.state[z] == State::Open));
                }
            }
        }
        true
    }

    /// Open vertices whose deletion lowers nobody to the floor come first,
    /// then by current degree, then by index.
    fn pick(&self, node: &Node) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| node.state[v] == State::Open)
            .min_by_key(|&v| {
                let cascades = self
                    .g
                    .neighbor_iter(v)
                    .any(|y| node.state[y] != State::Deleted && node.degree[y] <= self.min_deg);
                (cascades, node.degree[v], v)
            })
    }

    fn search(&mut self, node: Node) -> Result<Option<Node>, SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::BudgetExhausted { budget: self.budget });
        }
        if node.deletions == self.max_deletions {
            return Ok(Some(node));
        }
        let Some(x) = self.pick(&node) else {
            return Ok(None);
        };
        let mut child = node.clone();
        if self.propagate(&mut child, vec![x], vec![]) {
            if let Some(found) = self.search(child)? {
                return Ok(Some(found));
            }
        }
        let mut child = node;
        if self.propagate(&mut child, vec![], vec![x]) {
            return self.search(child);
        }
        Ok(None)
    }
}

/// Finds `S` with `|S| = target_order` and `δ(G[S]) >= min_deg`, visiting at
/// most `budget` search nodes. Returns the sorted vertex set.
pub fn greedy_min_degree_subgraph(
    g: &Graph,
    target_order: usize,
    min_deg: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, SearchError> {
    let order = g.order();
    if target_order > order {
        return Err(SearchError::Domain(format!("target order {target_order} exceeds graph order {order}")));
    }
    let mut dfs = Dfs { g, min_deg, max_deletions: order - target_order, budget, nodes: 0 };
    let mut root = Node { state: vec![State::Open; order], degree: (0..order).map(|v| g.degree(v)).collect(), deletions: 0 };
    let low: Vec<usize> = (0..order).filter(|&v| root.degree[v] < min_deg).collect();
    if !dfs.propagate(&mut root, low, vec![]) {
        return Ok(None);
    }
    let Some(found) = dfs.search(root)? else {
        return Ok(None);
    };
    let s: Vec<usize> = (0..order).filter(|&v| found.state[v] != State::Deleted).collect();
    let h = g.induced_subgraph(&s).map_err(|e| SearchError::Construction(e.to_string()))?;
    if s.len() != target_order || (target_order > 0 && h.min_degree() < min_deg) {
        return Err(SearchError::Construction(format!(
            "subgraph search returned {} vertices with minimum degree {}",
            s.len(),
            h.min_degree()
        )));
    }
    Ok(Some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polarity_graph;

    #[test]
    fn er3_needs_no_deletion() {
        let (g, _) = polarity_graph(3).unwrap();
        assert_eq!(greedy_min_degree_subgraph(&g, 13, 3, 1000).unwrap(), Some((0..13).collect()));
    }

    #[test]
    fn er2_drops_one_absolute_point() {
        let (g, abs) = polarity_graph(2).unwrap();
        let s = greedy_min_degree_subgraph(&g, 6, 2, 1000).unwrap().unwrap();
        assert_eq!(s.len(), 6);
        let missing = (0..7).find(|v| !s.contains(v)).unwrap();
        assert!(abs.contains(&missing));
        assert!(g.induced_subgraph(&s).unwrap().min_degree() >= 2);
    }

    #[test]
    fn star_has_no_dense_subgraph() {
        assert_eq!(greedy_min_degree_subgraph(&Graph::star(3), 3, 2, 1_000_000).unwrap(), None);
    }

    #[test]
    fn budget_is_reported_not_nonexistence() {
        let (g, _) = polarity_graph(8).unwrap();
        assert_eq!(
            greedy_min_degree_subgraph(&g, 69, 8, 1),
            Err(SearchError::BudgetExhausted { budget: 1 })
        );
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            let target = rng.gen_range(1..=n);
            let d = rng.gen_range(0..=3);
            let brute = (0u32..1 << n).filter(|m| m.count_ones() as usize == target).any(|m| {
                let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                g.induced_subgraph(&s).unwrap().min_degree() >= d
            });
            let got = greedy_min_degree_subgraph(&g, target, d, u64::MAX).unwrap();
            assert_eq!(got.is_some(), brute, "n={n} target={target} d={d} g={:?}", g.edges());
        }
    }
}
