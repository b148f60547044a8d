//! Canonical labelling for small graphs (order <= 64).
//!
//! Individualisation-refinement: the initial colour partition is refined to
//! an equitable partition, then the first non-singleton cell is split by
//! individualising each of its vertices in turn. Leaves are discrete
//! partitions; the canonical form is the largest relabelled adjacency matrix
//! over all leaves. Automorphisms discovered when two leaves give the same
//! matrix prune the tree two ways: orbit pruning among siblings, and a jump
//! back to the node where the two leaf paths diverge.

use crate::graph::Graph;

/// Relabelled adjacency matrix plus the colour-class sizes it was computed under.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonForm {
    cells: Vec<usize>,
    rows: Vec<u64>,
}

impl CanonForm {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.rows.len());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in i + 1..self.rows.len() {
                if r >> j & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

#[derive(Clone, Debug)]
pub struct Canon {
    pub form: CanonForm,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines to the coarsest equitable partition below `p`. Splits are ordered
/// by neighbour count, so the result commutes with relabelling.
fn refine(adj: &[u64], mut p: Partition) -> Partition {
    'outer: loop {
        for si in 0..p.len() {
            let w = mask(&p[si]);
            let mut changed = false;
            let mut next: Partition = Vec::with_capacity(p.len() + 1);
            for cell in &p {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let counts: Vec<u32> = cell.iter().map(|&v| (adj[v] & w).count_ones()).collect();
                if counts.iter().all(|&c| c == counts[0]) {
                    next.push(cell.clone());
                    continue;
                }
                changed = true;
                let mut keys: Vec<u32> = counts.clone();
                keys.sort_unstable();
                keys.dedup();
                for key in keys {
                    next.push(cell.iter().zip(&counts).filter(|(_, &c)| c == key).map(|(&v, _)| v).collect());
                }
            }
            if changed {
                p = next;
                continue 'outer;
            }
        }
        return p;
    }
}

struct Leaf {
    rows: Vec<u64>,
    /// `order[i]` is the vertex at position `i`.
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn leaf_rows(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| {
                let mut r = 0u64;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    r |= 1 << pos[u];
                }
                r
            })
            .collect()
    }

    /// Maps each vertex of `leaf` to the vertex at the same position in `other`.
    fn automorphism(leaf: &[usize], other: &[usize]) -> Vec<usize> {
        let mut sigma = vec![0; leaf.len()];
        for (i, &v) in leaf.iter().enumerate() {
            sigma[v] = other[i];
        }
        sigma
    }

    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn visit(&mut self, partition: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let p = refine(self.adj, partition);
        if p.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
            let rows = self.leaf_rows(&order);
            let leaf = Leaf { rows, order, path: path.clone() };
            let Some(first) = &self.first else {
                self.best = Some(Leaf { rows: leaf.rows.clone(), order: leaf.order.clone(), path: leaf.path.clone() });
                self.first = Some(leaf);
                return None;
            };
            if leaf.rows == first.rows {
                self.generators.push(Self::automorphism(&leaf.order, &first.order));
                return Some(common_prefix(&leaf.path, &first.path));
            }
            let best = self.best.as_ref().unwrap();
            if leaf.rows == best.rows {
                self.generators.push(Self::automorphism(&leaf.order, &best.order));
                return Some(common_prefix(&leaf.path, &best.path));
            }
            if leaf.rows > best.rows {
                self.best = Some(leaf);
            }
            return None;
        }

        let target = p.iter().position(|c| c.len() > 1).unwrap();
        let depth = path.len();
        let cell = p[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.in_explored_orbit(w, &explored, path) {
                continue;
            }
            let mut child = p.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != w).collect();
            child.splice(target..=target, [vec![w], rest]);
            path.push(w);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(w);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn in_explored_orbit(&self, w: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for sigma in self.generators.iter().filter(|s| path.iter().all(|&v| s[v] == v)) {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, sigma[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == root)
    }
}

/// Canonical labelling of `adj` (bit `u` of `adj[v]` set iff `uv` is an edge)
/// under the ordered colouring `colors` (vertices of colour 0 first, ...).
pub fn canonical_rows(adj: &[u64], colors: Option<&[usize]>) -> Canon {
    let n = adj.len();
    assert!(n <= 64, "canonical labelling supports order <= 64, got {n}");
    let partition: Partition = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            let mut keys: Vec<usize> = c.to_vec();
            keys.sort_unstable();
            keys.dedup();
            keys.iter().map(|&k| (0..n).filter(|&v| c[v] == k).collect()).collect()
        }
    };
    let cells: Vec<usize> = partition.iter().map(|c| c.len()).collect();
    if n == 0 {
        return Canon { form: CanonForm { cells, rows: vec![] }, labeling: vec![], generators: vec![] };
    }
    let mut search = Search { adj, first: None, best: None, generators: Vec::new() };
    search.visit(partition, &mut Vec::new());
    let best = search.best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        labeling[v] = i;
    }
    Canon { form: CanonForm { cells, rows: best.rows }, labeling, generators: search.generators }
}

pub(crate) fn rows_of(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64, "canonical labelling supports order <= 64");
    (0..g.order()).map(|v| g.neighbor_iter(v).fold(0u64, |m, u| m | 1 << u)).collect()
}

pub fn canonical_form(g: &Graph) -> CanonForm {
    canonical_rows(&rows_of(g), None).form
}

/// Whether some automorphism of `adj` maps `u` to `v`.
pub fn same_orbit(adj: &[u64], u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let n = adj.len();
    let color = |x: usize| -> Vec<usize> { (0..n).map(|w| usize::from(w != x)).collect() };
    canonical_rows(adj, Some(&color(u))).form == canonical_rows(adj, Some(&color(v))).form
}
