use serde::Serialize;

use super::{Graph, GraphError, VertexSet};
use crate::arith::choose2;

/// Result of a 4-cycle search. `witness` is a cycle `a-b-c-d-a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C4Check {
    pub c4_free: bool,
    pub witness: Option<[usize; 4]>,
}

/// A graph is C4-free iff every pair of distinct vertices has at most one
/// common neighbour. The witness is built from the lexicographically first
/// offending pair `(a, c)` and its two smallest common neighbours `b < d`.
pub fn is_c4_free(g: &Graph) -> C4Check {
    for a in 0..g.order() {
        for c in a + 1..g.order() {
            if g.common_neighbor_count(a, c) >= 2 {
                let mut common = g.neighbors(a);
                common.intersect_with(&g.neighbors(c));
                let mut it = common.iter();
                let (b, d) = (it.next().unwrap(), it.next().unwrap());
                return C4Check { c4_free: false, witness: Some([a, b, c, d]) };
            }
        }
    }
    C4Check { c4_free: true, witness: None }
}

pub fn common_neighbors(g: &Graph, set: &[usize]) -> Result<VertexSet, GraphError> {
    let (&first, rest) = set.split_first().ok_or(GraphError::EmptyQuerySet)?;
    if let Some(&bad) = set.iter().find(|&&v| v >= g.order()) {
        return Err(GraphError::VertexOutOfRange { vertex: bad, order: g.order() });
    }
    let mut acc = g.neighbors(first);
    for &v in rest {
        acc.intersect_with(&g.neighbors(v));
    }
    Ok(acc)
}

/// Unordered pairs of distinct vertices with no common neighbour.
pub fn non_two_path_pairs(g: &Graph) -> u64 {
    let mut count = 0;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.common_neighbor_count(u, v) == 0 {
                count += 1;
            }
        }
    }
    count
}

/// Both forms of the double-counting bound on `sum_v C(d(v), 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KstReport {
    pub lhs: i64,
    pub rhs_basic: i64,
    pub p: i64,
    pub rhs_refined: i64,
    pub holds_basic: bool,
    pub holds_refined: bool,
}

pub fn kst_check(g: &Graph) -> KstReport {
    let lhs: i64 = (0..g.order()).map(|v| choose2(g.degree(v) as i64)).sum();
    let rhs_basic = choose2(g.order() as i64);
    let p = non_two_path_pairs(g) as i64;
    let rhs_refined = rhs_basic - p;
    KstReport {
        lhs,
        rhs_basic,
        p,
        rhs_refined,
        holds_basic: lhs <= rhs_basic,
        holds_refined: lhs <= rhs_refined,
    }
}

/// Returns `k` when every pair of distinct vertices has exactly one common
/// neighbour. Such a graph must be the fan `F_k` on `2k+1` vertices; a graph
/// that passes the pair test but not the structural test is reported as an
/// internal inconsistency. Graphs on fewer than three vertices return `None`
/// (`k >= 1` is required).
pub fn is_friendship(g: &Graph) -> Result<Option<usize>, GraphError> {
    let n = g.order();
    if n < 3 {
        return Ok(None);
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.common_neighbor_count(u, v) != 1 {
                return Ok(None);
            }
        }
    }
    let inconsistent = |why: &str| Err(GraphError::InternalInconsistency(format!("pair condition holds on {n} vertices but {why}")));
    if n.is_multiple_of(2) {
        return inconsistent("the order is even");
    }
    let k = (n - 1) / 2;
    let Some(centre) = (0..n).find(|&v| g.degree(v) == n - 1) else {
        return inconsistent("there is no universal vertex");
    };
    for v in (0..n).filter(|&v| v != centre) {
        if g.degree(v) != 2 {
            return inconsistent("a non-centre vertex does not have degree 2");
        }
    }
    if g.edge_count() != 3 * k {
        return inconsistent("the edge count differs from 3k");
    }
    Ok(Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)])
    }

    #[test]
    fn c4_detection() {
        let c4 = Graph::cycle(4);
        assert_eq!(is_c4_free(&c4), C4Check { c4_free: false, witness: Some([0, 1, 2, 3]) });
        assert_eq!(is_c4_free(&Graph::cycle(5)), C4Check { c4_free: true, witness: None });
        assert!(!is_c4_free(&Graph::complete(4)).c4_free);
        assert!(is_c4_free(&Graph::petersen()).c4_free);
    }

    #[test]
    fn common_neighbour_queries() {
        let star = Graph::star(3);
        assert_eq!(common_neighbors(&star, &[1, 2]).unwrap().to_vec(), vec![0]);
        assert!(common_neighbors(&Graph::cycle(5), &[0, 1]).unwrap().is_empty());
        assert_eq!(common_neighbors(&star, &[]), Err(GraphError::EmptyQuerySet));
    }

    #[test]
    fn two_path_pairs() {
        // Adjacent pairs of C5 share no neighbour.
        assert_eq!(non_two_path_pairs(&Graph::cycle(5)), 5);
        assert_eq!(non_two_path_pairs(&Graph::star(3)), 3);
        assert_eq!(non_two_path_pairs(&two_k2()), 6);
    }

    #[test]
    fn kst_small_cases() {
        let r = kst_check(&Graph::star(3));
        assert_eq!((r.lhs, r.rhs_basic, r.p, r.rhs_refined), (3, 6, 3, 3));
        assert!(r.holds_basic && r.holds_refined);
        let r = kst_check(&Graph::cycle(5));
        assert_eq!((r.lhs, r.rhs_basic, r.p, r.rhs_refined), (5, 10, 5, 5));
        assert!(r.holds_refined);
        // K4 has C4s and violates the bound.
        assert!(!kst_check(&Graph::complete(4)).holds_basic);
    }

    #[test]
    fn friendship_graphs() {
        assert_eq!(is_friendship(&Graph::friendship(2)), Ok(Some(2)));
        assert_eq!(is_friendship(&Graph::complete(3)), Ok(Some(1)));
        assert_eq!(is_friendship(&Graph::petersen()), Ok(None));
        assert_eq!(is_friendship(&Graph::cycle(4)), Ok(None));
        assert_eq!(is_friendship(&Graph::empty(1)), Ok(None));
    }

    #[test]
    fn friendship_relabelled() {
        let g = Graph::friendship(3);
        let perm = [4, 0, 6, 1, 3, 5, 2];
        assert_eq!(is_friendship(&g.permuted(&perm)), Ok(Some(3)));
    }
}
