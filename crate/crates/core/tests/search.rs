use c4book::graph::{is_c4_free, Graph};
use c4book::polarity_graph;
use c4book::ramsey::{certify_lower_bound, complement_book_number, is_ramsey_witness};
use c4book::search::{
    enumerate_c4_free, enumerate_graphs, greedy_min_degree_subgraph, probe_gq, random_delete_construction,
    search_exact, DeletionOverrides, ExactOutcome, MinDegreePruner, NoPrune, ProbeConfig, SearchError,
};

#[test]
fn subgraph_examples() {
    let (er3, _) = polarity_graph(3).unwrap();
    assert_eq!(greedy_min_degree_subgraph(&er3, 13, 3, 100).unwrap().unwrap().len(), 13);
    let (er2, _) = polarity_graph(2).unwrap();
    let s = greedy_min_degree_subgraph(&er2, 6, 2, 100).unwrap().unwrap();
    assert!(er2.induced_subgraph(&s).unwrap().min_degree() >= 2);
    assert_eq!(greedy_min_degree_subgraph(&Graph::star(3), 3, 2, 10_000).unwrap(), None);
}

#[test]
fn subgraph_certificates_for_even_q() {
    for q in [4usize, 8] {
        let (er, _) = polarity_graph(q as u64).unwrap();
        for t in (0..=q).filter(|&t| t != 1) {
            let s = greedy_min_degree_subgraph(&er, q * q + t - 1, q, 10_000_000).unwrap().unwrap();
            let h = er.induced_subgraph(&s).unwrap();
            assert_eq!(h.min_degree(), q);
            let cert = certify_lower_bound(&h, 3, "er-subgraph").unwrap();
            assert_eq!(cert.guaranteed_book_free_n, (q * q - 3 * q + t) as i64);
            assert_eq!(cert.implied_lower_bound, q * q + t);
        }
        // t = 1 is excluded from the construction and the search proves it infeasible.
        assert_eq!(greedy_min_degree_subgraph(&er, q * q, q, 10_000_000).unwrap(), None);
    }
}

#[test]
fn deletion_construction_at_n_100() {
    let o = DeletionOverrides { m: Some(7), ..Default::default() };
    for seed in [0, 1, 99] {
        let (g, run, cert) = random_delete_construction(100, 2, seed, &o).unwrap();
        assert_eq!((run.p, run.base_order, run.d, g.order()), (11, 133, 19, 114));
        assert!(g.min_degree() >= 7 && is_c4_free(&g).c4_free);
        assert!(cert.implies(100));
        assert!(complement_book_number(&g, 2).unwrap().nmax <= 99);
    }
    assert!(matches!(
        random_delete_construction(100, 2, 0, &DeletionOverrides::default()),
        Err(SearchError::AsymptoticRegimeNotReached { .. })
    ));
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_graphs(4, true, 1).unwrap().len(), 8);
    let none = enumerate_c4_free(7, &MinDegreePruner::for_witness(7, 1, 4), &|g: &Graph| is_ramsey_witness(g, 1, 4), 2)
        .unwrap();
    assert!(none.witness.is_none());
    let some = enumerate_c4_free(8, &NoPrune, &|g: &Graph| is_ramsey_witness(g, 2, 3), 2).unwrap();
    assert!(is_ramsey_witness(&some.witness.unwrap(), 2, 3));
}

#[test]
fn exact_search_outcomes() {
    match search_exact(9, 2, 3, 4, true).unwrap() {
        ExactOutcome::Exhausted(p) => {
            assert!(p.all_rejected);
            assert_eq!((p.order, p.k, p.n), (9, 2, 3));
        }
        ExactOutcome::Witness(w) => panic!("unexpected witness {:?}", w.edges()),
    }
}

#[test]
fn probe_rejects_empty_families() {
    let cfg = ProbeConfig { budget: 300_000, round: 30_000, ..Default::default() };
    assert!(matches!(probe_gq(2, &cfg), Err(SearchError::BudgetExhausted { .. })));
    assert!(matches!(probe_gq(4, &cfg), Err(SearchError::BudgetExhausted { .. })));
}

#[test]
fn probe_finds_a_member_for_q3() {
    let g = probe_gq(3, &ProbeConfig { budget: 10_000_000, ..Default::default() }).unwrap();
    assert_eq!(g.order(), 15);
    assert!(is_ramsey_witness(&g, 2, 7));
}
