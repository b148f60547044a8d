use c4book::arith::choose2;
use c4book::graph::{is_c4_free, Graph};
use c4book::polarity_graph;
use c4book::ramsey::{certify_lower_bound, complement_book_number, complement_book_number_par, find_admissible_sets};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Largest number of common non-neighbours of an independent k-set, by enumeration.
fn brute_book_number(g: &Graph, k: usize) -> usize {
    let n = g.order();
    combinations(n, k)
        .into_iter()
        .filter(|s| s.iter().all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b))))
        .map(|s| (0..n).filter(|v| !s.contains(v) && s.iter().all(|&x| !g.has_edge(x, *v))).count())
        .max()
        .unwrap_or(0)
}

#[test]
fn book_number_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let k = rng.gen_range(1..=3.min(n));
        let p = rng.gen_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        let b = complement_book_number(&g, k).unwrap();
        assert_eq!(b.nmax, brute_book_number(&g, k), "n={n} k={k} edges={:?}", g.edges());
        if b.nmax > 0 {
            let w = &b.witness;
            assert_eq!(w.spine.len(), k);
            assert_eq!(w.pages.len(), b.nmax);
            for &x in &w.spine {
                assert!(w.spine.iter().all(|&y| !g.has_edge(x, y)));
                assert!(w.pages.iter().all(|&y| y != x && !g.has_edge(x, y)));
            }
        }
    }
}

#[test]
fn book_number_is_independent_of_worker_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..30 {
        let g = random_graph(&mut rng, 30, 0.2);
        let one = complement_book_number_par(&g, 2, 1).unwrap();
        let four = complement_book_number_par(&g, 2, 4).unwrap();
        assert_eq!(one, four);
    }
}

#[test]
fn certificates_are_sound_on_c4_free_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 150 {
        let n = rng.gen_range(4..=40);
        let p = rng.gen_range(0.05..0.3);
        let mut g = random_graph(&mut rng, n, p);
        while let Some([a, b, ..]) = is_c4_free(&g).witness {
            g.remove_edge(a, b);
        }
        let k = rng.gen_range(1..=3);
        let cert = certify_lower_bound(&g, k, "random").unwrap();
        let nmax = complement_book_number(&g, k).unwrap().nmax as i64;
        assert!(cert.guaranteed_book_free_n > nmax);
        assert_eq!(cert.cross_check_nmax, Some(nmax as usize));
        checked += 1;
    }
    for q in [2u64, 3, 4, 5, 7] {
        let (g, _) = polarity_graph(q).unwrap();
        for k in 1..=3 {
            let cert = certify_lower_bound(&g, k, "ER").unwrap();
            assert!(cert.guaranteed_book_free_n > cert.cross_check_nmax.unwrap() as i64);
        }
    }
}

#[test]
fn certificate_refuses_graphs_with_a_4_cycle() {
    assert!(certify_lower_bound(&Graph::cycle(4), 1, "").is_err());
}

/// Re-verifies admissible-set properties by direct enumeration and checks
/// the inclusion-exclusion count and its consequence on every ER_q-derived
/// instance.
#[test]
fn admissible_sets_reverify_and_count_exactly() {
    for q in [4u64, 5, 7, 8] {
        let (er, abs) = polarity_graph(q).unwrap();
        let q = q as usize;
        // ER_q itself and ER_q minus one absolute point.
        let minus: Vec<usize> = (0..er.order()).filter(|&v| v != abs[0]).collect();
        for g in [er.clone(), er.induced_subgraph(&minus).unwrap()] {
            let n = g.order();
            for k in 1..=3 {
                let nmax = complement_book_number(&g, k).unwrap().nmax;
                let mut seen = 0;
                for v in (0..n).step_by(3) {
                    let sets = find_admissible_sets(&g, v, k, q, 40);
                    for s in sets {
                        seen += 1;
                        assert_eq!(s.len(), k);
                        // (1) independent, (2) low degree.
                        for (i, &x) in s.iter().enumerate() {
                            assert!(g.degree(x) <= q);
                            assert!(s[i + 1..].iter().all(|&y| !g.has_edge(x, y)));
                        }
                        // (3) members sit in distinct punctured neighbourhoods of neighbours of v.
                        let hosts: Vec<Vec<usize>> = s
                            .iter()
                            .map(|&x| {
                                g.neighbor_iter(v)
                                    .filter(|&vi| g.has_edge(vi, x) && x != v && !g.has_edge(v, x))
                                    .collect()
                            })
                            .collect();
                        assert!(hosts.iter().all(|h| !h.is_empty()));
                        let mut used = Vec::new();
                        assert!(distinct_hosts(&hosts, 0, &mut used));
                        // (4) no three members with a common neighbour.
                        for w in 0..n {
                            assert!(s.iter().filter(|&&x| g.has_edge(x, w)).count() <= 2);
                        }
                        // Inclusion-exclusion is exact when no three share a neighbour.
                        let sharing = (0..k)
                            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                            .filter(|&(i, j)| g.common_neighbor_count(s[i], s[j]) == 1)
                            .count();
                        let degrees: usize = s.iter().map(|&x| g.degree(x)).sum();
                        let common_non = (0..n).filter(|y| !s.contains(y) && s.iter().all(|&x| !g.has_edge(x, *y))).count();
                        assert_eq!(common_non as i64, n as i64 - k as i64 - degrees as i64 + sharing as i64);
                        assert!(common_non <= nmax);
                        // Contrapositive of the disjoint-pair claim.
                        let all_share_bound = n as i64 - k as i64 - (k * q) as i64 + choose2(k as i64);
                        if all_share_bound > nmax as i64 {
                            assert!(sharing < k * (k - 1) / 2);
                        }
                    }
                }
                if k == 1 {
                    assert!(seen > 0, "q={q}");
                }
            }
        }
    }
}

fn distinct_hosts(hosts: &[Vec<usize>], i: usize, used: &mut Vec<usize>) -> bool {
    if i == hosts.len() {
        return true;
    }
    for &h in &hosts[i] {
        if !used.contains(&h) {
            used.push(h);
            if distinct_hosts(hosts, i + 1, used) {
                return true;
            }
            used.pop();
        }
    }
    false
}

#[test]
fn book_number_examples() {
    assert_eq!(complement_book_number(&Graph::empty(5), 2).unwrap().nmax, 3);
    assert_eq!(complement_book_number(&Graph::cycle(6), 1).unwrap().nmax, 3);
    assert_eq!(complement_book_number(&Graph::complete(4), 2).unwrap().nmax, 0);
    assert!(complement_book_number(&Graph::empty(3), 4).is_err());
}
