use c4book::bounds::{bound_report, bounds_params, g_sequence, parse_rational, parsons_upper, q_threshold, theorem15_admissible};
use c4book::graph::is_c4_free;
use c4book::polarity_graph;
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn polarity_graphs_have_the_expected_shape() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
        let (g, abs) = polarity_graph(q).unwrap();
        let qu = q as usize;
        assert_eq!(g.order(), qu * qu + qu + 1);
        assert!(is_c4_free(&g).c4_free);
        assert!((0..g.order()).all(|v| g.degree(v) == qu || g.degree(v) == qu + 1));
        assert_eq!((0..g.order()).filter(|&v| g.degree(v) == qu).count(), qu + 1);
        assert_eq!(abs.len(), qu + 1);
        // Pairwise common neighbours, computed without bitsets.
        for u in 0..g.order() {
            let nu: Vec<usize> = g.neighbor_iter(u).collect();
            for v in u + 1..g.order() {
                assert!(nu.iter().filter(|&&w| g.has_edge(v, w)).count() <= 1);
            }
        }
    }
}

#[test]
fn g1_is_the_parsons_bound() {
    for n in 2..=1_000_000u64 {
        let g1 = g_sequence(n, 1).unwrap().values[1];
        assert_eq!(g1, n + c4book::arith::isqrt(n - 1) + 2);
        assert!(parsons_upper(n).unwrap() <= g1);
    }
}

#[test]
fn report_lower_never_exceeds_upper() {
    for n in 1..=2000 {
        for k in 1..=6 {
            let r = bound_report(n, k).unwrap();
            if let Some(u) = &r.upper {
                assert!(r.lower.value <= u.value, "n={n} k={k}: {r:?}");
                if let Some(e) = r.exact {
                    assert_eq!((e, e), (r.lower.value, u.value));
                }
            }
        }
    }
}

#[test]
fn ladder_gaps() {
    let eps = parse_rational("1/2").unwrap();
    for k in 3..=8u32 {
        for q in 10..=100i64 {
            for t in 0..=q {
                let p = bounds_params(k, q, t, &eps).unwrap();
                let l = &p.ladder;
                let kk = k as usize;
                assert_eq!(l[kk - 1] - l[kk - 2], q - p.b_k - 1);
                assert_eq!(l[kk - 2] - l[kk - 3], q + 1);
                if q > p.b_k + 1 {
                    assert!(l.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }
}

#[test]
fn threshold_identity_is_exact() {
    for k in 1..=6u32 {
        for eps in ["1/2", "3/10", "1/7", "99/100"] {
            let e = parse_rational(eps).unwrap();
            let lhs = q_threshold(k, &e) * e.pow(2 * k as i32);
            let base = BigInt::from(320u32) * BigInt::from(k).pow(4);
            assert_eq!(lhs, BigRational::from_integer(base.pow(k + 1)));
        }
    }
}

#[test]
fn admissibility_examples() {
    let eps = parse_rational("0.3").unwrap();
    assert!(!theorem15_admissible(3, 8, 1, &eps).unwrap().admissible);
    assert!(theorem15_admissible(3, 8, 5, &eps).unwrap().admissible);
    assert!(!theorem15_admissible(3, 7, 5, &eps).unwrap().admissible);
    assert!(theorem15_admissible(3, 6, 2, &eps).is_err());
}
