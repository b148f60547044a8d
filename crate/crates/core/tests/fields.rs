use c4book::arith::prime_power;
use c4book::gf::{Field, FieldTables};
use proptest::prelude::*;
use rayon::prelude::*;

fn field(q: u64) -> Field {
    let (p, e) = prime_power(q).unwrap();
    Field::new(p, e).unwrap()
}

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

/// Exhaustive field axioms over the index tables.
fn check_axioms(q: u32, t: &FieldTables) {
    for a in 0..q {
        assert_eq!(t.add(a, 0), a);
        assert_eq!(t.mul(a, 1), a);
        assert_eq!(t.mul(a, 0), 0);
        assert_eq!((0..q).filter(|&b| t.add(a, b) == 0).count(), 1, "additive inverse of {a}");
        if a != 0 {
            assert_eq!((0..q).filter(|&b| t.mul(a, b) == 1).count(), 1, "multiplicative inverse of {a}");
        }
        for b in 0..q {
            assert_eq!(t.add(a, b), t.add(b, a));
            assert_eq!(t.mul(a, b), t.mul(b, a));
            let (ab_sum, ab_prod) = (t.add(a, b), t.mul(a, b));
            for c in 0..q {
                assert_eq!(t.add(ab_sum, c), t.add(a, t.add(b, c)));
                assert_eq!(t.mul(ab_prod, c), t.mul(a, t.mul(b, c)));
                assert_eq!(t.mul(a, t.add(b, c)), t.add(ab_prod, t.mul(a, c)));
            }
        }
    }
}

#[test]
fn every_field_up_to_512_satisfies_the_axioms() {
    prime_powers(512).par_iter().for_each(|&q| {
        let f = field(q);
        check_axioms(q as u32, &f.tables());
    });
}

#[test]
fn inverse_of_product_and_frobenius() {
    for q in prime_powers(64) {
        let f = field(q);
        let p = f.characteristic();
        let elems = f.elements();
        for a in &elems {
            for b in &elems {
                let sum_p = f.pow(&f.add(a, b).unwrap(), p).unwrap();
                let p_sum = f.add(&f.pow(a, p).unwrap(), &f.pow(b, p).unwrap()).unwrap();
                assert_eq!(sum_p, p_sum, "Frobenius in GF({q})");
                if !a.is_zero() && !b.is_zero() {
                    let lhs = f.inv(&f.mul(a, b).unwrap()).unwrap();
                    let rhs = f.mul(&f.inv(a).unwrap(), &f.inv(b).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "GF({q})");
                }
            }
        }
    }
}

#[test]
fn tables_agree_with_element_arithmetic() {
    for q in [4u64, 8, 9, 25, 27] {
        let f = field(q);
        let t = f.tables();
        for a in 0..q {
            for b in 0..q {
                let (x, y) = (f.element(a), f.element(b));
                assert_eq!(u64::from(t.mul(a as u32, b as u32)), f.index_of(&f.mul(&x, &y).unwrap()).unwrap());
                assert_eq!(u64::from(t.add(a as u32, b as u32)), f.index_of(&f.add(&x, &y).unwrap()).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn multiplicative_group_has_order_q_minus_one(i in 0usize..40, a in any::<u64>()) {
        let qs = prime_powers(1024);
        let q = qs[i % qs.len()];
        let f = field(q);
        let x = f.element(a % q);
        prop_assume!(!x.is_zero());
        prop_assert_eq!(f.pow(&x, q - 1).unwrap(), f.one());
    }
}
