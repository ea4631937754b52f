use hc_core::diagrams::Permutation;
use hc_core::rational::{int, rat};
use hc_core::root_system::{
    coroot, delta, dominance_leq, from_simple_coords, fundamental_weight, inner, positive_roots,
    rho, simple_coords, simple_root, weyl_apply, Weight,
};
use proptest::prelude::*;

fn weight(v: &[i64], q: i64) -> Weight {
    Weight(v.iter().map(|&x| rat(x, q)).collect())
}

#[test]
fn weyl_group_acts_by_isometries() {
    for n in 1..=4 {
        let v = weight(&(0..=n as i64).map(|i| 3 * i * i - 7).collect::<Vec<_>>(), 5);
        let u = weight(&(0..=n as i64).map(|i| 11 - 2 * i).collect::<Vec<_>>(), 3);
        for w in Permutation::all(n + 1) {
            let (wv, wu) = (weyl_apply(&w, &v).unwrap(), weyl_apply(&w, &u).unwrap());
            assert_eq!(inner(&wv, &wu).unwrap(), inner(&v, &u).unwrap());
            // (w1 w2) v = w2 (w1 v) under (w v)_i = v_(w(i))
            for w2 in Permutation::all(n + 1).step_by(5) {
                let lhs = weyl_apply(&w.compose(&w2).unwrap(), &v).unwrap();
                assert_eq!(lhs, weyl_apply(&w2, &wv).unwrap());
            }
        }
    }
}

#[test]
fn root_data() {
    for n in 1..=5 {
        assert_eq!(positive_roots(n).len(), n * (n + 1) / 2);
        let k = rat(3, 4);
        let r = rho(n, &k);
        // rho is half the sum of the positive roots, scaled by k
        let mut half_sum = Weight::zero(n + 1);
        for a in positive_roots(n) {
            half_sum = &half_sum + &a.vector(n);
        }
        assert_eq!(r, half_sum.scale(&(rat(1, 2) * &k)));
        assert_eq!(r, delta(n).scale(&k));
        for i in 1..=n {
            let a = simple_root(n, i);
            assert_eq!(coroot(&a).unwrap(), a);
            for j in 1..=n {
                let pairing = inner(&coroot(&a).unwrap(), &fundamental_weight(n, j)).unwrap();
                assert_eq!(pairing, if i == j { int(1) } else { int(0) });
            }
            // (rho, alpha_i^vee) = k
            assert_eq!(inner(&r, &a).unwrap(), k);
        }
    }
}

proptest! {
    #[test]
    fn simple_coordinates_round_trip(l in proptest::collection::vec(0u32..20, 1..6)) {
        let v = from_simple_coords(&l);
        let back = simple_coords(&v).unwrap();
        prop_assert_eq!(back, l.iter().map(|&x| int(x as i64)).collect::<Vec<_>>());
    }

    #[test]
    fn dominance_is_a_partial_order(
        a in proptest::collection::vec(-6i64..6, 4),
        b in proptest::collection::vec(0u32..4, 3),
        c in proptest::collection::vec(0u32..4, 3),
    ) {
        let x = weight(&a, 1);
        let y = &x + &from_simple_coords(&b);
        let z = &y + &from_simple_coords(&c);
        prop_assert!(dominance_leq(&x, &x));
        prop_assert!(dominance_leq(&x, &y) && dominance_leq(&y, &z) && dominance_leq(&x, &z));
        if dominance_leq(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
    }
}
