use std::collections::BTreeMap;

use hc_core::diagrams::{
    diagram_of, extend_by_top_row, gz_pattern, gz_weight, length, multiparam_sum, partial_leq,
    permutation_of, poincare, reduced_word, word_product, Arrow, Diagram, OrderCounts, Permutation,
    LENGTH_ARROW,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sizes of the connected components of the arrow graph, read at the top row.
fn component_sizes(d: &Diagram) -> Vec<usize> {
    let r = d.rows();
    let id = |i: usize, j: usize| (j - 1) * j / 2 + (i - 1);
    let mut parent: Vec<usize> = (0..r * (r + 1) / 2).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for j in 1..r {
        for i in 1..=j {
            let (ti, tj) = d.target(i, j).unwrap();
            let (a, b) = (find(&mut parent, id(i, j)), find(&mut parent, id(ti, tj)));
            parent[a] = b;
        }
    }
    let mut sizes = BTreeMap::new();
    for x in 0..parent.len() {
        *sizes.entry(find(&mut parent, x)).or_insert(0) += 1;
    }
    (1..=r).map(|i| sizes[&find(&mut parent, id(i, r))]).collect()
}

#[test]
fn bijection_round_trips_exhaustively() {
    for r in 1..=6 {
        for d in Diagram::all(r) {
            assert_eq!(diagram_of(&permutation_of(&d)), d);
        }
        for w in Permutation::all(r) {
            assert_eq!(permutation_of(&diagram_of(&w)), w);
        }
    }
}

#[test]
fn images_are_component_sizes() {
    for r in 1..=6 {
        for d in Diagram::all(r) {
            assert_eq!(permutation_of(&d).images(), component_sizes(&d).as_slice(), "{d:?}");
        }
    }
}

#[test]
fn length_is_inversion_count_and_left_arrow_count() {
    for r in 1..=6 {
        for d in Diagram::all(r) {
            let l = length(&d);
            assert_eq!(l, permutation_of(&d).inversions());
            assert_eq!(d.count_arrows(LENGTH_ARROW), l);
            let other = if LENGTH_ARROW == Arrow::Left { Arrow::Right } else { Arrow::Left };
            assert_eq!(d.count_arrows(other), r * (r - 1) / 2 - l);
        }
    }
}

#[test]
fn extreme_diagrams() {
    for r in 1..=6 {
        let ones = Diagram::new(vec![1; r]).unwrap();
        assert!(permutation_of(&ones).is_identity());
        let top = Diagram::new((1..=r).collect()).unwrap();
        assert_eq!(permutation_of(&top), Permutation::longest(r));
        assert_eq!(length(&top), r * (r - 1) / 2);
    }
}

#[test]
fn reduced_words_multiply_back() {
    for r in 1..=6 {
        for w in Permutation::all(r) {
            let d = diagram_of(&w);
            let word = reduced_word(&d);
            assert_eq!(word_product(r, &word), w);
            assert_eq!(word.len(), w.inversions());
        }
    }
}

#[test]
fn top_row_induction() {
    for r in 2..=6 {
        for w in Permutation::all(r) {
            let d = diagram_of(&w);
            let lower = Diagram::new(d.marks()[..r - 1].to_vec()).unwrap();
            assert_eq!(extend_by_top_row(&permutation_of(&lower), d.mark(r)), w);
        }
    }
}

#[test]
fn generating_functions() {
    for n in 1..=7 {
        assert!(poincare(n).holds(), "n = {n}");
    }
    assert_eq!(poincare(2).sum.coeffs(), &[1, 1]);
    for n in 1..=5 {
        let m = multiparam_sum(n);
        assert!(m.holds(), "n = {n}");
        assert_eq!(m.sum.specialize(), poincare(n).sum);
    }
}

#[test]
fn up_and_down_sets() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            assert_eq!(OrderCounts::closed_form(&w), OrderCounts::enumerate(&w), "{w:?}");
        }
    }
}

#[test]
fn order_is_monotone_in_length() {
    let all: Vec<_> = Permutation::all(5).collect();
    for a in &all {
        for b in &all {
            if partial_leq(a, b).unwrap() {
                assert!(a.inversions() <= b.inversions());
                if partial_leq(b, a).unwrap() {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn gz_patterns_have_permuted_weight() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=4 {
        for _ in 0..20 {
            let mut m: Vec<i64> = Vec::with_capacity(n);
            let mut x = rng.gen_range(-10..10);
            for _ in 0..n {
                x += rng.gen_range(1..5);
                m.push(x);
            }
            for w in Permutation::all(n) {
                let p = gz_pattern(&w, &m).unwrap();
                assert!(p.is_between());
                assert_eq!(p.rows()[0], m);
                // entry m_i lands in slot w(i)
                let weight = gz_weight(&p);
                for i in 1..=n {
                    assert_eq!(weight[w.apply(i) - 1], m[i - 1], "{w:?} {m:?}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn composition_is_associative(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<_> = Permutation::all(5).collect();
        let pick = |rng: &mut ChaCha8Rng| all[rng.gen_range(0..all.len())].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn length_is_subadditive(i in 0usize..120, j in 0usize..120) {
        let all: Vec<_> = Permutation::all(5).collect();
        let (a, b) = (&all[i], &all[j]);
        let ab = a.compose(b).unwrap();
        prop_assert!(ab.inversions() <= a.inversions() + b.inversions());
    }
}
