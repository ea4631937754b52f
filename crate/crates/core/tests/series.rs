use std::collections::BTreeMap;

use hc_core::diagrams::Permutation;
use hc_core::harish_chandra::{
    commutes_through, commuting_symbol_table, exponent, freudenthal_table, gamma_l, height,
    l_operator_table, offsets_up_to, phi_eval, power_sum, residual_l, weyl_invariance_check,
    SpectralParam,
};
use hc_core::poly::Poly;
use hc_core::rational::{int, rat};
use hc_core::root_system::{inner, positive_roots, rho, weyl_apply, Weight};
use hc_core::{Complex64, Error, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_generic(rng: &mut ChaCha8Rng, n: usize) -> SpectralParam {
    loop {
        let q = rng.gen_range(7..14);
        let mut lambda: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-20..20), q)).collect();
        let s: Rational = lambda.iter().sum();
        lambda.push(-s);
        let k = rat(rng.gen_range(1..30), rng.gen_range(2..11));
        let sp = SpectralParam::new(Weight(lambda), k).unwrap();
        // (w lambda, beta) can still hit -(beta, beta)/2 for a non-root offset beta
        let resonant = Permutation::all(n + 1)
            .any(|w| freudenthal_table(&exponent(&w, &sp).unwrap(), &sp, 8).is_err());
        if !resonant {
            return sp;
        }
    }
}

#[test]
fn recurrence_solves_the_eigen_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=2 {
        for _ in 0..20 {
            let sp = random_generic(&mut rng, n);
            for w in Permutation::all(n + 1) {
                let mu = exponent(&w, &sp).unwrap();
                let t = freudenthal_table(&mu, &sp, 5).unwrap();
                assert!(residual_l(&t).is_zero(), "n={n} {sp:?} {w:?}");
                assert_eq!(t.eigenvalue(), gamma_l(&sp));
            }
        }
    }
}

/// Rank one reduces to the hypergeometric equation in `x = z_1 / z_2`, whose series has the
/// two-term ratio `(m-1+k)(m-1+k+2s) / (m (m+2s))`, `2s = (w lambda)_1 - (w lambda)_2`.
#[test]
fn rank_one_matches_hypergeometric_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let sp = random_generic(&mut rng, 1);
        for w in Permutation::all(2) {
            let wl = weyl_apply(&w, &sp.lambda).unwrap();
            let two_s = &wl[0] - &wl[1];
            let t = freudenthal_table(&exponent(&w, &sp).unwrap(), &sp, 8).unwrap();
            let mut f = int(1);
            for m in 1..=8i64 {
                let m1 = int(m - 1);
                f = f * (&m1 + &sp.k) * (&m1 + &sp.k + &two_s) / (int(m) * (int(m) + &two_s));
                assert_eq!(t.get(&[m as u32]), f, "m = {m}");
            }
        }
    }
}

#[test]
fn eigenvalue_is_weyl_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=3 {
        let sp = random_generic(&mut rng, n);
        let r = rho(n, &sp.k);
        for w in Permutation::all(n + 1) {
            let wl = weyl_apply(&w, &sp.lambda).unwrap();
            let want = inner(&wl, &wl).unwrap() - inner(&r, &r).unwrap();
            assert_eq!(gamma_l(&sp), want);
        }
    }
}

#[test]
fn integral_lambda_is_resonant() {
    let sp = SpectralParam::new(Weight::zero(2), rat(3, 2)).unwrap();
    let mu = exponent(&Permutation::identity(2), &sp).unwrap();
    assert!(freudenthal_table(&mu, &sp, 3).unwrap_err().to_string().starts_with("resonant spectral parameter"));
    // lambda = (1/2, -1/2): 2s = 1, bracket at height 1 for w = s vanishes
    let sp = SpectralParam::new(Weight(vec![rat(1, 2), rat(-1, 2)]), rat(3, 2)).unwrap().allow_nongeneric();
    let mu = exponent(&Permutation::new(vec![2, 1]).unwrap(), &sp).unwrap();
    assert!(matches!(freudenthal_table(&mu, &sp, 3), Err(Error::Resonant { .. })));
}

#[test]
fn series_converges_deep_in_the_zone() {
    let sp = SpectralParam::new(Weight(vec![rat(3, 10), rat(-3, 10)]), rat(3, 2)).unwrap();
    let mu = exponent(&Permutation::identity(2), &sp).unwrap();
    let z = [Complex64::new(1e-2, 0.0), Complex64::new(1.0, 0.0)];
    let a = phi_eval(&freudenthal_table(&mu, &sp, 6).unwrap(), &z).unwrap();
    let b = phi_eval(&freudenthal_table(&mu, &sp, 12).unwrap(), &z).unwrap();
    assert!((a - b).norm() / b.norm() < 1e-11);
}

/// `L` read off its definition: `p_0 = sum lambda_i^2 - 2 (rho, lambda)` and
/// `p_(m alpha) = -2k (alpha, lambda)` for every positive root and `m >= 1`.
fn l_oracle(n: usize, k: &Rational, depth: usize) -> BTreeMap<Vec<u32>, Poly> {
    let mut out = BTreeMap::new();
    let r = rho(n, k);
    let two_rho: Vec<Rational> = r.coords().iter().map(|c| -int(2) * c).collect();
    out.insert(vec![0; n], &power_sum(n, 2) + &Poly::linear(&two_rho, Rational::zero()));
    for a in positive_roots(n) {
        let v: Vec<Rational> = a.vector(n).coords().iter().map(|c| -int(2) * k * c).collect();
        let step = a.simple_coords(n);
        for m in 1.. {
            let off: Vec<u32> = step.iter().map(|s| s * m).collect();
            if height(&off) > depth {
                break;
            }
            let slot = out.entry(off).or_insert_with(|| Poly::zero(n + 1));
            *slot = &*slot + &Poly::linear(&v, Rational::zero());
        }
    }
    out
}

#[test]
fn worked_symbol_examples() {
    let k = rat(5, 4);
    for n in 1..=2 {
        let one = commuting_symbol_table(&Poly::one(n + 1), &k, 2).unwrap();
        let lin = commuting_symbol_table(&power_sum(n, 1), &k, 2).unwrap();
        let quad = commuting_symbol_table(&power_sum(n, 2), &k, 2).unwrap();
        let r = rho(n, &k);
        let l = l_oracle(n, &k, 2);
        for off in offsets_up_to(n, 2) {
            let top = height(&off) == 0;
            assert_eq!(one.get(&off), if top { Poly::one(n + 1) } else { Poly::zero(n + 1) });
            assert_eq!(lin.get(&off), if top { power_sum(n, 1) } else { Poly::zero(n + 1) });
            let mut want = l.get(&off).cloned().unwrap_or_else(|| Poly::zero(n + 1));
            if top {
                want = &want + &Poly::constant(n + 1, inner(&r, &r).unwrap());
            }
            assert_eq!(quad.get(&off), want, "n={n} offset {off:?}");
        }
        assert_eq!(l_operator_table(n, &k, 2).entries, l);
    }
}

#[test]
fn higher_symbols_commute_with_l() {
    let k = rat(2, 3);
    for (n, p) in [(1, 3), (1, 4), (2, 3)] {
        let t = commuting_symbol_table(&power_sum(n, p), &k, 5).unwrap();
        let l = l_operator_table(n, &k, 5);
        assert!(commutes_through(&t, &l, 5).unwrap(), "n={n} p={p}");
        let mut bad = t.clone();
        let e = bad.entries.entry(vec![1; n]).or_insert_with(|| Poly::zero(n + 1));
        *e = &*e + &Poly::var(n + 1, 0);
        assert!(!commutes_through(&bad, &l, 5).unwrap());
    }
}

#[test]
fn symbols_are_weyl_invariant() {
    let k = rat(3, 5);
    // depth must exceed d * n(n+1)(n+2)/6 with d = max(1, deg - 1)
    for (n, p, depth) in [(1, 2, 2), (1, 3, 3), (1, 4, 4), (2, 2, 5)] {
        let t = commuting_symbol_table(&power_sum(n, p), &k, depth).unwrap();
        assert!(weyl_invariance_check(&t), "n={n} p={p}");
    }
}
