use hc_core::closed_forms::{
    a_w, a_w_reflected, f_w_at_1, limit_ratio, limit_value, pair_sum_identity, relative_error,
    sine_denominators_vanish, vandermonde_euler_check, vandermonde_power_constant,
    vandermonde_power_ratio, vandermonde_power_residual,
};
use hc_core::diagrams::Permutation;
use hc_core::harish_chandra::SpectralParam;
use hc_core::rational::{int, rat, to_f64};
use hc_core::root_system::Weight;
use hc_core::{Complex64, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sp(rng: &mut ChaCha8Rng, n: usize, k: Rational) -> SpectralParam {
    loop {
        let q = rng.gen_range(11..30);
        let mut lambda: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-40..40), q)).collect();
        let s: Rational = lambda.iter().sum();
        lambda.push(-s);
        let sp = SpectralParam::new(Weight(lambda), k.clone()).unwrap();
        if sp.check_generic().is_ok() {
            return sp;
        }
    }
}

fn random_k(rng: &mut ChaCha8Rng, n: usize) -> Rational {
    loop {
        let k = rat(rng.gen_range(1..40), rng.gen_range(7..23));
        if !sine_denominators_vanish(n, &k) {
            return k;
        }
    }
}

/// Gauss: `2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))` for `c - a - b > 0`.
fn gauss_at_one(a: f64, b: f64, c: f64) -> f64 {
    let g = libm::tgamma;
    g(c) * g(c - a - b) / (g(c - a) * g(c - b))
}

#[test]
fn rank_one_value_at_identity_is_gauss_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 20 {
        // convergence at x = 1 needs k < 1/2
        let k = rat(rng.gen_range(1..20), 41);
        let sp = random_sp(&mut rng, 1, k.clone());
        for w in Permutation::all(2) {
            let wl = hc_core::root_system::weyl_apply(&w, &sp.lambda).unwrap();
            let two_s = to_f64(&(&wl[0] - &wl[1]));
            let kf = to_f64(&k);
            let Ok(v) = f_w_at_1(&w, &sp) else { continue };
            let want = gauss_at_one(kf, kf + two_s, 1.0 + two_s);
            let err = relative_error(v, Complex64::new(want, 0.0));
            assert!(err < 1e-10, "k={kf} 2s={two_s}: {v} vs {want}");
            checked += 1;
        }
    }
}

#[test]
fn limit_is_leading_coefficient_times_value_at_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 1..=3 {
        let mut checked = 0;
        while checked < 50 {
            let k = random_k(&mut rng, n);
            let sp = random_sp(&mut rng, n, k);
            let w = Permutation::all(n + 1).nth(rng.gen_range(0..(1..=n + 1).product::<usize>())).unwrap();
            // gamma poles of individual factors are skipped, not counted
            let (Ok(a), Ok(f)) = (a_w(&w, &sp), f_w_at_1(&w, &sp)) else { continue };
            let limit = limit_value(&w, &sp).unwrap();
            let product = a * f;
            let scale = limit.norm().max(product.norm());
            // both sides vanish together when x - k + 1 is a nonpositive integer
            if scale > 0.0 {
                assert!((limit - product).norm() / scale < 1e-10, "n={n} {sp:?} {w:?}: {limit} vs {product}");
                let ratio = limit_ratio(&w, &sp).unwrap();
                assert!(relative_error(ratio, Complex64::new(1.0, 0.0)) < 1e-10);
            }
            checked += 1;
        }
    }
}

#[test]
fn reflection_formula_agrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in 1..=3 {
        for _ in 0..20 {
            let k = random_k(&mut rng, n);
            let sp = random_sp(&mut rng, n, k);
            for w in Permutation::all(n + 1) {
                let (Ok(a), Ok(b)) = (a_w(&w, &sp), a_w_reflected(&w, &sp)) else { continue };
                assert!(relative_error(a, b) < 1e-12);
            }
        }
    }
}

#[test]
fn pair_sum_and_euler_eigenvalue() {
    for n in 0..=60 {
        assert!(pair_sum_identity(n).holds(), "n = {n}");
    }
    let expected = [0, 0, 2, 11, 35, 85];
    for n in 1..=5 {
        let c = vandermonde_euler_check(n);
        assert!(c.holds(), "n = {n}: {c:?}");
        assert_eq!(c.expected, int(expected[n]));
    }
}

#[test]
fn vandermonde_power_constants() {
    assert_eq!(vandermonde_power_constant(1, &rat(3, 4)), int(0));
    assert_eq!(vandermonde_power_constant(2, &rat(3, 4)), rat(5, 8));
    assert_eq!(vandermonde_power_constant(3, &rat(3, 4)), rat(13, 4));
    // k = 1 reduces to the Euler eigenvalue
    for n in 1..=5 {
        assert_eq!(vandermonde_power_constant(n, &int(1)), vandermonde_euler_check(n).expected);
    }
}

fn random_points(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    loop {
        let mut t: Vec<f64> = (0..m).map(|_| rng.gen_range(0.5..5.0)).collect();
        t.sort_by(|a, b| b.partial_cmp(a).unwrap());
        if t.windows(2).all(|p| p[0] - p[1] > 0.1) {
            return t;
        }
    }
}

#[test]
fn vandermonde_power_is_an_eigenfunction() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 1..=2 {
        for i in 0..100 {
            let k = if i == 0 { rat(1, 2) } else { rat(rng.gen_range(1..60), 20) };
            let t = random_points(&mut rng, n + 1);
            let r = vandermonde_power_residual(&k, &t).unwrap();
            assert!(r < 1e-9, "n={n} k={k} t={t:?}: {r}");
        }
    }
}

/// The same operator applied by central differences to `prod (t_p - t_q)^(2k-1)`.
#[test]
fn eigenfunction_ratio_by_finite_differences() {
    let f = |k: f64, t: &[f64]| -> f64 {
        let mut v = 1.0;
        for p in 0..t.len() {
            for q in p + 1..t.len() {
                v *= (t[p] - t[q]).powf(2.0 * k - 1.0);
            }
        }
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let h = 1e-4;
    for n in 1..=2 {
        for _ in 0..10 {
            let k = rng.gen_range(0.3..2.5);
            let t = random_points(&mut rng, n + 1);
            let m = t.len();
            let at = |di: &[(usize, f64)]| {
                let mut s = t.clone();
                for &(i, d) in di {
                    s[i] += d;
                }
                f(k, &s)
            };
            let f0 = f(k, &t);
            let mut total = 0.0;
            let mut size = 0.0;
            for i in 0..m {
                for j in i + 1..m {
                    let dij = (at(&[(i, h), (j, h)]) - at(&[(i, h), (j, -h)]) - at(&[(i, -h), (j, h)])
                        + at(&[(i, -h), (j, -h)]))
                        / (4.0 * h * h);
                    let di = (at(&[(i, h)]) - at(&[(i, -h)])) / (2.0 * h);
                    let dj = (at(&[(j, h)]) - at(&[(j, -h)])) / (2.0 * h);
                    let (second, first) = (t[i] * t[j] * dij, (k - 1.0) * t[i] * t[j] / (t[i] - t[j]) * (di - dj));
                    total += second + first;
                    size += second.abs() + first.abs();
                }
            }
            let want = vandermonde_power_ratio(k, &t).unwrap();
            // cancellation between terms: measure against their size
            assert!((total - want * f0).abs() < 1e-6 * size, "{} vs {want}", total / f0);
        }
    }
}
