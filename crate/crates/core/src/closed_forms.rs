//! Closed-form Gamma products for leading coefficients, values at the identity and limit
//! values of the cycle integrals, plus the Vandermonde identities behind the differential
//! equation for those integrals.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::diagrams::{diagram_of, length, Permutation};
use crate::harish_chandra::SpectralParam;
use crate::poly::Poly;
use crate::rational::{int, rat, to_f64};
use crate::root_system::{delta, inner, positive_roots, weyl_apply, PositiveRoot};
use crate::special::{exp_i_pi_rational, gamma, is_nonpositive_integer, rgamma, sin_pi_rational, POLE_TOLERANCE};
use crate::{Error, Rational, Result};

/// `scale * e^(i pi phase) * prod Gamma(a) / prod Gamma(b) * prod sin(pi s) / prod sin(pi t)`
/// with every argument an exact rational.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GammaProduct {
    pub gamma_num: Vec<Rational>,
    pub gamma_den: Vec<Rational>,
    pub sin_num: Vec<Rational>,
    pub sin_den: Vec<Rational>,
    pub phase: Rational,
    pub scale: f64,
}

impl GammaProduct {
    fn new() -> Self {
        GammaProduct { scale: 1.0, ..Default::default() }
    }

    pub fn eval(&self) -> Result<Complex64> {
        let mut value = Complex64::new(self.scale, 0.0) * exp_i_pi_rational(&self.phase);
        for a in &self.gamma_num {
            if is_nonpositive_integer(a) {
                return Err(Error::Pole { what: format!("Gamma({a})") });
            }
            value *= gamma(Complex64::new(to_f64(a), 0.0))?;
        }
        for b in &self.gamma_den {
            value *= rgamma(Complex64::new(to_f64(b), 0.0));
        }
        for s in &self.sin_num {
            value *= sin_pi_rational(s);
        }
        for t in &self.sin_den {
            let s = sin_pi_rational(t);
            if s.abs() < POLE_TOLERANCE {
                return Err(Error::Pole { what: format!("sin(pi * {t}) in a denominator") });
            }
            value /= s;
        }
        Ok(value)
    }
}

fn pairings(w: &Permutation, sp: &SpectralParam) -> Result<Vec<(PositiveRoot, Rational)>> {
    let wl = weyl_apply(w, &sp.lambda)?;
    Ok(positive_roots(sp.rank()).into_iter().map(|r| (r, r.pair(&wl))).collect())
}

fn n_roots(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `e^(-2 pi i (lambda, delta)) e^(-pi i (k-1) l(w)) (2i)^N` as a phase in units of `pi`
/// and a modulus.
fn common_phase(w: &Permutation, sp: &SpectralParam) -> Result<(Rational, f64)> {
    let n = sp.rank();
    let l = length(&diagram_of(w)) as i64;
    let big_n = n_roots(n);
    let phase = int(-2) * inner(&sp.lambda, &delta(n))? - (&sp.k - int(1)) * int(l) + rat(big_n as i64, 2);
    Ok((phase, libm::pow(2.0, big_n as f64)))
}

fn check_root_poles(terms: &[(PositiveRoot, Rational)]) -> Result<()> {
    for (r, x) in terms {
        if is_nonpositive_integer(x) {
            return Err(Error::Pole {
                what: format!("Gamma((-w lambda, e_{} - e_{})) at {x}", r.i, r.j),
            });
        }
    }
    Ok(())
}

/// Leading coefficient
/// `a(w) = prod_alpha Gamma(x) sin(pi x) / Gamma(x + k)
///         * e^(-2 pi i (lambda, delta)) e^(-pi i (k-1) l(w)) Gamma(k)^N (2i)^N`
/// with `x = (-w lambda, alpha^vee)` and `N = n(n+1)/2`.
pub fn a_w_product(w: &Permutation, sp: &SpectralParam) -> Result<GammaProduct> {
    let xs: Vec<_> = pairings(w, sp)?.into_iter().map(|(r, x)| (r, -x)).collect();
    check_root_poles(&xs)?;
    let (phase, scale) = common_phase(w, sp)?;
    let mut g = GammaProduct::new();
    for (_, x) in &xs {
        g.gamma_num.push(x.clone());
        g.sin_num.push(x.clone());
        g.gamma_den.push(x + &sp.k);
        g.gamma_num.push(sp.k.clone());
    }
    g.phase = phase;
    g.scale = scale;
    Ok(g)
}

pub fn a_w(w: &Permutation, sp: &SpectralParam) -> Result<Complex64> {
    a_w_product(w, sp)?.eval()
}

/// Same value as [`a_w`] with `Gamma(x) sin(pi x)` rewritten as `pi / Gamma(1 - x)`.
pub fn a_w_reflected(w: &Permutation, sp: &SpectralParam) -> Result<Complex64> {
    let xs: Vec<_> = pairings(w, sp)?.into_iter().map(|(r, x)| (r, -x)).collect();
    check_root_poles(&xs)?;
    let (phase, scale) = common_phase(w, sp)?;
    let mut g = GammaProduct::new();
    for (_, x) in &xs {
        g.gamma_den.push(int(1) - x);
        g.gamma_den.push(x + &sp.k);
        g.gamma_num.push(sp.k.clone());
    }
    g.phase = phase;
    g.scale = scale * libm::pow(PI, xs.len() as f64);
    g.eval()
}

/// Value at the identity of the normalized asymptotic solution:
/// `prod_alpha Gamma(x + 1) Gamma(1 - (rho, alpha^vee) - k) / [Gamma(x - k + 1) Gamma(1 - (rho, alpha^vee))]`
/// with `x = (w lambda, alpha^vee)`.
pub fn f_w_at_1_product(w: &Permutation, sp: &SpectralParam) -> Result<GammaProduct> {
    let rho = sp.rho();
    let mut g = GammaProduct::new();
    for (r, x) in pairings(w, sp)? {
        let rho_a = r.pair(&rho);
        g.gamma_num.push(&x + int(1));
        g.gamma_den.push(&x - &sp.k + int(1));
        g.gamma_num.push(int(1) - &rho_a - &sp.k);
        g.gamma_den.push(int(1) - rho_a);
    }
    Ok(g)
}

pub fn f_w_at_1(w: &Permutation, sp: &SpectralParam) -> Result<Complex64> {
    f_w_at_1_product(w, sp)?.eval()
}

/// Limit of the cycle integral at `z -> (1, ..., 1)`:
/// `prod_alpha sin(pi(x + k)) * e^(-2 pi i (lambda, delta)) e^(-pi i (k-1) l(w)) (2i)^N
///  * sin(pi k)^(n+1) / prod_(m <= n+1) sin(m pi k) * Gamma(k)^((n+1)(n+2)/2) / prod_(m <= n+1) Gamma(m k)`
/// with `x = (-w lambda, alpha^vee)`.
pub fn limit_value_product(w: &Permutation, sp: &SpectralParam) -> Result<GammaProduct> {
    let n = sp.rank();
    let k = &sp.k;
    let (phase, scale) = common_phase(w, sp)?;
    let mut g = GammaProduct::new();
    for (_, x) in pairings(w, sp)? {
        g.sin_num.push(k - x);
    }
    for m in 1..=n + 1 {
        g.sin_num.push(k.clone());
        g.sin_den.push(int(m as i64) * k);
        g.gamma_den.push(int(m as i64) * k);
    }
    for _ in 0..(n + 1) * (n + 2) / 2 {
        g.gamma_num.push(k.clone());
    }
    g.phase = phase;
    g.scale = scale;
    Ok(g)
}

pub fn limit_value(w: &Permutation, sp: &SpectralParam) -> Result<Complex64> {
    limit_value_product(w, sp)?.eval()
}

/// `limit_value / (a_w * f_w_at_1)`; identically one when the two routes agree.
pub fn limit_ratio(w: &Permutation, sp: &SpectralParam) -> Result<Complex64> {
    Ok(limit_value(w, sp)? / (a_w(w, sp)? * f_w_at_1(w, sp)?))
}

/// Both sides of `sum_(q=2)^(n+1) sum_(p<q) (p-1)(q-1) = (n-1) n (n+1) (3n+2) / 24`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSum {
    pub sum: u128,
    pub closed_form: u128,
}

impl PairSum {
    pub fn holds(&self) -> bool {
        self.sum == self.closed_form
    }
}

pub fn pair_sum_identity(n: u64) -> PairSum {
    let mut sum = 0u128;
    for q in 2..=n as u128 + 1 {
        for p in 1..q {
            sum += (p - 1) * (q - 1);
        }
    }
    let n = n as u128;
    // (n-1) n (n+1) (3n+2) is always divisible by 24
    let closed_form = if n == 0 { 0 } else { (n - 1) * n * (n + 1) * (3 * n + 2) / 24 };
    PairSum { sum, closed_form }
}

/// `prod_(p<q) (t_p - t_q)` in `n + 1` variables.
pub fn vandermonde(n: usize) -> Poly {
    let m = n + 1;
    let mut v = Poly::one(m);
    for p in 0..m {
        for q in p + 1..m {
            v = &v * &(&Poly::var(m, p) - &Poly::var(m, q));
        }
    }
    v
}

/// Result of applying `sum_(i<j) t_i t_j d^2/dt_i dt_j` to the Vandermonde product.
#[derive(Debug, Clone, PartialEq)]
pub struct VandermondeEigen {
    /// `Some(c)` when the image is exactly `c` times the product.
    pub constant: Option<Rational>,
    pub expected: Rational,
}

impl VandermondeEigen {
    pub fn holds(&self) -> bool {
        self.constant.as_ref() == Some(&self.expected)
    }
}

/// Exact polynomial check that the Vandermonde product is an eigenfunction of the
/// mixed Euler operator, with eigenvalue `(n-1) n (n+1) (3n+2) / 24`.
pub fn vandermonde_euler_check(n: usize) -> VandermondeEigen {
    let m = n + 1;
    let v = vandermonde(n);
    let mut image = Poly::zero(m);
    for i in 0..m {
        let di = v.partial(i);
        for j in i + 1..m {
            image = &image + &di.partial(j).mul_var(i).mul_var(j);
        }
    }
    let expected = rat(((n as i64) - 1) * n as i64 * (n as i64 + 1) * (3 * n as i64 + 2), 24);
    let (lead_e, lead_c) = v.terms().iter().next_back().expect("nonzero product");
    let c = image.terms().get(lead_e).cloned().unwrap_or_else(Rational::zero) / lead_c;
    let constant = (image == v.scale(&c)).then_some(c);
    VandermondeEigen { constant, expected }
}

/// `(2k-1) (n-1) n (n+1) (6kn - 3n + 2) / 24`.
pub fn vandermonde_power_constant(n: usize, k: &Rational) -> Rational {
    let n = int(n as i64);
    (int(2) * k - int(1)) * (&n - int(1)) * &n * (&n + int(1)) * (int(6) * k * &n - int(3) * &n + int(2))
        / int(24)
}

/// Applies
/// `sum_(i<j) [t_i t_j d^2/dt_i dt_j + (k-1) t_i t_j/(t_i - t_j) (d/dt_i - d/dt_j)]`
/// to `f = prod_(p<q) (t_p - t_q)^(2k-1)` and returns the value of `(operator f) / f` at `t`,
/// using `d_i f / f = beta S_i` and `d_i d_j f / f = beta^2 S_i S_j + beta / (t_i - t_j)^2`
/// with `beta = 2k - 1`, `S_i = sum_(q != i) 1/(t_i - t_q)`.
pub fn vandermonde_power_ratio(k: f64, t: &[f64]) -> Result<f64> {
    let m = t.len();
    for p in 0..m {
        for q in p + 1..m {
            if t[p] == t[q] {
                return Err(Error::SingularLocus { factor: format!("t_{} - t_{}", p + 1, q + 1) });
            }
        }
    }
    let beta = 2.0 * k - 1.0;
    let s: Vec<f64> = (0..m)
        .map(|i| (0..m).filter(|&q| q != i).map(|q| 1.0 / (t[i] - t[q])).sum())
        .collect();
    let mut total = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            let d = t[i] - t[j];
            let second = beta * beta * s[i] * s[j] + beta / (d * d);
            let first = (k - 1.0) / d * beta * (s[i] - s[j]);
            total += t[i] * t[j] * (second + first);
        }
    }
    Ok(total)
}

/// `|ratio - constant| / max(1, |constant|)` at the point `t`.
pub fn vandermonde_power_residual(k: &Rational, t: &[f64]) -> Result<f64> {
    let n = t.len().checked_sub(1).ok_or(Error::LengthMismatch { left: 0, right: 1 })?;
    let c = to_f64(&vandermonde_power_constant(n, k));
    let ratio = vandermonde_power_ratio(to_f64(k), t)?;
    Ok((ratio - c).abs() / c.abs().max(1.0))
}

/// `|value - reference| / |reference|`, or `|value|` against a zero reference.
pub fn relative_error(value: Complex64, reference: Complex64) -> f64 {
    let scale = reference.norm();
    if scale.is_zero() {
        value.norm()
    } else {
        (value - reference).norm() / scale
    }
}

/// Whether `sin(m pi k)` vanishes exactly for some `1 <= m <= n + 1`.
pub fn sine_denominators_vanish(n: usize, k: &Rational) -> bool {
    (1..=n as i64 + 1).any(|m| (int(m) * k).denom().is_one())
}
