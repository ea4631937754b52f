use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{cycle_point, factors, omega_w_eval, CyclePath, Factor, Node, QuadratureSpec, Rule};
use crate::diagrams::Permutation;
use crate::harish_chandra::{exponent, SpectralParam};
use crate::rational::to_f64;
use crate::root_system::Weight;
use crate::{Error, Result};

/// Pulled-back integrand `omega(t(tau)) prod dt/dtau` at one parameter point.
pub fn integrand(c: &CyclePath, factors: &[Factor], nodes: &[Node]) -> Result<Complex64> {
    let p = cycle_point(c, nodes);
    let v = omega_w_eval(c, factors, &p)?.value() * p.jacobian;
    if !v.re.is_finite() || !v.im.is_finite() {
        return Err(Error::NonFinite { tau: nodes.iter().map(|n| n.tau).collect() });
    }
    Ok(v)
}

fn check_k(sp: &SpectralParam) -> Result<()> {
    let k = to_f64(&sp.k);
    if k > 0.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain { what: "coupling k (need k > 0)", value: k })
    }
}

/// Contribution of the slab with the first variable at node `outer`; the remaining axes are
/// summed in lexicographic order.
pub fn integrate_outer(c: &CyclePath, factors: &[Factor], rule: &Rule, outer: usize) -> Result<Complex64> {
    let dim = c.dim();
    let m = rule.len();
    let mut idx = alloc::vec![0usize; dim];
    idx[0] = outer;
    let mut nodes: Vec<Node> = idx.iter().map(|&i| rule.nodes[i]).collect();
    let mut sum = Complex64::zero();
    loop {
        let w: f64 = idx.iter().map(|&i| rule.weights[i]).product();
        sum += w * integrand(c, factors, &nodes)?;
        // odometer over axes 1..dim, last axis fastest
        let mut axis = dim;
        loop {
            if axis == 1 {
                return Ok(sum);
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < m {
                nodes[axis] = rule.nodes[idx[axis]];
                break;
            }
            idx[axis] = 0;
            nodes[axis] = rule.nodes[0];
        }
        if dim == 1 {
            return Ok(sum);
        }
    }
}

/// Tensor-product quadrature of the form over the cycle. Slabs are summed in node order, so
/// any caller that evaluates slabs separately and adds them in the same order reproduces the
/// result bit for bit.
pub fn integrate(c: &CyclePath, sp: &SpectralParam, spec: &QuadratureSpec) -> Result<Complex64> {
    check_k(sp)?;
    let rule = Rule::new(spec, to_f64(&sp.k))?;
    let fs = factors(c, sp);
    let mut total = Complex64::zero();
    for outer in 0..rule.len() {
        total += integrate_outer(c, &fs, &rule, outer)?;
    }
    Ok(total)
}

/// `prod z_i^(mu_i)` with principal powers.
pub fn z_power(z: &[Complex64], mu: &Weight) -> Complex64 {
    z.iter().zip(mu.to_f64()).map(|(zi, m)| (zi.ln() * m).exp()).product()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadingEstimate {
    /// `integral / z^(w lambda + rho)` at ratio `r`.
    pub coarse: Complex64,
    /// The same at ratio `r / 2`.
    pub fine: Complex64,
    /// `2 fine - coarse`, removing the first-order correction in `r`.
    pub extrapolated: Complex64,
}

fn normalized(w: &Permutation, sp: &SpectralParam, r: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let n = sp.rank();
    let z: Vec<Complex64> = (0..=n).map(|i| Complex64::new(libm::pow(r, (n - i) as f64), 0.0)).collect();
    let c = CyclePath::new(w, z.clone(), spec.epsilon)?;
    let mu = exponent(w, sp)?;
    Ok(integrate(&c, sp, spec)? / z_power(&z, &mu))
}

/// Integrates at `z = (r^n, ..., r, 1)` and `r/2`, divides by `z^(w lambda + rho)` and
/// extrapolates linearly to `r = 0`.
pub fn leading_coeff_estimate(
    w: &Permutation,
    sp: &SpectralParam,
    r: f64,
    spec: &QuadratureSpec,
) -> Result<LeadingEstimate> {
    let coarse = normalized(w, sp, r, spec)?;
    let fine = normalized(w, sp, r / 2.0, spec)?;
    Ok(LeadingEstimate { coarse, fine, extrapolated: 2.0 * fine - coarse })
}

/// At `k = 1` only monomials survive below the top row, so each loop integrates in closed
/// form: a point whose subtree carries total exponent `c - 1` contributes
/// `(e^(2 pi i c) - 1) / c` (or `2 pi i` when `c = 0`) and passes `t_tar^c` upward.
pub fn k1_closed_form(c: &CyclePath, sp: &SpectralParam) -> Result<Complex64> {
    if !sp.k.is_one() {
        return Err(Error::OutOfDomain { what: "k (closed form needs k = 1)", value: to_f64(&sp.k) });
    }
    let n = c.rank();
    let lam = sp.lambda.to_f64();
    let mut carried: Vec<Vec<f64>> = (1..=n + 1).map(|j| alloc::vec![0.0; j]).collect();
    let mut value = Complex64::one();
    for j in 1..=n {
        for i in 1..=j {
            let cp = lam[n - j + 1] - lam[n - j] - 1.0 + 1.0 + carried[j - 1][i - 1];
            value *= if cp == 0.0 {
                Complex64::new(0.0, 2.0 * PI)
            } else {
                (Complex64::new(0.0, 2.0 * PI * cp).exp() - 1.0) / cp
            };
            let (ti, tj) = c.target(i, j);
            carried[tj - 1][ti - 1] += cp;
        }
    }
    let z = c.z();
    for (m, zm) in z.iter().enumerate() {
        value *= (zm.ln() * (lam[0] + n as f64 / 2.0 + carried[n][m])).exp();
    }
    for i1 in 0..=n {
        for i2 in 0..i1 {
            value /= z[i1] - z[i2];
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{a_w, relative_error};
    use crate::cycles::Scheme;
    use crate::rational::{int, rat};
    use alloc::vec;

    fn sp1(s: crate::Rational, k: crate::Rational) -> SpectralParam {
        SpectralParam::new(Weight(vec![s.clone(), -s]), k).unwrap()
    }

    #[test]
    fn k_equal_one_matches_closed_form() {
        let sp = SpectralParam::new(Weight(vec![rat(3, 10), rat(1, 7), rat(-3, 10) - rat(1, 7)]), int(1)).unwrap();
        let spec = QuadratureSpec::default_for(&sp.k);
        assert_eq!(spec.scheme, Scheme::GaussLegendre);
        let spec = QuadratureSpec { points: 24, ..spec };
        for w in Permutation::all(3) {
            let z = vec![Complex64::new(0.01, 0.0), Complex64::new(0.1, 0.0), Complex64::new(1.0, 0.0)];
            let c = CyclePath::new(&w, z, 0.1).unwrap();
            let got = integrate(&c, &sp, &spec).unwrap();
            let want = k1_closed_form(&c, &sp).unwrap();
            assert!(relative_error(got, want) < 1e-9, "{w:?}: {got} vs {want}");
        }
    }

    #[test]
    fn leading_coefficient_rank_one() {
        let sp = sp1(rat(3, 10), rat(3, 2));
        let spec = QuadratureSpec::default_for(&sp.k);
        for w in Permutation::all(2) {
            let est = leading_coeff_estimate(&w, &sp, 1e-3, &spec).unwrap();
            let a = a_w(&w, &sp).unwrap();
            assert!(relative_error(est.extrapolated, a) < 1e-4, "{w:?}");
        }
    }

    #[test]
    fn nonpositive_k_is_rejected() {
        let sp = sp1(rat(3, 10), int(0));
        let c = CyclePath::new(&Permutation::identity(2), vec![Complex64::new(0.001, 0.0), Complex64::new(1.0, 0.0)], 0.1).unwrap();
        assert!(integrate(&c, &sp, &QuadratureSpec::default_for(&sp.k)).is_err());
    }
}
