//! One-dimensional rules on `[0, 1]`, used as tensor products.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::Node;
use crate::rational::is_integer;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    GaussLegendre,
    /// Double-exponential rule; handles the `tau^(k-1)` behaviour at the loop ends.
    TanhSinh,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub points: usize,
    /// Bump height of the loops.
    pub epsilon: f64,
    /// Initial step count for phase transport.
    pub continuation_steps: usize,
}

impl QuadratureSpec {
    /// Tanh-sinh unless `k - 1` is a nonnegative integer (smooth endpoints), 64 points per
    /// axis, `epsilon = 1/10`.
    pub fn default_for(k: &Rational) -> Self {
        let km1 = k - Rational::from_integer(1.into());
        let smooth = is_integer(&km1) && km1 >= Rational::from_integer(0.into());
        QuadratureSpec {
            scheme: if smooth { Scheme::GaussLegendre } else { Scheme::TanhSinh },
            points: 64,
            epsilon: 0.1,
            continuation_steps: 8,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.points < 8 {
            return Err(Error::InvalidQuadrature("need at least 8 points per axis"));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 0.25) {
            return Err(Error::InvalidQuadrature("epsilon must lie in (0, 1/4)"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<Node>,
    pub weights: Vec<f64>,
}

impl Rule {
    /// Builds the rule; `k` sets the tanh-sinh truncation so that `tau^k` is below `1e-16`
    /// at the outermost nodes.
    pub fn new(spec: &QuadratureSpec, k: f64) -> Result<Rule> {
        spec.validate()?;
        Ok(match spec.scheme {
            Scheme::GaussLegendre => gauss_legendre(spec.points),
            Scheme::TanhSinh => tanh_sinh(spec.points, k),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Nodes from Newton iteration on `P_m`, mapped from `[-1, 1]`.
pub fn gauss_legendre(m: usize) -> Rule {
    let mut nodes = alloc::vec![Node::new(0.0); m];
    let mut weights = alloc::vec![0.0; m];
    for i in 0..(m + 1) / 2 {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (m as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for l in 2..=m {
                let p2 = ((2 * l - 1) as f64 * x * p1 - (l - 1) as f64 * p0) / l as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x > 0 here: the node near 1 and its mirror near -1
        nodes[m - 1 - i] = Node { tau: (1.0 + x) / 2.0, comp: (1.0 - x) / 2.0 };
        nodes[i] = Node { tau: (1.0 - x) / 2.0, comp: (1.0 + x) / 2.0 };
        weights[i] = w / 2.0;
        weights[m - 1 - i] = w / 2.0;
    }
    Rule { nodes, weights }
}

/// `tau = 1 / (1 + e^(-2u))`, `u = (pi/2) sinh t`, on a midpoint grid over `[-T, T]`.
pub fn tanh_sinh(m: usize, k: f64) -> Rule {
    let kk = if k > 0.0 { k.min(1.0) } else { 1.0 };
    // keep tau above the f64 underflow threshold
    let u_max = (18.0 / kk).min(340.0);
    let big_t = libm::asinh(u_max / (PI / 2.0));
    let h = 2.0 * big_t / m as f64;
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for j in 0..m {
        let t = -big_t + (j as f64 + 0.5) * h;
        let u = PI / 2.0 * libm::sinh(t);
        let tau = 1.0 / (1.0 + libm::exp(-2.0 * u));
        let comp = 1.0 / (1.0 + libm::exp(2.0 * u));
        nodes.push(Node { tau, comp });
        weights.push(h * PI * libm::cosh(t) * tau * comp);
    }
    Rule { nodes, weights }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn apply(rule: &Rule, f: impl Fn(Node) -> f64) -> f64 {
        rule.nodes.iter().zip(&rule.weights).map(|(&n, w)| w * f(n)).sum()
    }

    #[test]
    fn gauss_legendre_is_exact_on_polynomials() {
        let r = gauss_legendre(8);
        for d in 0..16 {
            let got = apply(&r, |n| libm::pow(n.tau, d as f64));
            assert!((got - 1.0 / (d as f64 + 1.0)).abs() < 1e-14, "degree {d}");
        }
        assert!(r.nodes.windows(2).all(|p| p[0].tau < p[1].tau));
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularities() {
        let r = tanh_sinh(64, 0.5);
        let got = apply(&r, |n| libm::pow(n.tau, -0.5) * libm::pow(n.comp, -0.5));
        assert!((got - PI).abs() < 1e-12);
    }

    #[test]
    fn defaults_and_validation() {
        assert_eq!(QuadratureSpec::default_for(&rat(2, 1)).scheme, Scheme::GaussLegendre);
        assert_eq!(QuadratureSpec::default_for(&rat(3, 2)).scheme, Scheme::TanhSinh);
        assert_eq!(QuadratureSpec::default_for(&rat(0, 1)).scheme, Scheme::TanhSinh);
        let mut s = QuadratureSpec::default_for(&rat(3, 2));
        s.points = 4;
        assert!(s.validate().is_err());
        s.points = 16;
        s.epsilon = 0.3;
        assert!(s.validate().is_err());
    }
}
