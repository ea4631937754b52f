use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::Bump;
use crate::diagrams::{diagram_of, Diagram, Permutation};
use crate::{Error, Result};

const TWO_PI_I: Complex64 = Complex64::new(0.0, 2.0 * PI);

/// A loop parameter carried together with its complement, so that both ends of `[0, 1]`
/// are resolved to full relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub tau: f64,
    /// `1 - tau`.
    pub comp: f64,
}

impl Node {
    pub fn new(tau: f64) -> Self {
        Node { tau, comp: 1.0 - tau }
    }
}

/// The cycle attached to `w` at the point `z`.
#[derive(Debug, Clone)]
pub struct CyclePath {
    diagram: Diagram,
    z: Vec<Complex64>,
    bump: Bump,
    /// Loop variables `(i, j)`, rows bottom-up.
    vars: Vec<(usize, usize)>,
}

impl CyclePath {
    /// `w` acts on `n + 1 = z.len()` letters. Requires `|z_i| < (1 - eps)^n |z_(i+1)|`, which
    /// keeps loops anchored at different top-row points apart.
    pub fn new(w: &Permutation, z: Vec<Complex64>, epsilon: f64) -> Result<Self> {
        if w.rank() != z.len() || z.len() < 2 {
            return Err(Error::LengthMismatch { left: w.rank(), right: z.len() });
        }
        let bump = Bump::new(epsilon)?;
        let n = z.len() - 1;
        let shrink = libm::pow(1.0 - epsilon, n as f64);
        if !(z[0].norm() > 0.0) || z.windows(2).any(|p| !(p[0].norm() < shrink * p[1].norm())) {
            return Err(Error::OutsideAsymptoticZone);
        }
        let diagram = diagram_of(w);
        let vars = (1..=n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect();
        Ok(CyclePath { diagram, z, bump, vars })
    }

    pub fn rank(&self) -> usize {
        self.z.len() - 1
    }

    pub fn z(&self) -> &[Complex64] {
        &self.z
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn bump(&self) -> Bump {
        self.bump
    }

    pub fn vars(&self) -> &[(usize, usize)] {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, i: usize, j: usize) -> usize {
        (j - 1) * j / 2 + (i - 1)
    }

    pub fn target(&self, i: usize, j: usize) -> (usize, usize) {
        self.diagram.target(i, j).expect("loop variables lie below the top row")
    }
}

/// All `t_(i,j)` at one parameter point, with unwound logarithms and loop data.
#[derive(Debug, Clone)]
pub struct CyclePoint {
    /// `t[j-1][i-1]`, the top row being `z`.
    pub t: Vec<Vec<Complex64>>,
    /// Logarithms continued from `log z` (principal) along each loop.
    pub log_t: Vec<Vec<Complex64>>,
    /// `1 - t_(i,j) / t_tar(i,j)` per loop variable.
    pub gap: Vec<Complex64>,
    /// `prod dt_(i,j)/dtau_(i,j)`.
    pub jacobian: Complex64,
}

impl CyclePoint {
    pub fn t(&self, i: usize, j: usize) -> Complex64 {
        self.t[j - 1][i - 1]
    }

    pub fn log_t(&self, i: usize, j: usize) -> Complex64 {
        self.log_t[j - 1][i - 1]
    }
}

/// `1 - e^(2 pi i tau)(1 - f)` without cancellation near either endpoint.
fn loop_gap(node: Node, f: f64) -> (Complex64, Complex64) {
    let theta = if node.tau <= 0.5 { 2.0 * PI * node.tau } else { -2.0 * PI * node.comp };
    let e = Complex64::from_polar(1.0, theta);
    let half = Complex64::from_polar(1.0, theta / 2.0);
    let one_minus_e = Complex64::new(0.0, -2.0 * libm::sin(theta / 2.0)) * half;
    (one_minus_e + f * e, e)
}

/// Evaluates the loop tower top-down at `nodes` (one per loop variable, in [`CyclePath::vars`]
/// order).
pub fn cycle_point(c: &CyclePath, nodes: &[Node]) -> CyclePoint {
    assert_eq!(nodes.len(), c.dim(), "one node per loop variable");
    let n = c.rank();
    let mut t: Vec<Vec<Complex64>> = (1..=n + 1).map(|j| alloc::vec![Complex64::new(0.0, 0.0); j]).collect();
    let mut log_t = t.clone();
    t[n] = c.z.clone();
    log_t[n] = c.z.iter().map(|z| z.ln()).collect();
    let mut gap = alloc::vec![Complex64::new(0.0, 0.0); c.dim()];
    let mut jacobian = Complex64::new(1.0, 0.0);
    for j in (1..=n).rev() {
        for i in 1..=j {
            let v = c.var_index(i, j);
            let node = nodes[v];
            let (ti, tj) = c.target(i, j);
            let (f, fp) = c.bump.at(node);
            let (g, e) = loop_gap(node, f);
            let zeta = e * (1.0 - f);
            let anchor = t[tj - 1][ti - 1];
            t[j - 1][i - 1] = anchor * zeta;
            log_t[j - 1][i - 1] =
                log_t[tj - 1][ti - 1] + libm::log1p(-f) + TWO_PI_I * node.tau;
            gap[v] = g;
            jacobian *= anchor * zeta * (TWO_PI_I - fp / (1.0 - f));
        }
    }
    CyclePoint { t, log_t, gap, jacobian }
}
