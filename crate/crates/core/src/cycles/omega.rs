//! The multivalued form on the cycle.
//!
//! Two independent routes fix the branch of every factor:
//!
//! - [`omega_w_eval`] writes each base as `(leading variable) * (1 - r)` with `|r| < 1` and
//!   takes the unwound logarithm of the leading variable plus the principal `Log(1 - r)`;
//! - [`phase_continuation`] transports principal arguments from the base point
//!   `tau = eta (1, ..., 1)` by continuity, subdividing until no factor turns by `pi/2` or
//!   more per step.
//!
//! Both agree with the principal branch at the base point.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::{cycle_point, CyclePath, CyclePoint, Node};
use crate::harish_chandra::SpectralParam;
use crate::rational::to_f64;
use crate::{Error, Result};

/// `log|v| + i arg v` with the argument kept unwound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasedValue {
    pub log_mag: f64,
    pub arg: f64,
}

impl PhasedValue {
    pub const ONE: PhasedValue = PhasedValue { log_mag: 0.0, arg: 0.0 };

    pub fn from_log(l: Complex64) -> Self {
        PhasedValue { log_mag: l.re, arg: l.im }
    }

    pub fn log(&self) -> Complex64 {
        Complex64::new(self.log_mag, self.arg)
    }

    pub fn mul(self, other: PhasedValue) -> PhasedValue {
        PhasedValue { log_mag: self.log_mag + other.log_mag, arg: self.arg + other.arg }
    }

    /// Real power: scales both the log-modulus and the argument.
    pub fn powf(self, e: f64) -> PhasedValue {
        PhasedValue { log_mag: e * self.log_mag, arg: e * self.arg }
    }

    pub fn value(&self) -> Complex64 {
        self.log().exp()
    }
}

/// One power-factor of the form; indices are 1-based `(i, j)` diagram coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// `z_i`.
    Top(usize),
    /// `z_i1 - z_i2`, `i1 > i2`.
    TopDiff(usize, usize),
    /// `t_tar(i,j) - t_(i,j)`.
    Anchor(usize, usize),
    /// `t_(i,j) - t_(i1,j+1)` for `i1` left of the target.
    Below { i: usize, j: usize, i1: usize },
    /// `t_(i1,j+1) - t_(i,j)` for `i1` right of the target.
    Above { i: usize, j: usize, i1: usize },
    /// `t_(i1,j) - t_(i2,j)`, `i1 > i2`.
    RowDiff { j: usize, i1: usize, i2: usize },
    /// `t_(i,j)`, `j <= n`.
    Point(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    pub kind: FactorKind,
    pub exponent: f64,
}

/// All factors with their exponents:
/// `z_i^(lambda_1 + kn/2)`, `(z_i1 - z_i2)^(1-2k)`, the `k - 1` powers joining each point to
/// the row above, `(t_(i1,j) - t_(i2,j))^(2-2k)` and `t_(i,j)^(lambda_(n-j+2) - lambda_(n-j+1) - k)`.
pub fn factors(c: &CyclePath, sp: &SpectralParam) -> Vec<Factor> {
    let n = c.rank();
    let k = to_f64(&sp.k);
    let lam = sp.lambda.to_f64();
    let mut out = Vec::new();
    let mut push = |kind, exponent| out.push(Factor { kind, exponent });
    for i in 1..=n + 1 {
        push(FactorKind::Top(i), lam[0] + k * n as f64 / 2.0);
    }
    for i1 in 1..=n + 1 {
        for i2 in 1..i1 {
            push(FactorKind::TopDiff(i1, i2), 1.0 - 2.0 * k);
        }
    }
    for j in 1..=n {
        for i in 1..=j {
            let (x, _) = c.target(i, j);
            for i1 in 1..=j + 1 {
                let kind = match i1.cmp(&x) {
                    core::cmp::Ordering::Less => FactorKind::Below { i, j, i1 },
                    core::cmp::Ordering::Equal => FactorKind::Anchor(i, j),
                    core::cmp::Ordering::Greater => FactorKind::Above { i, j, i1 },
                };
                push(kind, k - 1.0);
            }
        }
        for i1 in 1..=j {
            for i2 in 1..i1 {
                push(FactorKind::RowDiff { j, i1, i2 }, 2.0 - 2.0 * k);
            }
        }
        for i in 1..=j {
            push(FactorKind::Point(i, j), lam[n - j + 1] - lam[n - j] - k);
        }
    }
    out
}

fn base(c: &CyclePath, kind: FactorKind, p: &CyclePoint) -> Complex64 {
    let top = c.rank() + 1;
    match kind {
        FactorKind::Top(i) => p.t(i, top),
        FactorKind::TopDiff(i1, i2) => p.t(i1, top) - p.t(i2, top),
        FactorKind::Anchor(i, j) => {
            let (ti, tj) = c.target(i, j);
            p.t(ti, tj) - p.t(i, j)
        }
        FactorKind::Below { i, j, i1 } => p.t(i, j) - p.t(i1, j + 1),
        FactorKind::Above { i, j, i1 } => p.t(i1, j + 1) - p.t(i, j),
        FactorKind::RowDiff { j, i1, i2 } => p.t(i1, j) - p.t(i2, j),
        FactorKind::Point(i, j) => p.t(i, j),
    }
}

/// `log(lead) + Log(1 - small/lead)`.
fn split_log(p: &CyclePoint, lead: (usize, usize), small: (usize, usize)) -> Complex64 {
    let r = p.t(small.0, small.1) / p.t(lead.0, lead.1);
    p.log_t(lead.0, lead.1) + (Complex64::new(1.0, 0.0) - r).ln()
}

fn branch_log(c: &CyclePath, kind: FactorKind, p: &CyclePoint) -> Result<Complex64> {
    let top = c.rank() + 1;
    Ok(match kind {
        FactorKind::Top(i) => p.log_t(i, top),
        FactorKind::TopDiff(i1, i2) => split_log(p, (i1, top), (i2, top)),
        FactorKind::Anchor(i, j) => {
            let g = p.gap[c.var_index(i, j)];
            if g == Complex64::new(0.0, 0.0) {
                return Err(Error::SingularLocus { factor: alloc::format!("t_tar({i},{j}) - t_({i},{j})") });
            }
            let (ti, tj) = c.target(i, j);
            p.log_t(ti, tj) + g.ln()
        }
        FactorKind::Below { i, j, i1 } => split_log(p, (i, j), (i1, j + 1)),
        FactorKind::Above { i, j, i1 } => split_log(p, (i1, j + 1), (i, j)),
        FactorKind::RowDiff { j, i1, i2 } => split_log(p, (i1, j), (i2, j)),
        FactorKind::Point(i, j) => p.log_t(i, j),
    })
}

/// The form at a point of the cycle, on the factorized branch.
pub fn omega_w_eval(c: &CyclePath, factors: &[Factor], p: &CyclePoint) -> Result<PhasedValue> {
    let mut total = Complex64::new(0.0, 0.0);
    for f in factors {
        total += f.exponent * branch_log(c, f.kind, p)?;
    }
    Ok(PhasedValue::from_log(total))
}

fn bases_at(c: &CyclePath, factors: &[Factor], nodes: &[Node]) -> Vec<Complex64> {
    let p = cycle_point(c, nodes);
    factors.iter().map(|f| base(c, f.kind, &p)).collect()
}

/// Principal arguments of every factor base at `tau = eta (1, ..., 1)`.
pub fn base_point_args(c: &CyclePath, factors: &[Factor], eta: f64) -> Vec<f64> {
    let nodes = alloc::vec![Node::new(eta); c.dim()];
    bases_at(c, factors, &nodes).iter().map(|b| b.arg()).collect()
}

fn lerp(from: &[Node], to: &[Node], s: f64) -> Vec<Node> {
    from.iter()
        .zip(to)
        .map(|(a, b)| Node { tau: a.tau + s * (b.tau - a.tau), comp: a.comp + s * (b.comp - a.comp) })
        .collect()
}

const MAX_BISECTIONS: u32 = 40;

struct Tracker<'a> {
    c: &'a CyclePath,
    factors: &'a [Factor],
    from: &'a [Node],
    to: &'a [Node],
}

impl Tracker<'_> {
    /// Adds the argument change over `[s0, s1]` into `acc`, returning the bases at `s1`.
    fn advance(
        &self,
        s0: f64,
        bases0: &[Complex64],
        s1: f64,
        acc: &mut [f64],
        depth: u32,
    ) -> Result<Vec<Complex64>> {
        let bases1 = bases_at(self.c, self.factors, &lerp(self.from, self.to, s1));
        let mut deltas = Vec::with_capacity(bases1.len());
        for (b0, b1) in bases0.iter().zip(&bases1) {
            if *b1 == Complex64::new(0.0, 0.0) || !b1.re.is_finite() {
                let tau = lerp(self.from, self.to, s1).iter().map(|n| n.tau).collect();
                return Err(Error::PhaseTrackingFailed { tau });
            }
            deltas.push((b1 / b0).arg());
        }
        if deltas.iter().all(|d| d.abs() < FRAC_PI_2) {
            for (a, d) in acc.iter_mut().zip(deltas) {
                *a += d;
            }
            return Ok(bases1);
        }
        if depth >= MAX_BISECTIONS {
            let tau = lerp(self.from, self.to, s1).iter().map(|n| n.tau).collect();
            return Err(Error::PhaseTrackingFailed { tau });
        }
        let mid = 0.5 * (s0 + s1);
        let bases_mid = self.advance(s0, bases0, mid, acc, depth + 1)?;
        self.advance(mid, &bases_mid, s1, acc, depth + 1)
    }
}

/// Transports the arguments `args_from` of all factor bases along the straight segment
/// `from -> to` in `steps` equal steps (each refined by bisection as needed).
pub fn phase_continuation(
    c: &CyclePath,
    factors: &[Factor],
    from: &[Node],
    to: &[Node],
    args_from: &[f64],
    steps: usize,
) -> Result<Vec<f64>> {
    let tracker = Tracker { c, factors, from, to };
    let mut acc = args_from.to_vec();
    let mut bases = bases_at(c, factors, from);
    let steps = steps.max(1);
    for s in 0..steps {
        let (s0, s1) = (s as f64 / steps as f64, (s + 1) as f64 / steps as f64);
        bases = tracker.advance(s0, &bases, s1, &mut acc, 0)?;
    }
    Ok(acc)
}

/// The form at `to` with every argument transported from the base point `eta (1, ..., 1)`.
pub fn omega_tracked(
    c: &CyclePath,
    factors: &[Factor],
    to: &[Node],
    eta: f64,
    steps: usize,
) -> Result<PhasedValue> {
    let from = alloc::vec![Node::new(eta); c.dim()];
    let args0 = base_point_args(c, factors, eta);
    let args = phase_continuation(c, factors, &from, to, &args0, steps)?;
    let bases = bases_at(c, factors, to);
    let mut total = PhasedValue::ONE;
    for ((f, b), a) in factors.iter().zip(&bases).zip(args) {
        total = total.mul(PhasedValue { log_mag: b.norm().ln(), arg: a }.powf(f.exponent));
    }
    Ok(total)
}
