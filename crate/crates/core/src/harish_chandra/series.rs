use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::{height, offsets_up_to, SpectralParam};
use crate::rational::{int, to_f64};
use crate::root_system::{from_simple_coords, inner, positive_roots, rho, Weight};
use crate::{Error, Rational, Result};

/// Coefficients `Gamma_nu` of `phi = sum_nu Gamma_nu e^(nu(u))`, keyed by `nu - mu`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub mu: Weight,
    pub k: Rational,
    pub depth: usize,
    pub entries: BTreeMap<Vec<u32>, Rational>,
}

impl CoeffTable {
    pub fn rank(&self) -> usize {
        self.mu.dim() - 1
    }

    pub fn get(&self, offset: &[u32]) -> Rational {
        self.entries.get(offset).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn rho(&self) -> Weight {
        rho(self.rank(), &self.k)
    }

    /// `(mu - rho, mu - rho) - (rho, rho)`.
    pub fn eigenvalue(&self) -> Rational {
        let r = self.rho();
        let m = &self.mu - &r;
        inner(&m, &m).unwrap() - inner(&r, &r).unwrap()
    }
}

fn sorted(v: &Weight) -> Vec<Rational> {
    let mut c = v.coords().to_vec();
    c.sort();
    c
}

/// Solves the recurrence
/// `[(nu-rho, nu-rho) - (mu-rho, mu-rho)] Gamma_nu = 2k sum_alpha sum_j (nu - j alpha, alpha) Gamma_(nu - j alpha)`
/// height by height, starting from `Gamma_mu = 1`.
pub fn freudenthal_table(mu: &Weight, sp: &SpectralParam, depth: usize) -> Result<CoeffTable> {
    let n = sp.rank();
    if mu.dim() != n + 1 {
        return Err(Error::LengthMismatch { left: mu.dim(), right: n + 1 });
    }
    let rho = sp.rho();
    if sorted(&(mu - &rho)) != sorted(&sp.lambda) {
        return Err(Error::NotAnExponent);
    }
    if sp.require_generic {
        sp.check_generic()?;
    }
    let roots: Vec<_> = positive_roots(n).into_iter().map(|r| (r.vector(n), r.simple_coords(n))).collect();
    let base = {
        let m = mu - &rho;
        inner(&m, &m)?
    };
    let two_k = int(2) * &sp.k;

    let mut entries = BTreeMap::new();
    for off in offsets_up_to(n, depth) {
        if height(&off) == 0 {
            entries.insert(off, int(1));
            continue;
        }
        let nu = mu + &from_simple_coords(&off);
        let shifted = &nu - &rho;
        let bracket = inner(&shifted, &shifted)? - &base;
        if bracket.is_zero() {
            return Err(Error::Resonant { offset: off });
        }
        let mut rhs = Rational::zero();
        for (alpha, a) in &roots {
            let nu_alpha = inner(&nu, alpha)?;
            let mut prev = off.clone();
            let mut j = 1i64;
            while prev.iter().zip(a).all(|(p, q)| p >= q) {
                for (p, q) in prev.iter_mut().zip(a) {
                    *p -= q;
                }
                if let Some(g) = entries.get(&prev) {
                    rhs += (&nu_alpha - int(2 * j)) * g;
                }
                j += 1;
            }
        }
        let value = &two_k * rhs / bracket;
        if !value.is_zero() {
            entries.insert(off, value);
        }
    }
    Ok(CoeffTable { mu: mu.clone(), k: sp.k.clone(), depth, entries })
}

/// Coefficients of `(L - eigenvalue) phi` up to the table depth, computed by applying
/// `L = sum d^2/du_i^2 - 2 sum rho_i d/du_i - 2k sum_alpha sum_(m>=1) e^(m alpha) d_alpha`
/// to each stored exponential separately.
pub fn residual_terms(t: &CoeffTable) -> BTreeMap<Vec<u32>, Rational> {
    let n = t.rank();
    let rho = t.rho();
    let eig = t.eigenvalue();
    let two_k = int(2) * &t.k;
    let roots: Vec<_> = positive_roots(n).into_iter().map(|r| (r.vector(n), r.simple_coords(n))).collect();

    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    let mut push = |off: Vec<u32>, v: Rational| {
        let e = out.entry(off).or_insert_with(Rational::zero);
        *e += v;
    };
    for (off, g) in &t.entries {
        let nu = &t.mu + &from_simple_coords(off);
        let diag = inner(&nu, &nu).unwrap() - int(2) * inner(&rho, &nu).unwrap() - &eig;
        push(off.clone(), diag * g);
        for (alpha, a) in &roots {
            let coeff = -(&two_k * inner(&nu, alpha).unwrap() * g);
            let mut target = off.clone();
            loop {
                for (p, q) in target.iter_mut().zip(a) {
                    *p += q;
                }
                if height(&target) > t.depth {
                    break;
                }
                push(target.clone(), coeff.clone());
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Largest absolute coefficient of `(L - eigenvalue) phi` through the table depth.
pub fn residual_l(t: &CoeffTable) -> Rational {
    residual_terms(t).into_values().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
}

fn check_zone(z: &[Complex64]) -> Result<()> {
    let mut prev = 0.0;
    for zi in z {
        let r = zi.norm();
        if !(r > prev) || !r.is_finite() {
            return Err(Error::OutsideAsymptoticZone);
        }
        prev = r;
    }
    Ok(())
}

/// `z^offset = prod_j (z_j / z_(j+1))^(l_j)`.
fn offset_monomial(z: &[Complex64], off: &[u32]) -> Complex64 {
    off.iter().enumerate().fold(Complex64::new(1.0, 0.0), |acc, (j, &l)| {
        acc * (z[j] / z[j + 1]).powi(l as i32)
    })
}

/// `z^mu sum Gamma_nu z^(nu - mu)` with principal powers in `z^mu`.
pub fn phi_eval(t: &CoeffTable, z: &[Complex64]) -> Result<Complex64> {
    if z.len() != t.mu.dim() {
        return Err(Error::LengthMismatch { left: z.len(), right: t.mu.dim() });
    }
    check_zone(z)?;
    let lead = z
        .iter()
        .zip(t.mu.coords())
        .fold(Complex64::new(1.0, 0.0), |acc, (zi, m)| acc * (zi.ln() * to_f64(m)).exp());
    let series: Complex64 = t.entries.iter().map(|(off, g)| offset_monomial(z, off) * to_f64(g)).sum();
    Ok(lead * series)
}

/// `sum_(height = d) |Gamma_nu z^(nu - mu)|` for `d = 0..=depth`.
pub fn term_magnitudes(t: &CoeffTable, z: &[Complex64]) -> Result<Vec<f64>> {
    if z.len() != t.mu.dim() {
        return Err(Error::LengthMismatch { left: z.len(), right: t.mu.dim() });
    }
    check_zone(z)?;
    let mut out = alloc::vec![0.0; t.depth + 1];
    for (off, g) in &t.entries {
        out[height(off)] += (offset_monomial(z, off) * to_f64(g)).norm();
    }
    Ok(out)
}
