//! Asymptotic (Harish-Chandra) series of the A_n hypergeometric system and the symbol
//! recurrence for operators commuting with `L`.
//!
//! Offsets `nu - mu` are kept in simple-root coordinates; their coordinate sum is the height.

mod series;
mod symbols;

use alloc::vec::Vec;

pub use series::{freudenthal_table, phi_eval, residual_l, residual_terms, term_magnitudes, CoeffTable};
pub use symbols::{
    commutator, commutes_through, commuting_symbol_table, l_operator_table, power_sum,
    weyl_invariance_check, weyl_invariance_check_with, SymbolTable,
};

use crate::diagrams::Permutation;
use crate::rational::is_integer;
use crate::root_system::{inner, positive_roots, rho, weyl_apply, Weight};
use crate::{Error, Rational, Result};

/// `lambda` (coordinates summing to zero) together with the coupling `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralParam {
    pub lambda: Weight,
    pub k: Rational,
    /// Reject `lambda` with an integral pairing against some root before building series.
    pub require_generic: bool,
}

impl SpectralParam {
    pub fn new(lambda: Weight, k: Rational) -> Result<Self> {
        if lambda.dim() < 2 {
            return Err(Error::LengthMismatch { left: lambda.dim(), right: 2 });
        }
        if !lambda.is_sum_zero() {
            return Err(Error::NotSumZero);
        }
        Ok(SpectralParam { lambda, k, require_generic: true })
    }

    pub fn allow_nongeneric(mut self) -> Self {
        self.require_generic = false;
        self
    }

    pub fn rank(&self) -> usize {
        self.lambda.dim() - 1
    }

    pub fn rho(&self) -> Weight {
        rho(self.rank(), &self.k)
    }

    /// Errors on the first positive root `e_a - e_b` with `(lambda, alpha^vee)` integral.
    pub fn check_generic(&self) -> Result<()> {
        for r in positive_roots(self.rank()) {
            let pairing = r.pair(&self.lambda);
            if is_integer(&pairing) {
                return Err(Error::NonGeneric { root: (r.i, r.j), pairing });
            }
        }
        Ok(())
    }
}

/// `(lambda, lambda) - (rho, rho)`, the eigenvalue of `L`.
pub fn gamma_l(sp: &SpectralParam) -> Rational {
    let rho = sp.rho();
    inner(&sp.lambda, &sp.lambda).unwrap() - inner(&rho, &rho).unwrap()
}

/// The leading exponent `w lambda + rho`.
pub fn exponent(w: &Permutation, sp: &SpectralParam) -> Result<Weight> {
    Ok(&weyl_apply(w, &sp.lambda)? + &sp.rho())
}

/// All offsets of height at most `depth` in rank `n`, by height and then lexicographically.
pub fn offsets_up_to(n: usize, depth: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for h in 0..=depth {
        compositions(n, h as u32, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

fn compositions(parts: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == parts {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    if parts == 0 {
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(parts, total - first, prefix, out);
        prefix.pop();
    }
}

pub fn height(offset: &[u32]) -> usize {
    offset.iter().map(|&c| c as usize).sum()
}
