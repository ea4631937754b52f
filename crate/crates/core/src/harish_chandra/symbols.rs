//! Operators `P = sum_mu e^(mu(u)) p_mu(d/du)` with polynomial symbols `p_mu(lambda)`.
//!
//! Composition obeys `e^a f(d) . e^b g(d) = e^(a+b) f(d + b) g(d)`; every identity below
//! is derived from that rule alone.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{height, offsets_up_to};
use crate::poly::Poly;
use crate::rational::int;
use crate::root_system::{from_simple_coords, inner, positive_roots, rho, Weight};
use crate::{Error, Rational, Result};

/// Truncated symbol family of an operator in rank `n`, keyed by simple-root offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolTable {
    pub n: usize,
    pub k: Rational,
    pub depth: usize,
    pub entries: BTreeMap<Vec<u32>, Poly>,
}

impl SymbolTable {
    pub fn get(&self, offset: &[u32]) -> Poly {
        self.entries.get(offset).cloned().unwrap_or_else(|| Poly::zero(self.n + 1))
    }

    fn insert(&mut self, offset: Vec<u32>, p: Poly) {
        if p.is_zero() {
            self.entries.remove(&offset);
        } else {
            self.entries.insert(offset, p);
        }
    }
}

/// `sum_i lambda_i^p` in `n + 1` variables.
pub fn power_sum(n: usize, p: u32) -> Poly {
    let mut out = Poly::zero(n + 1);
    for i in 0..=n {
        let mut e = alloc::vec![0; n + 1];
        e[i] = p;
        out.add_term(e, int(1));
    }
    out
}

fn roots_with_coords(n: usize) -> Vec<(Weight, Vec<u32>)> {
    positive_roots(n).into_iter().map(|r| (r.vector(n), r.simple_coords(n))).collect()
}

fn weight_poly(v: &Weight, c: Rational) -> Poly {
    Poly::linear(v.coords(), c)
}

/// Builds `p_mu` for all offsets up to `depth` from `p_0(lambda) = sigma(lambda - rho)` via
/// `(2 lambda - 2 rho + mu, mu) p_mu(lambda)
///   = 2k sum_alpha sum_j [(lambda + mu - j alpha, alpha) p_(mu - j alpha)(lambda)
///                         - (lambda, alpha) p_(mu - j alpha)(lambda + j alpha)]`.
pub fn commuting_symbol_table(sigma: &Poly, k: &Rational, depth: usize) -> Result<SymbolTable> {
    if sigma.nvars() < 2 {
        return Err(Error::LengthMismatch { left: sigma.nvars(), right: 2 });
    }
    if !sigma.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = sigma.nvars() - 1;
    let rho = rho(n, k);
    let roots = roots_with_coords(n);
    let two_k = int(2) * k;

    let mut table = SymbolTable { n, k: k.clone(), depth, entries: BTreeMap::new() };
    table.insert(alloc::vec![0; n], sigma.shift(&(-&rho).0));
    for off in offsets_up_to(n, depth).into_iter().skip(1) {
        let mu = from_simple_coords(&off);
        let bracket = weight_poly(&mu.scale(&int(2)), inner(&mu, &mu)? - int(2) * inner(&rho, &mu)?);
        if bracket.is_zero() {
            return Err(Error::Resonant { offset: off });
        }
        let mut rhs = Poly::zero(n + 1);
        for (alpha, a) in &roots {
            let mu_alpha = inner(&mu, alpha)?;
            let lam_alpha = weight_poly(alpha, Rational::zero());
            let mut prev = off.clone();
            let mut j = 1i64;
            while prev.iter().zip(a).all(|(p, q)| p >= q) {
                for (p, q) in prev.iter_mut().zip(a) {
                    *p -= q;
                }
                if let Some(p) = table.entries.get(&prev) {
                    let first = weight_poly(alpha, &mu_alpha - int(2 * j));
                    let shifted = p.shift(&alpha.scale(&int(j)).0);
                    rhs = &rhs + &(&(&first * p) - &(&lam_alpha * &shifted));
                }
                j += 1;
            }
        }
        let p_mu = rhs
            .scale(&two_k)
            .div_linear(&bracket)
            .ok_or(Error::DivisionRemainder { offset: off.clone() })?;
        table.insert(off, p_mu);
    }
    Ok(table)
}

/// Symbols of `L` itself: `p_0 = (xi, xi) - 2 (rho, xi)`, `p_(m alpha) = -2k (alpha, xi)`.
pub fn l_operator_table(n: usize, k: &Rational, depth: usize) -> SymbolTable {
    let rho = rho(n, k);
    let mut table = SymbolTable { n, k: k.clone(), depth, entries: BTreeMap::new() };
    let p0 = &power_sum(n, 2) - &weight_poly(&rho.scale(&int(2)), Rational::zero());
    table.insert(alloc::vec![0; n], p0);
    for (alpha, a) in roots_with_coords(n) {
        let h = height(&a);
        for m in 1..=depth / h {
            let off = a.iter().map(|&c| c * m as u32).collect();
            table.insert(off, weight_poly(&alpha.scale(&(int(-2) * k)), Rational::zero()));
        }
    }
    table
}

/// Coefficients of `[A, B]` at every offset up to the smaller depth:
/// `sum_(beta + mu = gamma) a_beta(xi + mu) b_mu(xi) - b_mu(xi + beta) a_beta(xi)`.
pub fn commutator(a: &SymbolTable, b: &SymbolTable) -> Result<BTreeMap<Vec<u32>, Poly>> {
    if a.n != b.n {
        return Err(Error::RankMismatch { left: a.n, right: b.n });
    }
    let depth = a.depth.min(b.depth);
    let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    for (beta, pa) in &a.entries {
        for (mu, pb) in &b.entries {
            let gamma: Vec<u32> = beta.iter().zip(mu).map(|(x, y)| x + y).collect();
            if height(&gamma) > depth {
                continue;
            }
            let shift_mu = from_simple_coords(mu);
            let shift_beta = from_simple_coords(beta);
            let term = &(&pa.shift(&shift_mu.0) * pb) - &(&pb.shift(&shift_beta.0) * pa);
            let slot = out.entry(gamma).or_insert_with(|| Poly::zero(a.n + 1));
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// True when `[A, B]` vanishes at every offset of height at most `max_height`.
pub fn commutes_through(a: &SymbolTable, b: &SymbolTable, max_height: usize) -> Result<bool> {
    Ok(commutator(a, b)?.keys().all(|g| height(g) > max_height))
}

/// Invariance under the Weyl group with the default clearing exponent
/// `d = max(1, deg p_0 - 1)`.
pub fn weyl_invariance_check(t: &SymbolTable) -> bool {
    let deg = t.get(&alloc::vec![0; t.n]).degree().unwrap_or(0);
    weyl_invariance_check_with(t, deg.saturating_sub(1).max(1))
}

/// Multiplies the truncated operator on the left by `prod_(alpha > 0) (1 - e^alpha)^d`, which
/// must leave a finite sum `N` of height at most `d H` (`H` = sum of root heights). For each
/// simple reflection, invariance of the operator is equivalent to
/// `N = (-1)^d e^(d alpha_i) s_i(N)`. The table must reach height `d H + 1` to be decisive.
pub fn weyl_invariance_check_with(t: &SymbolTable, d: u32) -> bool {
    let n = t.n;
    let big_h = n * (n + 1) * (n + 2) / 6;
    let bound = d as usize * big_h;
    if t.depth < bound + 1 {
        return false;
    }

    let mut clearing: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    clearing.insert(alloc::vec![0; n], 1);
    for (_, a) in roots_with_coords(n) {
        for _ in 0..d {
            let mut next = BTreeMap::new();
            for (e, c) in &clearing {
                *next.entry(e.clone()).or_insert(0) += c;
                let shifted: Vec<u32> = e.iter().zip(&a).map(|(x, y)| x + y).collect();
                *next.entry(shifted).or_insert(0) -= c;
            }
            next.retain(|_, c| *c != 0);
            clearing = next;
        }
    }

    let mut numer: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    for (c, q) in &clearing {
        for (off, p) in &t.entries {
            let sum: Vec<u32> = c.iter().zip(off).map(|(x, y)| x + y).collect();
            if height(&sum) > t.depth {
                continue;
            }
            let slot = numer.entry(sum).or_insert_with(|| Poly::zero(n + 1));
            *slot = &*slot + &p.scale(&int(*q));
        }
    }
    numer.retain(|_, p| !p.is_zero());
    if numer.keys().any(|off| height(off) > bound) {
        return false;
    }

    let sign = if d % 2 == 0 { int(1) } else { int(-1) };
    for i in 1..=n {
        let mut image: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (off, p) in &numer {
            let at = |j: usize| if j == 0 || j > n { 0i64 } else { off[j - 1] as i64 };
            let ci = at(i - 1) + at(i + 1) - at(i) + d as i64;
            if ci < 0 {
                return false;
            }
            let mut moved = off.clone();
            moved[i - 1] = ci as u32;
            image.insert(moved, p.swap_vars(i - 1, i).scale(&sign));
        }
        if image != numer {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn trivial_symbols() {
        let k = rat(2, 5);
        let one = commuting_symbol_table(&Poly::one(3), &k, 3).unwrap();
        assert_eq!(one.entries.len(), 1);
        let lin = commuting_symbol_table(&power_sum(2, 1), &k, 3).unwrap();
        assert_eq!(lin.entries.len(), 1);
        assert_eq!(lin.get(&[0, 0]), power_sum(2, 1));
    }

    #[test]
    fn quadratic_symbol_is_shifted_l() {
        let k = rat(3, 7);
        for n in 1..=2 {
            let t = commuting_symbol_table(&power_sum(n, 2), &k, 4).unwrap();
            let l = l_operator_table(n, &k, 4);
            let r = rho(n, &k);
            let shift = Poly::constant(n + 1, inner(&r, &r).unwrap());
            for off in offsets_up_to(n, 4) {
                let want = if height(&off) == 0 { &l.get(&off) + &shift } else { l.get(&off) };
                assert_eq!(t.get(&off), want, "offset {off:?}");
            }
        }
    }

    #[test]
    fn rejects_asymmetric_sigma() {
        assert_eq!(commuting_symbol_table(&Poly::var(2, 0), &rat(1, 2), 2), Err(Error::NotSymmetric));
    }

    #[test]
    fn invariance_detects_corruption() {
        let k = rat(1, 3);
        let mut t = commuting_symbol_table(&power_sum(1, 2), &k, 3).unwrap();
        assert!(weyl_invariance_check(&t));
        t.insert(alloc::vec![1], &t.get(&[1]) + &Poly::one(2));
        assert!(!weyl_invariance_check(&t));
    }

    #[test]
    fn shallow_tables_are_not_decisive() {
        let t = commuting_symbol_table(&power_sum(2, 2), &rat(1, 3), 2).unwrap();
        assert!(!weyl_invariance_check(&t));
    }
}
