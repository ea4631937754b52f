//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Polynomial in `x_0, ..., x_(nvars-1)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(alloc::vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// `c + sum_i a_i x_i`.
    pub fn linear(a: &[Rational], c: Rational) -> Self {
        let nvars = a.len();
        let mut p = Poly::constant(nvars, c);
        for (i, ai) in a.iter().enumerate() {
            let mut e = alloc::vec![0; nvars];
            e[i] = 1;
            p.add_term(e, ai.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(self.nvars), |acc, _| &acc * self)
    }

    /// `p(x + v)`.
    pub fn shift(&self, v: &[Rational]) -> Poly {
        assert_eq!(v.len(), self.nvars);
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Poly>> = (0..self.nvars)
            .map(|i| {
                let base = &Poly::var(self.nvars, i) + &Poly::constant(self.nvars, v[i].clone());
                (0..=maxdeg[i]).map(|d| base.pow(d)).collect()
            })
            .collect();
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(self.nvars, c.clone());
            for (i, &d) in e.iter().enumerate() {
                if d > 0 {
                    term = &term * &powers[i][d as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Renames `x_i` to `x_(images[i])`.
    pub fn permute_vars(&self, images: &[usize]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = alloc::vec![0; self.nvars];
            for (i, &d) in e.iter().enumerate() {
                f[images[i]] = d;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> Poly {
        let mut images: Vec<usize> = (0..self.nvars).collect();
        images.swap(a, b);
        self.permute_vars(&images)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap_vars(i - 1, i) == *self)
    }

    /// `d p / d x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * Rational::from_integer(e[i].into()));
            }
        }
        out
    }

    /// `x_i p`.
    pub fn mul_var(&self, i: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                f[i] += 1;
                (f, c.clone())
            })
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &d) in x.iter().zip(e) {
                for _ in 0..d {
                    t *= xi;
                }
            }
            total += t;
        }
        total
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Exact quotient by a polynomial of degree at most one; `None` if the division leaves
    /// a remainder or the divisor is zero.
    pub fn div_linear(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(divisor.nvars, self.nvars);
        if divisor.degree()? > 1 {
            return None;
        }
        let (lead_e, lead_c) = divisor.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let mut q = Poly::zero(self.nvars);
            q.add_term(qe, c / &lead_c);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::vec;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn shift_matches_substitution() {
        let p = &(&x(0) * &x(0)) + &(&x(1) * &x(2));
        let v = vec![rat(1, 2), int(-1), int(3)];
        let q = p.shift(&v);
        let at = vec![int(2), rat(1, 3), int(-5)];
        let moved: Vec<Rational> = at.iter().zip(&v).map(|(a, b)| a + b).collect();
        assert_eq!(q.eval(&at), p.eval(&moved));
    }

    #[test]
    fn exact_linear_division() {
        let l = Poly::linear(&[int(2), int(-1), int(0)], rat(1, 3));
        let f = &(&x(0) + &x(2)) * &(&x(1) * &x(1));
        let prod = &f * &l;
        assert_eq!(prod.div_linear(&l).unwrap(), f);
        assert!((&prod + &Poly::one(3)).div_linear(&l).is_none());
        assert!(prod.div_linear(&Poly::zero(3)).is_none());
        let c = Poly::constant(3, int(4));
        assert_eq!(prod.div_linear(&c).unwrap(), prod.scale(&rat(1, 4)));
    }

    #[test]
    fn symmetry() {
        let e2 = &(&(&x(0) * &x(1)) + &(&x(1) * &x(2))) + &(&x(0) * &x(2));
        assert!(e2.is_symmetric());
        assert!(!(&e2 + &x(0)).is_symmetric());
        assert_eq!(x(0).swap_vars(0, 2), x(2));
    }
}
