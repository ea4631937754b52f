use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

/// Integer polynomial in one formal variable `q`, dense, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(1, 0)
    }

    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = alloc::vec![0; degree + 1];
        coeffs[degree] = c;
        QPolynomial::new(coeffs)
    }

    /// `1 - q^m`.
    pub fn one_minus_power(m: usize) -> Self {
        QPolynomial::one() + QPolynomial::monomial(-1, m)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, c: i64, degree: usize) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += c;
        *self = QPolynomial::new(core::mem::take(&mut self.coeffs));
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Exact division; `None` when the remainder is nonzero or the divisor is not monic up to
    /// sign in its lowest term.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        let dd = divisor.degree()?;
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(QPolynomial::zero()) } else { None };
        }
        let mut quot = alloc::vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c % lead != 0 {
                return None;
            }
            let f = c / lead;
            quot[k] = f;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= f * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(QPolynomial::new(quot))
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) + rhs.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        QPolynomial::new(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = alloc::vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::new(coeffs)
    }
}

/// Integer polynomial in `q_1, ..., q_n`, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiQPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultiQPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiQPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = MultiQPolynomial::zero(nvars);
        p.add_term(1, alloc::vec![0; nvars]);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn add_term(&mut self, c: i64, exponents: Vec<u32>) {
        assert_eq!(exponents.len(), self.nvars);
        let entry = self.terms.entry(exponents.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&exponents);
        }
    }

    /// `1 + q_j + ... + q_j^(m-1)` as a polynomial in `nvars` variables (`j` is 1-based).
    pub fn geometric(nvars: usize, j: usize, m: usize) -> Self {
        let mut p = MultiQPolynomial::zero(nvars);
        for e in 0..m {
            let mut exps = alloc::vec![0; nvars];
            exps[j - 1] = e as u32;
            p.add_term(1, exps);
        }
        p
    }

    /// Substitutes `q_j = q` for every `j`.
    pub fn specialize(&self) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (exps, &c) in &self.terms {
            out.add_term(c, exps.iter().sum::<u32>() as usize);
        }
        out
    }
}

impl Mul for &MultiQPolynomial {
    type Output = MultiQPolynomial;
    fn mul(self, rhs: &MultiQPolynomial) -> MultiQPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiQPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(ca * cb, e);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn exact_division_of_geometric_numerators() {
        let num = QPolynomial::one_minus_power(4);
        let den = QPolynomial::one_minus_power(1);
        assert_eq!(num.div_exact(&den).unwrap().coeffs(), &[1, 1, 1, 1]);
        let not_divisible = QPolynomial::new(vec![1, 0, 1]);
        assert!(not_divisible.div_exact(&den).is_none());
    }

    #[test]
    fn multiply_and_specialize() {
        let a = MultiQPolynomial::geometric(2, 1, 2);
        let b = MultiQPolynomial::geometric(2, 2, 3);
        let p = &a * &b;
        assert_eq!(p.terms().len(), 6);
        assert_eq!(p.specialize().coeffs(), &[1, 2, 2, 1]);
    }
}
