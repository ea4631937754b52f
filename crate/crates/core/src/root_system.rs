//! The root system of type A_n inside `V = Q^(n+1)`.
//!
//! Vectors live in the `e`-basis. The Weyl group `S_(n+1)` acts by permuting coordinates,
//! `(w v)_i = v_(w(i))`, which is the convention under which
//! `z^(w lambda + rho) = prod_i z_i^(lambda_(w(i)) + rho_i)`.

use alloc::vec::Vec;
use core::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::diagrams::Permutation;
use crate::rational::{int, is_integer, rat, to_f64};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(alloc::vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| int(x)).collect())
    }

    /// The basis vector `e_i` (1-based) in dimension `dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Weight::zero(dim);
        v.0[i - 1] = int(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_sum_zero(&self) -> bool {
        self.sum().is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

pub fn inner(a: &Weight, b: &Weight) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::LengthMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum())
}

/// `2 alpha / (alpha, alpha)`.
pub fn coroot(alpha: &Weight) -> Result<Weight> {
    let norm = inner(alpha, alpha)?;
    if norm.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(alpha.scale(&(int(2) / norm)))
}

/// `delta = (n/2, (n-2)/2, ..., -n/2)`.
pub fn delta(n: usize) -> Weight {
    Weight((0..=n).map(|i| rat(n as i64 - 2 * i as i64, 2)).collect())
}

pub fn rho(n: usize, k: &Rational) -> Weight {
    delta(n).scale(k)
}

/// `alpha_i = e_i - e_(i+1)` for `1 <= i <= n`.
pub fn simple_root(n: usize, i: usize) -> Weight {
    PositiveRoot { i, j: i + 1 }.vector(n)
}

/// `Lambda_i = e_1 + ... + e_i - i/(n+1) (e_1 + ... + e_(n+1))`.
pub fn fundamental_weight(n: usize, i: usize) -> Weight {
    let shift = rat(i as i64, n as i64 + 1);
    Weight((1..=n + 1).map(|a| if a <= i { int(1) - &shift } else { -shift.clone() }).collect())
}

/// The positive root `e_i - e_j`, `i < j`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn vector(&self, n: usize) -> Weight {
        let mut v = Weight::zero(n + 1);
        v.0[self.i - 1] = int(1);
        v.0[self.j - 1] = int(-1);
        v
    }

    /// Coordinates in the simple-root basis: `alpha_i + ... + alpha_(j-1)`.
    pub fn simple_coords(&self, n: usize) -> Vec<u32> {
        (1..=n).map(|a| u32::from(a >= self.i && a < self.j)).collect()
    }

    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// `(v, alpha)`; equals `(v, alpha^vee)` since every root has norm 2.
    pub fn pair(&self, v: &Weight) -> Rational {
        &v.0[self.i - 1] - &v.0[self.j - 1]
    }
}

/// All `n(n+1)/2` positive roots, ordered by `(i, j)`.
pub fn positive_roots(n: usize) -> Vec<PositiveRoot> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push(PositiveRoot { i, j });
        }
    }
    out
}

pub fn weyl_apply(w: &Permutation, v: &Weight) -> Result<Weight> {
    if w.rank() != v.dim() {
        return Err(Error::LengthMismatch { left: w.rank(), right: v.dim() });
    }
    Ok(Weight((1..=v.dim()).map(|i| v.0[w.apply(i) - 1].clone()).collect()))
}

/// `l_j = v_1 + ... + v_j` so that `v = sum_j l_j alpha_j`; `None` unless `v` sums to zero.
pub fn simple_coords(v: &Weight) -> Option<Vec<Rational>> {
    if !v.is_sum_zero() {
        return None;
    }
    let mut acc = Rational::zero();
    let mut out = Vec::with_capacity(v.dim().saturating_sub(1));
    for x in &v.0[..v.dim().saturating_sub(1)] {
        acc += x;
        out.push(acc.clone());
    }
    Some(out)
}

/// `sum_j l_j alpha_j` in the `e`-basis of `Q^(n+1)`.
pub fn from_simple_coords(l: &[u32]) -> Weight {
    let n = l.len();
    let mut v = Weight::zero(n + 1);
    for (j, &c) in l.iter().enumerate() {
        v.0[j] += int(c as i64);
        v.0[j + 1] -= int(c as i64);
    }
    v
}

/// `mu <= lambda` iff `lambda - mu` is a nonnegative integer combination of simple roots.
pub fn dominance_leq(mu: &Weight, lambda: &Weight) -> bool {
    if mu.dim() != lambda.dim() {
        return false;
    }
    match simple_coords(&(lambda - mu)) {
        Some(l) => l.iter().all(|c| is_integer(c) && !c.is_negative()),
        None => false,
    }
}
