//! Gelfand-Zetlin patterns attached to a diagram.
//!
//! Row `q` holds `m_(1,q) .. m_(q,q)`. Betweenness here is the reversed form
//! `m_(p,q+1) <= m_(p,q) <= m_(p+1,q+1)`, matching weakly increasing top rows.

use alloc::vec::Vec;

use super::{diagram_of, Permutation};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GzPattern {
    /// `rows[0]` is the top row (length `n`), `rows[n-1]` the single bottom entry.
    rows: Vec<Vec<i64>>,
}

impl GzPattern {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (t, row) in rows.iter().enumerate() {
            if row.len() != n - t {
                return Err(Error::LengthMismatch { left: row.len(), right: n - t });
            }
        }
        Ok(GzPattern { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Rows top first, as serialized.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Row `q` in the bottom-up numbering (`1 <= q <= n`).
    pub fn row(&self, q: usize) -> &[i64] {
        &self.rows[self.size() - q]
    }

    pub fn entry(&self, p: usize, q: usize) -> i64 {
        self.row(q)[p - 1]
    }

    pub fn is_between(&self) -> bool {
        let n = self.size();
        (1..n).all(|q| {
            (1..=q).all(|p| {
                let e = self.entry(p, q);
                self.entry(p, q + 1) <= e && e <= self.entry(p + 1, q + 1)
            })
        })
    }
}

/// Fills the pattern by copying each entry from the target of its point.
pub fn gz_pattern(w: &Permutation, m: &[i64]) -> Result<GzPattern> {
    let n = w.rank();
    if m.len() != n {
        return Err(Error::LengthMismatch { left: m.len(), right: n });
    }
    if m.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::NotWeaklyIncreasing);
    }
    let d = diagram_of(w);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    rows.push(m.to_vec());
    for q in (1..n).rev() {
        let above = rows.last().unwrap();
        let row = (1..=q)
            .map(|p| {
                let (tp, _) = d.target(p, q).expect("point inside the pattern");
                above[tp - 1]
            })
            .collect();
        rows.push(row);
    }
    Ok(GzPattern { rows })
}

/// `weight_i = sum(row n-i+1) - sum(row n-i)`, with an empty row 0.
pub fn gz_weight(p: &GzPattern) -> Vec<i64> {
    let n = p.size();
    let sum = |q: usize| if q == 0 { 0 } else { p.row(q).iter().sum::<i64>() };
    (1..=n).map(|i| sum(n - i + 1) - sum(n - i)).collect()
}
