//! Triangular diagrams and their calculus.
//!
//! A diagram with `r` rows has points `(i, j)` with `1 <= i <= j <= r`, one marked point
//! `(i_j, j)` per row, and an arrow from every point of row `j < r` to its target in row
//! `j + 1`. The marks alone determine everything else, so [`Diagram`] stores only them.

mod gz;
mod order;
mod permutation;
mod qpoly;

use alloc::vec::Vec;

pub use gz::{gz_pattern, gz_weight, GzPattern};
pub use order::{
    count_and_generating, multiparam_sum, partial_leq, poincare, MultiparamCheck, OrderCounts,
    PoincareCheck,
};
pub use permutation::{AllPermutations, Permutation};
pub use qpoly::{MultiQPolynomial, QPolynomial};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    /// `marks[j - 1] = i_j`.
    marks: Vec<usize>,
}

/// Direction of the arrow leaving a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrow {
    /// `(i, j) -> (i, j + 1)`.
    Left,
    /// `(i, j) -> (i + 1, j + 1)`.
    Right,
}

/// The arrow class whose count equals the length of the permutation.
///
/// Calibrated on two rows: marks `(1, 2)` give the transposition (length 1) and its single
/// arrow `(1,1) -> (1,2)` keeps its index.
pub const LENGTH_ARROW: Arrow = Arrow::Left;

impl Diagram {
    pub fn new(marks: Vec<usize>) -> Result<Self> {
        let ok = marks.iter().enumerate().all(|(j, &m)| m >= 1 && m <= j + 1);
        if !ok {
            return Err(Error::InvalidDiagram(marks));
        }
        Ok(Diagram { marks })
    }

    pub fn rows(&self) -> usize {
        self.marks.len()
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// The marked index `i_j` of row `j` (1-based).
    pub fn mark(&self, j: usize) -> usize {
        self.marks[j - 1]
    }

    pub fn is_marked(&self, i: usize, j: usize) -> bool {
        self.mark(j) == i
    }

    /// Target of the arrow leaving `(i, j)`.
    pub fn target(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let r = self.rows();
        if j == 0 || j >= r || i == 0 || i > j {
            return Err(Error::PointOutsidePattern { i, j, rows: r });
        }
        Ok(if i < self.mark(j + 1) { (i, j + 1) } else { (i + 1, j + 1) })
    }

    pub fn arrow(&self, i: usize, j: usize) -> Result<Arrow> {
        let (ti, _) = self.target(i, j)?;
        Ok(if ti == i { Arrow::Left } else { Arrow::Right })
    }

    pub fn count_arrows(&self, kind: Arrow) -> usize {
        let r = self.rows();
        let mut count = 0;
        for j in 1..r {
            for i in 1..=j {
                if self.arrow(i, j).ok() == Some(kind) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The unique point of row `j - 1` whose arrow ends at `(i, j)`; `None` for marked points
    /// and for the bottom row.
    pub fn source(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        if j < 2 || i == 0 || i > j || self.is_marked(i, j) {
            return None;
        }
        let m = self.mark(j);
        Some(if i < m { (i, j - 1) } else { (i - 1, j - 1) })
    }

    /// Every diagram with `r` rows, in lexicographic order of the marks.
    pub fn all(r: usize) -> impl Iterator<Item = Diagram> {
        let total: usize = (1..=r).product();
        (0..total).map(move |mut code| {
            let mut marks = alloc::vec![0; r];
            for j in (1..=r).rev() {
                marks[j - 1] = code % j + 1;
                code /= j;
            }
            Diagram { marks }
        })
    }
}

/// Reads off `w(i)` as the length of the source chain from `(i, r)` down to a marked point.
pub fn permutation_of(d: &Diagram) -> Permutation {
    let r = d.rows();
    let images = (1..=r)
        .map(|i| {
            let mut p = (i, r);
            let mut len = 1;
            while let Some(s) = d.source(p.0, p.1) {
                p = s;
                len += 1;
            }
            len
        })
        .collect();
    Permutation::new(images).expect("source chains partition the diagram")
}

/// Inverse of [`permutation_of`]: peel off the top row, where `w(i_r) = 1`.
pub fn diagram_of(w: &Permutation) -> Diagram {
    let mut marks = alloc::vec![0; w.rank()];
    let mut current: Vec<usize> = w.images().to_vec();
    while !current.is_empty() {
        let r = current.len();
        let top = current.iter().position(|&x| x == 1).unwrap() + 1;
        marks[r - 1] = top;
        current = current.iter().filter(|&&x| x != 1).map(|&x| x - 1).collect();
    }
    Diagram { marks }
}

/// Rebuilds `w` from the permutation of the diagram with its top row removed and the top mark.
pub fn extend_by_top_row(lower: &Permutation, top_mark: usize) -> Permutation {
    let r = lower.rank() + 1;
    let images = (1..=r)
        .map(|i| {
            if i < top_mark {
                lower.apply(i) + 1
            } else if i > top_mark {
                lower.apply(i - 1) + 1
            } else {
                1
            }
        })
        .collect();
    Permutation::new(images).expect("top-row extension is a bijection")
}

/// `sum_j (i_j - 1)`.
pub fn length(d: &Diagram) -> usize {
    d.marks.iter().map(|m| m - 1).sum()
}

/// Generator indices of the word `w_r w_(r-1) ... w_1` with
/// `w_k = sigma_k sigma_(k+1) ... sigma_(i_(r-k+1) + k - 2)`.
pub fn reduced_word(d: &Diagram) -> Vec<usize> {
    let r = d.rows();
    let mut word = Vec::with_capacity(length(d));
    for k in (1..=r).rev() {
        let m = d.mark(r - k + 1);
        if m > 1 {
            word.extend(k..=m + k - 2);
        }
    }
    word
}

/// Multiplies a word of simple transpositions in `S_r`, leftmost factor outermost.
pub fn word_product(r: usize, word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(r), |acc, &g| {
        acc.compose(&Permutation::simple(r, g)).expect("same rank")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d(marks: &[usize]) -> Diagram {
        Diagram::new(marks.to_vec()).unwrap()
    }

    #[test]
    fn target_follows_the_mark_of_the_next_row() {
        assert_eq!(d(&[1, 1]).target(1, 1).unwrap(), (2, 2));
        assert_eq!(d(&[1, 2]).target(1, 1).unwrap(), (1, 2));
        assert!(d(&[1, 2]).target(1, 2).is_err());
        assert!(d(&[1, 2, 1]).target(3, 2).is_err());
    }

    #[test]
    fn targets_are_never_marked() {
        for r in 1..=6 {
            for dg in Diagram::all(r) {
                for j in 1..r {
                    for i in 1..=j {
                        let (ti, tj) = dg.target(i, j).unwrap();
                        assert!(!dg.is_marked(ti, tj));
                    }
                }
            }
        }
    }

    #[test]
    fn small_permutations() {
        assert!(permutation_of(&d(&[1, 1, 1, 1])).is_identity());
        assert_eq!(permutation_of(&d(&[1, 2])).images(), &[2, 1]);
        assert_eq!(permutation_of(&d(&[1, 2, 3, 4])), Permutation::longest(4));
        assert_eq!(diagram_of(&Permutation::identity(3)).marks(), &[1, 1, 1]);
        assert_eq!(diagram_of(&Permutation::new(vec![2, 1]).unwrap()).marks(), &[1, 2]);
    }

    #[test]
    fn rejects_bad_marks() {
        assert!(Diagram::new(vec![2]).is_err());
        assert!(Diagram::new(vec![1, 3]).is_err());
        assert!(Diagram::new(vec![1, 0]).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        let w = reduced_word(&d(&[1, 1, 2]));
        assert_eq!(w, vec![1]);
        assert_eq!(word_product(3, &w).images(), &[2, 1, 3]);
        assert!(reduced_word(&d(&[1, 1, 1])).is_empty());
        // w = sigma_2 sigma_1
        assert_eq!(reduced_word(&d(&[1, 2, 2])), vec![2, 1]);
        assert_eq!(permutation_of(&d(&[1, 2, 2])).images(), &[3, 1, 2]);
    }

    #[test]
    fn length_counts_left_arrows() {
        assert_eq!(length(&d(&[1, 2])), 1);
        assert_eq!(d(&[1, 2]).count_arrows(LENGTH_ARROW), 1);
        assert_eq!(d(&[1, 1]).count_arrows(LENGTH_ARROW), 0);
    }

    #[test]
    fn top_mark_maps_to_one() {
        for dg in Diagram::all(5) {
            let w = permutation_of(&dg);
            assert_eq!(w.apply(dg.mark(5)), 1);
        }
    }

    #[test]
    fn diagram_count_is_factorial() {
        assert_eq!(Diagram::all(5).count(), 120);
        assert_eq!(Diagram::all(0).count(), 1);
    }
}
