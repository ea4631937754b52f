use alloc::vec::Vec;

use crate::{Error, Result};

/// A permutation of `1..=r`, stored by its images `[w(1), ..., w(r)]`.
///
/// Products compose as functions: `(a * b)(i) = a(b(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = alloc::vec![false; r];
        for &x in &images {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(r: usize) -> Self {
        Permutation { images: (1..=r).collect() }
    }

    /// The longest element `i -> r + 1 - i`.
    pub fn longest(r: usize) -> Self {
        Permutation { images: (1..=r).rev().collect() }
    }

    /// The simple transposition `sigma_i` swapping `i` and `i + 1`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "sigma_{i} is not a generator of S_{r}");
        let mut images: Vec<usize> = (1..=r).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= r`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// All of `S_r` in lexicographic order of the image lists.
    pub fn all(r: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=r).collect()) }
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_factorial_many() {
        let counts: Vec<usize> = (0..=6).map(|r| Permutation::all(r).count()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 24, 120, 720]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(alloc::vec![1, 1]).is_err());
        assert!(Permutation::new(alloc::vec![0, 1]).is_err());
        assert!(Permutation::new(alloc::vec![2, 3]).is_err());
    }

    #[test]
    fn composition_is_function_composition() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        // (s2 s1)(1) = s2(2) = 3
        assert_eq!(s2.compose(&s1).unwrap().images(), &[3, 1, 2]);
        let w = Permutation::new(alloc::vec![3, 1, 2]).unwrap();
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(Permutation::longest(4).inversions(), 6);
    }
}
