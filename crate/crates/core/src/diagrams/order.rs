//! Length generating functions and the componentwise order on marks.

use super::{diagram_of, length, Diagram, MultiQPolynomial, Permutation, QPolynomial};
use crate::{Error, Result};

/// Brute-force and product-formula sides of an identity between polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareCheck {
    pub sum: QPolynomial,
    pub product: QPolynomial,
}

impl PoincareCheck {
    pub fn holds(&self) -> bool {
        self.sum == self.product
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiparamCheck {
    pub sum: MultiQPolynomial,
    pub product: MultiQPolynomial,
}

impl MultiparamCheck {
    pub fn holds(&self) -> bool {
        self.sum == self.product
    }
}

/// `prod (1 - q^(m_j)) / (1 - q)`, each quotient taken by exact division.
fn product_of_quotients(exponents: impl IntoIterator<Item = usize>) -> QPolynomial {
    let den = QPolynomial::one_minus_power(1);
    exponents.into_iter().fold(QPolynomial::one(), |acc, m| {
        let quot = QPolynomial::one_minus_power(m)
            .div_exact(&den)
            .expect("1 - q divides 1 - q^m");
        &acc * &quot
    })
}

/// Sum of `q^l(w)` over `S_n` against `prod_(j <= n) (1 - q^j)/(1 - q)`.
pub fn poincare(n: usize) -> PoincareCheck {
    let mut sum = QPolynomial::zero();
    for d in Diagram::all(n) {
        sum.add_term(1, length(&d));
    }
    PoincareCheck { sum, product: product_of_quotients(1..=n) }
}

/// Sum of `prod_j q_j^(i_j - 1)` over diagrams against `prod_j (1 + q_j + ... + q_j^(j-1))`.
pub fn multiparam_sum(n: usize) -> MultiparamCheck {
    let mut sum = MultiQPolynomial::zero(n);
    for d in Diagram::all(n) {
        sum.add_term(1, d.marks().iter().map(|&m| (m - 1) as u32).collect());
    }
    let product = (1..=n).fold(MultiQPolynomial::one(n), |acc, j| {
        &acc * &MultiQPolynomial::geometric(n, j, j)
    });
    MultiparamCheck { sum, product }
}

/// `w1 <= w2` iff every mark of `w1` is at most the corresponding mark of `w2`.
pub fn partial_leq(w1: &Permutation, w2: &Permutation) -> Result<bool> {
    if w1.rank() != w2.rank() {
        return Err(Error::RankMismatch { left: w1.rank(), right: w2.rank() });
    }
    let (d1, d2) = (diagram_of(w1), diagram_of(w2));
    Ok(d1.marks().iter().zip(d2.marks()).all(|(a, b)| a <= b))
}

/// Sizes and length generating functions of the up- and down-sets of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCounts {
    pub count_geq: u64,
    pub count_leq: u64,
    pub qpoly_geq: QPolynomial,
    pub qpoly_leq: QPolynomial,
}

impl OrderCounts {
    pub fn closed_form(w: &Permutation) -> Self {
        let d = diagram_of(w);
        let rows = || d.marks().iter().enumerate().map(|(j, &m)| (j + 1, m));
        let count_geq = rows().map(|(j, m)| (j - m + 1) as u64).product();
        let count_leq = rows().map(|(_, m)| m as u64).product();
        let qpoly_geq = &QPolynomial::monomial(1, length(&d))
            * &product_of_quotients(rows().map(|(j, m)| j - m + 1));
        let qpoly_leq = product_of_quotients(rows().map(|(_, m)| m));
        OrderCounts { count_geq, count_leq, qpoly_geq, qpoly_leq }
    }

    /// Walks all of `S_r` and compares marks directly.
    pub fn enumerate(w: &Permutation) -> Self {
        let d = diagram_of(w);
        let mut out = OrderCounts {
            count_geq: 0,
            count_leq: 0,
            qpoly_geq: QPolynomial::zero(),
            qpoly_leq: QPolynomial::zero(),
        };
        for other in Diagram::all(w.rank()) {
            let l = length(&other);
            let pairs = || d.marks().iter().zip(other.marks());
            if pairs().all(|(a, b)| a <= b) {
                out.count_geq += 1;
                out.qpoly_geq.add_term(1, l);
            }
            if pairs().all(|(a, b)| a >= b) {
                out.count_leq += 1;
                out.qpoly_leq.add_term(1, l);
            }
        }
        out
    }
}

/// Closed-form counts; compare against [`OrderCounts::enumerate`].
pub fn count_and_generating(w: &Permutation) -> OrderCounts {
    OrderCounts::closed_form(w)
}
