use core::f64::consts::PI;

use super::Node;
use crate::{Error, Result};

/// `f(x) = epsilon sin^2(pi x)`: smooth, in `[0, epsilon]`, zero only at `x = 0, 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bump {
    epsilon: f64,
}

impl Bump {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::OutOfDomain { what: "bump epsilon", value: epsilon });
        }
        Ok(Bump { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::OutOfDomain { what: "bump argument", value: x });
        }
        Ok(self.at(Node::new(x)).0)
    }

    /// `(f, f')` at a node, using whichever of `tau`, `1 - tau` is smaller.
    pub fn at(&self, node: Node) -> (f64, f64) {
        let s = libm::sin(PI * node.tau.min(node.comp));
        let c = libm::cos(PI * node.tau);
        (self.epsilon * s * s, 2.0 * PI * self.epsilon * s * c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let b = Bump::new(0.1).unwrap();
        assert_eq!(b.value(0.0).unwrap(), 0.0);
        assert!(b.value(1.0).unwrap().abs() < 1e-30);
        assert!((b.value(0.5).unwrap() - 0.1).abs() < 1e-16);
        assert!((b.value(0.25).unwrap() - 0.05).abs() < 1e-16);
        assert!(b.value(1.5).is_err());
        assert!(Bump::new(0.0).is_err());
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let b = Bump::new(0.2).unwrap();
        for x in [0.1, 0.37, 0.8] {
            let h = 1e-6;
            let fd = (b.value(x + h).unwrap() - b.value(x - h).unwrap()) / (2.0 * h);
            assert!((b.at(Node::new(x)).1 - fd).abs() < 1e-8);
        }
    }
}
