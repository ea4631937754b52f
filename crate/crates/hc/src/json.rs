//! Wire formats. Rationals travel as `"p/q"` strings, complex numbers as `{"re", "im"}`.

use hc_core::cycles::QuadratureSpec;
use hc_core::diagrams::{Diagram, GzPattern};
use hc_core::harish_chandra::CoeffTable;
use hc_core::{Complex64, Rational};
use serde::{Deserialize, Serialize};

use crate::config::scheme_name;

pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

/// A diagram is the array of its marks `[i_1, ..., i_r]`.
pub fn diagram_json(d: &Diagram) -> Vec<usize> {
    d.marks().to_vec()
}

/// Rows top first.
pub fn gz_json(p: &GzPattern) -> Vec<Vec<i64>> {
    p.rows().to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffEntryJson {
    pub offset: Vec<u32>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffTableJson {
    pub mu: Vec<String>,
    pub k: String,
    pub entries: Vec<CoeffEntryJson>,
}

impl From<&CoeffTable> for CoeffTableJson {
    fn from(t: &CoeffTable) -> Self {
        CoeffTableJson {
            mu: t.mu.coords().iter().map(rational_string).collect(),
            k: rational_string(&t.k),
            entries: t
                .entries
                .iter()
                .map(|(off, v)| CoeffEntryJson { offset: off.clone(), value: rational_string(v) })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecJson {
    pub scheme: String,
    pub points: usize,
    pub epsilon: f64,
    pub continuation_steps: usize,
}

impl From<&QuadratureSpec> for SpecJson {
    fn from(q: &QuadratureSpec) -> Self {
        SpecJson {
            scheme: scheme_name(q.scheme).to_string(),
            points: q.points,
            epsilon: q.epsilon,
            continuation_steps: q.continuation_steps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hc_core::diagrams::Permutation;
    use hc_core::harish_chandra::{exponent, freudenthal_table, SpectralParam};
    use hc_core::rational::rat;
    use hc_core::root_system::Weight;

    #[test]
    fn coeff_table_shape() {
        let sp = SpectralParam::new(Weight(vec![rat(3, 10), rat(-3, 10)]), rat(3, 2)).unwrap();
        let t = freudenthal_table(&exponent(&Permutation::identity(2), &sp).unwrap(), &sp, 1).unwrap();
        let v = serde_json::to_value(CoeffTableJson::from(&t)).unwrap();
        assert_eq!(v["k"], "3/2");
        assert_eq!(v["mu"][0], "21/20");
        assert_eq!(v["entries"][0]["offset"], serde_json::json!([0]));
        assert_eq!(v["entries"][0]["value"], "1");
        assert_eq!(v["entries"][1]["value"], "63/32");
    }
}
