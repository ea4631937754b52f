use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Rational;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    LengthMismatch { left: usize, right: usize },
    ZeroVector,
    /// Input is not a permutation of `1..=r`.
    InvalidPermutation(Vec<usize>),
    /// Marks violate `1 <= i_j <= j`.
    InvalidDiagram(Vec<usize>),
    PointOutsidePattern { i: usize, j: usize, rows: usize },
    RankMismatch { left: usize, right: usize },
    NotWeaklyIncreasing,
    NotSumZero,
    /// The supplied exponent is not of the form `w lambda + rho`.
    NotAnExponent,
    NotSymmetric,
    /// The recurrence bracket vanishes at `mu + offset` (offset in simple-root coordinates).
    Resonant { offset: Vec<u32> },
    /// `(lambda, alpha) ` is an integer for the positive root `e_a - e_b` (1-based).
    NonGeneric { root: (usize, usize), pairing: Rational },
    /// Exact division of a symbol left a remainder; signals an arithmetic bug.
    DivisionRemainder { offset: Vec<u32> },
    OutsideAsymptoticZone,
    OutOfDomain { what: &'static str, value: f64 },
    SingularLocus { factor: String },
    PhaseTrackingFailed { tau: Vec<f64> },
    NonFinite { tau: Vec<f64> },
    Pole { what: String },
    InvalidQuadrature(&'static str),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::ZeroVector => write!(f, "zero vector has no coroot"),
            Error::InvalidPermutation(v) => write!(f, "not a permutation: {v:?}"),
            Error::InvalidDiagram(v) => write!(f, "invalid diagram marks (need 1 <= i_j <= j): {v:?}"),
            Error::PointOutsidePattern { i, j, rows } => {
                write!(f, "point ({i},{j}) has no target in a diagram with {rows} rows")
            }
            Error::RankMismatch { left, right } => write!(f, "rank mismatch: {left} vs {right}"),
            Error::NotWeaklyIncreasing => write!(f, "weight must be weakly increasing"),
            Error::NotSumZero => write!(f, "spectral parameter coordinates must sum to zero"),
            Error::NotAnExponent => write!(f, "exponent is not of the form w(lambda) + rho"),
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::Resonant { offset } => {
                write!(f, "resonant spectral parameter: bracket vanishes at mu + {offset:?}")
            }
            Error::NonGeneric { root: (a, b), pairing } => write!(
                f,
                "resonant spectral parameter: (lambda, e_{a} - e_{b}) = {pairing} is an integer"
            ),
            Error::DivisionRemainder { offset } => {
                write!(f, "symbol recurrence is not exactly divisible at offset {offset:?}")
            }
            Error::OutsideAsymptoticZone => write!(
                f,
                "arguments must satisfy 0 < |z_1| < ... < |z_(n+1)| with room for the loops"
            ),
            Error::OutOfDomain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::SingularLocus { factor } => write!(f, "on singular locus: factor {factor} vanishes"),
            Error::PhaseTrackingFailed { tau } => {
                write!(f, "phase tracking failed near singular locus at tau = {tau:?}")
            }
            Error::NonFinite { tau } => write!(f, "non-finite integrand at tau = {tau:?}"),
            Error::Pole { what } => write!(f, "pole: {what}"),
            Error::InvalidQuadrature(msg) => write!(f, "invalid quadrature spec: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
