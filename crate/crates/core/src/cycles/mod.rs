//! Cycles `Delta_w` built from towers of loops, the multivalued form on them, and its
//! integral.
//!
//! Every variable `t_(i,j)` of rows `j <= n` runs once around the origin,
//! `t_(i,j) = e^(2 pi i tau)(1 - f(tau)) t_tar(i,j)`, while the top row is fixed to `z`.

mod bump;
mod integrate;
mod omega;
mod path;
mod quadrature;

pub use bump::Bump;
pub use integrate::{
    integrand, integrate, integrate_outer, k1_closed_form, leading_coeff_estimate, z_power,
    LeadingEstimate,
};
pub use omega::{
    base_point_args, factors, omega_tracked, omega_w_eval, phase_continuation, Factor, FactorKind,
    PhasedValue,
};
pub use path::{cycle_point, CyclePath, CyclePoint, Node};
pub use quadrature::{Rule, Scheme, QuadratureSpec};
