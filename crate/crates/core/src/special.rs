//! Complex Gamma function and exact-argument trigonometry.
//!
//! `gamma` uses the Lanczos approximation with `g = 607/128` and 15 coefficients
//! (relative error around `1e-15` for `Re z >= 1/2`), and the reflection formula elsewhere.

use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::{int, to_f64};
use crate::{Error, Rational, Result};

const G: f64 = 607.0 / 128.0;

const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

/// Distance below which an argument counts as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-8;

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `sin(pi z)` with the real part reduced exactly before scaling by `pi`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = PI * z.im;
    Complex64::new(s * libm::cosh(y), c * libm::sinh(y))
}

fn sin_cos_pi_real(x: f64) -> (f64, f64) {
    let r = x - 2.0 * libm::floor(x / 2.0);
    let (s, c) = libm::sincos(PI * r);
    // hit the exact zeros and ones at half-integers
    if r == 0.0 || r == 1.0 {
        (0.0, c)
    } else if r == 0.5 || r == 1.5 {
        (s, 0.0)
    } else {
        (s, c)
    }
}

fn nearest_nonpositive_integer(z: Complex64) -> Option<f64> {
    let n = libm::round(z.re);
    (n <= 0.0 && (z - n).norm() < POLE_TOLERANCE).then_some(n)
}

/// `Gamma(z)`; errors within [`POLE_TOLERANCE`] of a nonpositive integer.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if let Some(n) = nearest_nonpositive_integer(z) {
        return Err(Error::Pole { what: alloc::format!("Gamma at {n}") });
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::OutOfDomain { what: "Gamma argument", value: z.re });
    }
    if z.re < 0.5 {
        let s = sin_pi(z);
        Ok(PI / (s * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

/// `1 / Gamma(z)`, entire: exactly zero at nonpositive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    if let Some(n) = nearest_nonpositive_integer(z) {
        if z.re == n && z.im == 0.0 {
            return Complex64::zero();
        }
    }
    if z.re < 0.5 {
        sin_pi(z) * ln_gamma_right(1.0 - z).exp() / PI
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// `sin(pi r)` for rational `r`, reduced modulo 2 in exact arithmetic.
pub fn sin_pi_rational(r: &Rational) -> f64 {
    let two = int(2);
    let q = (r / &two).floor();
    let reduced = r - q * two;
    sin_cos_pi_real(to_f64(&reduced)).0
}

/// `e^(i pi r)` for rational `r`, reduced modulo 2 in exact arithmetic.
pub fn exp_i_pi_rational(r: &Rational) -> Complex64 {
    let two = int(2);
    let q = (r / &two).floor();
    let reduced = r - q * two;
    let (s, c) = sin_cos_pi_real(to_f64(&reduced));
    Complex64::new(c, s)
}

/// Whether `r` is one of `0, -1, -2, ...`.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive() && r.to_integer().to_i64().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn factorials_and_half_integers() {
        let mut f = 1.0;
        for n in 1..20 {
            assert!(close(gamma(Complex64::new(n as f64, 0.0)).unwrap(), Complex64::new(f, 0.0), 1e-14));
            f *= n as f64;
        }
        let half = gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!(close(half, Complex64::new(PI.sqrt(), 0.0), 1e-14));
        let neg = gamma(Complex64::new(-0.5, 0.0)).unwrap();
        assert!(close(neg, Complex64::new(-2.0 * PI.sqrt(), 0.0), 1e-14));
    }

    #[test]
    fn agrees_with_libm_on_the_real_line() {
        for i in 1..400 {
            let x = -7.3 + 0.05 * i as f64;
            if (x - libm::round(x)).abs() < 1e-6 && libm::round(x) <= 0.0 {
                continue;
            }
            let g = gamma(Complex64::new(x, 0.0)).unwrap();
            assert!(close(g, Complex64::new(libm::tgamma(x), 0.0), 1e-12), "x = {x}");
        }
    }

    #[test]
    fn recurrence_off_axis() {
        let z = Complex64::new(0.3, 1.7);
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        assert!(close(lhs, rhs, 1e-13));
        assert!(close(rgamma(z) * gamma(z).unwrap(), Complex64::new(1.0, 0.0), 1e-13));
    }

    #[test]
    fn poles() {
        assert!(gamma(Complex64::new(0.0, 0.0)).is_err());
        assert!(gamma(Complex64::new(-3.0 + 1e-10, 0.0)).is_err());
        assert_eq!(rgamma(Complex64::new(-2.0, 0.0)), Complex64::zero());
        assert!(is_nonpositive_integer(&int(-4)));
        assert!(!is_nonpositive_integer(&rat(-1, 2)));
        assert!(!is_nonpositive_integer(&int(1)));
    }

    #[test]
    fn exact_phases() {
        assert_eq!(sin_pi_rational(&int(7)), 0.0);
        assert_eq!(exp_i_pi_rational(&rat(1, 2)), Complex64::new(0.0, 1.0));
        assert!((sin_pi_rational(&rat(-1, 6)) + 0.5).abs() < 1e-15);
    }
}
