//! Thread pool sizing and the parallel quadrature driver.

use anyhow::{anyhow, bail, Result};
use hc_core::cycles::{factors, integrate_outer, CyclePath, QuadratureSpec, Rule};
use hc_core::harish_chandra::SpectralParam;
use hc_core::rational::to_f64;
use hc_core::Complex64;
use rayon::prelude::*;

pub const THREADS_ENV: &str = "HC_THREADS";

/// Reads `HC_THREADS`; `None` leaves rayon's default in place.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => bail!("{THREADS_ENV} must be a positive integer, got {s:?}"),
        },
    }
}

pub fn init_pool(threads: Option<usize>) -> Result<()> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| anyhow!("cannot size thread pool: {e}"))?;
    }
    Ok(())
}

/// Same value as [`hc_core::cycles::integrate`], bit for bit: slabs are evaluated in
/// parallel and summed sequentially in node order.
pub fn integrate_parallel(c: &CyclePath, sp: &SpectralParam, spec: &QuadratureSpec) -> Result<Complex64> {
    let k = to_f64(&sp.k);
    if !(k > 0.0) {
        bail!("coupling k out of domain: need k > 0, got {k}");
    }
    let rule = Rule::new(spec, k).map_err(|e| anyhow!("{e}"))?;
    let fs = factors(c, sp);
    let slabs: Vec<hc_core::Result<Complex64>> =
        (0..rule.len()).into_par_iter().map(|outer| integrate_outer(c, &fs, &rule, outer)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for s in slabs {
        total += s.map_err(|e| anyhow!("{e}"))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hc_core::cycles::integrate;
    use hc_core::diagrams::Permutation;
    use hc_core::rational::rat;
    use hc_core::root_system::Weight;

    #[test]
    fn parallel_sum_is_bit_identical() {
        let sp = SpectralParam::new(Weight(vec![rat(3, 10), rat(1, 7), rat(-31, 70)]), rat(5, 4)).unwrap();
        let spec = QuadratureSpec { points: 16, ..QuadratureSpec::default_for(&sp.k) };
        let z = [0.01, 0.1, 1.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let c = CyclePath::new(&Permutation::longest(3), z, spec.epsilon).unwrap();
        let a = integrate(&c, &sp, &spec).unwrap();
        let b = integrate_parallel(&c, &sp, &spec).unwrap();
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }
}
