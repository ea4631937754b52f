//! Validated run configuration shared by all commands.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Result};
use hc_core::cycles::{QuadratureSpec, Scheme};
use hc_core::diagrams::Permutation;
use hc_core::harish_chandra::SpectralParam;
use hc_core::rational::{parse_rational, rat, Literal};
use hc_core::root_system::Weight;
use hc_core::Rational;

/// Which Weyl group elements a command runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WSelect {
    All,
    List(Vec<Permutation>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub k: Rational,
    pub lambda: Weight,
    pub w: WSelect,
    pub depth: usize,
    pub quadrature: QuadratureSpec,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

/// Raw flag values as typed on the command line.
#[derive(Debug, Clone, Default)]
pub struct RawFlags {
    pub n: Option<usize>,
    pub k: Option<String>,
    pub lambda: Option<String>,
    pub w: Option<String>,
    pub depth: Option<usize>,
    pub points: Option<usize>,
    pub epsilon: Option<f64>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_DEPTH: usize = 4;
pub const MAX_RANK: usize = 6;

const DEFAULT_K: (i64, i64) = (3, 2);
/// First coordinates of the default spectral parameter; the last one balances the sum.
const DEFAULT_LAMBDA_HEAD: [(i64, i64); MAX_RANK] = [(3, 10), (1, 7), (2, 13), (5, 17), (4, 19), (6, 23)];

/// `(3/10, -3/10)` in rank one; generic in every rank up to [`MAX_RANK`].
pub fn default_lambda(n: usize) -> Weight {
    let mut v: Vec<Rational> = DEFAULT_LAMBDA_HEAD[..n].iter().map(|&(p, q)| rat(p, q)).collect();
    let s: Rational = v.iter().sum();
    v.push(-s);
    Weight(v)
}

/// Parses a rational flag, warning on stderr when it was written as a decimal.
pub fn parse_exact(flag: &str, s: &str) -> Result<Rational> {
    let (r, lit) = parse_rational(s).map_err(|e| anyhow!("--{flag}: {e}"))?;
    if lit == Literal::Decimal {
        eprintln!("warning: --{flag} {s} read as a decimal and converted exactly to {r}; prefer p/q");
    }
    Ok(r)
}

pub fn parse_list(flag: &str, s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| parse_exact(flag, x)).collect()
}

/// `all`, `id`, `w0`, or comma-separated images such as `2,3,1`.
pub fn parse_w(s: &str, rank: usize) -> Result<WSelect> {
    Ok(match s.trim() {
        "all" => WSelect::All,
        _ => WSelect::List(vec![parse_permutation(s, rank)?]),
    })
}

pub fn parse_permutation(s: &str, rank: usize) -> Result<Permutation> {
    match s.trim() {
        "id" => Ok(Permutation::identity(rank)),
        "w0" => Ok(Permutation::longest(rank)),
        other => {
            let images = other
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| anyhow!("--w: not a permutation: {other:?}")))
                .collect::<Result<Vec<_>>>()?;
            if images.len() != rank {
                bail!("--w: expected {rank} images, got {}", images.len());
            }
            Permutation::new(images).map_err(|e| anyhow!("--w: {e}"))
        }
    }
}

impl RunConfig {
    pub fn from_flags(f: &RawFlags) -> Result<Self> {
        let k = match &f.k {
            Some(s) => parse_exact("k", s)?,
            None => rat(DEFAULT_K.0, DEFAULT_K.1),
        };
        let lambda = f.lambda.as_deref().map(|s| parse_list("lambda", s)).transpose()?;
        let n = match (f.n, &lambda) {
            (Some(n), Some(l)) if l.len() != n + 1 => {
                bail!("--lambda has {} coordinates but --n {n} needs {}", l.len(), n + 1)
            }
            (Some(n), _) => n,
            (None, Some(l)) => l.len().saturating_sub(1),
            (None, None) => 1,
        };
        if n == 0 || n > MAX_RANK {
            bail!("--n must lie in 1..={MAX_RANK}");
        }
        let lambda = lambda.map(Weight).unwrap_or_else(|| default_lambda(n));
        if !lambda.is_sum_zero() {
            bail!("--lambda: coordinates must sum to zero (got {})", lambda.sum());
        }
        let w = match &f.w {
            Some(s) => parse_w(s, n + 1)?,
            None => WSelect::List(vec![Permutation::identity(n + 1)]),
        };
        let mut quadrature = QuadratureSpec::default_for(&k);
        if let Some(p) = f.points {
            quadrature.points = p;
        }
        if let Some(e) = f.epsilon {
            quadrature.epsilon = e;
        }
        quadrature.validate().map_err(|e| anyhow!("{e}"))?;
        Ok(RunConfig {
            n,
            k,
            lambda,
            w,
            depth: f.depth.unwrap_or(DEFAULT_DEPTH),
            quadrature,
            out: f.out.clone(),
            seed: f.seed.unwrap_or(DEFAULT_SEED),
        })
    }

    pub fn spectral_param(&self) -> Result<SpectralParam> {
        SpectralParam::new(self.lambda.clone(), self.k.clone()).map_err(|e| anyhow!("{e}"))
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        match &self.w {
            WSelect::All => Permutation::all(self.n + 1).collect(),
            WSelect::List(v) => v.clone(),
        }
    }
}

pub fn scheme_name(s: Scheme) -> &'static str {
    match s {
        Scheme::GaussLegendre => "gauss-legendre",
        Scheme::TanhSinh => "tanh-sinh",
    }
}
