use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hc::commands::{cmd_diagrams, cmd_integrate, cmd_series, convergence_csv, DiagramsCmd, Outcome};
use hc::config::{parse_permutation, RawFlags, RunConfig};
use hc::parallel::{init_pool, threads_from_env};
use hc::verify::{self, Suite};

/// Diagrams, asymptotic series and cycle integrals for the A_n hypergeometric system.
#[derive(Parser, Debug)]
#[command(name = "hc", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Flags {
    /// Rank n (the Weyl group is S_(n+1)); for `diagrams`, the number of rows.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Coupling constant, e.g. 3/2.
    #[arg(long, global = true)]
    k: Option<String>,
    /// Spectral parameter, n+1 comma-separated rationals summing to zero.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Weyl group element: `all`, `id`, `w0` or images such as 2,3,1.
    #[arg(long, global = true)]
    w: Option<String>,
    /// Series depth (maximal height of an offset).
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Quadrature points per axis.
    #[arg(long, global = true)]
    points: Option<usize>,
    /// Bump height of the loops.
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    /// Seed for the randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of stdout (`.csv` selects the convergence trace for `integrate`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate diagrams and check the generating-function identities.
    Diagrams {
        #[arg(value_enum)]
        what: DiagramsWhat,
        /// Number of rows (same as --n).
        rows: Option<usize>,
        /// Count the elements above this permutation (`order`).
        #[arg(long)]
        count_geq: Option<String>,
        /// Count the elements below this permutation (`order`).
        #[arg(long)]
        count_leq: Option<String>,
        /// Weakly increasing top row for `gz`, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Coefficient table of the asymptotic series at `w lambda + rho`.
    Series,
    /// Integrate the form over the cycle of `w`.
    Integrate {
        /// Arguments z_1 < ... < z_(n+1), positive reals.
        #[arg(long)]
        z: Option<String>,
        /// Use z = (r^n, ..., r, 1).
        #[arg(long)]
        ratio: Option<f64>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DiagramsWhat {
    Enumerate,
    Poincare,
    Multiparam,
    Order,
    Gz,
}

/// Failure classes, mapped to exit codes 2 (usage) and 1 (everything else).
enum Failure {
    Usage(anyhow::Error),
    Run(anyhow::Error),
}

fn usage<T>(r: Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

fn raw(f: &Flags) -> RawFlags {
    RawFlags {
        n: f.n,
        k: f.k.clone(),
        lambda: f.lambda.clone(),
        w: f.w.clone(),
        depth: f.depth,
        points: f.points,
        epsilon: f.epsilon,
        seed: f.seed,
        out: f.out.clone(),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| anyhow!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&PathBuf>, o: &Outcome) -> Result<bool> {
    let mut s = serde_json::to_string_pretty(&o.json)?;
    s.push('\n');
    emit(out, &s)?;
    Ok(o.ok)
}

fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(|x| x.trim().parse::<f64>().map_err(|_| anyhow!("not a number: {x:?}"))).collect()
}

fn run(cli: Cli) -> Result<bool, Failure> {
    usage(threads_from_env().and_then(init_pool))?;
    let flags = raw(&cli.flags);
    match cli.command {
        Command::Diagrams { what, rows, count_geq, count_leq, weight } => {
            let rows = match (rows, flags.n) {
                (Some(r), _) | (None, Some(r)) => r,
                (None, None) => return Err(Failure::Usage(anyhow!("diagrams: give the number of rows"))),
            };
            let perm = |s: &Option<String>| s.as_deref().map(|x| parse_permutation(x, rows)).transpose();
            let cmd = match what {
                DiagramsWhat::Enumerate => DiagramsCmd::Enumerate,
                DiagramsWhat::Poincare => DiagramsCmd::Poincare,
                DiagramsWhat::Multiparam => DiagramsCmd::Multiparam,
                DiagramsWhat::Order => {
                    DiagramsCmd::Order { count_geq: usage(perm(&count_geq))?, count_leq: usage(perm(&count_leq))? }
                }
                DiagramsWhat::Gz => {
                    let w = usage(perm(&flags.w))?.unwrap_or_else(|| hc_core::diagrams::Permutation::identity(rows));
                    let m: Vec<i64> = match &weight {
                        Some(s) => usage(
                            s.split(',')
                                .map(|x| x.trim().parse::<i64>().map_err(|_| anyhow!("--weight: not an integer: {x:?}")))
                                .collect(),
                        )?,
                        None => (0..rows as i64).collect(),
                    };
                    DiagramsCmd::Gz { w, m }
                }
            };
            let o = usage(cmd_diagrams(rows, &cmd))?;
            emit_json(flags.out.as_ref(), &o).map_err(Failure::Run)
        }
        Command::Series => {
            let cfg = usage(RunConfig::from_flags(&flags))?;
            let o = cmd_series(&cfg).map_err(Failure::Run)?;
            emit_json(cfg.out.as_ref(), &o).map_err(Failure::Run)
        }
        Command::Integrate { z, ratio } => {
            let cfg = usage(RunConfig::from_flags(&flags))?;
            let z = usage(z.as_deref().map(parse_floats).transpose())?;
            if cfg.out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "csv")) {
                let r = ratio.unwrap_or(1e-1);
                let ratios: Vec<f64> = (0..4).map(|i| r * 0.1f64.powi(i)).collect();
                let csv = convergence_csv(&cfg, &ratios).map_err(Failure::Run)?;
                emit(cfg.out.as_ref(), &csv).map_err(Failure::Run)?;
                return Ok(true);
            }
            let o = cmd_integrate(&cfg, z, ratio).map_err(Failure::Run)?;
            emit_json(cfg.out.as_ref(), &o).map_err(Failure::Run)
        }
        Command::Verify { suite } => {
            let suites = Suite::parse(&suite).ok_or_else(|| {
                Failure::Usage(anyhow!("unknown suite {suite:?}; expected combinatorics, series, integrals, identities or all"))
            })?;
            let seed = flags.seed.unwrap_or(hc::config::DEFAULT_SEED);
            let report = verify::run(&suites, seed);
            print!("{}", report.render());
            if let Some(p) = &flags.out {
                let mut s = serde_json::to_string_pretty(&report).map_err(|e| Failure::Run(e.into()))?;
                s.push('\n');
                emit(Some(p), &s).map_err(Failure::Run)?;
            }
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
