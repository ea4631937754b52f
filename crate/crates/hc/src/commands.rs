//! `diagrams`, `series` and `integrate`.

use anyhow::{anyhow, bail, Result};
use hc_core::closed_forms::{a_w, relative_error};
use hc_core::cycles::{k1_closed_form, z_power, CyclePath, QuadratureSpec};
use hc_core::diagrams::{
    diagram_of, gz_pattern, gz_weight, length, multiparam_sum, partial_leq, permutation_of, poincare,
    Diagram, MultiQPolynomial, OrderCounts, Permutation,
};
use hc_core::harish_chandra::{exponent, freudenthal_table, phi_eval, residual_l};
use hc_core::Complex64;
use num_traits::One;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::json::{diagram_json, gz_json, rational_string, CoeffTableJson, ComplexJson, SpecJson};
use crate::parallel::integrate_parallel;

/// Machine output plus whether every embedded check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn pass(json: Value) -> Self {
        Outcome { json, ok: true }
    }
}

pub const ENUMERATE_LIMIT: usize = 7;
pub const POINCARE_LIMIT: usize = 8;
pub const MULTIPARAM_LIMIT: usize = 6;
pub const ORDER_LIMIT: usize = 5;
pub const GZ_LIMIT: usize = 6;
/// Largest tensor grid `integrate` will evaluate (both resolutions together).
pub const GRID_LIMIT: u128 = 1 << 29;

fn check_bound(what: &str, r: usize, limit: usize) -> Result<()> {
    if r == 0 || r > limit {
        bail!("diagrams {what}: rows must lie in 1..={limit} (exhaustive enumeration limit)");
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramsCmd {
    Enumerate,
    Poincare,
    Multiparam,
    Order { count_geq: Option<Permutation>, count_leq: Option<Permutation> },
    Gz { w: Permutation, m: Vec<i64> },
}

fn multi_json(p: &MultiQPolynomial) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!({"exponents": e, "coeff": c})).collect())
}

pub fn cmd_diagrams(rows: usize, cmd: &DiagramsCmd) -> Result<Outcome> {
    match cmd {
        DiagramsCmd::Enumerate => {
            check_bound("enumerate", rows, ENUMERATE_LIMIT)?;
            let records: Vec<Value> = Diagram::all(rows)
                .map(|d| {
                    json!({
                        "diagram": diagram_json(&d),
                        "w": permutation_of(&d).images(),
                        "length": length(&d),
                    })
                })
                .collect();
            Ok(Outcome::pass(Value::Array(records)))
        }
        DiagramsCmd::Poincare => {
            check_bound("poincare", rows, POINCARE_LIMIT)?;
            let p = poincare(rows);
            let equal = p.holds();
            Ok(Outcome {
                json: json!({"sum": p.sum.coeffs(), "product": p.product.coeffs(), "equal": equal}),
                ok: equal,
            })
        }
        DiagramsCmd::Multiparam => {
            check_bound("multiparam", rows, MULTIPARAM_LIMIT)?;
            let m = multiparam_sum(rows);
            let equal = m.holds();
            Ok(Outcome {
                json: json!({"sum": multi_json(&m.sum), "product": multi_json(&m.product), "equal": equal}),
                ok: equal,
            })
        }
        DiagramsCmd::Order { count_geq, count_leq } => {
            check_bound("order", rows, ORDER_LIMIT)?;
            if count_geq.is_some() || count_leq.is_some() {
                let mut out = serde_json::Map::new();
                if let Some(w) = count_geq {
                    let c = OrderCounts::closed_form(w);
                    out.insert("w".into(), json!(w.images()));
                    out.insert("count_geq".into(), json!(c.count_geq));
                    out.insert("qpoly_geq".into(), json!(c.qpoly_geq.coeffs()));
                }
                if let Some(w) = count_leq {
                    let c = OrderCounts::closed_form(w);
                    out.insert("w_leq".into(), json!(w.images()));
                    out.insert("count_leq".into(), json!(c.count_leq));
                    out.insert("qpoly_leq".into(), json!(c.qpoly_leq.coeffs()));
                }
                return Ok(Outcome::pass(Value::Object(out)));
            }
            order_table(rows)
        }
        DiagramsCmd::Gz { w, m } => {
            check_bound("gz", w.rank(), GZ_LIMIT)?;
            let p = gz_pattern(w, m).map_err(|e| anyhow!("{e}"))?;
            let between = p.is_between();
            Ok(Outcome {
                json: json!({
                    "w": w.images(),
                    "diagram": diagram_json(&diagram_of(w)),
                    "m": m,
                    "pattern": gz_json(&p),
                    "weight": gz_weight(&p),
                    "between": between,
                }),
                ok: between,
            })
        }
    }
}

/// Counts for every element, checked against enumeration, and the covering pairs.
fn order_table(rows: usize) -> Result<Outcome> {
    let all: Vec<Permutation> = Permutation::all(rows).collect();
    let n = all.len();
    let mut leq = vec![vec![false; n]; n];
    for (a, u) in all.iter().enumerate() {
        for (b, v) in all.iter().enumerate() {
            leq[a][b] = partial_leq(u, v).map_err(|e| anyhow!("{e}"))?;
        }
    }
    let mut ok = true;
    let mut elements = Vec::with_capacity(n);
    for w in &all {
        let c = OrderCounts::closed_form(w);
        let agrees = c == OrderCounts::enumerate(w);
        ok &= agrees;
        elements.push(json!({
            "w": w.images(),
            "length": w.inversions(),
            "count_geq": c.count_geq,
            "count_leq": c.count_leq,
            "qpoly_geq": c.qpoly_geq.coeffs(),
            "qpoly_leq": c.qpoly_leq.coeffs(),
            "enumeration_agrees": agrees,
        }));
    }
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !leq[a][b] {
                continue;
            }
            let between = (0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
            if !between {
                covers.push(json!([all[a].images(), all[b].images()]));
            }
        }
    }
    Ok(Outcome { json: json!({"elements": elements, "covers": covers}), ok })
}

pub fn cmd_series(cfg: &RunConfig) -> Result<Outcome> {
    let sp = cfg.spectral_param()?;
    let mut out = Vec::new();
    let mut ok = true;
    for w in cfg.permutations() {
        let mu = exponent(&w, &sp).map_err(|e| anyhow!("{e}"))?;
        let table = freudenthal_table(&mu, &sp, cfg.depth).map_err(|e| anyhow!("{e}"))?;
        let residual = residual_l(&table);
        ok &= num_traits::Zero::is_zero(&residual);
        out.push(json!({
            "w": w.images(),
            "table": CoeffTableJson::from(&table),
            "eigenvalue": rational_string(&table.eigenvalue()),
            "residual": rational_string(&residual),
        }));
    }
    Ok(Outcome { json: single_or_array(out), ok })
}

fn single_or_array(mut v: Vec<Value>) -> Value {
    if v.len() == 1 {
        v.pop().unwrap()
    } else {
        Value::Array(v)
    }
}

/// `(r^n, ..., r, 1)`.
pub fn geometric_z(n: usize, ratio: f64) -> Vec<Complex64> {
    (0..=n).map(|i| Complex64::new(ratio.powi((n - i) as i32), 0.0)).collect()
}

pub const DEFAULT_RATIO: f64 = 1e-3;
pub const K1_TOLERANCE: f64 = 1e-9;
/// Depth of the series used to predict the integral beyond its leading term.
pub const PREDICTION_DEPTH: usize = 12;

fn check_grid(spec: &QuadratureSpec, dim: usize) -> Result<()> {
    let nodes = (spec.points as u128).pow(dim as u32) * (1 + (1u128 << dim));
    if nodes > GRID_LIMIT {
        bail!(
            "integrate: {} points per axis over {dim} loop variables is beyond the desk-scale grid limit; lower --points",
            spec.points
        );
    }
    Ok(())
}

pub fn cmd_integrate(cfg: &RunConfig, z: Option<Vec<f64>>, ratio: Option<f64>) -> Result<Outcome> {
    let sp = cfg.spectral_param()?;
    let n = cfg.n;
    let z: Vec<Complex64> = match z {
        Some(v) => {
            if v.len() != n + 1 {
                bail!("--z needs {} values", n + 1);
            }
            v.into_iter().map(|x| Complex64::new(x, 0.0)).collect()
        }
        None => geometric_z(n, ratio.unwrap_or(DEFAULT_RATIO)),
    };
    let spec = cfg.quadrature;
    check_grid(&spec, n * (n + 1) / 2)?;
    let fine_spec = QuadratureSpec { points: 2 * spec.points, ..spec };

    let mut out = Vec::new();
    let mut ok = true;
    for w in cfg.permutations() {
        let c = CyclePath::new(&w, z.clone(), spec.epsilon).map_err(|e| anyhow!("{e}"))?;
        let integral = integrate_parallel(&c, &sp, &spec)?;
        let fine = integrate_parallel(&c, &sp, &fine_spec)?;
        let mu = exponent(&w, &sp).map_err(|e| anyhow!("{e}"))?;
        let zmu = z_power(&z, &mu);
        let mut record = json!({
            "w": w.images(),
            "z": z.iter().map(|x| x.re).collect::<Vec<_>>(),
            "lambda": sp.lambda.coords().iter().map(rational_string).collect::<Vec<_>>(),
            "k": rational_string(&sp.k),
            "integral": ComplexJson::from(integral),
            "spec": SpecJson::from(&spec),
            "convergence": [
                {"points": spec.points, "integral": ComplexJson::from(integral)},
                {"points": fine_spec.points, "integral": ComplexJson::from(fine)},
            ],
            "self_convergence": relative_error(integral, fine),
        });
        if let Ok(a) = a_w(&w, &sp) {
            record["prediction"] = json!({
                "a_w": ComplexJson::from(a),
                "leading": ComplexJson::from(a * zmu),
            });
            record["deviation"] = json!(relative_error(integral / zmu, a));
            if let Ok(table) = freudenthal_table(&mu, &sp, PREDICTION_DEPTH) {
                if let Ok(phi) = phi_eval(&table, &z) {
                    record["prediction"]["series"] = json!(ComplexJson::from(a * phi));
                    record["series_deviation"] = json!(relative_error(integral, a * phi));
                }
            }
        }
        if sp.k.is_one() {
            let want = k1_closed_form(&c, &sp).map_err(|e| anyhow!("{e}"))?;
            let err = relative_error(integral, want);
            let pass = err < K1_TOLERANCE;
            ok &= pass;
            record["checks"] = json!([format!(
                "k=1 closed-form check: {} (relative error {err:.2e})",
                if pass { "pass" } else { "fail" }
            )]);
        }
        out.push(record);
    }
    Ok(Outcome { json: single_or_array(out), ok })
}

/// CSV rows `w,ratio,re,im,deviation` tracing `integral / z^(w lambda + rho)` towards `a(w)`.
pub fn convergence_csv(cfg: &RunConfig, ratios: &[f64]) -> Result<String> {
    let sp = cfg.spectral_param()?;
    let mut csv = String::from("w,ratio,re,im,deviation\n");
    for w in cfg.permutations() {
        let a = a_w(&w, &sp).map_err(|e| anyhow!("{e}"))?;
        let mu = exponent(&w, &sp).map_err(|e| anyhow!("{e}"))?;
        let label: Vec<String> = w.images().iter().map(|i| i.to_string()).collect();
        for &r in ratios {
            let z = geometric_z(cfg.n, r);
            let c = CyclePath::new(&w, z.clone(), cfg.quadrature.epsilon).map_err(|e| anyhow!("{e}"))?;
            let v = integrate_parallel(&c, &sp, &cfg.quadrature)? / z_power(&z, &mu);
            csv.push_str(&format!(
                "{},{r:e},{:.15e},{:.15e},{:.6e}\n",
                label.join(" "),
                v.re,
                v.im,
                relative_error(v, a)
            ));
        }
    }
    Ok(csv)
}
