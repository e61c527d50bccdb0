//! Command implementations behind the `holtsmark` binary: point evaluation,
//! table generation, and the truncation-order figure datasets.

use holtsmark_core::{
    eval, s_asymptotic_truncated, s_auto, s_series_truncated, EvalError, Function, MethodId,
    SeriesControl,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::{self, Write};

/// One grid point of output. Serialization keeps 17 significant digits so a
/// re-parse reproduces the in-memory doubles bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub beta: f64,
    pub value: f64,
    pub method: String,
    pub err_estimate: f64,
    pub terms_used: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Errors split by exit class: usage errors exit 2 (like argument-parse
/// failures), evaluator errors exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Eval(EvalError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Eval(e) => write!(f, "evaluation error: {e}"),
        }
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Eval(e)
    }
}

/// Series/quadrature tolerances derived from the optional --tol flag.
fn controls(tol: Option<f64>) -> (SeriesControl, f64) {
    let ctl = match tol {
        Some(t) if t > 0.0 && t < 1.0 => SeriesControl { rel_tol: t, ..Default::default() },
        _ => SeriesControl::default(),
    };
    let quad_tol = tol.unwrap_or(1e-10).max(1e-12);
    (ctl, quad_tol)
}

/// Evaluate one point.
pub fn cmd_eval(
    function: Function,
    method: MethodId,
    beta: f64,
    tol: Option<f64>,
) -> Result<OutputRecord, CliError> {
    let (ctl, quad_tol) = controls(tol);
    let r = eval(function, method, beta, &ctl, quad_tol)?;
    Ok(OutputRecord {
        beta,
        value: r.value,
        method: r.method.as_str().to_owned(),
        err_estimate: r.err_estimate,
        terms_used: r.terms_used,
    })
}

/// Evaluate a monotone grid from..=to in steps of `step`.
pub fn cmd_table(
    function: Function,
    method: MethodId,
    from: f64,
    to: f64,
    step: f64,
    tol: Option<f64>,
) -> Result<Vec<OutputRecord>, CliError> {
    let n = grid_len(from, to, step)?;
    (0..n)
        .map(|i| cmd_eval(function, method, from + i as f64 * step, tol))
        .collect()
}

fn grid_len(from: f64, to: f64, step: f64) -> Result<u64, CliError> {
    // step.is_nan() falls through the first comparison into the error path
    if step <= 0.0 || step.is_nan() || !from.is_finite() || !to.is_finite() || to < from {
        return Err(CliError::Usage(
            "grid requires finite from <= to and a positive step".into(),
        ));
    }
    let n = ((to - from) / step + 0.5).floor() as u64 + 1;
    if n > 10_000_000 {
        return Err(CliError::Usage("grid has more than 1e7 points".into()));
    }
    Ok(n)
}

/// Which expansion a figure dataset truncates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    /// Small-argument Taylor series (order = retained terms n = 0..order-1).
    Small,
    /// Large-argument asymptotic expansion (order = retained terms n = 1..order).
    Large,
}

impl FigureKind {
    /// Default grid matching the published curves.
    pub fn default_range(self) -> (f64, f64, f64) {
        match self {
            FigureKind::Small => (0.0, 5.0, 0.05),
            FigureKind::Large => (2.0, 8.0, 0.1),
        }
    }
}

/// A multi-column dataset: β, the truncated expansion at each requested
/// order, and the exact S for reference.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// Build the truncation-order dataset behind the series figures.
pub fn cmd_figure(
    which: FigureKind,
    orders: &[u32],
    from: f64,
    to: f64,
    step: f64,
) -> Result<FigureData, CliError> {
    if orders.is_empty() {
        return Err(CliError::Usage("at least one order is required".into()));
    }
    if orders.contains(&0) {
        return Err(CliError::Usage("orders must be positive".into()));
    }
    let n = grid_len(from, to, step)?;
    let mut columns = vec!["beta".to_owned()];
    columns.extend(orders.iter().map(|o| format!("order_{o}")));
    columns.push("exact".to_owned());
    let mut rows = Vec::with_capacity(n as usize);
    for i in 0..n {
        let beta = from + i as f64 * step;
        let mut row = Vec::with_capacity(orders.len() + 2);
        row.push(beta);
        for &order in orders {
            let r = match which {
                FigureKind::Small => s_series_truncated(beta, order)?,
                FigureKind::Large => s_asymptotic_truncated(beta, order)?,
            };
            row.push(r.value);
        }
        row.push(s_auto(beta)?.value);
        rows.push(row);
    }
    Ok(FigureData { columns, rows })
}

/// 17 significant digits: enough for bit-exact f64 round trips.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_records<W: Write>(
    out: &mut W,
    records: &[OutputRecord],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "beta,value,method,err_estimate,terms_used")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    fmt_f64(r.beta),
                    fmt_f64(r.value),
                    r.method,
                    fmt_f64(r.err_estimate),
                    r.terms_used
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn write_figure<W: Write>(out: &mut W, data: &FigureData, format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", data.columns.join(","))?;
            for row in &data.rows {
                let fields: Vec<String> = row.iter().map(|&x| fmt_f64(x)).collect();
                writeln!(out, "{}", fields.join(","))?;
            }
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = data
                .rows
                .iter()
                .map(|row| {
                    data.columns
                        .iter()
                        .zip(row)
                        .map(|(c, &v)| (c.clone(), serde_json::json!(v)))
                        .collect::<serde_json::Map<_, _>>()
                        .into()
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &objects)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_round_trips_doubles() {
        for x in [0.1, core::f64::consts::PI, 2.873527514521644e-1, 1.0 / 3.0, 1e-300] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn grid_len_counts_inclusive() {
        assert_eq!(grid_len(0.0, 5.0, 0.5).unwrap(), 11);
        assert_eq!(grid_len(0.0, 4.0, 0.05).unwrap(), 81);
        assert!(grid_len(0.0, -1.0, 0.5).is_err());
        assert!(grid_len(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn figure_rejects_bad_orders() {
        assert!(matches!(
            cmd_figure(FigureKind::Small, &[], 0.0, 1.0, 0.5),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            cmd_figure(FigureKind::Small, &[0, 4], 0.0, 1.0, 0.5),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn eval_error_classifies_as_eval() {
        let r = cmd_eval(Function::S, MethodId::Series, -1.0, None);
        assert!(matches!(r, Err(CliError::Eval(EvalError::Domain(_)))));
    }
}
