//! Grid sweeps over the parameter square or the restricted angle triangle,
//! evaluating both curvature routes at every admissible point.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::consts::{DEFAULT_SLACK, DEFAULT_TOL, IDENTITY_TOL};
use crate::error::{Error, Result};
use crate::harmonic::solve_zero_point;
use crate::params::ScherkParams;
use crate::scalar::{derivative_inequality_at, solve_zero};
use crate::weierstrass::{in_band, wk_scalar};

pub const CSV_HEADER: [&str; 12] = [
    "p",
    "q",
    "A",
    "B",
    "admissible",
    "U",
    "S",
    "margin",
    "wk_scalar",
    "wk_geometric",
    "route_gap",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum SweepMode {
    /// `A_i = i/grid`, `B_j = j/grid`, `1 ≤ i, j ≤ grid`.
    #[value(name = "AB", alias = "ab")]
    Ab,
    /// `p = (π/2) i/grid`, `q = p + (π/2) j/grid`.
    #[value(name = "pq")]
    Pq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    NotAdmissible,
    NoSignChange,
    NonConvergence,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::NotAdmissible => "not_admissible",
            Self::NoSignChange => "no_sign_change",
            Self::NonConvergence => "non_convergence",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: f64,
    pub q: f64,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub admissible: bool,
    #[serde(rename = "U")]
    pub u: Option<f64>,
    #[serde(rename = "S")]
    pub s: Option<f64>,
    pub margin: Option<f64>,
    pub wk_scalar: Option<f64>,
    pub wk_geometric: Option<f64>,
    pub route_gap: Option<f64>,
    /// `|(A+B) master_lhs − S|`; not written to CSV.
    #[serde(skip)]
    pub master_gap: Option<f64>,
    pub status: RowStatus,
}

impl SweepRow {
    pub fn record(&self) -> Vec<String> {
        let f = |x: f64| format!("{x:.16e}");
        let o = |x: Option<f64>| x.map(f).unwrap_or_default();
        vec![
            f(self.p),
            f(self.q),
            f(self.a),
            f(self.b),
            self.admissible.to_string(),
            o(self.u),
            o(self.s),
            o(self.margin),
            o(self.wk_scalar),
            o(self.wk_geometric),
            o(self.route_gap),
            self.status.as_str().to_string(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub grid: usize,
    pub mode: SweepMode,
    /// Scalar root tolerance.
    pub tol: f64,
    /// Harmonic-measure tolerance for the zero point.
    pub point_tol: f64,
}

impl SweepConfig {
    pub fn new(grid: usize, mode: SweepMode) -> Self {
        Self {
            grid,
            mode,
            tol: DEFAULT_TOL,
            point_tol: IDENTITY_TOL,
        }
    }
}

/// Evaluates one parameter pair in the restricted-angle convention.
pub fn evaluate(params: &ScherkParams, cfg: &SweepConfig) -> SweepRow {
    let angles = params.angles.expect("sweep parameters carry angles");
    let mut row = SweepRow {
        p: angles.p,
        q: angles.q,
        a: params.a,
        b: params.b,
        admissible: params.interval().nonempty,
        u: None,
        s: None,
        margin: None,
        wk_scalar: None,
        wk_geometric: None,
        route_gap: None,
        master_gap: None,
        status: RowStatus::NotAdmissible,
    };
    if !row.admissible {
        return row;
    }
    let zero = match solve_zero(params, cfg.tol) {
        Ok(z) => z,
        Err(Error::NoSignChange { .. }) => {
            row.status = RowStatus::NoSignChange;
            return row;
        }
        Err(Error::NotAdmissible { .. }) => return row,
        Err(_) => {
            row.status = RowStatus::NonConvergence;
            return row;
        }
    };
    let scalar = wk_scalar(params, zero.s).map(|w| w.value).ok();
    row.u = Some(zero.u);
    row.s = Some(zero.s);
    row.margin = Some(derivative_inequality_at(params, &zero, DEFAULT_SLACK).margin);
    row.wk_scalar = scalar;
    match solve_zero_point(params, &zero, cfg.point_tol) {
        Ok(sol) => {
            row.wk_geometric = Some(sol.wk);
            row.route_gap = scalar.map(|s| (s - sol.wk).abs());
            row.master_gap = Some(((params.a + params.b) * sol.master_lhs - zero.s).abs());
            row.status = RowStatus::Ok;
        }
        Err(_) => row.status = RowStatus::NonConvergence,
    }
    row
}

/// Parameter pairs in row-major order.
pub fn grid_points(cfg: &SweepConfig) -> Result<Vec<ScherkParams>> {
    if cfg.grid < 2 {
        return Err(Error::Domain(format!("grid must be at least 2, got {}", cfg.grid)));
    }
    let g = cfg.grid as f64;
    let mut out = Vec::with_capacity(cfg.grid * cfg.grid);
    for i in 1..=cfg.grid {
        for j in 1..=cfg.grid {
            let (a, b) = match cfg.mode {
                SweepMode::Ab => (i as f64 / g, j as f64 / g),
                SweepMode::Pq => {
                    let p = FRAC_PI_2 * i as f64 / g;
                    let d = FRAC_PI_2 * j as f64 / g;
                    (p.sin().min(1.0), d.sin().min(1.0))
                }
            };
            out.push(ScherkParams::from_ab(a, b)?.with_restricted_angles());
        }
    }
    Ok(out)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    let points = grid_points(cfg)?;
    Ok(points.par_iter().map(|p| evaluate(p, cfg)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub ok: usize,
    pub not_admissible: usize,
    pub no_sign_change: usize,
    pub non_convergence: usize,
    pub min_wk: Option<f64>,
    pub max_wk: Option<f64>,
    pub max_route_gap: Option<f64>,
    pub out_of_band: usize,
}

pub fn summarize(rows: &[SweepRow]) -> SweepSummary {
    let mut s = SweepSummary {
        rows: rows.len(),
        ..SweepSummary::default()
    };
    let max = |acc: Option<f64>, x: f64| Some(acc.map_or(x, |a| a.max(x)));
    for row in rows {
        match row.status {
            RowStatus::Ok => s.ok += 1,
            RowStatus::NotAdmissible => s.not_admissible += 1,
            RowStatus::NoSignChange => s.no_sign_change += 1,
            RowStatus::NonConvergence => s.non_convergence += 1,
        }
        if row.status != RowStatus::Ok {
            continue;
        }
        if let Some(w) = row.wk_scalar {
            s.min_wk = Some(s.min_wk.map_or(w, |m| m.min(w)));
            s.max_wk = max(s.max_wk, w);
            if !in_band(w, DEFAULT_SLACK) {
                s.out_of_band += 1;
            }
        }
        if let Some(g) = row.route_gap {
            s.max_route_gap = max(s.max_route_gap, g);
        }
    }
    s
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let o = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.12}"));
        write!(
            f,
            "rows={} ok={} not_admissible={} no_sign_change={} non_convergence={} min_wk={} max_wk={} max_route_gap={} out_of_band={}",
            self.rows,
            self.ok,
            self.not_admissible,
            self.no_sign_change,
            self.non_convergence,
            o(self.min_wk),
            o(self.max_wk),
            self.max_route_gap.map_or("n/a".to_string(), |v| format!("{v:.3e}")),
            self.out_of_band,
        )
    }
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()
}

/// Writes the CSV through a temporary file in the target directory and
/// renames it into place, so a failed run leaves no partial file.
pub fn write_csv_atomic(rows: &[SweepRow], path: &Path) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    write_csv(rows, &mut tmp)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
