//! Scenarios, figure presets, time-grid runs and CSV output.
//!
//! A scenario is either one of the named presets (`fig1a` .. `fig3c`) or a
//! flat JSON document:
//!
//! ```json
//! {
//!   "preset": "fig1a",
//!   "name": "custom",
//!   "nbar": 16, "k": 2, "delta": 0.0, "stark_r": 0.0, "lambda": 1.0,
//!   "field": "superposition", "r": 0.0,
//!   "t_start": 0.0, "t_end": 4.0, "t_count": 1601,
//!   "columns": ["scaled_t", "S_a", "S_f"]
//! }
//! ```
//!
//! Every key is optional. Missing keys fall back to the `preset` named in
//! the document, or to `fig1a` when none is given. Times are in units of
//! `lambda t / pi`.

use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dressed::ModelParams;
use crate::entropy::{entropy_sample, EntropySample};
use crate::error::{Error, Result};
use crate::evolution::ClosedForm;
use crate::fock::{prepare_truncated, FieldPrep, DEFAULT_TAIL_TOL};
use crate::oracle::Oracle;
use crate::reduced::{atom_reduced, field_reduced, inversion};

pub const PRESETS: [&str; 9] = ["fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c"];

/// Mean photon number used by every figure preset.
pub const PRESET_NBAR: f64 = 16.0;

/// Uniform grid in `lambda t / pi`, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Default for TimeGrid {
    fn default() -> Self {
        TimeGrid { start: 0.0, end: 4.0, count: 1601 }
    }
}

impl TimeGrid {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.start + step * i as f64).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Config("time grid needs at least one point".into()));
        }
        if !(self.start >= 0.0 && self.end >= self.start && self.end.is_finite()) {
            return Err(Error::Config(format!(
                "time grid must satisfy 0 <= start <= end, got {}..{}",
                self.start, self.end
            )));
        }
        Ok(())
    }
}

impl std::str::FromStr for TimeGrid {
    type Err = Error;

    /// Parses `start:end:count`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Config(format!("grid must look like start:end:count, got {s:?}"));
        let [start, end, count] = parts.as_slice() else {
            return Err(bad());
        };
        let grid = TimeGrid {
            start: start.trim().parse().map_err(|_| bad())?,
            end: end.trim().parse().map_err(|_| bad())?,
            count: count.trim().parse().map_err(|_| bad())?,
        };
        grid.validate()?;
        Ok(grid)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Column {
    #[serde(rename = "scaled_t")]
    ScaledT,
    #[serde(rename = "S_a")]
    SA,
    #[serde(rename = "S_f")]
    SF,
    #[serde(rename = "rho_ee")]
    RhoEe,
    #[serde(rename = "inversion")]
    Inversion,
    #[serde(rename = "lambda_plus")]
    LambdaPlus,
    #[serde(rename = "lambda_minus")]
    LambdaMinus,
}

impl Column {
    pub const ALL: [Column; 7] = [
        Column::ScaledT,
        Column::SA,
        Column::SF,
        Column::RhoEe,
        Column::Inversion,
        Column::LambdaPlus,
        Column::LambdaMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::ScaledT => "scaled_t",
            Column::SA => "S_a",
            Column::SF => "S_f",
            Column::RhoEe => "rho_ee",
            Column::Inversion => "inversion",
            Column::LambdaPlus => "lambda_plus",
            Column::LambdaMinus => "lambda_minus",
        }
    }

    fn value(self, row: &SweepRow) -> f64 {
        match self {
            Column::ScaledT => row.sample.scaled_t,
            Column::SA => row.sample.s_a,
            Column::SF => row.sample.s_f,
            Column::RhoEe => row.rho_ee,
            Column::Inversion => row.inversion,
            Column::LambdaPlus => row.sample.lambda_plus,
            Column::LambdaMinus => row.sample.lambda_minus,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams,
    pub prep: FieldPrep,
    /// Initial mean photon number; `alpha = sqrt(nbar)`.
    pub nbar: f64,
    pub grid: TimeGrid,
    pub columns: Vec<Column>,
}

impl Scenario {
    pub fn preset(name: &str) -> Option<Scenario> {
        let (figure, panel) = name.strip_prefix("fig")?.split_at_checked(1)?;
        let stark_r = match figure {
            "1" => 0.0,
            "2" => 0.5,
            "3" => 0.3,
            _ => return None,
        };
        let alpha = PRESET_NBAR.sqrt();
        let prep = match panel {
            "a" => FieldPrep::Superposition { r: 0.0, alpha },
            "b" => FieldPrep::Superposition { r: 1.0, alpha },
            "c" => FieldPrep::Mixture { alpha },
            _ => return None,
        };
        Some(Scenario {
            name: name.to_string(),
            params: ModelParams::new(1.0, 0.0, 2, stark_r).expect("preset parameters are valid"),
            prep,
            nbar: PRESET_NBAR,
            grid: TimeGrid::default(),
            columns: Column::ALL.to_vec(),
        })
    }

    pub fn with_grid(mut self, grid: TimeGrid) -> Self {
        self.grid = grid;
        self
    }

    pub fn prepared(&self) -> Result<ClosedForm> {
        let field = prepare_truncated(self.prep, self.params.k, DEFAULT_TAIL_TOL)?;
        Ok(ClosedForm::new(self.params, &field))
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    preset: Option<String>,
    name: Option<String>,
    nbar: Option<f64>,
    k: Option<usize>,
    delta: Option<f64>,
    stark_r: Option<f64>,
    lambda: Option<f64>,
    omega: Option<f64>,
    omega0: Option<f64>,
    field: Option<FieldKind>,
    r: Option<f64>,
    t_start: Option<f64>,
    t_end: Option<f64>,
    t_count: Option<usize>,
    columns: Option<Vec<Column>>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FieldKind {
    Superposition,
    Mixture,
}

/// Parse a JSON scenario document.
pub fn parse_config(text: &str) -> Result<Scenario> {
    let cfg: ConfigFile = serde_json::from_str(text)?;
    let base_name = cfg.preset.as_deref().unwrap_or("fig1a");
    let base = Scenario::preset(base_name).ok_or_else(|| Error::Config(format!("unknown preset {base_name:?}")))?;

    let nbar = cfg.nbar.unwrap_or(base.nbar);
    if !(nbar >= 0.0 && nbar.is_finite()) {
        return Err(Error::Config(format!("nbar must be a non-negative number, got {nbar}")));
    }
    let alpha = nbar.sqrt();
    let (base_kind, base_r) = match base.prep {
        FieldPrep::Superposition { r, .. } => (FieldKind::Superposition, r),
        FieldPrep::Mixture { .. } => (FieldKind::Mixture, 0.0),
    };
    let prep = match cfg.field.unwrap_or(base_kind) {
        FieldKind::Superposition => {
            let r = cfg.r.unwrap_or(base_r);
            if !(-1.0..=1.0).contains(&r) {
                return Err(Error::Config(format!("r must lie in [-1, 1], got {r}")));
            }
            if r == -1.0 && alpha == 0.0 {
                return Err(Error::Config("the odd cat state of the vacuum does not exist (r = -1, nbar = 0)".into()));
            }
            FieldPrep::Superposition { r, alpha }
        }
        FieldKind::Mixture => {
            if cfg.r.is_some() {
                return Err(Error::Config("r only applies to a superposition field".into()));
            }
            FieldPrep::Mixture { alpha }
        }
    };

    let b = base.params;
    let mut params = ModelParams::new(
        cfg.lambda.unwrap_or(b.lambda),
        cfg.delta.unwrap_or(b.delta),
        cfg.k.unwrap_or(b.k),
        cfg.stark_r.unwrap_or(b.stark_r),
    )
    .map_err(|e| Error::Config(e.to_string()))?;
    match (cfg.omega, cfg.omega0) {
        (None, None) => {}
        (Some(w), Some(w0)) => params = params.with_frequencies(w, w0).map_err(|e| Error::Config(e.to_string()))?,
        _ => return Err(Error::Config("omega and omega0 must be given together".into())),
    }

    let grid = TimeGrid {
        start: cfg.t_start.unwrap_or(base.grid.start),
        end: cfg.t_end.unwrap_or(base.grid.end),
        count: cfg.t_count.unwrap_or(base.grid.count),
    };
    grid.validate()?;

    let columns = cfg.columns.unwrap_or(base.columns);
    if columns.is_empty() {
        return Err(Error::Config("column selection is empty".into()));
    }

    Ok(Scenario {
        name: cfg.name.unwrap_or_else(|| base_name.to_string()),
        params,
        prep,
        nbar,
        grid,
        columns,
    })
}

/// Resolve a preset name, or else read and parse a JSON file.
pub fn load_config(source: &str) -> Result<Scenario> {
    if let Some(s) = Scenario::preset(source) {
        return Ok(s);
    }
    let path = Path::new(source);
    if !path.is_file() {
        return Err(Error::Config(format!("{source:?} is neither a preset ({}) nor a file", PRESETS.join(", "))));
    }
    parse_config(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub with_oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub sample: EntropySample,
    pub rho_ee: f64,
    pub inversion: f64,
    pub oracle: Option<EntropySample>,
}

fn closed_form_row(cf: &ClosedForm, scaled_t: f64) -> Result<SweepRow> {
    let p = cf.params();
    let amps = cf.at(scaled_t * PI / p.lambda);
    let atom = atom_reduced(&amps, p.k)?;
    let field = field_reduced(&amps, p.k)?;
    Ok(SweepRow {
        sample: entropy_sample(scaled_t, &atom, &field)?,
        rho_ee: atom.rho_ee,
        inversion: inversion(&atom),
        oracle: None,
    })
}

/// Evaluate every grid point; rows come back in grid order whatever the
/// thread count.
pub fn run_scenario(s: &Scenario, opts: RunOptions) -> Result<Vec<SweepRow>> {
    let cf = s.prepared()?;
    let oracle = if opts.with_oracle {
        let n_max = cf.n_max() + 2 * s.params.k;
        Some(Oracle::new(&s.params, s.prep, n_max)?)
    } else {
        None
    };
    let points = s.grid.points();
    let work = || -> Result<Vec<SweepRow>> {
        points
            .par_iter()
            .map(|&x| {
                let mut row = closed_form_row(&cf, x)?;
                if let Some(o) = &oracle {
                    row.oracle = Some(o.sample(x)?);
                }
                Ok(row)
            })
            .collect()
    };
    match opts.threads {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {n} worker threads: {e}")))?
            .install(work),
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write rows as CSV: a header, then one line per row with 17 significant
/// digits. Oracle columns `S_a_oracle,S_f_oracle` are appended when the
/// rows carry them.
pub fn write_csv<W: Write>(rows: &[SweepRow], columns: &[Column], mut out: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Domain("no samples to write".into()));
    }
    let with_oracle = rows.iter().all(|r| r.oracle.is_some());
    let mut header: Vec<&str> = columns.iter().map(|c| c.name()).collect();
    if with_oracle {
        header.extend(["S_a_oracle", "S_f_oracle"]);
    }
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        let mut fields: Vec<String> = columns.iter().map(|c| fmt(c.value(row))).collect();
        if let Some(o) = row.oracle.filter(|_| with_oracle) {
            fields.push(fmt(o.s_a));
            fields.push(fmt(o.s_f));
        }
        writeln!(out, "{}", fields.join(","))?;
    }
    out.flush()?;
    Ok(())
}

pub fn emit_csv(rows: &[SweepRow], columns: &[Column], path: impl AsRef<Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_csv(rows, columns, std::io::BufWriter::new(file))
}
