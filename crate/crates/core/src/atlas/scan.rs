//! 2D region scans over a cluster case.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::catalog::ClusterCase;
use crate::bloch::bloch_triple;
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::physicality::physicality_report;
use crate::state::Param;

/// Upper bound on samples per axis.
pub const MAX_AXIS_SAMPLES: usize = 100_001;
/// Upper bound on cells per scan.
pub const MAX_CELLS: usize = 4_000_000;

pub const CSV_HEADER: &str = "s,t,lhs1,lhs2,physical,u1sq,u2sq,u3sq,v1sq,v2sq,v3sq,w1sq,w2sq,w3sq";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl AxisRange {
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self> {
        let r = Self { min, max, step };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite() && self.step.is_finite()) {
            return Err(Error::InvalidRange("bounds and step must be finite".into()));
        }
        if self.step <= 0.0 {
            return Err(Error::InvalidRange(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        if self.max < self.min {
            return Err(Error::InvalidRange(format!(
                "max {} is below min {}",
                self.max, self.min
            )));
        }
        if (self.max - self.min) / self.step >= MAX_AXIS_SAMPLES as f64 {
            return Err(Error::InvalidRange(format!(
                "more than {MAX_AXIS_SAMPLES} samples per axis"
            )));
        }
        Ok(())
    }

    /// Samples `min + k step` up to `max`, with slack for rounding.
    pub fn count(&self) -> usize {
        ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn value(&self, k: usize) -> f64 {
        self.min + k as f64 * self.step
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSpec {
    pub s: AxisRange,
    pub t: AxisRange,
    /// Values for the `p`, `q` slots of four-variable cases.
    #[serde(default)]
    pub fixed: Vec<f64>,
}

impl ScanSpec {
    pub fn square(min: f64, max: f64, step: f64) -> Result<Self> {
        let axis = AxisRange::new(min, max, step)?;
        Ok(Self {
            s: axis,
            t: axis,
            fixed: Vec::new(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Physical,
    FailsIneq2Only,
    FailsIneq1,
}

impl Verdict {
    fn colour(self) -> &'static str {
        match self {
            Verdict::Physical => "#2b8a3e",
            Verdict::FailsIneq2Only => "#f08c00",
            Verdict::FailsIneq1 => "#c92a2a",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionCell {
    pub s: f64,
    pub t: f64,
    pub lhs1: f64,
    pub lhs2: f64,
    pub physical: bool,
    pub u_sq: [f64; 3],
    pub v_sq: [f64; 3],
    pub w_sq: [f64; 3],
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionGrid {
    pub case: ClusterCase,
    pub spec: ScanSpec,
    pub s_count: usize,
    pub t_count: usize,
    /// s-major, then t.
    pub cells: Vec<RegionCell>,
}

fn cell(case: &ClusterCase, s: f64, t: f64, fixed: &[f64]) -> Result<RegionCell> {
    let mut slots = vec![s, t];
    slots.extend_from_slice(fixed);
    let p = case.instantiate(&slots)?;
    let report = physicality_report(&p)?;
    let triple = bloch_triple(&p)?;
    let verdict = if report.physical {
        Verdict::Physical
    } else if report.ineq1.holds {
        Verdict::FailsIneq2Only
    } else {
        Verdict::FailsIneq1
    };
    Ok(RegionCell {
        s,
        t,
        lhs1: report.ineq1.lhs_direct,
        lhs2: report.ineq2.lhs_direct,
        physical: report.physical,
        u_sq: triple.u.squares,
        v_sq: triple.v.squares,
        w_sq: triple.w.squares,
        verdict,
    })
}

pub fn scan_region(case: &ClusterCase, spec: &ScanSpec, mode: Execution) -> Result<RegionGrid> {
    spec.s.validate()?;
    spec.t.validate()?;
    let extra = case.arity().saturating_sub(2);
    if case.arity() < 2 || spec.fixed.len() != extra {
        return Err(Error::ArityMismatch {
            case: case.to_string(),
            expected: case.arity(),
            got: 2 + spec.fixed.len(),
        });
    }
    if let Some(v) = spec.fixed.iter().find(|v| !v.is_finite()) {
        return Err(Error::InvalidRange(format!(
            "fixed slot value {v} is not finite"
        )));
    }
    let (ns, nt) = (spec.s.count(), spec.t.count());
    if ns.saturating_mul(nt) > MAX_CELLS {
        return Err(Error::InvalidRange(format!("more than {MAX_CELLS} cells")));
    }
    let cells = map_indexed(ns * nt, mode, |i| {
        cell(
            case,
            spec.s.value(i / nt),
            spec.t.value(i % nt),
            &spec.fixed,
        )
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(RegionGrid {
        case: case.clone(),
        spec: spec.clone(),
        s_count: ns,
        t_count: nt,
        cells,
    })
}

impl RegionGrid {
    /// Header line plus one row per cell; floats carry 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 + self.cells.len() * 300);
        out.push_str(CSV_HEADER);
        out.push('\n');
        for c in &self.cells {
            let _ = write!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{}",
                c.s,
                c.t,
                c.lhs1,
                c.lhs2,
                u8::from(c.physical)
            );
            for v in c.u_sq.iter().chain(&c.v_sq).chain(&c.w_sq) {
                let _ = write!(out, ",{v:.16e}");
            }
            out.push('\n');
        }
        out
    }

    /// One rectangle per cell, s to the right and t upwards.
    pub fn to_svg(&self, cell_px: u32) -> String {
        let (w, h) = (self.s_count as u32 * cell_px, self.t_count as u32 * cell_px);
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" shape-rendering=\"crispEdges\">\n"
        );
        let _ = writeln!(out, "<title>{}</title>", self.case);
        for (i, c) in self.cells.iter().enumerate() {
            let (si, ti) = ((i / self.t_count) as u32, (i % self.t_count) as u32);
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{cell_px}\" height=\"{cell_px}\" fill=\"{}\"/>",
                si * cell_px,
                h - (ti + 1) * cell_px,
                c.verdict.colour()
            );
        }
        out.push_str("</svg>\n");
        out
    }

    pub fn slot_params(&self) -> Vec<Param> {
        self.case.slots.iter().map(|s| s.param).collect()
    }
}
