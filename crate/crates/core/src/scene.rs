//! The self-contained evaluation document shared by the CLI and the service.

use serde::{Deserialize, Serialize};

use crate::bloch::{bloch_triple, BlochVector};
use crate::error::Result;
use crate::physicality::{physicality_report, PHYSICALITY_TOL};
use crate::state::ParamVector;

pub const SCHEMA_VERSION: &str = "1";
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
/// Tolerance for [`SceneDocument::revalidate`].
pub const REVALIDATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InvariantsBlock {
    pub lhs1: f64,
    pub lhs2: f64,
    pub purity: f64,
    pub eigenvalues: [f64; 3],
    pub e2: f64,
    pub e3: f64,
    pub physical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SceneVector {
    pub squares: [f64; 3],
    pub length: f64,
    pub negative_components: [bool; 3],
}

impl From<BlochVector> for SceneVector {
    fn from(v: BlochVector) -> Self {
        Self {
            squares: v.squares,
            length: v.length,
            negative_components: v.negative_components,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SceneBloch {
    pub u: SceneVector,
    pub v: SceneVector,
    pub w: SceneVector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneMeta {
    pub tolerance: f64,
    pub artifact_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneDocument {
    pub schema_version: String,
    pub params: ParamVector,
    pub invariants_block: InvariantsBlock,
    pub bloch: SceneBloch,
    pub meta: SceneMeta,
}

pub fn evaluate(params: &ParamVector) -> Result<SceneDocument> {
    let report = physicality_report(params)?;
    let triple = bloch_triple(params)?;
    Ok(SceneDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        params: *params,
        invariants_block: InvariantsBlock {
            lhs1: report.ineq1.lhs_direct,
            lhs2: report.ineq2.lhs_direct,
            purity: report.purity,
            eigenvalues: report.eigenvalues,
            e2: report.coeffs.e2,
            e3: report.coeffs.e3,
            physical: report.physical,
        },
        bloch: SceneBloch {
            u: triple.u.into(),
            v: triple.v.into(),
            w: triple.w.into(),
        },
        meta: SceneMeta {
            tolerance: PHYSICALITY_TOL,
            artifact_version: ARTIFACT_VERSION.to_string(),
        },
    })
}

fn numbers(doc: &SceneDocument) -> Vec<f64> {
    let inv = &doc.invariants_block;
    let mut out = vec![inv.lhs1, inv.lhs2, inv.purity, inv.e2, inv.e3];
    out.extend(inv.eigenvalues);
    for v in [&doc.bloch.u, &doc.bloch.v, &doc.bloch.w] {
        out.extend(v.squares);
        out.push(v.length);
    }
    out
}

impl SceneDocument {
    /// Largest numeric drift from a fresh evaluation of `params`, or `None`
    /// when a flag or label differs.
    pub fn drift(&self) -> Result<Option<f64>> {
        let fresh = evaluate(&self.params)?;
        let flags_agree = fresh.invariants_block.physical == self.invariants_block.physical
            && fresh.bloch.u.negative_components == self.bloch.u.negative_components
            && fresh.bloch.v.negative_components == self.bloch.v.negative_components
            && fresh.bloch.w.negative_components == self.bloch.w.negative_components
            && fresh.schema_version == self.schema_version;
        if !flags_agree {
            return Ok(None);
        }
        Ok(Some(
            numbers(&fresh)
                .into_iter()
                .zip(numbers(self))
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        ))
    }

    pub fn revalidate(&self) -> Result<bool> {
        Ok(matches!(self.drift()?, Some(d) if d <= REVALIDATE_TOL))
    }
}
