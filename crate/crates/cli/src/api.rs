//! Response bodies shared by the command line and the HTTP service.

use serde::{Deserialize, Serialize};

use qutrit_bloch::atlas::errata::{ErrataEntry, ERRATA_TOL, PROBE_VALUES};
use qutrit_bloch::atlas::printed::printed_rows;
use qutrit_bloch::atlas::{
    cases_of, errata_notes, errata_report, find_case, scan_region, AxisRange, ClusterCase,
    ClusterId, RegionGrid, ScanSpec,
};
use qutrit_bloch::scene::SCHEMA_VERSION;
use qutrit_bloch::{
    evaluate, sample, Execution, ParamVector, SampleMethod, SamplerConfig, SceneDocument,
};

pub fn schema_version() -> String {
    SCHEMA_VERSION.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClusterEntry {
    pub id: ClusterId,
    pub cases: Vec<ClusterCase>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Grouping {
    pub label: &'static str,
    pub members: Vec<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClustersResponse {
    pub schema_version: String,
    pub clusters: Vec<ClusterEntry>,
    pub four_variable_cases: Vec<ClusterCase>,
    /// Sub-groupings of cluster VI as printed alongside its component forms.
    pub vi_groupings: Vec<Grouping>,
}

pub fn clusters_response() -> ClustersResponse {
    ClustersResponse {
        schema_version: schema_version(),
        clusters: ClusterId::TWO_VARIABLE
            .into_iter()
            .map(|id| ClusterEntry {
                id,
                cases: cases_of(id),
            })
            .collect(),
        four_variable_cases: cases_of(ClusterId::FourVariable),
        vi_groupings: printed_rows()
            .into_iter()
            .filter(|r| r.table == "5.2b" && r.components.is_some())
            .map(|r| Grouping {
                label: r.row,
                members: r.members,
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrataResponse {
    pub schema_version: String,
    pub tolerance: f64,
    pub probe_values: [f64; 3],
    pub entries: Vec<ErrataEntry>,
    pub notes: Vec<&'static str>,
}

pub fn errata_response() -> ErrataResponse {
    ErrataResponse {
        schema_version: schema_version(),
        tolerance: ERRATA_TOL,
        probe_values: PROBE_VALUES,
        entries: errata_report(),
        notes: errata_notes(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleRecord {
    pub params: ParamVector,
    pub scene: SceneDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleResponse {
    pub schema_version: String,
    pub method: SampleMethod,
    pub seed: u64,
    pub count: usize,
    pub records: Vec<SampleRecord>,
}

pub fn sample_response(config: &SamplerConfig) -> qutrit_bloch::Result<SampleResponse> {
    let records = sample(config)?
        .into_iter()
        .map(|params| {
            Ok(SampleRecord {
                params,
                scene: evaluate(&params)?,
            })
        })
        .collect::<qutrit_bloch::Result<_>>()?;
    Ok(SampleResponse {
        schema_version: schema_version(),
        method: config.method,
        seed: config.seed,
        count: config.count,
        records,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanRequest {
    pub cluster: String,
    #[serde(default)]
    pub sub: Option<String>,
    pub min: f64,
    pub max: f64,
    pub step: f64,
    /// `p`, `q` slot values for four-variable cases.
    #[serde(default)]
    pub fixed: Vec<f64>,
}

impl ScanRequest {
    pub fn resolve(&self) -> qutrit_bloch::Result<(ClusterCase, ScanSpec)> {
        let cluster: ClusterId = self.cluster.parse()?;
        let case = find_case(cluster, self.sub.as_deref())?;
        let axis = AxisRange::new(self.min, self.max, self.step)?;
        Ok((
            case,
            ScanSpec {
                s: axis,
                t: axis,
                fixed: self.fixed.clone(),
            },
        ))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanResponse {
    pub schema_version: String,
    #[serde(flatten)]
    pub grid: RegionGrid,
}

pub fn scan_response(
    case: &ClusterCase,
    spec: &ScanSpec,
    mode: Execution,
) -> qutrit_bloch::Result<ScanResponse> {
    Ok(ScanResponse {
        schema_version: schema_version(),
        grid: scan_region(case, spec, mode)?,
    })
}
