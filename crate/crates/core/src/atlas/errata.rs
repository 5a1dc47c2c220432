//! Printed rows checked against the matrix path.

use serde::Serialize;

use super::catalog::{case_by_sub, ClusterCase};
use super::printed::{printed_rows, ComponentKind, PrintedRow};
use crate::bloch::{u_vector, v_vector};
use crate::physicality::{inequality1, inequality2};
use crate::state::ParamVector;

/// Slot values used for every probe; no zeros and no repeated magnitudes.
pub const PROBE_VALUES: [f64; 3] = [-0.2, 0.1, 0.25];

/// `mismatch` iff the discrepancy exceeds this.
pub const ERRATA_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrataEntry {
    pub table: &'static str,
    pub row: &'static str,
    /// `ineq1 ref8`, `ineq2 this_work`, `u3^2`, `F1`, ...
    pub quantity: String,
    pub printed_expression: &'static str,
    /// Largest `|printed - normative|` over all member cases and probe points.
    pub discrepancy: f64,
    pub verdict: Verdict,
}

impl ErrataEntry {
    fn new(row: &PrintedRow, quantity: String, printed: &'static str, discrepancy: f64) -> Self {
        Self {
            table: row.table,
            row: row.row,
            quantity,
            printed_expression: printed,
            discrepancy,
            verdict: if discrepancy > ERRATA_TOL {
                Verdict::Mismatch
            } else {
                Verdict::Match
            },
        }
    }
}

/// All probe points for a case of the given arity.
pub fn probe_points(arity: usize) -> Vec<Vec<f64>> {
    let mut points = vec![Vec::new()];
    for _ in 0..arity {
        points = points
            .into_iter()
            .flat_map(|p| {
                PROBE_VALUES.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    points
}

struct Normative {
    lhs1: f64,
    lhs2: f64,
    u: [f64; 3],
    big_f: [f64; 3],
}

fn normative(p: &ParamVector) -> Normative {
    let ok = "probe points are finite";
    let v = v_vector(p).expect(ok).squares;
    Normative {
        lhs1: inequality1(p).expect(ok).lhs_direct,
        lhs2: inequality2(p).expect(ok).lhs_direct,
        u: u_vector(p).expect(ok).squares,
        big_f: [(v[0] + v[2]) / 18.0, v[1] / 9.0, (v[0] - v[2]) / 18.0],
    }
}

fn probes(row: &PrintedRow) -> Vec<(Vec<f64>, Normative)> {
    let cases: Vec<ClusterCase> = row
        .members
        .iter()
        .map(|m| case_by_sub(m).expect("printed members are catalogued"))
        .collect();
    cases
        .iter()
        .flat_map(|case| {
            probe_points(case.arity()).into_iter().map(move |slots| {
                let p = case.instantiate(&slots).expect("arity matches");
                (slots, normative(&p))
            })
        })
        .collect()
}

fn max_discrepancy<F>(probes: &[(Vec<f64>, Normative)], f: F) -> f64
where
    F: Fn(&[f64], &Normative) -> f64,
{
    probes
        .iter()
        .map(|(slots, n)| f(slots, n).abs())
        .fold(0.0, f64::max)
}

fn row_entries(row: &PrintedRow) -> Vec<ErrataEntry> {
    let probes = probes(row);
    let mut out = Vec::new();
    for form in &row.inequality {
        let d = max_discrepancy(&probes, |s, n| {
            let normative = if form.inequality_index == 1 {
                n.lhs1
            } else {
                n.lhs2
            };
            form.to_unit_scale(form.eval(s)) - normative
        });
        let quantity = format!(
            "ineq{} {}",
            form.inequality_index,
            form.normalization.name()
        );
        out.push(ErrataEntry::new(row, quantity, form.lhs.text, d));
    }
    if let Some(comp) = &row.components {
        for (i, formula) in comp.forms.iter().enumerate() {
            let d = max_discrepancy(&probes, |s, n| {
                let normative = match comp.kind {
                    ComponentKind::USquares => n.u[i],
                    ComponentKind::BigF => n.big_f[i],
                };
                formula.eval(s) - normative
            });
            out.push(ErrataEntry::new(
                row,
                comp.kind.quantity(i),
                formula.text,
                d,
            ));
        }
    }
    out
}

/// One entry per printed inequality and component formula, in table order.
pub fn errata_report() -> Vec<ErrataEntry> {
    printed_rows().iter().flat_map(row_entries).collect()
}

/// Textual anomalies that are not formula discrepancies.
pub fn errata_notes() -> Vec<&'static str> {
    vec![
        "Table 5.3 is headed \"1st inequality\" but its rows define F functions of the cubic inequality; they are checked as such.",
        "Table 5.2b row \"(beta1,beta2)\" repeats the values of the \"(a,beta2),(b,beta2),(alpha1,beta2)\" row.",
        "Table 5.2b row \"(a,beta2),(b,beta2),alpha1,beta2\" is missing a parenthesis and is read as three pairs.",
    ]
}
