//! Trace inequalities, characteristic coefficients and eigenvalues.
//!
//! For a unit-trace Hermitian 3x3 matrix with elementary symmetric functions
//! `e2` (sum of pairwise eigenvalue products) and `e3 = det`, the two
//! inequality left-hand sides are `1 - 3 e2` and `1 - 27 e3`, so the pair of
//! inequalities holds exactly when the matrix is positive semidefinite.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::bloch::aggregates;
use crate::error::{Error, MatrixCheck, Result};
use crate::state::{
    build_rho, build_t, power_traces, Complex, HermitianMatrix3, ParamVector, INPUT_TOL,
};

/// Boundary tolerance shared by the inequality, coefficient and eigenvalue tests.
pub const PHYSICALITY_TOL: f64 = 1e-10;

/// Relative tolerance for the closed-form cross-check of each inequality LHS.
pub const CLOSED_FORM_TOL: f64 = 1e-10;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT6: f64 = 2.449_489_742_783_178;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityResult {
    pub lhs_direct: f64,
    pub lhs_closed: f64,
    pub holds: bool,
    /// `1 - lhs_direct`
    pub margin: f64,
    /// False when the closed form drifts from the matrix path.
    pub closed_form_consistent: bool,
}

impl InequalityResult {
    fn new(lhs_direct: f64, lhs_closed: f64) -> Self {
        let scale = 1.0f64.max(lhs_direct.abs());
        Self {
            lhs_direct,
            lhs_closed,
            holds: lhs_direct <= 1.0 + PHYSICALITY_TOL,
            margin: 1.0 - lhs_direct,
            closed_form_consistent: (lhs_direct - lhs_closed).abs() <= CLOSED_FORM_TOL * scale,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CharCoeffs {
    pub e2: f64,
    pub e3: f64,
}

impl CharCoeffs {
    pub fn nonnegative(&self) -> bool {
        self.e2 >= -PHYSICALITY_TOL && self.e3 >= -PHYSICALITY_TOL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalityReport {
    pub ineq1: InequalityResult,
    pub ineq2: InequalityResult,
    pub coeffs: CharCoeffs,
    /// Descending.
    pub eigenvalues: [f64; 3],
    pub physical: bool,
    /// `Tr rho^2`
    pub purity: f64,
}

/// Purity inequality `(3/2) Tr t^2 <= 1`.
pub fn inequality1(params: &ParamVector) -> Result<InequalityResult> {
    let (trace2, _) = power_traces(&build_t(params)?);
    Ok(InequalityResult::new(1.5 * trace2, lhs1_closed(params)?))
}

/// Cubic inequality `9 Tr(t^2 / 2 - t^3) <= 1`, i.e. `3 Tr rho^2 - 2 Tr rho^3 <= 1`.
pub fn inequality2(params: &ParamVector) -> Result<InequalityResult> {
    let (trace2, trace3) = power_traces(&build_t(params)?);
    Ok(InequalityResult::new(
        9.0 * (trace2 / 2.0 - trace3),
        lhs2_closed(params)?,
    ))
}

/// `3[(x^2 + y^2)/2 + A^2 + B^2]`
pub fn lhs1_closed(params: &ParamVector) -> Result<f64> {
    let agg = aggregates(params)?;
    let ParamVector { x, y, .. } = *params;
    Ok(3.0 * ((x * x + y * y) / 2.0 + agg.a2 + agg.b2))
}

/// Total closed form of the cubic inequality LHS in the original parameters.
pub fn lhs2_closed(params: &ParamVector) -> Result<f64> {
    let agg = aggregates(params)?;
    let ParamVector { x, y, .. } = *params;
    Ok(9.0
        * ((x * x + y * y) / 2.0
            + y * (y * y - 3.0 * x * x) / SQRT6
            + (1.0 + (1.5f64).sqrt() * y) * agg.a2
            + (1.0 - SQRT6 * y) * agg.b2
            - 3.0 * SQRT2 * x * agg.c2
            - 3.0 * agg.d3))
}

/// `e2` from principal 2x2 minors and `e3` by cofactor expansion.
pub fn char_coeffs(rho: &HermitianMatrix3) -> Result<CharCoeffs> {
    let trace = rho.trace();
    if (trace - 1.0).abs() > INPUT_TOL {
        return Err(Error::InvalidMatrix(MatrixCheck::TraceNotUnit { trace }));
    }
    let [d0, d1, d2] = rho.diag();
    let e2 = d0 * d1 - rho.entry(0, 1).norm_sqr() + d0 * d2 - rho.entry(0, 2).norm_sqr() + d1 * d2
        - rho.entry(1, 2).norm_sqr();
    Ok(CharCoeffs { e2, e3: rho.det() })
}

/// Eigenvalues of a Hermitian 3x3 matrix, sorted descending.
///
/// The trigonometric solution of the depressed characteristic cubic locates
/// all three roots. A root that is part of a (near) double pair is only
/// determined to about `sqrt(eps)` that way, so the spectrum is then refined:
/// the isolated root's eigenvector is found from a cross product of two rows
/// of `m - lambda I`, its Rayleigh quotient replaces the root, and the other
/// two come from the 2x2 compression onto the orthogonal complement.
pub fn eigenvalues3(m: &HermitianMatrix3) -> [f64; 3] {
    let shift = m.trace() / 3.0;
    let b = m.shifted(-shift);
    let p = b.frobenius_sq() / 2.0;
    if p <= 1e-30 {
        return [shift; 3];
    }
    let q = b.det();
    let arg = (q / 2.0 * (3.0 / p).powf(1.5)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let radius = 2.0 * (p / 3.0).sqrt();
    let trig = [0.0, 1.0, 2.0].map(|k| radius * (phi - 2.0 * PI * k / 3.0).cos());

    let mut out = refine(&b, trig, radius).unwrap_or(trig);
    out.sort_by(|a, b| b.total_cmp(a));
    out.map(|l| l + shift)
}

type Vec3 = [Complex; 3];

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm_sq(v: &Vec3) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn scaled(v: &Vec3, s: f64) -> Vec3 {
    v.map(|z| z * s)
}

/// `a^H m b`
fn sandwich(a: &Vec3, m: &HermitianMatrix3, b: &Vec3) -> Complex {
    a.iter()
        .zip(m.rows())
        .map(|(aj, row)| aj.conj() * row.iter().zip(b).map(|(x, y)| x * y).sum::<Complex>())
        .sum()
}

fn refine(b: &HermitianMatrix3, trig: [f64; 3], radius: f64) -> Option<[f64; 3]> {
    // trig is descending; the isolated root sits at whichever end has the larger gap.
    let isolated = if trig[0] - trig[1] >= trig[1] - trig[2] {
        0
    } else {
        2
    };
    let lambda = trig[isolated];
    let shifted = b.shifted(-lambda);
    let rows = shifted.rows();
    let candidates = [
        cross(&rows[0], &rows[1]),
        cross(&rows[0], &rows[2]),
        cross(&rows[1], &rows[2]),
    ];
    let best = candidates
        .into_iter()
        .max_by(|a, b| norm_sq(a).total_cmp(&norm_sq(b)))?;
    let best_norm = norm_sq(&best).sqrt();
    if best_norm.is_nan() || best_norm <= 1e-12 * radius * radius {
        return None;
    }
    let v = scaled(&best, 1.0 / best_norm);

    // Orthonormal completion from the basis vector least aligned with v.
    let k = (0..3).min_by(|&i, &j| v[i].norm().total_cmp(&v[j].norm()))?;
    let overlap = v[k].conj();
    let mut e2: Vec3 = v.map(|z| -overlap * z);
    e2[k] += Complex::new(1.0, 0.0);
    let n2 = norm_sq(&e2).sqrt();
    let e2 = scaled(&e2, 1.0 / n2);
    let e3_raw = cross(&v.map(|z| z.conj()), &e2.map(|z| z.conj()));
    let e3 = scaled(&e3_raw, 1.0 / norm_sq(&e3_raw).sqrt());

    let top = sandwich(&v, b, &v).re;
    let h11 = sandwich(&e2, b, &e2).re;
    let h22 = sandwich(&e3, b, &e3).re;
    let h12 = sandwich(&e2, b, &e3);
    let mean = (h11 + h22) / 2.0;
    let half_gap = ((h11 - h22) / 2.0).hypot(h12.norm());
    Some([top, mean + half_gap, mean - half_gap])
}

/// Physical iff both characteristic coefficients are nonnegative within [`PHYSICALITY_TOL`].
pub fn is_physical(params: &ParamVector) -> Result<bool> {
    Ok(char_coeffs(&build_rho(params)?)?.nonnegative())
}

pub fn physicality_report(params: &ParamVector) -> Result<PhysicalityReport> {
    let rho = build_rho(params)?;
    let (trace2, _) = power_traces(&build_t(params)?);
    let coeffs = char_coeffs(&rho)?;
    Ok(PhysicalityReport {
        ineq1: inequality1(params)?,
        ineq2: inequality2(params)?,
        coeffs,
        eigenvalues: eigenvalues3(&rho),
        physical: coeffs.nonnegative(),
        purity: 1.0 / 3.0 + trace2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{extract_params, Param};
    use approx::assert_abs_diff_eq;

    fn pure_basis() -> ParamVector {
        ParamVector {
            x: 1.0 / SQRT2,
            y: 1.0 / SQRT6,
            ..Default::default()
        }
    }

    fn xy() -> ParamVector {
        ParamVector {
            x: 0.2,
            y: 0.3,
            ..Default::default()
        }
    }

    fn diag_unphysical() -> ParamVector {
        extract_params(&HermitianMatrix3::from_diagonal([0.7, 0.5, -0.2])).unwrap()
    }

    #[test]
    fn inequality1_examples() {
        let r = inequality1(&ParamVector::zero()).unwrap();
        assert_eq!((r.lhs_direct, r.holds), (0.0, true));

        let r = inequality1(&pure_basis()).unwrap();
        assert_abs_diff_eq!(r.lhs_direct, 1.0, epsilon = 1e-15);
        assert!(r.holds);

        let r = inequality1(&xy()).unwrap();
        assert_abs_diff_eq!(r.lhs_direct, 0.195, epsilon = 1e-15);
        assert_abs_diff_eq!(r.lhs_closed, 0.195, epsilon = 1e-15);
        assert_abs_diff_eq!(r.margin, 0.805, epsilon = 1e-15);
        assert!(r.closed_form_consistent);
    }

    #[test]
    fn inequality2_examples() {
        let r = inequality2(&ParamVector::zero()).unwrap();
        assert_eq!((r.lhs_direct, r.holds), (0.0, true));

        let r = inequality2(&pure_basis()).unwrap();
        assert_abs_diff_eq!(r.lhs_direct, 1.0, epsilon = 1e-14);

        let r = inequality2(&diag_unphysical()).unwrap();
        assert_abs_diff_eq!(r.lhs_direct, 2.89, epsilon = 1e-13);
        assert_abs_diff_eq!(r.lhs_closed, 2.89, epsilon = 1e-13);
        assert!(!r.holds);
    }

    #[test]
    fn char_coeff_examples() {
        let c = char_coeffs(&HermitianMatrix3::from_diagonal([1.0 / 3.0; 3])).unwrap();
        assert_abs_diff_eq!(c.e2, 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.e3, 1.0 / 27.0, epsilon = 1e-15);

        let c = char_coeffs(&HermitianMatrix3::from_diagonal([1.0, 0.0, 0.0])).unwrap();
        assert_eq!((c.e2, c.e3), (0.0, 0.0));

        let c = char_coeffs(&HermitianMatrix3::from_diagonal([0.7, 0.5, -0.2])).unwrap();
        assert_abs_diff_eq!(c.e2, 0.11, epsilon = 1e-15);
        assert_abs_diff_eq!(c.e3, -0.07, epsilon = 1e-15);

        assert!(char_coeffs(&HermitianMatrix3::from_diagonal([1.0, 1.0, 0.0])).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let ev = eigenvalues3(&HermitianMatrix3::from_diagonal([
            1.0 / 6.0,
            0.5,
            1.0 / 3.0,
        ]));
        for (l, e) in ev.iter().zip([0.5, 1.0 / 3.0, 1.0 / 6.0]) {
            assert_abs_diff_eq!(*l, e, epsilon = 1e-16);
        }

        let ev = eigenvalues3(&build_rho(&pure_basis()).unwrap());
        assert_abs_diff_eq!(ev[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ev[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ev[2], 0.0, epsilon = 1e-15);

        let ev = eigenvalues3(&build_rho(&xy()).unwrap());
        assert_abs_diff_eq!(ev.iter().sum::<f64>(), 1.0, epsilon = 1e-14);
        let purity: f64 = ev.iter().map(|l| l * l).sum();
        assert_abs_diff_eq!(purity, 1.0 / 3.0 + 0.13, epsilon = 1e-14);
    }

    #[test]
    fn maximally_mixed_short_circuits() {
        let ev = eigenvalues3(&HermitianMatrix3::from_diagonal([1.0 / 3.0; 3]));
        assert_eq!(ev, [1.0 / 3.0; 3]);
    }

    #[test]
    fn degenerate_pair_with_offdiagonal() {
        // rho = |psi><psi| with psi = (1, i, 1)/sqrt(3): spectrum (1, 0, 0).
        let third = 1.0 / 3.0;
        let rho = HermitianMatrix3::from_upper(
            [third; 3],
            [
                Complex::new(0.0, -third),
                Complex::new(third, 0.0),
                Complex::new(0.0, third),
            ],
        );
        let ev = eigenvalues3(&rho);
        assert_abs_diff_eq!(ev[0], 1.0, epsilon = 1e-15);
        assert!(ev[1].abs() < 1e-15 && ev[2].abs() < 1e-15, "{ev:?}");
    }

    #[test]
    fn report_examples() {
        let r = physicality_report(&ParamVector::zero()).unwrap();
        assert!(r.physical);
        assert_abs_diff_eq!(r.purity, 1.0 / 3.0, epsilon = 1e-15);
        assert_eq!(r.eigenvalues, [1.0 / 3.0; 3]);

        let r = physicality_report(&pure_basis()).unwrap();
        assert!(r.physical);
        assert_abs_diff_eq!(r.purity, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.ineq1.lhs_direct, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.ineq2.lhs_direct, 1.0, epsilon = 1e-14);

        let r = physicality_report(&diag_unphysical()).unwrap();
        assert!(r.ineq1.holds);
        assert_abs_diff_eq!(r.ineq1.lhs_direct, 0.67, epsilon = 1e-14);
        assert!(!r.ineq2.holds);
        assert!(!r.physical);
        assert_abs_diff_eq!(r.eigenvalues[2], -0.2, epsilon = 1e-14);
    }

    #[test]
    fn report_rejects_non_finite() {
        assert!(physicality_report(&ParamVector::zero().with(Param::Y, f64::NAN)).is_err());
    }
}
