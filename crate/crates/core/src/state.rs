//! Polarization parametrization of a qutrit density matrix.
//!
//! A state is written as `rho = I/3 + t` where the traceless Hermitian part `t`
//! is a fixed linear function of eight real parameters
//! `(x, y, a, b, alpha1, beta1, alpha2, beta2)`. Nothing here checks positivity:
//! unphysical points are ordinary values so that regions can be scanned.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, MatrixCheck, Result};

pub type Complex = Complex64;

/// Row-major 3x3 complex matrix without structural guarantees.
pub type Matrix3 = [[Complex; 3]; 3];

/// Tolerance for accepting a caller-supplied matrix as Hermitian / unit trace.
pub const INPUT_TOL: f64 = 1e-10;

const SQRT2: f64 = std::f64::consts::SQRT_2;
// sqrt(6) to full double precision.
const SQRT6: f64 = 2.449_489_742_783_178;

/// One of the eight polarization parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    X,
    Y,
    A,
    B,
    Alpha1,
    Beta1,
    Alpha2,
    Beta2,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::X,
        Param::Y,
        Param::A,
        Param::B,
        Param::Alpha1,
        Param::Beta1,
        Param::Alpha2,
        Param::Beta2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::X => "x",
            Param::Y => "y",
            Param::A => "a",
            Param::B => "b",
            Param::Alpha1 => "alpha1",
            Param::Beta1 => "beta1",
            Param::Alpha2 => "alpha2",
            Param::Beta2 => "beta2",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The eight real polarization parameters. Missing JSON fields default to zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamVector {
    pub x: f64,
    pub y: f64,
    pub a: f64,
    pub b: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub alpha2: f64,
    pub beta2: f64,
}

impl ParamVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Components in `Param::ALL` order.
    pub fn from_array(v: [f64; 8]) -> Self {
        let [x, y, a, b, alpha1, beta1, alpha2, beta2] = v;
        Self {
            x,
            y,
            a,
            b,
            alpha1,
            beta1,
            alpha2,
            beta2,
        }
    }

    pub fn to_array(&self) -> [f64; 8] {
        [
            self.x,
            self.y,
            self.a,
            self.b,
            self.alpha1,
            self.beta1,
            self.alpha2,
            self.beta2,
        ]
    }

    pub fn get(&self, p: Param) -> f64 {
        self.to_array()[p.index()]
    }

    pub fn set(&mut self, p: Param, value: f64) {
        let mut arr = self.to_array();
        arr[p.index()] = value;
        *self = Self::from_array(arr);
    }

    pub fn with(mut self, p: Param, value: f64) -> Self {
        self.set(p, value);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for p in Param::ALL {
            let value = self.get(p);
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name: p.name(),
                    value,
                });
            }
        }
        Ok(())
    }
}

/// 3x3 complex Hermitian matrix.
///
/// Only the diagonal (real) and the strict upper triangle are taken from the
/// caller; the lower triangle is always the conjugate of the upper one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix3 {
    entries: Matrix3,
}

impl HermitianMatrix3 {
    /// `upper` holds entries (0,1), (0,2), (1,2).
    pub fn from_upper(diag: [f64; 3], upper: [Complex; 3]) -> Self {
        let z = Complex::new(0.0, 0.0);
        let mut entries = [[z; 3]; 3];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i][i] = Complex::new(d, 0.0);
        }
        for ((j, k), v) in [(0, 1), (0, 2), (1, 2)].into_iter().zip(upper) {
            entries[j][k] = v;
            entries[k][j] = v.conj();
        }
        Self { entries }
    }

    /// Accepts a general matrix if it is Hermitian within [`INPUT_TOL`].
    pub fn try_from_rows(rows: Matrix3) -> Result<Self> {
        let finite = rows
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite());
        let deviation = (0..3)
            .flat_map(|j| (0..3).map(move |k| (j, k)))
            .map(|(j, k)| (rows[j][k] - rows[k][j].conj()).norm())
            .fold(if finite { 0.0 } else { f64::NAN }, |acc, d| {
                if acc.is_nan() {
                    acc
                } else {
                    acc.max(d)
                }
            });
        if !deviation.is_finite() || deviation > INPUT_TOL {
            return Err(Error::InvalidMatrix(MatrixCheck::NotHermitian {
                deviation,
            }));
        }
        Ok(Self::from_upper(
            [rows[0][0].re, rows[1][1].re, rows[2][2].re],
            [rows[0][1], rows[0][2], rows[1][2]],
        ))
    }

    pub fn zero() -> Self {
        Self::from_upper([0.0; 3], [Complex::new(0.0, 0.0); 3])
    }

    pub fn from_diagonal(diag: [f64; 3]) -> Self {
        Self::from_upper(diag, [Complex::new(0.0, 0.0); 3])
    }

    /// Zero-based `(row, column)` access.
    pub fn entry(&self, j: usize, k: usize) -> Complex {
        self.entries[j][k]
    }

    pub fn rows(&self) -> &Matrix3 {
        &self.entries
    }

    pub fn diag(&self) -> [f64; 3] {
        [
            self.entries[0][0].re,
            self.entries[1][1].re,
            self.entries[2][2].re,
        ]
    }

    pub fn trace(&self) -> f64 {
        self.diag().iter().sum()
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: f64) -> Self {
        let d = self.diag();
        Self::from_upper(
            [d[0] + shift, d[1] + shift, d[2] + shift],
            [self.entries[0][1], self.entries[0][2], self.entries[1][2]],
        )
    }

    /// Sum of `|m_jk|^2`, which equals `Tr(m^2)` for a Hermitian matrix.
    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    /// General product `self * rhs`.
    pub fn matmul(&self, rhs: &Matrix3) -> Matrix3 {
        matmul(&self.entries, rhs)
    }

    /// `self^2`, Hermitian again.
    pub fn square(&self) -> Self {
        let p = matmul(&self.entries, &self.entries);
        Self::from_upper(
            [p[0][0].re, p[1][1].re, p[2][2].re],
            [p[0][1], p[0][2], p[1][2]],
        )
    }

    /// Determinant by cofactor expansion along the first row; real for Hermitian input.
    pub fn det(&self) -> f64 {
        let m = &self.entries;
        let c0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        let c1 = m[1][0] * m[2][2] - m[1][2] * m[2][0];
        let c2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
        (m[0][0] * c0 - m[0][1] * c1 + m[0][2] * c2).re
    }
}

pub fn matmul(lhs: &Matrix3, rhs: &Matrix3) -> Matrix3 {
    let mut out = [[Complex::new(0.0, 0.0); 3]; 3];
    for (j, row) in out.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).map(|i| lhs[j][i] * rhs[i][k]).sum();
        }
    }
    out
}

/// Abbreviations for the entries of `t`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct DerivedSymbols {
    pub gamma1: f64,
    pub gamma2: f64,
    pub m1: f64,
    pub n1: f64,
    pub m2: f64,
    pub n2: f64,
}

/// Closed-form entries of `t^2`.
///
/// `diagonal` is `(Gamma1, Gamma2, Gamma3)`; `off_re` and `off_im` hold the real
/// and imaginary parts `(X_i, Y_i)` of entries (1,2), (1,3), (2,3).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct TSquaredElements {
    pub diagonal: [f64; 3],
    pub off_re: [f64; 3],
    pub off_im: [f64; 3],
}

/// Real parts of the diagonal of `t^3`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct TCubedDiagonal {
    pub delta_re: [f64; 3],
}

impl TCubedDiagonal {
    pub fn sum(&self) -> f64 {
        self.delta_re.iter().sum()
    }
}

pub fn derived_symbols(params: &ParamVector) -> Result<DerivedSymbols> {
    params.validate()?;
    let p = params;
    Ok(DerivedSymbols {
        gamma1: p.y / SQRT6 + p.x / SQRT2,
        gamma2: p.y / SQRT6 - p.x / SQRT2,
        m1: (p.a + p.alpha1) / SQRT2,
        n1: (p.b + p.beta1) / SQRT2,
        m2: (p.a - p.alpha1) / SQRT2,
        n2: (p.b - p.beta1) / SQRT2,
    })
}

/// Traceless part `t` of the density matrix.
pub fn build_t(params: &ParamVector) -> Result<HermitianMatrix3> {
    let s = derived_symbols(params)?;
    Ok(HermitianMatrix3::from_upper(
        [s.gamma1, -2.0 * params.y / SQRT6, s.gamma2],
        [
            -Complex::new(s.m1, s.n1),
            Complex::new(params.alpha2, params.beta2),
            -Complex::new(s.m2, s.n2),
        ],
    ))
}

/// `rho = I/3 + t`.
pub fn build_rho(params: &ParamVector) -> Result<HermitianMatrix3> {
    Ok(build_t(params)?.shifted(1.0 / 3.0))
}

/// Inverse of [`build_rho`] on unit-trace Hermitian matrices. Positivity is not required.
pub fn extract_params(rho: &HermitianMatrix3) -> Result<ParamVector> {
    let trace = rho.trace();
    if !trace.is_finite() || (trace - 1.0).abs() > INPUT_TOL {
        return Err(Error::InvalidMatrix(MatrixCheck::TraceNotUnit { trace }));
    }
    let third = 1.0 / 3.0;
    let [d1, d2, d3] = rho.diag().map(|d| d - third);
    // Least-squares y over the three diagonal entries; exact when the trace is exactly one.
    let y = SQRT6 / 2.0 * (d1 - 2.0 * d2 + d3) / 3.0;
    let x = (d1 - d3) / SQRT2;

    let r12 = rho.entry(0, 1);
    let r13 = rho.entry(0, 2);
    let r23 = rho.entry(1, 2);
    let (m1, n1) = (-r12.re, -r12.im);
    let (m2, n2) = (-r23.re, -r23.im);
    Ok(ParamVector {
        x,
        y,
        a: (m1 + m2) / SQRT2,
        b: (n1 + n2) / SQRT2,
        alpha1: (m1 - m2) / SQRT2,
        beta1: (n1 - n2) / SQRT2,
        alpha2: r13.re,
        beta2: r13.im,
    })
}

/// `(Tr t^2, Re Tr t^3)` by direct multiplication.
pub fn power_traces(t: &HermitianMatrix3) -> (f64, f64) {
    let t2 = t.matmul(t.rows());
    let t3 = matmul(&t2, t.rows());
    let trace2: f64 = (0..3).map(|i| t2[i][i].re).sum();
    let trace3: Complex = (0..3).map(|i| t3[i][i]).sum();
    debug_assert!(
        trace3.im.abs() <= 1e-12 * (1.0 + trace2).powf(1.5),
        "Tr t^3 has imaginary part {}",
        trace3.im
    );
    (trace2, trace3.re)
}

/// Closed-form entries of `t^2` in terms of the derived symbols.
pub fn t2_closed(sym: &DerivedSymbols, params: &ParamVector) -> TSquaredElements {
    let DerivedSymbols {
        gamma1: g1,
        gamma2: g2,
        m1,
        n1,
        m2,
        n2,
    } = *sym;
    let (al2, be2) = (params.alpha2, params.beta2);
    let b2 = al2 * al2 + be2 * be2;
    let g12 = g1 + g2;
    TSquaredElements {
        diagonal: [
            g1 * g1 + m1 * m1 + n1 * n1 + b2,
            g12 * g12 + m1 * m1 + n1 * n1 + m2 * m2 + n2 * n2,
            g2 * g2 + m2 * m2 + n2 * n2 + b2,
        ],
        off_re: [
            g2 * m1 - (al2 * m2 + be2 * n2),
            g12 * al2 + m1 * m2 - n1 * n2,
            g1 * m2 - al2 * m1 - be2 * n1,
        ],
        off_im: [
            g2 * n1 + al2 * n2 - be2 * m2,
            g12 * be2 + m2 * n1 + m1 * n2,
            g1 * n2 + al2 * n1 - be2 * m1,
        ],
    }
}

/// Real diagonal of `t^3` from the closed `t^2` entries.
pub fn t3_diag_closed(
    sym: &DerivedSymbols,
    params: &ParamVector,
    t2: &TSquaredElements,
) -> TCubedDiagonal {
    let [gam1, gam2, gam3] = t2.diagonal;
    let [x1, x2, x3] = t2.off_re;
    let [y1, y2, y3] = t2.off_im;
    let (al2, be2) = (params.alpha2, params.beta2);
    let first = sym.m1 * x1 + sym.n1 * y1;
    let corner = al2 * x2 + be2 * y2;
    let second = sym.m2 * x3 + sym.n2 * y3;
    TCubedDiagonal {
        delta_re: [
            sym.gamma1 * gam1 - first + corner,
            -(sym.gamma1 + sym.gamma2) * gam2 - first - second,
            sym.gamma2 * gam3 + corner - second,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pure_basis() -> ParamVector {
        ParamVector {
            x: 1.0 / SQRT2,
            y: 1.0 / SQRT6,
            ..Default::default()
        }
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn zero_params_give_zero_t() {
        let t = build_t(&ParamVector::zero()).unwrap();
        assert_eq!(t, HermitianMatrix3::zero());
    }

    #[test]
    fn basis_params_give_projector_shape() {
        let t = build_t(&pure_basis()).unwrap();
        let d = t.diag();
        assert_abs_diff_eq!(d[0], 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d[1], -1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d[2], -1.0 / 3.0, epsilon = 1e-15);
        let rho = build_rho(&pure_basis()).unwrap();
        assert_abs_diff_eq!(rho.diag()[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.diag()[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.diag()[2], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn single_a_fills_both_upper_neighbours() {
        let t = build_t(&ParamVector::zero().with(Param::A, 0.1)).unwrap();
        let expected = -0.1 / SQRT2;
        assert_abs_diff_eq!(t.entry(0, 1).re, expected, epsilon = 1e-15);
        assert_abs_diff_eq!(t.entry(1, 2).re, expected, epsilon = 1e-15);
        assert_eq!(t.entry(0, 1).im, 0.0);
        assert_eq!(t.entry(0, 2), c(0.0, 0.0));
        assert_eq!(t.diag(), [0.0; 3]);
        assert_abs_diff_eq!(expected, -0.070_710_678, epsilon = 1e-9);
    }

    #[test]
    fn rho_diag_for_x_y() {
        let p = ParamVector {
            x: 0.2,
            y: 0.3,
            ..Default::default()
        };
        let rho = build_rho(&p).unwrap();
        assert_abs_diff_eq!(rho.diag()[0], 0.597_229_176_710, epsilon = 1e-11);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-15);
        let t = build_t(&p).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let d = rho.entry(j, k) - t.entry(j, k);
                let expected = if j == k { 1.0 / 3.0 } else { 0.0 };
                assert_abs_diff_eq!(d.re, expected, epsilon = 1e-15);
                assert_eq!(d.im, 0.0);
            }
        }
    }

    #[test]
    fn non_finite_params_are_rejected() {
        let p = ParamVector::zero().with(Param::Beta1, f64::NAN);
        assert!(matches!(
            build_t(&p),
            Err(Error::InvalidParameter { name: "beta1", .. })
        ));
        let p = ParamVector::zero().with(Param::X, f64::INFINITY);
        assert!(build_rho(&p).is_err());
        assert!(derived_symbols(&p).is_err());
    }

    #[test]
    fn derived_symbol_examples() {
        let s = derived_symbols(&pure_basis()).unwrap();
        assert_abs_diff_eq!(s.gamma1, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.gamma2, -1.0 / 3.0, epsilon = 1e-15);

        let p = ParamVector {
            a: 0.3,
            alpha1: 0.1,
            ..Default::default()
        };
        let s = derived_symbols(&p).unwrap();
        assert_abs_diff_eq!(s.m1, 0.282_842_712_5, epsilon = 1e-9);
        assert_abs_diff_eq!(s.m2, 0.141_421_356_2, epsilon = 1e-9);
        assert_eq!((s.n1, s.n2), (0.0, 0.0));
    }

    #[test]
    fn extract_examples() {
        let mixed = HermitianMatrix3::from_diagonal([1.0 / 3.0; 3]);
        assert_eq!(extract_params(&mixed).unwrap(), ParamVector::zero());

        let basis = HermitianMatrix3::from_diagonal([1.0, 0.0, 0.0]);
        let p = extract_params(&basis).unwrap();
        assert_abs_diff_eq!(p.x, 0.5f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.408_248_290_5, epsilon = 1e-9);
        assert_eq!(p.a, 0.0);

        let third = 1.0 / 3.0;
        let rho =
            HermitianMatrix3::from_upper([third; 3], [c(-0.1, -0.2), c(0.0, 0.0), c(0.0, 0.0)]);
        let p = extract_params(&rho).unwrap();
        assert_abs_diff_eq!(p.a, 0.070_710_678_1, epsilon = 1e-9);
        assert_abs_diff_eq!(p.alpha1, 0.070_710_678_1, epsilon = 1e-9);
        assert_abs_diff_eq!(p.b, 0.141_421_356_2, epsilon = 1e-9);
        assert_abs_diff_eq!(p.beta1, 0.141_421_356_2, epsilon = 1e-9);
    }

    #[test]
    fn extract_rejects_bad_matrices() {
        let bad_trace = HermitianMatrix3::from_diagonal([0.5, 0.5, 0.5]);
        assert!(matches!(
            extract_params(&bad_trace),
            Err(Error::InvalidMatrix(MatrixCheck::TraceNotUnit { .. }))
        ));

        let z = c(0.0, 0.0);
        let rows = [
            [c(0.5, 0.0), c(0.1, 0.0), z],
            [c(0.2, 0.0), c(0.5, 0.0), z],
            [z, z, z],
        ];
        assert!(matches!(
            HermitianMatrix3::try_from_rows(rows),
            Err(Error::InvalidMatrix(MatrixCheck::NotHermitian { .. }))
        ));

        let mut rows = [[z; 3]; 3];
        rows[1][1] = c(f64::NAN, 0.0);
        assert!(HermitianMatrix3::try_from_rows(rows).is_err());
    }

    #[test]
    fn try_from_rows_derives_lower_triangle() {
        let rows = [
            [c(0.5, 1e-13), c(0.1, 0.2), c(0.0, -0.1)],
            [c(0.1, -0.2), c(0.25, 0.0), c(0.05, 0.0)],
            [c(0.0, 0.1), c(0.05, 1e-12), c(0.25, 0.0)],
        ];
        let m = HermitianMatrix3::try_from_rows(rows).unwrap();
        assert_eq!(m.entry(0, 0).im, 0.0);
        assert_eq!(m.entry(2, 1), m.entry(1, 2).conj());
    }

    #[test]
    fn power_trace_examples() {
        assert_eq!(power_traces(&HermitianMatrix3::zero()), (0.0, 0.0));
        let (t2, t3) = power_traces(&HermitianMatrix3::from_diagonal([
            2.0 / 3.0,
            -1.0 / 3.0,
            -1.0 / 3.0,
        ]));
        assert_abs_diff_eq!(t2, 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t3, 2.0 / 9.0, epsilon = 1e-15);
        let p = ParamVector {
            x: 0.2,
            y: 0.3,
            ..Default::default()
        };
        let (t2, _) = power_traces(&build_t(&p).unwrap());
        assert_abs_diff_eq!(t2, 0.13, epsilon = 1e-15);
    }

    #[test]
    fn t2_closed_examples() {
        let zero = ParamVector::zero();
        let e = t2_closed(&derived_symbols(&zero).unwrap(), &zero);
        assert_eq!(e, TSquaredElements::default());

        let p = pure_basis();
        let e = t2_closed(&derived_symbols(&p).unwrap(), &p);
        assert_abs_diff_eq!(e.diagonal[0], 4.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.diagonal[1], 1.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(e.diagonal[2], 1.0 / 9.0, epsilon = 1e-15);
        assert!(e.off_re.iter().chain(&e.off_im).all(|v| v.abs() < 1e-15));

        let p = ParamVector::zero().with(Param::A, 0.1);
        let e = t2_closed(&derived_symbols(&p).unwrap(), &p);
        assert_abs_diff_eq!(e.diagonal[1], 0.01, epsilon = 1e-15);
        assert_abs_diff_eq!(e.off_re[1], 0.005, epsilon = 1e-15);
    }

    #[test]
    fn t3_closed_examples() {
        let p = pure_basis();
        let s = derived_symbols(&p).unwrap();
        let d = t3_diag_closed(&s, &p, &t2_closed(&s, &p));
        assert_abs_diff_eq!(d.delta_re[0], 8.0 / 27.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.delta_re[1], -1.0 / 27.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.delta_re[2], -1.0 / 27.0, epsilon = 1e-15);

        let p = ParamVector {
            x: 0.2,
            y: 0.3,
            ..Default::default()
        };
        let s = derived_symbols(&p).unwrap();
        let d = t3_diag_closed(&s, &p, &t2_closed(&s, &p));
        let (_, tr3) = power_traces(&build_t(&p).unwrap());
        assert_abs_diff_eq!(d.sum(), tr3, epsilon = 1e-12);
        // Frozen from an exact symbolic evaluation.
        assert_abs_diff_eq!(d.sum(), 0.003_674_234_614_174_77, epsilon = 1e-15);
    }

    #[test]
    fn det_of_diagonal() {
        let m = HermitianMatrix3::from_diagonal([0.7, 0.5, -0.2]);
        assert_abs_diff_eq!(m.det(), -0.07, epsilon = 1e-15);
    }

    #[test]
    fn param_names_round_trip() {
        for p in Param::ALL {
            assert_eq!(Param::from_name(p.name()), Some(p));
        }
        assert_eq!(Param::from_name("gamma"), None);
    }
}
