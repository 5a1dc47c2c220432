//! The three Bloch-like vectors `u`, `v`, `w`.
//!
//! Each vector is defined through its *squared* components:
//!
//! * `u_i^2 = (3/2) (t^2)_ii`, summing to the purity inequality LHS,
//! * `v_i^2 = 9 ((t^2)_ii / 2 - Re (t^3)_ii)`, summing to the cubic inequality LHS,
//! * `w_i^2 = rho_ii`, summing to one.
//!
//! The squares are computed from explicit matrix powers (the normative path).
//! Closed forms in the original parameters are provided separately and are
//! used as cross-checks. A `v_i^2` may be negative even for a pure state, so
//! squares are stored signed and negativity is flagged rather than clamped.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::state::{build_rho, build_t, matmul, ParamVector};

/// A squared component below `-NEGATIVITY_TOL` is flagged negative.
pub const NEGATIVITY_TOL: f64 = 1e-12;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// Scalar combinations of the parameters used by the closed forms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    /// `a^2 + b^2 + alpha1^2 + beta1^2`
    pub a2: f64,
    /// `alpha2^2 + beta2^2`
    pub b2: f64,
    /// `a alpha1 + b beta1`
    pub c2: f64,
    /// `alpha2 (a^2 - b^2 - alpha1^2 + beta1^2) + 2 beta2 (a b - alpha1 beta1)`
    pub d3: f64,
    pub f1sq: f64,
    pub f2sq: f64,
    pub big_f1: f64,
    pub big_f2: f64,
    pub big_f3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlochLabel {
    U,
    V,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub label: BlochLabel,
    /// Signed squared components.
    pub squares: [f64; 3],
    /// `sqrt(max(0, sum of squares))`.
    pub length: f64,
    pub negative_components: [bool; 3],
}

impl BlochVector {
    pub fn from_squares(label: BlochLabel, squares: [f64; 3]) -> Self {
        let sum: f64 = squares.iter().sum();
        Self {
            label,
            squares,
            length: sum.max(0.0).sqrt(),
            negative_components: squares.map(|s| s < -NEGATIVITY_TOL),
        }
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.squares.iter().sum()
    }

    /// Per-component magnitudes `sqrt(|square|)`; the sign lives in `negative_components`.
    pub fn magnitudes(&self) -> [f64; 3] {
        self.squares.map(|s| s.abs().sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochTriple {
    pub u: BlochVector,
    pub v: BlochVector,
    pub w: BlochVector,
    pub params_echo: ParamVector,
}

pub fn aggregates(params: &ParamVector) -> Result<Aggregates> {
    params.validate()?;
    let ParamVector {
        x,
        y,
        a,
        b,
        alpha1,
        beta1,
        alpha2,
        beta2,
    } = *params;
    let a2 = a * a + b * b + alpha1 * alpha1 + beta1 * beta1;
    let b2 = alpha2 * alpha2 + beta2 * beta2;
    let c2 = a * alpha1 + b * beta1;
    let d3 = alpha2 * (a * a - b * b - alpha1 * alpha1 + beta1 * beta1)
        + 2.0 * beta2 * (a * b - alpha1 * beta1);

    let f1sq = x * x / 2.0 + y * y / 6.0 + a2 / 2.0 + b2;
    let f2sq = x * y / SQRT3 + c2;

    let sqrt_two_thirds = (2.0f64 / 3.0).sqrt();
    let big_f1 = (3.0 * x * x + y * y) / 12.0 - y * (9.0 * x * x + y * y) / (6.0 * SQRT6)
        + a2 / 4.0
        + (1.0 - SQRT6 * y) * b2 / 2.0
        - SQRT2 * x * c2
        - d3;
    let big_f2 = y * y / 3.0 * (1.0 + 2.0 * sqrt_two_thirds * y) + a2 / 2.0 * (1.0 + SQRT6 * y)
        - SQRT2 * x * c2
        - d3;
    let big_f3 = x / (2.0 * SQRT2) * (sqrt_two_thirds * y - (x * x + y * y))
        - x / SQRT2 * (a2 + b2)
        + c2 / 2.0;

    Ok(Aggregates {
        a2,
        b2,
        c2,
        d3,
        f1sq,
        f2sq,
        big_f1,
        big_f2,
        big_f3,
    })
}

/// `u` squares from `f1^2`, `f2^2`, `y` and `A^2`.
pub fn u_squares_closed(agg: &Aggregates, params: &ParamVector) -> [f64; 3] {
    [
        1.5 * (agg.f1sq + agg.f2sq),
        params.y * params.y + 1.5 * agg.a2,
        1.5 * (agg.f1sq - agg.f2sq),
    ]
}

/// `v` squares as `9(F1 + F3)`, `9 F2`, `9(F1 - F3)`.
pub fn v_squares_closed(agg: &Aggregates) -> [f64; 3] {
    [
        9.0 * (agg.big_f1 + agg.big_f3),
        9.0 * agg.big_f2,
        9.0 * (agg.big_f1 - agg.big_f3),
    ]
}

pub fn u_vector(params: &ParamVector) -> Result<BlochVector> {
    let t2 = build_t(params)?.square();
    Ok(BlochVector::from_squares(
        BlochLabel::U,
        t2.diag().map(|d| 1.5 * d),
    ))
}

pub fn v_vector(params: &ParamVector) -> Result<BlochVector> {
    let t = build_t(params)?;
    let t2 = t.matmul(t.rows());
    let t3 = matmul(&t2, t.rows());
    let squares = [0, 1, 2].map(|i| 9.0 * (t2[i][i].re / 2.0 - t3[i][i].re));
    Ok(BlochVector::from_squares(BlochLabel::V, squares))
}

pub fn w_vector(params: &ParamVector) -> Result<BlochVector> {
    Ok(BlochVector::from_squares(
        BlochLabel::W,
        build_rho(params)?.diag(),
    ))
}

pub fn bloch_triple(params: &ParamVector) -> Result<BlochTriple> {
    Ok(BlochTriple {
        u: u_vector(params)?,
        v: v_vector(params)?,
        w: w_vector(params)?,
        params_echo: *params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::Param;
    use approx::assert_abs_diff_eq;

    fn xy() -> ParamVector {
        ParamVector {
            x: 0.2,
            y: 0.3,
            ..Default::default()
        }
    }

    fn pure_basis() -> ParamVector {
        ParamVector {
            x: 1.0 / SQRT2,
            y: 1.0 / SQRT6,
            ..Default::default()
        }
    }

    fn assert_squares(actual: [f64; 3], expected: [f64; 3], eps: f64) {
        for (a, e) in actual.iter().zip(expected) {
            assert_abs_diff_eq!(*a, e, epsilon = eps);
        }
    }

    #[test]
    fn aggregate_examples() {
        assert_eq!(
            aggregates(&ParamVector::zero()).unwrap(),
            Aggregates::default()
        );

        let p = ParamVector {
            a: 0.3,
            alpha1: 0.1,
            ..Default::default()
        };
        let agg = aggregates(&p).unwrap();
        assert_abs_diff_eq!(agg.a2, 0.10, epsilon = 1e-15);
        assert_abs_diff_eq!(agg.c2, 0.03, epsilon = 1e-15);

        // Frozen from an exact symbolic evaluation.
        let agg = aggregates(&xy()).unwrap();
        assert_abs_diff_eq!(agg.big_f1, 0.008_314_413_464_56, epsilon = 1e-13);
        assert_abs_diff_eq!(agg.big_f2, 0.044_696_938_456_7, epsilon = 1e-13);
        assert_abs_diff_eq!(agg.big_f3, 0.008_128_119_920_26, epsilon = 1e-13);
    }

    #[test]
    fn u_examples() {
        let u = u_vector(&ParamVector::zero()).unwrap();
        assert_eq!(u.squares, [0.0; 3]);
        assert_eq!(u.length, 0.0);

        let u = u_vector(&pure_basis()).unwrap();
        assert_squares(u.squares, [2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0], 1e-15);
        assert_abs_diff_eq!(u.length, 1.0, epsilon = 1e-15);

        let u = u_vector(&xy()).unwrap();
        assert_squares(
            u.squares,
            [0.104_461_524_227, 0.09, 0.000_538_475_772_934],
            1e-12,
        );
        assert_abs_diff_eq!(u.length, 0.441_588_043_316, epsilon = 1e-12);
    }

    #[test]
    fn v_examples() {
        let v = v_vector(&ParamVector::zero()).unwrap();
        assert_eq!(v.squares, [0.0; 3]);

        let v = v_vector(&pure_basis()).unwrap();
        assert_squares(v.squares, [-2.0 / 3.0, 5.0 / 6.0, 5.0 / 6.0], 1e-14);
        assert_abs_diff_eq!(v.sum_of_squares(), 1.0, epsilon = 1e-14);
        assert_eq!(v.negative_components, [true, false, false]);

        let v = v_vector(&xy()).unwrap();
        assert_squares(
            v.squares,
            [0.147_982_800_463, 0.402_272_446_110, 0.001_676_641_898_69],
            1e-12,
        );
        assert_abs_diff_eq!(v.sum_of_squares(), 0.551_931_888_472, epsilon = 1e-12);
    }

    #[test]
    fn w_examples() {
        let w = w_vector(&ParamVector::zero()).unwrap();
        assert_squares(w.squares, [1.0 / 3.0; 3], 1e-15);
        assert_abs_diff_eq!(w.length, 1.0, epsilon = 1e-15);

        let w = w_vector(&pure_basis()).unwrap();
        assert_squares(w.squares, [1.0, 0.0, 0.0], 1e-15);

        let w = w_vector(&xy()).unwrap();
        assert_squares(
            w.squares,
            [0.597_229_176_710, 0.088_384_359_055, 0.314_386_464_235],
            1e-11,
        );
    }

    #[test]
    fn triple_examples() {
        let t = bloch_triple(&pure_basis()).unwrap();
        assert_abs_diff_eq!(t.u.length, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.v.length, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.w.length, 1.0, epsilon = 1e-12);

        let t = bloch_triple(&xy()).unwrap();
        assert_abs_diff_eq!(t.u.length, 0.441_588_043_316, epsilon = 1e-11);
        assert_abs_diff_eq!(t.v.length, 0.742_921_185_909, epsilon = 1e-11);
        assert_abs_diff_eq!(t.w.length, 1.0, epsilon = 1e-15);
        assert_eq!(t.params_echo, xy());
    }

    #[test]
    fn closed_paths_agree_on_fixtures() {
        for p in [
            xy(),
            pure_basis(),
            ParamVector::zero().with(Param::Beta2, -0.4),
        ] {
            let agg = aggregates(&p).unwrap();
            assert_squares(
                u_squares_closed(&agg, &p),
                u_vector(&p).unwrap().squares,
                1e-14,
            );
            assert_squares(v_squares_closed(&agg), v_vector(&p).unwrap().squares, 1e-14);
        }
    }

    #[test]
    fn unphysical_points_still_produce_vectors() {
        let p = ParamVector::zero().with(Param::X, 2.0);
        let w = w_vector(&p).unwrap();
        assert!(w.negative_components[2]);
        assert_abs_diff_eq!(w.sum_of_squares(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn magnitudes_use_absolute_value() {
        let v = BlochVector::from_squares(BlochLabel::V, [-0.25, 0.04, 0.0]);
        assert_eq!(v.magnitudes(), [0.5, 0.2, 0.0]);
        assert_eq!(v.negative_components, [true, false, false]);
        let empty = BlochVector::from_squares(BlochLabel::U, [-1e-17, 0.0, 0.0]);
        assert_eq!(empty.length, 0.0);
        assert_eq!(empty.negative_components, [false; 3]);
    }
}
