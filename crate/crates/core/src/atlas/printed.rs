//! Printed closed forms for the special cases, transcribed verbatim.
//!
//! These are deliberately kept apart from the normative computation: a printed
//! form is evaluated exactly as written, typos included. Only
//! [`super::errata`] compares the two.

use serde::Serialize;

use super::catalog::ClusterCase;
use crate::error::{Error, Result};

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

fn sqrt_two_thirds() -> f64 {
    (2.0f64 / 3.0).sqrt()
}

/// A printed expression in the slot values `(s, t[, p, q])`.
#[derive(Clone, Copy)]
pub struct Formula {
    pub text: &'static str,
    eval: fn(&[f64]) -> f64,
}

impl Formula {
    const fn new(text: &'static str, eval: fn(&[f64]) -> f64) -> Self {
        Self { text, eval }
    }

    pub fn eval(&self, slots: &[f64]) -> f64 {
        (self.eval)(slots)
    }
}

impl std::fmt::Debug for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.text)
    }
}

impl Serialize for Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// The earlier published scaling: `lhs <= 2/3` and `1/9 - g >= 0`.
    Ref8,
    /// Unit scaling: `lhs <= 1`.
    ThisWork,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::Ref8 => "ref8",
            Normalization::ThisWork => "this_work",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
}

/// One printed inequality.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PaperForm {
    pub inequality_index: u8,
    pub normalization: Normalization,
    pub lhs: Formula,
    pub bound: Bound,
}

impl PaperForm {
    pub fn eval(&self, slots: &[f64]) -> f64 {
        self.lhs.eval(slots)
    }

    pub fn admissible(&self, value: f64) -> bool {
        match self.bound {
            Bound::AtMost(b) => value <= b,
            Bound::AtLeast(b) => value >= b,
        }
    }

    /// Maps a printed value onto the unit scale of the normative LHS.
    pub fn to_unit_scale(&self, value: f64) -> f64 {
        match (self.normalization, self.inequality_index) {
            (Normalization::ThisWork, _) => value,
            (Normalization::Ref8, 1) => 1.5 * value,
            (Normalization::Ref8, _) => 1.0 - 9.0 * value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    /// `u_1^2, u_2^2, u_3^2`
    USquares,
    /// `F1, F2, F3` with `v^2 = 9(F1 + F3), 9 F2, 9(F1 - F3)`
    BigF,
}

impl ComponentKind {
    pub fn quantity(self, i: usize) -> String {
        match self {
            ComponentKind::USquares => format!("u{}^2", i + 1),
            ComponentKind::BigF => format!("F{}", i + 1),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrintedComponents {
    pub kind: ComponentKind,
    pub forms: [Formula; 3],
}

/// A printed table row, covering one or more sub-cases.
#[derive(Debug, Clone, Serialize)]
pub struct PrintedRow {
    pub table: &'static str,
    pub row: &'static str,
    pub members: Vec<&'static str>,
    pub inequality: Vec<PaperForm>,
    pub components: Option<PrintedComponents>,
}

impl PrintedRow {
    pub fn covers(&self, case: &ClusterCase) -> bool {
        self.members.contains(&case.sub_case.as_str())
    }
}

fn st(v: &[f64]) -> (f64, f64) {
    (v[0], v[1])
}

fn stpq(v: &[f64]) -> (f64, f64, f64, f64) {
    (v[0], v[1], v[2], v[3])
}

fn ineq_pair(index: u8, ref8: Formula, this_work: Formula) -> Vec<PaperForm> {
    let (ref_bound, unit_bound) = if index == 1 {
        (Bound::AtMost(2.0 / 3.0), Bound::AtMost(1.0))
    } else {
        (Bound::AtLeast(0.0), Bound::AtMost(1.0))
    };
    vec![
        PaperForm {
            inequality_index: index,
            normalization: Normalization::Ref8,
            lhs: ref8,
            bound: ref_bound,
        },
        PaperForm {
            inequality_index: index,
            normalization: Normalization::ThisWork,
            lhs: this_work,
            bound: unit_bound,
        },
    ]
}

fn u_forms(forms: [Formula; 3]) -> Option<PrintedComponents> {
    Some(PrintedComponents {
        kind: ComponentKind::USquares,
        forms,
    })
}

fn f_forms(forms: [Formula; 3]) -> Option<PrintedComponents> {
    Some(PrintedComponents {
        kind: ComponentKind::BigF,
        forms,
    })
}

const CLUSTER_II: &[&str] = &["(y,alpha2)", "(y,beta2)"];
const CLUSTER_III: &[&str] = &["(a,alpha2)", "(beta1,alpha2)"];
const CLUSTER_IV: &[&str] = &["(b,alpha2)", "(alpha1,alpha2)"];
const CLUSTER_V: &[&str] = &["(y,a)", "(y,b)", "(y,alpha1)", "(y,beta1)"];
const CLUSTER_VI: &[&str] = &[
    "(a,b)",
    "(a,alpha1)",
    "(a,beta1)",
    "(a,beta2)",
    "(b,alpha1)",
    "(b,beta1)",
    "(b,beta2)",
    "(alpha1,beta1)",
    "(alpha1,beta2)",
    "(beta1,beta2)",
    "(alpha2,beta2)",
];
const CLUSTER_VII: &[&str] = &[
    "(x,a)",
    "(x,b)",
    "(x,alpha1)",
    "(x,beta1)",
    "(x,alpha2)",
    "(x,beta2)",
];

fn first_inequality_rows() -> Vec<PrintedRow> {
    let ii_ineq = || {
        ineq_pair(
            1,
            Formula::new("s² + 2t² ≤ 2/3", |v| {
                let (s, t) = st(v);
                s * s + 2.0 * t * t
            }),
            Formula::new("(3/2)(s² + 2t²) ≤ 1", |v| {
                let (s, t) = st(v);
                1.5 * (s * s + 2.0 * t * t)
            }),
        )
    };
    let ii_components = |prefix: &'static [&'static str; 3]| {
        u_forms([
            Formula::new(prefix[0], |v| {
                let (s, t) = st(v);
                s * s / 4.0 + 1.5 * t * t
            }),
            Formula::new(prefix[1], |v| v[0] * v[0]),
            Formula::new(prefix[2], |v| {
                let (s, t) = st(v);
                s * s / 4.0 - 1.5 * t * t
            }),
        ])
    };
    let iii_ineq = || {
        ineq_pair(
            1,
            Formula::new("2(s² + t²) ≤ 2/3", |v| {
                let (s, t) = st(v);
                2.0 * (s * s + t * t)
            }),
            Formula::new("3(s² + t²) ≤ 1", |v| {
                let (s, t) = st(v);
                3.0 * (s * s + t * t)
            }),
        )
    };
    let iii_components = |text: &'static [&'static str; 3]| {
        u_forms([
            Formula::new(text[0], |v| {
                let (s, t) = st(v);
                0.75 * s * s + 1.5 * t * t
            }),
            Formula::new(text[1], |v| 1.5 * v[0] * v[0]),
            Formula::new(text[2], |v| {
                let (s, t) = st(v);
                0.75 * s * s + 1.5 * t * t
            }),
        ])
    };
    const II_TEXT: [&str; 3] = [
        "u₁² = (1/4)s² + (3/2)t²",
        "u₂² = s²",
        "u₃² = (1/4)s² − (3/2)t²",
    ];
    const SAME_II: [&str; 3] = [
        "Same as cluster II: u₁² = (1/4)s² + (3/2)t²",
        "Same as cluster II: u₂² = s²",
        "Same as cluster II: u₃² = (1/4)s² − (3/2)t²",
    ];
    const III_TEXT: [&str; 3] = [
        "u₁² = (3/4)s² + (3/2)t²",
        "u₂² = (3/2)s²",
        "u₃² = (3/4)s² + (3/2)t²",
    ];
    const SAME_III: [&str; 3] = [
        "Same as cluster III: u₁² = (3/4)s² + (3/2)t²",
        "Same as cluster III: u₂² = (3/2)s²",
        "Same as cluster III: u₃² = (3/4)s² + (3/2)t²",
    ];

    vec![
        PrintedRow {
            table: "5",
            row: "I",
            members: vec!["(x,y)"],
            inequality: ineq_pair(
                1,
                Formula::new("s² + t² ≤ 2/3", |v| {
                    let (s, t) = st(v);
                    s * s + t * t
                }),
                Formula::new("(3/2)(s² + t²) ≤ 1", |v| {
                    let (s, t) = st(v);
                    1.5 * (s * s + t * t)
                }),
            ),
            components: u_forms([
                Formula::new("u₁² = (3/4)s² + (1/4)t² + (√3/2)st", |v| {
                    let (s, t) = st(v);
                    0.75 * s * s + 0.25 * t * t + SQRT3 / 2.0 * s * t
                }),
                Formula::new("u₂² = t²", |v| v[1] * v[1]),
                Formula::new("u₃² = (3/4)s² + (1/4)t² − (√3/2)st", |v| {
                    let (s, t) = st(v);
                    0.75 * s * s + 0.25 * t * t - SQRT3 / 2.0 * s * t
                }),
            ]),
        },
        PrintedRow {
            table: "5",
            row: "II",
            members: CLUSTER_II.to_vec(),
            inequality: ii_ineq(),
            components: ii_components(&II_TEXT),
        },
        PrintedRow {
            table: "5",
            row: "III",
            members: CLUSTER_III.to_vec(),
            inequality: iii_ineq(),
            components: iii_components(&III_TEXT),
        },
        PrintedRow {
            table: "5",
            row: "IV",
            members: CLUSTER_IV.to_vec(),
            inequality: iii_ineq(),
            components: iii_components(&SAME_III),
        },
        PrintedRow {
            table: "5",
            row: "V",
            members: CLUSTER_V.to_vec(),
            inequality: ii_ineq(),
            components: ii_components(&SAME_II),
        },
        PrintedRow {
            table: "5",
            row: "VI",
            members: CLUSTER_VI.to_vec(),
            inequality: iii_ineq(),
            components: u_forms([
                Formula::new("u₁² = (3/4)s² + (3/4)t²", |v| {
                    let (s, t) = st(v);
                    0.75 * (s * s + t * t)
                }),
                Formula::new("u₂² = (3/2)s² + (3/2)t²", |v| {
                    let (s, t) = st(v);
                    1.5 * (s * s + t * t)
                }),
                Formula::new("u₃² = (3/4)s² + (3/4)t²", |v| {
                    let (s, t) = st(v);
                    0.75 * (s * s + t * t)
                }),
            ]),
        },
        PrintedRow {
            table: "5",
            row: "VII",
            members: CLUSTER_VII.to_vec(),
            inequality: ii_ineq(),
            components: ii_components(&SAME_II),
        },
    ]
}

fn second_inequality_rows() -> Vec<PrintedRow> {
    let zero = Formula::new("F₃ = 0", |_| 0.0);
    vec![
        PrintedRow {
            table: "5.2a",
            row: "I",
            members: vec!["(x,y)"],
            inequality: ineq_pair(
                2,
                Formula::new(
                    "1/9 − (1/2)(s² + t²) + (t/√6)(3s² − t²) ≥ 0",
                    |v| {
                        let (s, t) = st(v);
                        1.0 / 9.0 - 0.5 * (s * s + t * t) + t / SQRT6 * (3.0 * s * s - t * t)
                    },
                ),
                Formula::new(
                    "(9/2)(s² + t²) − (3√3/√2)(3s² − t²)t ≤ 1",
                    |v| {
                        let (s, t) = st(v);
                        4.5 * (s * s + t * t) - 3.0 * SQRT3 / SQRT2 * (3.0 * s * s - t * t) * t
                    },
                ),
            ),
            components: f_forms([
                Formula::new("F₁ = (3s² + t²)/12 − t(9s² + t²)/(6√6)", |v| {
                    let (s, t) = st(v);
                    (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * SQRT6)
                }),
                Formula::new("F₂ = (t²/3)(1 + 2√(2/3) t)", |v| {
                    let t = v[1];
                    t * t / 3.0 * (1.0 + 2.0 * sqrt_two_thirds() * t)
                }),
                Formula::new("F₃ = (s/(2√2)){√(2/3) t − (s² + t²)}", |v| {
                    let (s, t) = st(v);
                    s / (2.0 * SQRT2) * (sqrt_two_thirds() * t - (s * s + t * t))
                }),
            ]),
        },
        PrintedRow {
            table: "5.2a",
            row: "II",
            members: CLUSTER_II.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new(
                    "1/9 − (s²/2 + t²) + (s/√6)(6t² − s²) ≥ 0",
                    |v| {
                        let (s, t) = st(v);
                        1.0 / 9.0 - (s * s / 2.0 + t * t) + s / SQRT6 * (6.0 * t * t - s * s)
                    },
                ),
                Formula::new(
                    "9((s² + t²)/2) − (3√3/√2)(6t² − s²)s ≤ 1",
                    |v| {
                        let (s, t) = st(v);
                        9.0 * ((s * s + t * t) / 2.0)
                            - 3.0 * SQRT3 / SQRT2 * (6.0 * t * t - s * s) * s
                    },
                ),
            ),
            components: f_forms([
                Formula::new("F₁ = s²/12 − s³/(6√6) + (1 − √6 s)t²/2", |v| {
                    let (s, t) = st(v);
                    s * s / 12.0 - s * s * s / (6.0 * SQRT6) + (1.0 - SQRT6 * s) * t * t / 2.0
                }),
                Formula::new("F₂ = (s²/3)(1 + 2√(2/3) s)", |v| {
                    let s = v[0];
                    s * s / 3.0 * (1.0 + 2.0 * sqrt_two_thirds() * s)
                }),
                zero,
            ]),
        },
        PrintedRow {
            table: "5.2a",
            row: "III",
            members: CLUSTER_III.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new("1/9 − (s² + t²) + 3s²t ≥ 0", |v| {
                    let (s, t) = st(v);
                    1.0 / 9.0 - (s * s + t * t) + 3.0 * s * s * t
                }),
                Formula::new("9(s² + t²) − 27s²t ≤ 1", |v| {
                    let (s, t) = st(v);
                    9.0 * (s * s + t * t) - 27.0 * s * s * t
                }),
            ),
            components: f_forms([
                Formula::new("F₁ = (s² + 2t²)/4 − s²t", |v| {
                    let (s, t) = st(v);
                    (s * s + 2.0 * t * t) / 4.0 - s * s * t
                }),
                Formula::new("F₂ = −s²t", |v| {
                    let (s, t) = st(v);
                    -s * s * t
                }),
                zero,
            ]),
        },
        PrintedRow {
            table: "5.2a",
            row: "IV",
            members: CLUSTER_IV.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new("1/9 − (s² + t²) − 3s²t ≥ 0", |v| {
                    let (s, t) = st(v);
                    1.0 / 9.0 - (s * s + t * t) - 3.0 * s * s * t
                }),
                Formula::new("9(s² + t²) + 27s²t ≤ 1", |v| {
                    let (s, t) = st(v);
                    9.0 * (s * s + t * t) + 27.0 * s * s * t
                }),
            ),
            components: f_forms([
                Formula::new("F₁ = s²/4 + t²(1/2 + s²)", |v| {
                    let (s, t) = st(v);
                    s * s / 4.0 + t * t * (0.5 + s * s)
                }),
                Formula::new("F₂ = s²(1/2 + t)", |v| {
                    let (s, t) = st(v);
                    s * s * (0.5 + t)
                }),
                zero,
            ]),
        },
        PrintedRow {
            table: "5.2a",
            row: "V",
            members: CLUSTER_V.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new(
                    "1/9 − (s²/2 + t²) − (s/√6)(3t² + s²) ≥ 0",
                    |v| {
                        let (s, t) = st(v);
                        1.0 / 9.0 - (s * s / 2.0 + t * t) - s / SQRT6 * (3.0 * t * t + s * s)
                    },
                ),
                Formula::new("9(s²/2 + t²) + (3√3/√2)(3t² + s²)s ≤ 1", |v| {
                    let (s, t) = st(v);
                    9.0 * (s * s / 2.0 + t * t) + 3.0 * SQRT3 / SQRT2 * (3.0 * t * t + s * s) * s
                }),
            ),
            components: f_forms([
                Formula::new("F₁ = s²/12 − s³/(6√6) + t²/4", |v| {
                    let (s, t) = st(v);
                    s * s / 12.0 - s * s * s / (6.0 * SQRT6) + t * t / 4.0
                }),
                Formula::new("F₂ = (s²/3)(1 + 2√(2/3) s) + (1 + √6 s)t²/2", |v| {
                    let (s, t) = st(v);
                    s * s / 3.0 * (1.0 + 2.0 * sqrt_two_thirds() * s)
                        + (1.0 + SQRT6 * s) * t * t / 2.0
                }),
                zero,
            ]),
        },
        PrintedRow {
            table: "5.2a",
            row: "VII",
            members: CLUSTER_VII.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new("1/9 − (s²/2 + t²) ≥ 0", |v| {
                    let (s, t) = st(v);
                    1.0 / 9.0 - (s * s / 2.0 + t * t)
                }),
                Formula::new("9(s²/2 + t²) ≤ 1", |v| {
                    let (s, t) = st(v);
                    9.0 * (s * s / 2.0 + t * t)
                }),
            ),
            components: f_forms([
                Formula::new("F₁ = (s² + t²)/4", |v| {
                    let (s, t) = st(v);
                    (s * s + t * t) / 4.0
                }),
                Formula::new("F₂ = t²/2", |v| v[1] * v[1] / 2.0),
                Formula::new("F₃ = −st²/√2", |v| {
                    let (s, t) = st(v);
                    -s * t * t / SQRT2
                }),
            ]),
        },
        PrintedRow {
            table: "5.2b",
            row: "VI",
            members: CLUSTER_VI.to_vec(),
            inequality: ineq_pair(
                2,
                Formula::new("1/9 − (s² + t²) ≥ 0", |v| {
                    let (s, t) = st(v);
                    1.0 / 9.0 - (s * s + t * t)
                }),
                Formula::new("9(s² + t²) ≤ 1", |v| {
                    let (s, t) = st(v);
                    9.0 * (s * s + t * t)
                }),
            ),
            components: None,
        },
        vi_group(
            "(a,b),(a,beta1),(b,alpha1)",
            &["(a,b)", "(a,beta1)", "(b,alpha1)"],
            [quarter_sum(), half_sum(), zero],
        ),
        vi_group(
            "(a,alpha1),(b,beta1)",
            &["(a,alpha1)", "(b,beta1)"],
            [
                quarter_sum(),
                half_sum(),
                Formula::new("F₃ = st/2", |v| v[0] * v[1] / 2.0),
            ],
        ),
        vi_group(
            "(a,beta2),(b,beta2),(alpha1,beta2)",
            &["(a,beta2)", "(b,beta2)", "(alpha1,beta2)"],
            [quarter_s_2t(), half_s(), zero],
        ),
        vi_group(
            "(alpha1,beta1)",
            &["(alpha1,beta1)"],
            [quarter_sum(), half_sum(), zero],
        ),
        vi_group(
            "(alpha2,beta2)",
            &["(alpha2,beta2)"],
            [
                Formula::new("F₁ = (s² + t²)/2", |v| {
                    let (s, t) = st(v);
                    (s * s + t * t) / 2.0
                }),
                Formula::new("F₂ = 0", |_| 0.0),
                zero,
            ],
        ),
        vi_group(
            "(beta1,beta2)",
            &["(beta1,beta2)"],
            [quarter_s_2t(), half_s(), zero],
        ),
    ]
}

fn quarter_sum() -> Formula {
    Formula::new("F₁ = (s² + t²)/4", |v| {
        let (s, t) = st(v);
        (s * s + t * t) / 4.0
    })
}

fn half_sum() -> Formula {
    Formula::new("F₂ = (s² + t²)/2", |v| {
        let (s, t) = st(v);
        (s * s + t * t) / 2.0
    })
}

fn quarter_s_2t() -> Formula {
    Formula::new("F₁ = (s² + 2t²)/4", |v| {
        let (s, t) = st(v);
        (s * s + 2.0 * t * t) / 4.0
    })
}

fn half_s() -> Formula {
    Formula::new("F₂ = s²/2", |v| v[0] * v[0] / 2.0)
}

fn vi_group(row: &'static str, members: &[&'static str], forms: [Formula; 3]) -> PrintedRow {
    PrintedRow {
        table: "5.2b",
        row,
        members: members.to_vec(),
        inequality: Vec::new(),
        components: f_forms(forms),
    }
}

/// The four-variable rows. Their heading names the first inequality, but the
/// rows define `F` functions of the cubic one, so they are stored as such.
fn four_variable_rows() -> Vec<PrintedRow> {
    vec![
        PrintedRow {
            table: "5.3",
            row: "(x,y,alpha1,beta1)",
            members: vec!["(x,y,alpha1,beta1)"],
            inequality: Vec::new(),
            components: f_forms([
                Formula::new(
                    "F₁ = (3s² + t²)/12 − t(9s² + t²)/(6√6) + (u² + v²)/4",
                    |v| {
                        let (s, t, p, q) = stpq(v);
                        (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * SQRT6)
                            + (p * p + q * q) / 4.0
                    },
                ),
                Formula::new(
                    "F₂ = (t²/3)(1 + 2√(2/3) t) + ((u² + v²)/2)(1 + √6 t)",
                    |v| {
                        let (_, t, p, q) = stpq(v);
                        t * t / 3.0 * (1.0 + 2.0 * sqrt_two_thirds() * t)
                            + (p * p + q * q) / 2.0 * (1.0 + SQRT6 * t)
                    },
                ),
                Formula::new(
                    "F₃ = (s/(2√2)){√(2/3) t − (s² + t²) − 2(u² + v²)}",
                    |v| {
                        let (s, t, p, q) = stpq(v);
                        s / (2.0 * SQRT2)
                            * (sqrt_two_thirds() * t - (s * s + t * t) - 2.0 * (p * p + q * q))
                    },
                ),
            ]),
        },
        PrintedRow {
            table: "5.3",
            row: "(a,b,alpha2,beta2)",
            members: vec!["(a,b,alpha2,beta2)"],
            inequality: Vec::new(),
            components: f_forms([
                Formula::new(
                    "F₁ = (s² + t²)/4 + (u² + v²)/2 − (s² − t²)u − 2stv",
                    |v| {
                        let (s, t, p, q) = stpq(v);
                        (s * s + t * t) / 4.0 + (p * p + q * q) / 2.0
                            - (s * s - t * t) * p
                            - 2.0 * s * t * q
                    },
                ),
                Formula::new("F₂ = (s² + t²)/2 − (s² − t²)u − 2stv", |v| {
                    let (s, t, p, q) = stpq(v);
                    (s * s + t * t) / 2.0 - (s * s - t * t) * p - 2.0 * s * t * q
                }),
                Formula::new("F₃ = 0", |_| 0.0),
            ]),
        },
        PrintedRow {
            table: "5.3",
            row: "(a,b,alpha1,beta1)",
            members: vec!["(a,b,alpha1,beta1)"],
            inequality: Vec::new(),
            components: f_forms([
                Formula::new("F₁ = A²/4", |v| {
                    let (s, t, p, q) = stpq(v);
                    (s * s + t * t + p * p + q * q) / 4.0
                }),
                Formula::new("F₂ = A²/2", |v| {
                    let (s, t, p, q) = stpq(v);
                    (s * s + t * t + p * p + q * q) / 2.0
                }),
                Formula::new("F₃ = C²/2", |v| {
                    let (s, t, p, q) = stpq(v);
                    (s * p + t * q) / 2.0
                }),
            ]),
        },
    ]
}

/// Every printed row in table order.
pub fn printed_rows() -> Vec<PrintedRow> {
    let mut rows = first_inequality_rows();
    rows.extend(second_inequality_rows());
    rows.extend(four_variable_rows());
    rows
}

/// The printed form of inequality `index` under `normalization` for `case`.
pub fn paper_form(
    case: &ClusterCase,
    index: u8,
    normalization: Normalization,
) -> Result<PaperForm> {
    printed_rows()
        .into_iter()
        .filter(|row| row.covers(case))
        .flat_map(|row| row.inequality)
        .find(|f| f.inequality_index == index && f.normalization == normalization)
        .ok_or_else(|| Error::NoPrintedForm {
            case: case.to_string(),
            index,
            normalization: normalization.name(),
        })
}

/// Evaluates the printed LHS verbatim.
pub fn paper_lhs(
    case: &ClusterCase,
    index: u8,
    normalization: Normalization,
    slots: &[f64],
) -> Result<f64> {
    if slots.len() != case.arity() {
        return Err(Error::ArityMismatch {
            case: case.to_string(),
            expected: case.arity(),
            got: slots.len(),
        });
    }
    Ok(paper_form(case, index, normalization)?.eval(slots))
}
