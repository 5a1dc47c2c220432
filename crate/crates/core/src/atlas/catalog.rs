use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{Param, ParamVector};

/// Families of special cases with only a few nonzero parameters.
///
/// `I`..`VII` are the two-variable clusters; `FourVariable` groups the
/// printed four-variable examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClusterId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    #[serde(rename = "4var")]
    FourVariable,
}

impl ClusterId {
    pub const TWO_VARIABLE: [ClusterId; 7] = [
        ClusterId::I,
        ClusterId::II,
        ClusterId::III,
        ClusterId::IV,
        ClusterId::V,
        ClusterId::VI,
        ClusterId::VII,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClusterId::I => "I",
            ClusterId::II => "II",
            ClusterId::III => "III",
            ClusterId::IV => "IV",
            ClusterId::V => "V",
            ClusterId::VI => "VI",
            ClusterId::VII => "VII",
            ClusterId::FourVariable => "4var",
        }
    }

    fn members(self) -> &'static [&'static [Param]] {
        use Param::*;
        match self {
            ClusterId::I => &[&[X, Y]],
            ClusterId::II => &[&[Y, Alpha2], &[Y, Beta2]],
            ClusterId::III => &[&[A, Alpha2], &[Beta1, Alpha2]],
            ClusterId::IV => &[&[B, Alpha2], &[Alpha1, Alpha2]],
            ClusterId::V => &[&[Y, A], &[Y, B], &[Y, Alpha1], &[Y, Beta1]],
            ClusterId::VI => &[
                &[A, B],
                &[A, Alpha1],
                &[A, Beta1],
                &[A, Beta2],
                &[B, Alpha1],
                &[B, Beta1],
                &[B, Beta2],
                &[Alpha1, Beta1],
                &[Alpha1, Beta2],
                &[Beta1, Beta2],
                &[Alpha2, Beta2],
            ],
            ClusterId::VII => &[
                &[X, A],
                &[X, B],
                &[X, Alpha1],
                &[X, Beta1],
                &[X, Alpha2],
                &[X, Beta2],
            ],
            ClusterId::FourVariable => &[
                &[X, Y, Alpha1, Beta1],
                &[A, B, Alpha2, Beta2],
                &[A, B, Alpha1, Beta1],
            ],
        }
    }
}

impl fmt::Display for ClusterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClusterId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClusterId::TWO_VARIABLE
            .into_iter()
            .chain([ClusterId::FourVariable])
            .find(|c| c.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownCase(format!("cluster {s:?}")))
    }
}

/// Slot names in order; `p`, `q` stand for the third and fourth free variables.
pub const SLOT_NAMES: [&str; 4] = ["s", "t", "p", "q"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub slot: &'static str,
    pub param: Param,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterCase {
    pub cluster: ClusterId,
    /// e.g. `(y,alpha2)`
    pub sub_case: String,
    pub slots: Vec<Slot>,
}

impl ClusterCase {
    fn new(cluster: ClusterId, params: &[Param]) -> Self {
        let names: Vec<_> = params.iter().map(|p| p.name()).collect();
        Self {
            cluster,
            sub_case: format!("({})", names.join(",")),
            slots: params
                .iter()
                .zip(SLOT_NAMES)
                .map(|(&param, slot)| Slot { slot, param })
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    /// Parameter vector with the slots filled and everything else zero.
    pub fn instantiate(&self, values: &[f64]) -> Result<ParamVector> {
        if values.len() != self.arity() {
            return Err(Error::ArityMismatch {
                case: self.to_string(),
                expected: self.arity(),
                got: values.len(),
            });
        }
        let mut p = ParamVector::zero();
        for (slot, &v) in self.slots.iter().zip(values) {
            p.set(slot.param, v);
        }
        p.validate()?;
        Ok(p)
    }
}

impl fmt::Display for ClusterCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.cluster, self.sub_case)
    }
}

/// The full fixed catalog: clusters I..VII with their printed pairs, then the
/// three four-variable cases.
pub fn catalog() -> Vec<ClusterCase> {
    ClusterId::TWO_VARIABLE
        .into_iter()
        .chain([ClusterId::FourVariable])
        .flat_map(|c| c.members().iter().map(move |m| ClusterCase::new(c, m)))
        .collect()
}

pub fn cases_of(cluster: ClusterId) -> Vec<ClusterCase> {
    cluster
        .members()
        .iter()
        .map(|m| ClusterCase::new(cluster, m))
        .collect()
}

fn normalize_sub(s: &str) -> String {
    let inner: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect();
    format!("({inner})")
}

/// Looks up a case; `sub = None` selects the cluster's first sub-case.
/// Accepts `(a,alpha2)`, `a,alpha2` and whitespace variants.
pub fn find_case(cluster: ClusterId, sub: Option<&str>) -> Result<ClusterCase> {
    let cases = cases_of(cluster);
    match sub {
        None => Ok(cases.into_iter().next().expect("every cluster has a case")),
        Some(sub) => {
            let wanted = normalize_sub(sub);
            cases
                .into_iter()
                .find(|c| c.sub_case == wanted)
                .ok_or_else(|| Error::UnknownCase(format!("{cluster} {sub}")))
        }
    }
}

/// Finds the case with the given sub-case id in any cluster.
pub fn case_by_sub(sub: &str) -> Option<ClusterCase> {
    let wanted = normalize_sub(sub);
    catalog().into_iter().find(|c| c.sub_case == wanted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cluster_sizes() {
        let sizes: Vec<_> = ClusterId::TWO_VARIABLE
            .into_iter()
            .map(|c| cases_of(c).len())
            .collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 4, 11, 6]);
        assert_eq!(cases_of(ClusterId::FourVariable).len(), 3);
        assert_eq!(catalog().len(), 31);
    }

    #[test]
    fn lookups() {
        let i = find_case(ClusterId::I, None).unwrap();
        assert_eq!(
            i.slots,
            vec![
                Slot {
                    slot: "s",
                    param: Param::X
                },
                Slot {
                    slot: "t",
                    param: Param::Y
                }
            ]
        );
        let subs: Vec<_> = cases_of(ClusterId::III)
            .into_iter()
            .map(|c| c.sub_case)
            .collect();
        assert_eq!(subs, vec!["(a,alpha2)", "(beta1,alpha2)"]);
        assert!(find_case(ClusterId::III, Some(" a , alpha2 ")).is_ok());
        assert!(find_case(ClusterId::III, Some("(a,b)")).is_err());
        assert_eq!("vii".parse::<ClusterId>().unwrap(), ClusterId::VII);
        assert!("VIII".parse::<ClusterId>().is_err());
    }

    #[test]
    fn pairs_are_unique_and_slots_distinct() {
        let mut seen = HashSet::new();
        for case in catalog() {
            assert!(seen.insert(case.sub_case.clone()), "duplicate {case}");
            let params: HashSet<_> = case.slots.iter().map(|s| s.param).collect();
            assert_eq!(params.len(), case.arity());
        }
    }

    #[test]
    fn instantiate_examples() {
        let p = find_case(ClusterId::I, None)
            .unwrap()
            .instantiate(&[0.2, 0.3])
            .unwrap();
        assert_eq!(
            p,
            ParamVector {
                x: 0.2,
                y: 0.3,
                ..Default::default()
            }
        );

        let p = find_case(ClusterId::II, Some("(y,alpha2)"))
            .unwrap()
            .instantiate(&[0.1, 0.2])
            .unwrap();
        assert_eq!(
            p,
            ParamVector {
                y: 0.1,
                alpha2: 0.2,
                ..Default::default()
            }
        );

        let case = find_case(ClusterId::FourVariable, Some("(a,b,alpha2,beta2)")).unwrap();
        let p = case.instantiate(&[0.1, 0.1, 0.05, 0.05]).unwrap();
        assert_eq!(
            p,
            ParamVector {
                a: 0.1,
                b: 0.1,
                alpha2: 0.05,
                beta2: 0.05,
                ..Default::default()
            }
        );
        assert!(matches!(
            case.instantiate(&[0.1, 0.2]),
            Err(Error::ArityMismatch {
                expected: 4,
                got: 2,
                ..
            })
        ));
    }
}
