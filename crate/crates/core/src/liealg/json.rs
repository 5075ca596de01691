use serde::{Deserialize, Serialize};

use super::{BasisElement, GradedLieAlgebra};
use crate::error::Result;
use crate::exact::{parse_rat, rat_to_string};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BasisJson {
    pub label: String,
    pub bidegree: [i64; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermJson>,
}

/// Wire form of a [`GradedLieAlgebra`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<BasisJson>,
    pub brackets: Vec<BracketJson>,
}

impl From<&GradedLieAlgebra> for AlgebraJson {
    fn from(g: &GradedLieAlgebra) -> Self {
        Self {
            dim: g.dim(),
            basis: g
                .basis()
                .iter()
                .map(|b| BasisJson {
                    label: b.label.clone(),
                    bidegree: [b.bidegree.0, b.bidegree.1],
                })
                .collect(),
            brackets: g
                .brackets()
                .map(|(&(i, j), terms)| BracketJson {
                    i,
                    j,
                    terms: terms
                        .iter()
                        .map(|(k, c)| TermJson {
                            k: *k,
                            c: rat_to_string(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<GradedLieAlgebra> {
        if self.dim != self.basis.len() {
            return crate::error::input(format!(
                "dim {} does not match {} basis entries",
                self.dim,
                self.basis.len()
            ));
        }
        let mut g = GradedLieAlgebra::new(
            self.basis
                .iter()
                .map(|b| BasisElement::new(b.label.clone(), (b.bidegree[0], b.bidegree[1])))
                .collect(),
        )?;
        for br in &self.brackets {
            let terms = br
                .terms
                .iter()
                .map(|t| Ok((t.k, parse_rat(&t.c)?)))
                .collect::<Result<Vec<_>>>()?;
            g.set_bracket(br.i, br.j, &terms)?;
        }
        Ok(g)
    }
}

impl GradedLieAlgebra {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&AlgebraJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str::<AlgebraJson>(s)?.to_algebra()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{m7_3_3, model_k6};
    use super::*;

    #[test]
    fn byte_stable_round_trip() {
        for g in [m7_3_3(), model_k6()] {
            let s = g.to_json();
            let back = GradedLieAlgebra::from_json(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_json(), s);
        }
    }

    #[test]
    fn rejects_bad_coefficient() {
        let s = r#"{"dim":2,"basis":[{"label":"a","bidegree":[0,0]},{"label":"b","bidegree":[0,0]}],
                    "brackets":[{"i":0,"j":1,"terms":[{"k":0,"c":"1/0"}]}]}"#;
        assert!(GradedLieAlgebra::from_json(s).is_err());
    }
}
