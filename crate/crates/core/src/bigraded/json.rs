use serde::{Deserialize, Serialize};

use super::{d_kw, CMatrix, TypeKWFamily};
use crate::error::Result;
use crate::exact::{parse_rat, rat_to_string};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CEntryJson {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

/// Wire form of a [`TypeKWFamily`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub k: usize,
    pub w: usize,
    pub d: i64,
    pub family_dim: i64,
    pub normalized_c: Option<Vec<CEntryJson>>,
    pub hom_basis: Vec<Vec<String>>,
}

impl CMatrix {
    pub fn to_entries_json(&self) -> Vec<CEntryJson> {
        self.entries()
            .into_iter()
            .map(|(i, j, c)| CEntryJson {
                i,
                j,
                c: rat_to_string(&c),
            })
            .collect()
    }

    pub fn from_entries_json(k: usize, w: usize, entries: &[CEntryJson]) -> Result<Self> {
        let mut m = CMatrix::zero(k, w)?;
        for e in entries {
            m.set(e.i, e.j, parse_rat(&e.c)?)?;
        }
        Ok(m)
    }
}

impl From<&TypeKWFamily> for FamilyJson {
    fn from(f: &TypeKWFamily) -> Self {
        Self {
            k: f.k,
            w: f.w,
            d: d_kw(f.k as i64, f.w as i64),
            family_dim: f.family_dim,
            normalized_c: f.normalized_c.as_ref().map(CMatrix::to_entries_json),
            hom_basis: f
                .hom_basis
                .iter()
                .map(|v| v.iter().map(rat_to_string).collect())
                .collect(),
        }
    }
}

impl FamilyJson {
    /// The normalized point as a c-matrix, if the family is nonempty.
    pub fn cmatrix(&self) -> Result<Option<CMatrix>> {
        self.normalized_c
            .as_ref()
            .map(|e| CMatrix::from_entries_json(self.k, self.w, e))
            .transpose()
    }
}
