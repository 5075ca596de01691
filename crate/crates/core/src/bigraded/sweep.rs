use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{d_kw, frame_has_c, relation_system, solve_family, ReducedSystems, System2Form};
use crate::error::Result;

/// One grid point `(k, w)` of the classification sweep.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SweepRow {
    pub k: usize,
    pub w: usize,
    pub d: i64,
    /// Homogeneous solution dimension of the full Jacobi system.
    pub oracle_dim: usize,
    /// Affine slice dimension, `-1` when empty.
    pub family_dim: i64,
    /// Solution dimension of the `x_0`-relation system.
    pub relation_dim: usize,
    /// Solution dimension of systems 3 and 7 together.
    pub reduced_dim: usize,
    /// Frame dimension for a nonempty family (`2k+6` or `2k+7`).
    pub frame_dim: Option<usize>,
    pub agrees: bool,
}

pub fn sweep_point(k: usize, w: usize) -> Result<SweepRow> {
    let d = d_kw(k as i64, w as i64);
    let fam = solve_family(k, w)?;
    let oracle_dim = fam.hom_dim();
    let relation_dim = relation_system(k, w, System2Form::Corrected)?
        .nullspace()
        .len();
    let reduced_dim = ReducedSystems::new(k, w)?.dim_3_7();
    let expected = (d + 1).max(0) as usize;
    let slice_ok = if d >= 0 {
        fam.family_dim == d
    } else {
        fam.is_empty()
    };
    let frame_dim = (!fam.is_empty()).then(|| 2 * k + 6 + usize::from(frame_has_c(k, w)));
    Ok(SweepRow {
        k,
        w,
        d,
        oracle_dim,
        family_dim: fam.family_dim,
        relation_dim,
        reduced_dim,
        frame_dim,
        agrees: oracle_dim == expected
            && relation_dim == expected
            && reduced_dim == expected
            && slice_ok,
    })
}

/// All `3 <= k <= kmax`, odd `1 <= w <= 2k-1`, in `(k, w)` order.
pub fn sweep(kmax: usize) -> Result<Vec<SweepRow>> {
    let grid: Vec<(usize, usize)> = (3..=kmax)
        .flat_map(|k| (1..2 * k).step_by(2).map(move |w| (k, w)))
        .collect();
    grid.par_iter().map(|&(k, w)| sweep_point(k, w)).collect()
}
