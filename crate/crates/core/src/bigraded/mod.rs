//! Bi-graded Lie algebras of type (k, w).
//!
//! The structure constants live in a [`CMatrix`]; everything else in the
//! algebra is fixed by `k` and `w`. Solutions are found with a full Jacobi
//! oracle and cross-checked against the reduced linear systems.

mod assemble;
mod identities;
mod json;
mod oracle;
mod phi;
mod reduced;
mod sweep;

pub use assemble::{assemble_frame, assemble_model, frame_has_c};
pub use identities::{ident2, ident2_sides, ident2_variant, ident3, ident3_sides, ident3_variant};
pub use json::{CEntryJson, FamilyJson};
pub use oracle::{
    jacobi_system, relation_system, solve_family, system2_residuals, System2Form, TypeKWFamily,
    Unknowns,
};
pub use phi::{ker_phi2_basis, phi_maps, PhiMaps};
pub use reduced::{
    sol, sol3, subst_matrix, system3, system4, system5, system5a, system6, system7, system7y,
    system7y_rank, system7y_variant, x_len, ReducedSystems, System5aForm,
};
pub use sweep::{sweep, sweep_point, SweepRow};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{input, Result};
use crate::exact::{binom_int, Rational};
use crate::liealg::GradedLieAlgebra;

/// Parameter count `d(k, w)`; negative values mean no family.
pub fn d_kw(k: i64, w: i64) -> i64 {
    if k % 2 == 1 {
        let l = (k - 1) / 2;
        (l - w + 1).div_euclid(3)
    } else {
        let l = k / 2;
        (l - w - 1).div_euclid(3)
    }
}

pub(crate) fn check_kw(k: usize, w: usize) -> Result<()> {
    if k < 2 || w < 1 || w > 2 * k - 1 {
        return input(format!("type ({k},{w}) needs k >= 2 and 1 <= w <= 2k-1"));
    }
    Ok(())
}

/// Antisymmetric constants `c_ij` of `[x_i, x_j] = c_ij y_{i+j-w+1}`,
/// supported on `w <= i+j <= k+w-1`. Only `i < j` entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    k: usize,
    w: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl CMatrix {
    pub fn zero(k: usize, w: usize) -> Result<Self> {
        check_kw(k, w)?;
        Ok(Self {
            k,
            w,
            entries: BTreeMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn in_support(&self, i: usize, j: usize) -> bool {
        i != j && i <= self.k && j <= self.k && i + j >= self.w && i + j < self.k + self.w
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rational::zero(),
            Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => -self.entries.get(&(j, i)).cloned().unwrap_or_default(),
        }
    }

    /// Same as [`Self::get`] with signed indices; anything outside `0..=k` is 0.
    pub fn get_signed(&self, i: i64, j: i64) -> Rational {
        if i < 0 || j < 0 || i > self.k as i64 || j > self.k as i64 {
            Rational::zero()
        } else {
            self.get(i as usize, j as usize)
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) -> Result<()> {
        if !self.in_support(i, j) {
            if v.is_zero() {
                return Ok(());
            }
            return input(format!(
                "c_({i},{j}) lies outside the support of type ({},{})",
                self.k, self.w
            ));
        }
        let (key, v) = if i < j { ((i, j), v) } else { ((j, i), -v) };
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    /// Nonzero entries `(i, j, c_ij)` with `i < j`, in key order.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        self.entries
            .iter()
            .map(|(&(i, j), v)| (i, j, v.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self {
            k: self.k,
            w: self.w,
            entries: BTreeMap::new(),
        };
        for (key, v) in &self.entries {
            let p = v * s;
            if !p.is_zero() {
                out.entries.insert(*key, p);
            }
        }
        out
    }

    /// Read `c_ij` from the coefficient of `y_{i+j-w+1}` in `[x_i, x_j]`.
    /// Labels `x0..xk`, `y1..yk` must be present.
    pub fn from_algebra(alg: &GradedLieAlgebra, k: usize, w: usize) -> Result<Self> {
        let mut c = Self::zero(k, w)?;
        let xs = (0..=k)
            .map(|i| alg.idx(&format!("x{i}")))
            .collect::<Result<Vec<_>>>()?;
        let ys = (1..=k)
            .map(|j| alg.idx(&format!("y{j}")))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..=k {
            for j in i + 1..=k {
                let br = alg.bracket_basis(xs[i], xs[j]);
                let t = (i + j + 1) as i64 - w as i64;
                for (idx, v) in br {
                    let pos = ys.iter().position(|&y| y == idx);
                    match pos {
                        Some(p) if p as i64 + 1 == t => c.set(i, j, v)?,
                        _ => {
                            return input(format!(
                                "[x{i}, x{j}] has a component along {} outside type ({k},{w})",
                                alg.label(idx)
                            ))
                        }
                    }
                }
            }
        }
        Ok(c)
    }
}

/// `x_i = binom(k+w-1, i+w-1) c_{i+w-1, k-i}` for `i = 0..=k-w+1`.
pub fn x_from_c(c: &CMatrix) -> Vec<Rational> {
    let (k, w) = (c.k as i64, c.w as i64);
    (0..x_len(c.k, c.w) as i64)
        .map(|i| binom_int(k + w - 1, i + w - 1) * c.get_signed(i + w - 1, k - i))
        .collect()
}

/// Inverse of [`x_from_c`]: seed the top anti-diagonal, then fill each lower
/// anti-diagonal by `c_ij = c_{i+1,j} + c_{i,j+1}`.
pub fn c_from_x(k: usize, w: usize, x: &[Rational]) -> Result<CMatrix> {
    check_kw(k, w)?;
    let len = x_len(k, w);
    if x.len() != len {
        return input(format!("x has length {}, expected {len}", x.len()));
    }
    let (ki, wi) = (k as i64, w as i64);
    // dense antisymmetric grid including the zero border at index k+1
    let n = k + 2;
    let mut grid = vec![vec![Rational::zero(); n]; n];
    for (i, xi) in x.iter().enumerate() {
        let (a, b) = (i as i64 + wi - 1, ki - i as i64);
        let v = xi / binom_int(ki + wi - 1, i as i64 + wi - 1);
        grid[a as usize][b as usize] = v;
    }
    for s in (wi..ki + wi - 1).rev() {
        for i in 0..=ki {
            let j = s - i;
            if j < 0 || j > ki || i >= j {
                continue;
            }
            let (iu, ju) = (i as usize, j as usize);
            let v = &grid[iu + 1][ju] + &grid[iu][ju + 1];
            grid[ju][iu] = -v.clone();
            grid[iu][ju] = v;
        }
    }
    let mut c = CMatrix::zero(k, w)?;
    for i in 0..=k {
        for j in i + 1..=k {
            if !grid[i][j].is_zero() {
                c.set(i, j, grid[i][j].clone())?;
            }
        }
    }
    // the top anti-diagonal must itself be antisymmetric
    for i in 0..=k {
        let j = (ki + wi - 1) - i as i64;
        if (0..=ki).contains(&j) && grid[i][j as usize] != -grid[j as usize][i].clone() {
            return input("x does not define an antisymmetric top anti-diagonal");
        }
    }
    Ok(c)
}

/// `Some(λ)` with `c2 = λ c1` and `λ ≠ 0`, or `None`.
pub fn compare_projective(c1: &CMatrix, c2: &CMatrix) -> Result<Option<Rational>> {
    if (c1.k, c1.w) != (c2.k, c2.w) {
        return input(format!(
            "cannot compare type ({},{}) with type ({},{})",
            c1.k, c1.w, c2.k, c2.w
        ));
    }
    let Some((key, v1)) = c1.entries.iter().next() else {
        return Ok(None);
    };
    let lambda = c2.entries.get(key).cloned().unwrap_or_default() / v1;
    if lambda.is_zero() {
        return Ok(None);
    }
    Ok((c1.scale(&lambda) == *c2).then_some(lambda))
}
