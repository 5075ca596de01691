use num_traits::Zero;

use crate::error::{input, Result};
use crate::exact::{binom_int, int, RatMatrix, Rational};

/// Linear maps between anti-diagonals of the c-grid induced by
/// `c_ij = c_{i+1,j} + c_{i,j+1}`. Anti-diagonal vectors are indexed by the
/// first index `i` and include both `c_ij` and `c_ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMaps {
    /// Anti-diagonal `k+w-1` (entries `i = w-1..=k`) to anti-diagonal `k`.
    pub phi1: RatMatrix,
    /// Anti-diagonal `k` to anti-diagonal `k-w+1`.
    pub phi2: RatMatrix,
    pub phi: RatMatrix,
    pub ker_phi2_basis: Vec<Vec<Rational>>,
}

/// One step down: anti-diagonal `s` to `s - 1`, as full vectors over `i = 0..=k`.
fn step(k: usize, s: usize, v: &[Rational]) -> Vec<Rational> {
    (0..=k)
        .map(|i| {
            if i + 1 > s || s - 1 - i > k {
                return Rational::zero();
            }
            let below = v.get(i + 1).cloned().unwrap_or_default();
            &v[i] + below
        })
        .collect()
}

fn descend(k: usize, from: usize, to: usize, mut v: Vec<Rational>) -> Vec<Rational> {
    for s in (to + 1..=from).rev() {
        v = step(k, s, &v);
    }
    v
}

/// Basis `((-1)^j binom(i+j, i))_{j=0..=k}` for `i = 0..=w-2`.
pub fn ker_phi2_basis(k: usize, w: usize) -> Vec<Vec<Rational>> {
    (0..w.saturating_sub(1) as i64)
        .map(|i| {
            (0..=k as i64)
                .map(|j| int(if j % 2 == 0 { 1 } else { -1 }) * binom_int(i + j, i))
                .collect()
        })
        .collect()
}

pub fn phi_maps(k: usize, w: usize) -> Result<PhiMaps> {
    if w < 1 || w > k {
        return input(format!("phi maps need 1 <= w <= k, got ({k},{w})"));
    }
    let len = k - w + 2;
    let top = k + w - 1;
    let unit = |p: usize| {
        let mut v = vec![Rational::zero(); k + 1];
        v[p] = int(1);
        v
    };
    let cols1: Vec<_> = (0..len)
        .map(|i| descend(k, top, k, unit(w - 1 + i)))
        .collect();
    let phi1 = RatMatrix::from_columns(&cols1, k + 1);
    let cols2: Vec<_> = (0..=k)
        .map(|i| descend(k, k, k - w + 1, unit(i))[..len].to_vec())
        .collect();
    let phi2 = RatMatrix::from_columns(&cols2, len);
    let phi = phi2.mul(&phi1);
    Ok(PhiMaps {
        phi1,
        phi2,
        phi,
        ker_phi2_basis: ker_phi2_basis(k, w),
    })
}
