//! The chain of reduced linear systems in the x-coordinates
//! `x_i = binom(k+w-1, i+w-1) c_{i+w-1, k-i}`.
//!
//! Systems 3, 4, 5 and 5a act on these coordinates; systems 6, 7 and 7y act on
//! the rescaled coordinates given by [`subst_matrix`].

use num_traits::Zero;

use super::check_kw;
use crate::error::{input, Result};
use crate::exact::{binom, binom_int, int, RatMatrix, Rational};

/// Number of x-coordinates, `k - w + 2` (or 0 once `w > k + 1`).
pub fn x_len(k: usize, w: usize) -> usize {
    (k + 2).saturating_sub(w)
}

fn check_odd(k: usize, w: usize) -> Result<()> {
    check_kw(k, w)?;
    if w % 2 == 0 {
        return input(format!("reduced systems need odd w, got w = {w}"));
    }
    Ok(())
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn matrix(rows: Vec<Vec<Rational>>, cols: usize) -> RatMatrix {
    if rows.is_empty() {
        RatMatrix::zeros(0, cols)
    } else {
        RatMatrix::from_rows(rows, cols).expect("rows built with the column count")
    }
}

/// Antisymmetry of the top anti-diagonal: `x_i + x_{k-w+1-i} = 0`.
pub fn system3(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let mut rows = Vec::new();
    if len > 0 {
        let top = len - 1;
        for i in 0..=top / 2 {
            let mut row = vec![Rational::zero(); len];
            row[i] += int(1);
            row[top - i] += int(1);
            rows.push(row);
        }
    }
    Ok(matrix(rows, len))
}

/// Rows `i = 0..=k-w+1`: `(-1)^i sum_{j<=i} x_j - sum_{j<=i} binom(k-j, i-j) x_j`.
pub fn system4(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let ki = k as i64;
    let rows = (0..len as i64)
        .map(|i| {
            let mut row = vec![Rational::zero(); len];
            for j in 0..=i {
                row[j as usize] = int(sgn(i)) - binom_int(ki - j, i - j);
            }
            row
        })
        .collect();
    Ok(matrix(rows, len))
}

/// Rows `i = 1..=k-w+1`: `sum_{j<i} binom(k+1-j, i-j) x_j + gamma_i x_i`,
/// with `gamma_i = 2` for odd `i` and 0 for even `i`.
pub fn system5(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let ki = k as i64;
    let rows = (1..len as i64)
        .map(|i| {
            let mut row = vec![Rational::zero(); len];
            for j in 0..i {
                row[j as usize] = binom_int(ki + 1 - j, i - j);
            }
            row[i as usize] = int(if i % 2 == 1 { 2 } else { 0 });
            row
        })
        .collect();
    Ok(matrix(rows, len))
}

/// Which top binomial the extra odd-`k` equation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System5aForm {
    /// `binom(k+1-j, k-w+1-j)`; not satisfied by [`sol`].
    Diagnostic,
    /// `binom(k-j, k-w+1-j)`; agrees with [`sol`] for `w = 1` only.
    Corrected,
}

/// The single extra row for odd `k`; `None` for even `k`.
pub fn system5a(k: usize, w: usize, form: System5aForm) -> Result<Option<Vec<Rational>>> {
    check_odd(k, w)?;
    if k % 2 == 0 {
        return Ok(None);
    }
    let len = x_len(k, w) as i64;
    let (ki, wi) = (k as i64, w as i64);
    let top = match form {
        System5aForm::Diagnostic => ki + 1,
        System5aForm::Corrected => ki,
    };
    Ok(Some(
        (0..len)
            .map(|j| binom_int(top - j, ki - wi + 1 - j))
            .collect(),
    ))
}

/// Diagonal `S` with `old = S new`, `S_jj = binom(k+w+1, w+j)`.
pub fn subst_matrix(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let mut s = RatMatrix::zeros(len, len);
    for j in 0..len {
        s[(j, j)] = binom_int((k + w + 1) as i64, (w + j) as i64);
    }
    Ok(s)
}

/// Rows `i = 2, 4, .., 2 floor((k-w+2)/2)`: `sum_{j<i} binom(w+i, w+j) x_j`.
pub fn system6(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let wi = w as i64;
    let rows = (1..=len as i64 / 2)
        .map(|h| {
            let i = 2 * h;
            let mut row = vec![Rational::zero(); len];
            for j in 0..i.min(len as i64) {
                row[j as usize] = binom_int(wi + i, wi + j);
            }
            row
        })
        .collect();
    Ok(matrix(rows, len))
}

/// Rows `i = 1..=floor((k-w+2)/2)`:
/// `sum_{j<2i} binom((w-1)/2 + i, (w+1)/2 - i + j) x_j`.
pub fn system7(k: usize, w: usize) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let h = (w as i64 - 1) / 2;
    let rows = (1..=len as i64 / 2)
        .map(|i| {
            let mut row = vec![Rational::zero(); len];
            for j in 0..(2 * i).min(len as i64) {
                row[j as usize] = binom_int(h + i, h + 1 - i + j);
            }
            row
        })
        .collect();
    Ok(matrix(rows, len))
}

fn system7y_rows(
    k: usize,
    w: usize,
    y: &Rational,
    last_j: impl Fn(i64) -> i64,
) -> Result<RatMatrix> {
    check_odd(k, w)?;
    let len = x_len(k, w);
    let rows = (0..=(k as i64 - w as i64).div_euclid(2))
        .map(|i| {
            let mut row = vec![Rational::zero(); len];
            for j in 0..=last_j(i).min(len as i64 - 1) {
                row[j as usize] = binom(&(y + int(i)), 2 * i + 1 - j);
            }
            row
        })
        .collect();
    Ok(matrix(rows, len))
}

/// Rows `i = 0..=floor((k-w)/2)`: `sum_j binom(y+i, 2i+1-j) x_j`, summed over
/// every `j` with a nonzero binomial. At `y = (w+1)/2`, row `i` is equation
/// `i + 1` of [`system7`].
pub fn system7y(k: usize, w: usize, y: &Rational) -> Result<RatMatrix> {
    system7y_rows(k, w, y, |i| 2 * i + 1)
}

/// [`system7y`] with the sum cut at `j = 2i - 1`.
pub fn system7y_variant(k: usize, w: usize, y: &Rational) -> Result<RatMatrix> {
    system7y_rows(k, w, y, |i| 2 * i - 1)
}

/// Rank of system 3 stacked on [`system7y`]; equal to [`x_len`] exactly when
/// only the trivial solution exists.
pub fn system7y_rank(k: usize, w: usize, y: &Rational) -> Result<usize> {
    Ok(system3(k, w)?.vstack(&system7y(k, w, y)?).rank())
}

/// Solution `l` of system 5 in the original x-coordinates:
/// `x_j = (-1)^j binom(k-2l+2, j-2l+1)` for `2l <= j < 2 floor((k-w+2)/2)`, else 0.
pub fn sol(k: usize, w: usize, l: usize) -> Result<Vec<Rational>> {
    check_odd(k, w)?;
    check_l(k, w, l)?;
    let len = x_len(k, w);
    let (ki, li) = (k as i64, l as i64);
    let end = 2 * (len / 2);
    Ok((0..len)
        .map(|j| {
            if j < 2 * l || j >= end {
                Rational::zero()
            } else {
                let j = j as i64;
                int(sgn(j)) * binom_int(ki - 2 * li + 2, j - 2 * li + 1)
            }
        })
        .collect())
}

/// Solution `l` of systems 6 and 7 in the rescaled coordinates:
/// `x_j = (-1)^j binom(w+j, w+2l-1)` for `j >= 2l`, else 0.
pub fn sol3(k: usize, w: usize, l: usize) -> Result<Vec<Rational>> {
    check_odd(k, w)?;
    check_l(k, w, l)?;
    let (wi, li) = (w as i64, l as i64);
    Ok((0..x_len(k, w))
        .map(|j| {
            if j < 2 * l {
                Rational::zero()
            } else {
                let j = j as i64;
                int(sgn(j)) * binom_int(wi + j, wi + 2 * li - 1)
            }
        })
        .collect())
}

fn check_l(k: usize, w: usize, l: usize) -> Result<()> {
    if w > k || l > (k - w) / 2 {
        return input(format!(
            "special solution index l = {l} out of range for ({k},{w})"
        ));
    }
    Ok(())
}

/// All reduced systems for one odd-`w` type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSystems {
    pub k: usize,
    pub w: usize,
    pub system3: RatMatrix,
    pub system4: RatMatrix,
    pub system5: RatMatrix,
    pub system5a_diagnostic: Option<Vec<Rational>>,
    pub system5a_corrected: Option<Vec<Rational>>,
    pub subst: RatMatrix,
    pub system6: RatMatrix,
    pub system7: RatMatrix,
}

impl ReducedSystems {
    pub fn new(k: usize, w: usize) -> Result<Self> {
        Ok(Self {
            k,
            w,
            system3: system3(k, w)?,
            system4: system4(k, w)?,
            system5: system5(k, w)?,
            system5a_diagnostic: system5a(k, w, System5aForm::Diagnostic)?,
            system5a_corrected: system5a(k, w, System5aForm::Corrected)?,
            subst: subst_matrix(k, w)?,
            system6: system6(k, w)?,
            system7: system7(k, w)?,
        })
    }

    /// Solution dimension of systems 3 and 7 together, in rescaled coordinates.
    pub fn dim_3_7(&self) -> usize {
        self.system3.vstack(&self.system7).nullspace().len()
    }

    /// Solution dimension of systems 3 and 4 together, in original coordinates.
    pub fn dim_3_4(&self) -> usize {
        self.system3.vstack(&self.system4).nullspace().len()
    }

    /// Original coordinates of a rescaled vector.
    pub fn to_old(&self, new: &[Rational]) -> Vec<Rational> {
        self.subst.mul_vec(new)
    }

    /// Rescaled coordinates of an original vector.
    pub fn to_new(&self, old: &[Rational]) -> Vec<Rational> {
        old.iter()
            .enumerate()
            .map(|(j, v)| v / &self.subst[(j, j)])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn is_solution(m: &RatMatrix, x: &[Rational]) -> bool {
        m.mul_vec(x).iter().all(Zero::is_zero)
    }

    #[test]
    fn k3_model_through_the_chain() {
        let r = ReducedSystems::new(3, 1).unwrap();
        let x = ints(&[3, -6, 6, -3]);
        assert!(is_solution(&r.system3, &x));
        assert!(is_solution(&r.system4, &x));
        assert!(is_solution(&r.system5, &x));
        let u = r.to_new(&x);
        assert_eq!(u, vec![frac(3, 5), frac(-3, 5), frac(3, 5), frac(-3, 5)]);
        assert!(is_solution(&r.system6, &u));
        assert!(is_solution(&r.system7, &u));
        assert_eq!(r.to_old(&u), x);
    }

    #[test]
    fn special_solutions() {
        assert_eq!(sol(3, 1, 0).unwrap(), ints(&[5, -10, 10, -5]));
        assert_eq!(sol3(3, 1, 0).unwrap(), ints(&[1, -1, 1, -1]));
        assert_eq!(sol3(5, 1, 1).unwrap(), ints(&[0, 0, 3, -6, 10, -15]));
        assert!(sol(3, 1, 2).is_err());
    }

    #[test]
    fn system5a_forms_on_sol() {
        let x = sol(3, 1, 0).unwrap();
        let dot = |r: Vec<Rational>| -> Rational { r.iter().zip(&x).map(|(a, b)| a * b).sum() };
        let diag = system5a(3, 1, System5aForm::Diagnostic).unwrap().unwrap();
        let fixed = system5a(3, 1, System5aForm::Corrected).unwrap().unwrap();
        assert_eq!(dot(diag), int(5));
        assert_eq!(dot(fixed), int(0));
        assert!(system5a(4, 1, System5aForm::Diagnostic).unwrap().is_none());
    }

    #[test]
    fn sevens_agree_at_the_natural_parameter() {
        for (k, w) in [(6, 3), (9, 3), (11, 5), (8, 1)] {
            let y = frac((w as i64 + 1) / 2, 1);
            let s7 = system7(k, w).unwrap();
            let s7y = system7y(k, w, &y).unwrap();
            for i in 0..s7y.rows() {
                assert_eq!(s7y.row(i), s7.row(i), "({k},{w}) row {i}");
            }
        }
    }

    #[test]
    fn seven_y_at_six_three() {
        let full = x_len(6, 3);
        assert_eq!(system7y_rank(6, 3, &int(2)).unwrap(), full);
        for y in [int(0), int(1), frac(-5, 2)] {
            assert!(system7y_rank(6, 3, &y).unwrap() < full);
        }
    }

    #[test]
    fn even_w_rejected() {
        assert!(system3(5, 2).is_err());
    }
}
