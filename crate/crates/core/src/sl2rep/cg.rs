use num_traits::Zero;

use super::{decompose, irreducible, SL2Module};
use crate::error::{Error, Result};
use crate::exact::{dot, int, normalize_leading, RatMatrix, Rational};

/// The equivariant surjection `source -> V_t` for a component of multiplicity
/// one. The highest-weight vector of that component, scaled to leading
/// coefficient 1 in basis order, maps to `v_0`.
pub fn cg_projection(source: &SL2Module, t: i64) -> Result<RatMatrix> {
    let parts = decompose(source)?;
    let mult = parts
        .iter()
        .find(|(l, _)| *l == t)
        .map(|(_, c)| *c)
        .unwrap_or(0);
    if mult != 1 {
        return Err(Error::Multiplicity {
            weight: t,
            multiplicity: mult,
        });
    }
    let n = source.dim();
    let top = source.weight_space(t);
    let above = source.weight_space(t + 2);

    // highest-weight vector: e v = 0 with v supported on weight t
    let e_top = RatMatrix::from_columns(
        &top.iter().map(|&i| source.e.column(i)).collect::<Vec<_>>(),
        n,
    );
    let hw_local = e_top
        .nullspace()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Structural(format!("no highest-weight vector of weight {t}")))?;
    let mut hw = vec![Rational::zero(); n];
    for (p, &i) in top.iter().enumerate() {
        hw[i] = hw_local[p].clone();
    }
    let hw = normalize_leading(&hw);

    // first row: a functional on weight t killing f(weight t+2)
    let constraints: Vec<Vec<Rational>> = above
        .iter()
        .map(|&s| top.iter().map(|&i| source.f[(i, s)].clone()).collect())
        .collect();
    let row0_local = if constraints.is_empty() {
        vec![int(1)]
    } else {
        RatMatrix::from_rows(constraints, top.len())?
            .nullspace()
            .into_iter()
            .next()
            .ok_or_else(|| Error::Structural(format!("no projection onto weight {t}")))?
    };
    let mut row0 = vec![Rational::zero(); n];
    for (p, &i) in top.iter().enumerate() {
        row0[i] = row0_local[p].clone();
    }
    let scale = dot(&row0, &hw);
    if scale.is_zero() {
        return Err(Error::Structural(
            "projection vanishes on the highest-weight vector".into(),
        ));
    }
    let row0: Vec<Rational> = row0.iter().map(|v| v / &scale).collect();

    // P_{i+1} = P_i e / ((i+1)(t-i))
    let et = source.e.transpose();
    let mut rows = vec![row0];
    for i in 0..t {
        let next = et.mul_vec(rows.last().unwrap());
        let d = int((i + 1) * (t - i));
        rows.push(next.iter().map(|v| v / &d).collect());
    }
    let p = RatMatrix::from_rows(rows, n)?;
    let target = irreducible(t as usize);
    for (s, tg) in [
        (&source.e, &target.e),
        (&source.f, &target.f),
        (&source.h, &target.h),
    ] {
        if p.mul(s) != tg.mul(&p) {
            return Err(Error::Structural(format!(
                "projection onto weight {t} is not equivariant"
            )));
        }
    }
    Ok(p)
}
