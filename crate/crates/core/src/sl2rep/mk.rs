use num_traits::Zero;

use super::{cg_projection, exterior_power, irreducible, sorted_tuples, tensor};
use crate::bigraded::CMatrix;
use crate::error::{input, Error, Result};
use crate::exact::Rational;
use crate::liealg::{BasisElement, GradedLieAlgebra};

/// Unordered triples of distinct odd integers in `[-k, k]` summing to `l`.
pub fn n_count(k: i64, l: i64) -> Result<u64> {
    if k < 1 || k % 2 == 0 {
        return input(format!("N_k(l) is defined for odd k, got {k}"));
    }
    let odd: Vec<i64> = (-k..=k).filter(|a| a.rem_euclid(2) == 1).collect();
    let mut count = 0;
    for (p, &a) in odd.iter().enumerate() {
        for (q, &b) in odd.iter().enumerate().skip(p + 1) {
            let c = l - a - b;
            if c > b && c <= k && odd[q..].contains(&c) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Multiplicity of `V_l` in `∧^3 V_k` for odd `k`, as `N_k(l) - N_k(l+2)`.
pub fn wedge3_multiplicity(k: i64, l: i64) -> Result<u64> {
    let (a, b) = (n_count(k, l)?, n_count(k, l + 2)?);
    Ok(a.saturating_sub(b))
}

/// `m_k = V_k + V_{k-1} + V_1` in degrees `-1, -2, -3`, with brackets given by
/// the projections `∧^2 V_k -> V_{k-1}` and `V_k ⊗ V_{k-1} -> V_1`.
/// Labels are `v0..vk`, `u0..u{k-1}`, `t0`, `t1`.
pub fn build_mk(k: usize) -> Result<GradedLieAlgebra> {
    if k <= 1 || k % 4 != 1 {
        return input(format!(
            "m_k needs k = 1 mod 4 with k > 1; for k = {k} the wedge square of V_k has no V_{{k-1}} component"
        ));
    }
    let w = (k + 1) as i64 / 2;
    let ki = k as i64;
    let vk = irreducible(k);
    let vk1 = irreducible(k - 1);
    let tau = cg_projection(&exterior_power(&vk, 2), ki - 1)?;
    let sigma = cg_projection(&tensor(&vk, &vk1), 1)?;

    let mut basis = Vec::with_capacity(2 * k + 3);
    for j in 0..=ki {
        basis.push(BasisElement::new(format!("v{j}"), (-j, -1)));
    }
    for j in 0..ki {
        basis.push(BasisElement::new(format!("u{j}"), (-(w + j), -2)));
    }
    basis.push(BasisElement::new("t0", (-(w + ki - 1), -3)));
    basis.push(BasisElement::new("t1", (-(w + ki), -3)));
    let mut g = GradedLieAlgebra::new(basis)?;
    let v = |i: usize| i;
    let u = |j: usize| k + 1 + j;
    let t = |r: usize| 2 * k + 1 + r;

    for (col, pair) in sorted_tuples(k + 1, 2).iter().enumerate() {
        let terms: Vec<(usize, Rational)> = (0..k)
            .filter(|&m| !tau[(m, col)].is_zero())
            .map(|m| (u(m), tau[(m, col)].clone()))
            .collect();
        g.set_bracket(v(pair[0]), v(pair[1]), &terms)?;
    }
    for i in 0..=k {
        for j in 0..k {
            let col = i * k + j;
            let terms: Vec<(usize, Rational)> = (0..2)
                .filter(|&r| !sigma[(r, col)].is_zero())
                .map(|r| (t(r), sigma[(r, col)].clone()))
                .collect();
            g.set_bracket(v(i), u(j), &terms)?;
        }
    }
    g.verify_jacobi()?;
    Ok(g)
}

/// Structure constants of `m_k` in the frame `x_j = f^j v_0`,
/// `y_1 = [x_0, x_w]`, `y_{j+1} = f y_j`, with `w = (k+1)/2`.
pub fn extract_c(mk: &GradedLieAlgebra) -> Result<CMatrix> {
    let k = (0..)
        .take_while(|j| mk.index_of(&format!("v{j}")).is_some())
        .count()
        .checked_sub(1)
        .ok_or_else(|| Error::Input("no v0 in the algebra".into()))?;
    let w = (k + 1) / 2;
    let x = (0..=k)
        .map(|j| mk.idx(&format!("v{j}")))
        .collect::<Result<Vec<_>>>()?;
    let us = (0..k)
        .map(|j| mk.idx(&format!("u{j}")))
        .collect::<Result<Vec<_>>>()?;
    let coeff = |a: usize, b: usize, target: usize| -> Rational {
        mk.bracket_basis(x[a], x[b])
            .into_iter()
            .find(|(i, _)| *i == target)
            .map(|(_, c)| c)
            .unwrap_or_default()
    };
    let alpha = coeff(0, w, us[0]);
    if alpha.is_zero() {
        return Err(Error::Structural(format!(
            "[x0, x{w}] vanishes, so the model is not of type ({k},{w})"
        )));
    }
    let mut c = CMatrix::zero(k, w)?;
    for i in 0..=k {
        for j in i + 1..=k {
            let br = mk.bracket_basis(x[i], x[j]);
            if br.is_empty() {
                continue;
            }
            let m = (i + j).checked_sub(w).filter(|&m| m < k).ok_or_else(|| {
                Error::Structural(format!("[x{i}, x{j}] is nonzero below degree {w}"))
            })?;
            for (idx, val) in br {
                if idx != us[m] {
                    return Err(Error::Structural(format!(
                        "[x{i}, x{j}] leaves the expected weight line"
                    )));
                }
                c.set(i, j, val / &alpha)?;
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraded::{compare_projective, solve_family};
    use crate::exact::int;

    #[test]
    fn triple_counts() {
        assert_eq!(n_count(5, 1).unwrap(), 3);
        assert_eq!(n_count(3, 1).unwrap(), 1);
        assert_eq!(n_count(7, 3 * 7 - 6).unwrap(), 1);
        assert!(n_count(4, 1).is_err());
    }

    #[test]
    fn wedge3_matches_decomposition() {
        for k in [1usize, 3, 5, 7] {
            let parts = super::super::decompose(&exterior_power(&irreducible(k), 3)).unwrap();
            for l in 0..=3 * k as i64 {
                let want = parts.iter().find(|p| p.0 == l).map_or(0, |p| p.1) as u64;
                assert_eq!(
                    wedge3_multiplicity(k as i64, l).unwrap(),
                    want,
                    "k={k} l={l}"
                );
            }
        }
    }

    #[test]
    fn m5_closes_and_matches_family() {
        let g = build_mk(5).unwrap();
        assert_eq!(g.dim(), 13);
        let c = extract_c(&g).unwrap();
        assert_eq!(c.w(), 3);
        for (i, j, _) in c.entries() {
            assert!(i + j >= 3);
        }
        let f = solve_family(5, 3).unwrap();
        let lambda = compare_projective(&f.normalized_c.unwrap(), &c).unwrap();
        assert!(lambda.is_some());
        assert_ne!(c.get(0, 3), int(0));
    }

    #[test]
    fn wrong_residue_rejected() {
        assert!(build_mk(7).is_err());
        assert!(build_mk(1).is_err());
    }
}
