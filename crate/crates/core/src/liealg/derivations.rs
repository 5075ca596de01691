use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::exact::{RatMatrix, Rational};

/// Derivations preserving the second degree, split by their first-degree shift.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub dim: usize,
    /// `(shift, matrix)`: each matrix maps bidegree `(a, b)` to `(a + shift, b)`.
    pub basis: Vec<(i64, RatMatrix)>,
}

/// `D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j]` for a candidate matrix.
pub fn derivation_defect(alg: &GradedLieAlgebra, d: &RatMatrix) -> Rational {
    let n = alg.dim();
    let mut worst = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            let ei = alg.unit(i);
            let ej = alg.unit(j);
            let lhs = d.mul_vec(&alg.bracket(&ei, &ej));
            let a = alg.bracket(&d.column(i), &ej);
            let b = alg.bracket(&ei, &d.column(j));
            for t in 0..n {
                let r = &lhs[t] - &a[t] - &b[t];
                let r = if r < Rational::zero() { -r } else { r };
                if r > worst {
                    worst = r;
                }
            }
        }
    }
    worst
}

/// Grading-preserving derivations, solved one first-degree shift at a time.
/// The algebra must satisfy the Jacobi identity.
pub fn degree_zero_derivations(alg: &GradedLieAlgebra) -> Result<DerivationSpace> {
    if !alg.jacobi_residual().holds() {
        return input("derivations requested on an algebra that fails Jacobi");
    }
    let n = alg.dim();
    let deg = |i: usize| alg.bidegree(i);
    let mut shifts = BTreeSet::new();
    for s in 0..n {
        for t in 0..n {
            if deg(s).1 == deg(t).1 {
                shifts.insert(deg(t).0 - deg(s).0);
            }
        }
    }
    // structure constants c[(i, j)] = [e_i, e_j] for all ordered pairs
    let mut c: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (&(i, j), terms) in alg.brackets() {
        c.insert((i, j), terms.clone());
        c.insert((j, i), terms.iter().map(|(t, v)| (*t, -v)).collect());
    }
    let empty = Vec::new();
    let br = |i: usize, j: usize| c.get(&(i, j)).unwrap_or(&empty);

    let mut basis = Vec::new();
    for &shift in &shifts {
        // unknown D_{t,s}: coefficient of e_t in D e_s
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|s| (0..n).map(move |t| (t, s)))
            .filter(|&(t, s)| deg(t).1 == deg(s).1 && deg(t).0 - deg(s).0 == shift)
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        let pos: BTreeMap<(usize, usize), usize> =
            unknowns.iter().enumerate().map(|(p, &u)| (u, p)).collect();
        let by_source: Vec<Vec<usize>> = (0..n)
            .map(|s| unknowns.iter().filter(|u| u.1 == s).map(|u| u.0).collect())
            .collect();

        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut eqs: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
                let mut add = |t: usize, u: (usize, usize), v: Rational| {
                    *eqs.entry(t)
                        .or_default()
                        .entry(pos[&u])
                        .or_insert_with(Rational::zero) += v;
                };
                // D[e_i, e_j]
                for (m, v) in br(i, j) {
                    for &t in &by_source[*m] {
                        add(t, (t, *m), v.clone());
                    }
                }
                // -[D e_i, e_j]
                for &a in &by_source[i] {
                    for (t, v) in br(a, j) {
                        add(*t, (a, i), -v);
                    }
                }
                // -[e_i, D e_j]
                for &a in &by_source[j] {
                    for (t, v) in br(i, a) {
                        add(*t, (a, j), -v);
                    }
                }
                for (_, eq) in eqs {
                    if eq.values().all(Zero::is_zero) {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); unknowns.len()];
                    for (p, v) in eq {
                        row[p] = v;
                    }
                    rows.push(row);
                }
            }
        }
        let sys = RatMatrix::from_rows(rows, unknowns.len())?;
        for sol in sys.nullspace() {
            let mut d = RatMatrix::zeros(n, n);
            for (p, &(t, s)) in unknowns.iter().enumerate() {
                d[(t, s)] = sol[p].clone();
            }
            basis.push((shift, d));
        }
    }
    Ok(DerivationSpace {
        dim: basis.len(),
        basis,
    })
}
