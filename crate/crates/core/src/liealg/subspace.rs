use num_traits::{One, Zero};

use super::GradedLieAlgebra;
use crate::error::{input, Result};
use crate::exact::{RatMatrix, Rational};

/// Linear subspace of an algebra, kept in reduced echelon form so that two
/// equal subspaces compare equal entry by entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = RatMatrix::from_rows(vectors.to_vec(), ambient)
            .expect("vector length must match ambient dimension");
        let e = m.echelon();
        Self {
            ambient,
            basis: e.rows,
            pivots: e.pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of the listed basis vectors of the ambient space.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self::new(ambient, &vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::new(self.ambient, &vs)
    }

    pub fn with(&self, extra: &[Vec<Rational>]) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(extra.iter().cloned());
        Self::new(self.ambient, &vs)
    }

    /// `span{[u, v] : u in a, v in b}`.
    pub fn bracket_span(alg: &GradedLieAlgebra, a: &Subspace, b: &Subspace) -> Self {
        let mut vs = Vec::new();
        for u in &a.basis {
            for v in &b.basis {
                let w = alg.bracket(u, v);
                if w.iter().any(|x| !x.is_zero()) {
                    vs.push(w);
                }
            }
        }
        Self::new(alg.dim(), &vs)
    }
}

/// Dimensions of `D^1 = D`, `D^j = D^{j-1} + [D, D^{j-1}]` up to stabilization.
pub fn weak_derived_flag(alg: &GradedLieAlgebra, d: &Subspace) -> Result<Vec<usize>> {
    if d.dim() == 0 {
        return input("weak derived flag of the zero subspace");
    }
    let mut cur = d.clone();
    let mut dims = vec![cur.dim()];
    loop {
        let next = cur.sum(&Subspace::bracket_span(alg, d, &cur));
        if next.dim() == cur.dim() {
            return Ok(dims);
        }
        dims.push(next.dim());
        cur = next;
    }
}

/// Whether `sub + [sub, sub]` equals `target`.
pub fn square_check(alg: &GradedLieAlgebra, sub: &Subspace, target: &Subspace) -> Result<bool> {
    if !target.contains_all(sub) {
        return input("square check needs sub contained in target");
    }
    Ok(sub.sum(&Subspace::bracket_span(alg, sub, sub)) == *target)
}
