//! Graded nilpotent Lie algebras given by structure constants.
//!
//! Every basis element carries a bidegree; single-graded algebras use `(d, d)`.
//! Brackets are stored sparsely for `i < j` only.

mod builtin;
mod derivations;
mod json;
mod subspace;

pub use builtin::{
    builtin_model, m7_3_3, model_k3, model_k4, model_k6, symb, type_kw_nilpotent, NSign,
};
pub use derivations::{degree_zero_derivations, derivation_defect, DerivationSpace};
pub use json::AlgebraJson;
pub use subspace::{square_check, weak_derived_flag, Subspace};

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{input, Error, Result};
use crate::exact::{RatMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub bidegree: (i64, i64),
}

impl BasisElement {
    pub fn new(label: impl Into<String>, bidegree: (i64, i64)) -> Self {
        Self {
            label: label.into(),
            bidegree,
        }
    }
}

/// Sparse vector: sorted by index, no zero coefficients.
pub type Sparse = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    basis: Vec<BasisElement>,
    brackets: BTreeMap<(usize, usize), Sparse>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    /// Largest absolute coefficient of any cyclic sum; zero iff Jacobi holds.
    pub residual: Rational,
    /// First violating basis triple in lexicographic order.
    pub witness: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn normalize(terms: impl IntoIterator<Item = (usize, Rational)>) -> Sparse {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, c) in terms {
        *acc.entry(i).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl GradedLieAlgebra {
    /// Abelian algebra on the given basis.
    pub fn new(basis: Vec<BasisElement>) -> Result<Self> {
        if basis.is_empty() {
            return input("an algebra needs at least one basis element");
        }
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert(b.label.as_str()) {
                return input(format!("duplicate basis label {:?}", b.label));
            }
        }
        Ok(Self {
            basis,
            brackets: BTreeMap::new(),
        })
    }

    /// Single-graded constructor: each element gets bidegree `(d, d)`.
    pub fn single_graded(elements: &[(&str, i64)]) -> Result<Self> {
        Self::new(
            elements
                .iter()
                .map(|&(l, d)| BasisElement::new(l, (d, d)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn bidegree(&self, i: usize) -> (i64, i64) {
        self.basis[i].bidegree
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Index lookup that reports a missing label as an input error.
    pub fn idx(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::Input(format!("no basis element {label:?}")))
    }

    /// Stored brackets, `i < j`, in increasing key order.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Sparse)> {
        self.brackets.iter()
    }

    /// Set `[e_i, e_j]`. Reversed indices store the negated value. Each term
    /// must sit in bidegree `deg(e_i) + deg(e_j)`.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Rational)]) -> Result<()> {
        let n = self.dim();
        if i >= n || j >= n || terms.iter().any(|(t, _)| *t >= n) {
            return input(format!("bracket index out of range (dim {n})"));
        }
        let terms = normalize(terms.iter().cloned());
        if i == j {
            if terms.is_empty() {
                return Ok(());
            }
            return input(format!("[{0}, {0}] must vanish", self.label(i)));
        }
        let (a, b) = self.bidegree(i);
        let (c, d) = self.bidegree(j);
        for (t, _) in &terms {
            if self.bidegree(*t) != (a + c, b + d) {
                return input(format!(
                    "[{}, {}] cannot contain {}: bidegree {:?} is not {:?}",
                    self.label(i),
                    self.label(j),
                    self.label(*t),
                    self.bidegree(*t),
                    (a + c, b + d)
                ));
            }
        }
        let (key, terms) = if i < j {
            ((i, j), terms)
        } else {
            ((j, i), terms.into_iter().map(|(t, c)| (t, -c)).collect())
        };
        if terms.is_empty() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, terms);
        }
        Ok(())
    }

    /// Label-based convenience wrapper around [`Self::set_bracket`].
    pub fn set(&mut self, a: &str, b: &str, terms: &[(&str, Rational)]) -> Result<()> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        let terms = terms
            .iter()
            .map(|(l, c)| Ok((self.idx(l)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.set_bracket(i, j, &terms)
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Sparse {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|t| t.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// `[u, e_j]` for sparse `u`.
    pub fn bracket_sparse_basis(&self, u: &[(usize, Rational)], j: usize) -> Sparse {
        normalize(u.iter().flat_map(|(i, a)| {
            self.bracket_basis(*i, j)
                .into_iter()
                .map(move |(t, c)| (t, a * c))
        }))
    }

    /// Bracket of two dense vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim());
        assert_eq!(v.len(), self.dim());
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), terms) in &self.brackets {
            let w = &u[i] * &v[j] - &u[j] * &v[i];
            if w.is_zero() {
                continue;
            }
            for (t, c) in terms {
                out[*t] += &w * c;
            }
        }
        out
    }

    /// Matrix of `ad_u`, columns indexed by the basis.
    pub fn ad(&self, u: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (&(i, j), terms) in &self.brackets {
            for (t, c) in terms {
                // [u, e_j] picks u_i [e_i, e_j]; [u, e_i] picks -u_j [e_i, e_j]
                if !u[i].is_zero() {
                    m[(*t, j)] += &u[i] * c;
                }
                if !u[j].is_zero() {
                    m[(*t, i)] -= &u[j] * c;
                }
            }
        }
        m
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    fn jacobi_triple(&self, i: usize, j: usize, l: usize) -> Sparse {
        let a = self.bracket_sparse_basis(&self.bracket_basis(i, j), l);
        let b = self.bracket_sparse_basis(&self.bracket_basis(j, l), i);
        let c = self.bracket_sparse_basis(&self.bracket_basis(l, i), j);
        normalize(a.into_iter().chain(b).chain(c))
    }

    /// Cyclic sums over all basis triples `i < j < l`.
    pub fn jacobi_residual(&self) -> JacobiReport {
        let n = self.dim();
        let mut residual = Rational::zero();
        let mut witness = None;
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    for (_, c) in self.jacobi_triple(i, j, l) {
                        if witness.is_none() {
                            witness = Some((i, j, l));
                        }
                        if c.abs() > residual {
                            residual = c.abs();
                        }
                    }
                }
            }
        }
        JacobiReport { residual, witness }
    }

    /// Error naming the first violating triple, if any.
    pub fn verify_jacobi(&self) -> Result<()> {
        match self.jacobi_residual().witness {
            None => Ok(()),
            Some((i, j, l)) => Err(Error::Jacobi(
                self.label(i).to_string(),
                self.label(j).to_string(),
                self.label(l).to_string(),
            )),
        }
    }

    /// True when every stored bracket term respects bidegree additivity.
    /// Construction already enforces this; the check exists for parsed input.
    pub fn bidegrees_additive(&self) -> bool {
        self.brackets.iter().all(|(&(i, j), terms)| {
            let (a, b) = self.bidegree(i);
            let (c, d) = self.bidegree(j);
            terms
                .iter()
                .all(|(t, _)| self.bidegree(*t) == (a + c, b + d))
        })
    }

    /// Basis indices whose second degree equals `d2`.
    pub fn indices_with_degree2(&self, d2: i64) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].bidegree.1 == d2)
            .collect()
    }

    /// Copy with every bracket `(i, j)` selected by `drop` removed.
    pub fn without_brackets(&self, drop: impl Fn(usize, usize) -> bool) -> Self {
        Self {
            basis: self.basis.clone(),
            brackets: self
                .brackets
                .iter()
                .filter(|(&(i, j), _)| !drop(i, j))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn heisenberg() -> GradedLieAlgebra {
        let mut h = GradedLieAlgebra::single_graded(&[("x", -1), ("y", -1), ("z", -2)]).unwrap();
        h.set("x", "y", &[("z", int(1))]).unwrap();
        h
    }

    #[test]
    fn reversed_bracket_is_negated() {
        let h = heisenberg();
        assert_eq!(h.bracket_basis(1, 0), vec![(2, int(-1))]);
        assert!(h.bracket_basis(0, 0).is_empty());
    }

    #[test]
    fn rejects_bidegree_violation() {
        let mut h = heisenberg();
        assert!(h.set("x", "z", &[("y", int(1))]).is_err());
    }

    #[test]
    fn abelian_is_jacobi() {
        let a = GradedLieAlgebra::single_graded(&[("u", -1), ("v", -1), ("w", -1)]).unwrap();
        assert!(a.jacobi_residual().holds());
        assert!(heisenberg().jacobi_residual().holds());
    }

    #[test]
    fn ad_matches_bracket() {
        let h = heisenberg();
        let u = vec![int(2), int(3), int(5)];
        let v = vec![int(-1), int(4), int(7)];
        assert_eq!(h.ad(&u).mul_vec(&v), h.bracket(&u, &v));
    }

    #[test]
    fn broken_jacobi_is_detected() {
        // so(3)-like brackets with a wrong sign, all in degree 0
        let mut g = GradedLieAlgebra::single_graded(&[("a", 0), ("b", 0), ("c", 0)]).unwrap();
        g.set("a", "b", &[("c", int(1))]).unwrap();
        g.set("b", "c", &[("a", int(1))]).unwrap();
        g.set("c", "a", &[("b", int(1))]).unwrap();
        assert!(g.jacobi_residual().holds());
        g.set("c", "a", &[("a", int(1))]).unwrap();
        let r = g.jacobi_residual();
        assert_eq!(r.witness, Some((0, 1, 2)));
        assert!(g.verify_jacobi().is_err());
    }
}
