//! Integer invariants of a frame algebra: the flag `L_i`, the spaces `A_r`
//! and `K_i`, and the numbers `w` and `i` read off from them.

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::liealg::{GradedLieAlgebra, Subspace};

/// A frame algebra with its marked elements located by label.
#[derive(Clone, Debug)]
pub struct FrameAlgebra {
    pub algebra: GradedLieAlgebra,
    pub k: usize,
    pub e: usize,
    pub x: Vec<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
}

impl FrameAlgebra {
    /// Locate `E` and `x0, x1, ..` (consecutive); `a`, `b`, `c` are optional.
    pub fn new(algebra: GradedLieAlgebra) -> Result<Self> {
        let e = algebra.idx("E")?;
        let x: Vec<usize> = (0..)
            .map_while(|j| algebra.index_of(&format!("x{j}")))
            .collect();
        if x.len() < 2 {
            return input("a frame needs at least x0 and x1");
        }
        Ok(Self {
            k: x.len() - 1,
            e,
            x,
            a: algebra.index_of("a"),
            b: algebra.index_of("b"),
            c: algebra.index_of("c"),
            algebra,
        })
    }

    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `H = span{x_0..x_k}`.
    pub fn h_space(&self) -> Subspace {
        Subspace::coordinate(self.dim(), &self.x)
    }

    fn ad_e(&self, v: &[crate::exact::Rational]) -> Vec<crate::exact::Rational> {
        self.algebra.bracket(&self.algebra.unit(self.e), v)
    }
}

/// `L_0 = span{E, x_0}`, `L_{i+1} = L_i + [E, L_i]`, for `i = 0..=k`.
pub fn filtration_l(f: &FrameAlgebra) -> Vec<Subspace> {
    let mut cur = Subspace::coordinate(f.dim(), &[f.e, f.x[0]]);
    let mut out = vec![cur.clone()];
    for _ in 0..f.k {
        let images: Vec<_> = cur.basis().iter().map(|v| f.ad_e(v)).collect();
        cur = cur.with(&images);
        out.push(cur.clone());
    }
    out
}

/// Whether the dimensions of [`filtration_l`] are `2, 3, .., k+2`.
pub fn flag_is_complete(dims: &[usize]) -> bool {
    dims.iter().enumerate().all(|(i, &d)| d == i + 2)
}

/// `A_r = H + span{[L_s, L_t] : s + t <= r}`.
pub fn a_space(f: &FrameAlgebra, flag: &[Subspace], r: usize) -> Subspace {
    let mut acc = f.h_space();
    for s in 0..flag.len().min(r + 1) {
        let t = (r - s).min(flag.len() - 1);
        acc = acc.sum(&Subspace::bracket_span(&f.algebra, &flag[s], &flag[t]));
    }
    acc
}

/// The least `r` with `A_r != H`.
pub fn w_invariant(f: &FrameAlgebra) -> Result<usize> {
    let flag = filtration_l(f);
    let h = f.h_space();
    (0..=2 * f.k)
        .find(|&r| a_space(f, &flag, r).dim() > h.dim())
        .ok_or_else(|| {
            Error::Structural(
                "span{x_0..x_k} is closed under brackets: integrable sub-distribution".into(),
            )
        })
}

/// `dim A_w - dim H`.
pub fn dim_a_mod_h(f: &FrameAlgebra, w: usize) -> usize {
    let flag = filtration_l(f);
    a_space(f, &flag, w).dim() - f.h_space().dim()
}

/// The least `i >= 1` with `A_w ⊂ K_i`, where
/// `K_i = H + span{G, ad_E G, .., ad_E^{i-1} G}` and `G = [x_0, x_w]`.
pub fn i_invariant(f: &FrameAlgebra) -> Result<usize> {
    let w = w_invariant(f)?;
    if w > f.k {
        return Err(Error::Structural(format!(
            "x{w} does not exist for k = {}",
            f.k
        )));
    }
    let flag = filtration_l(f);
    let target = a_space(f, &flag, w);
    let alg = &f.algebra;
    let mut g = alg.bracket(&alg.unit(f.x[0]), &alg.unit(f.x[w]));
    let mut k_space = f.h_space();
    for i in 1..=f.dim() {
        k_space = k_space.with(std::slice::from_ref(&g));
        if k_space.contains_all(&target) {
            return Ok(i);
        }
        g = f.ad_e(&g);
    }
    Err(Error::Structural(
        "A_w is not reached by the ad_E tower".into(),
    ))
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub k: usize,
    pub w: usize,
    pub i: usize,
    #[serde(rename = "flagL_dims")]
    pub flag_l_dims: Vec<usize>,
}

pub fn invariant_report(f: &FrameAlgebra) -> Result<InvariantReport> {
    Ok(InvariantReport {
        k: f.k,
        w: w_invariant(f)?,
        i: i_invariant(f)?,
        flag_l_dims: filtration_l(f).iter().map(Subspace::dim).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraded::{assemble_frame, solve_family};

    fn frame(k: usize, w: usize) -> FrameAlgebra {
        let c = solve_family(k, w).unwrap().normalized_c.unwrap();
        FrameAlgebra::new(assemble_frame(&c).unwrap()).unwrap()
    }

    #[test]
    fn k3_report() {
        let f = frame(3, 1);
        let r = invariant_report(&f).unwrap();
        assert_eq!(
            r,
            InvariantReport {
                k: 3,
                w: 1,
                i: 1,
                flag_l_dims: vec![2, 3, 4, 5]
            }
        );
        assert_eq!(dim_a_mod_h(&f, 1), 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"flagL_dims\":[2,3,4,5]"));
    }

    #[test]
    fn w_three_at_k8() {
        let f = frame(8, 3);
        assert_eq!(w_invariant(&f).unwrap(), 3);
        assert_eq!(i_invariant(&f).unwrap(), 1);
    }

    #[test]
    fn abelian_flag_stalls() {
        let g = GradedLieAlgebra::single_graded(&[("E", -1), ("x0", -1), ("x1", -1), ("x2", -1)])
            .unwrap();
        let f = FrameAlgebra::new(g).unwrap();
        let dims: Vec<_> = filtration_l(&f).iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 2, 2]);
        assert!(!flag_is_complete(&dims));
        assert!(w_invariant(&f).is_err());
    }
}
