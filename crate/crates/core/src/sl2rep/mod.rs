//! Finite-dimensional sl2 modules over the rationals, on weight bases.

mod cg;
mod mk;

pub use cg::cg_projection;
pub use mk::{build_mk, extract_c, n_count, wedge3_multiplicity};

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::exact::{int, RatMatrix};

/// An sl2 action by exact matrices on a basis of h-eigenvectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Module {
    pub e: RatMatrix,
    pub f: RatMatrix,
    pub h: RatMatrix,
    pub weights: Vec<i64>,
}

impl SL2Module {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, and `h` diagonal with the stated weights.
    pub fn relations_hold(&self) -> bool {
        let two = int(2);
        let n = self.dim();
        let diagonal = (0..n).all(|i| {
            (0..n).all(|j| {
                let v = &self.h[(i, j)];
                if i == j {
                    *v == int(self.weights[i])
                } else {
                    v.is_zero()
                }
            })
        });
        diagonal
            && self.e.commutator(&self.f) == self.h
            && self.h.commutator(&self.e) == self.e.scale(&two)
            && self.h.commutator(&self.f) == self.f.scale(&(-two))
    }

    /// Basis indices of weight `l`.
    pub fn weight_space(&self, l: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == l).collect()
    }
}

/// `V_k` on `v_0..v_k`: `h v_i = (k-2i) v_i`, `f v_i = v_{i+1}`, `e v_i = i(k-i+1) v_{i-1}`.
pub fn irreducible(k: usize) -> SL2Module {
    let n = k + 1;
    let (mut e, mut f, mut h) = (
        RatMatrix::zeros(n, n),
        RatMatrix::zeros(n, n),
        RatMatrix::zeros(n, n),
    );
    let ki = k as i64;
    for i in 0..n {
        let ii = i as i64;
        h[(i, i)] = int(ki - 2 * ii);
        if i + 1 < n {
            f[(i + 1, i)] = int(1);
        }
        if i > 0 {
            e[(i - 1, i)] = int(ii * (ki - ii + 1));
        }
    }
    SL2Module {
        e,
        f,
        h,
        weights: (0..=ki).map(|i| ki - 2 * i).collect(),
    }
}

fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = RatMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            if a[(i, j)].is_zero() {
                continue;
            }
            for p in 0..rb {
                for q in 0..cb {
                    if !b[(p, q)].is_zero() {
                        out[(i * rb + p, j * cb + q)] = &a[(i, j)] * &b[(p, q)];
                    }
                }
            }
        }
    }
    out
}

/// `a ⊗ b` on the basis `a_i ⊗ b_j` in lexicographic order.
pub fn tensor(a: &SL2Module, b: &SL2Module) -> SL2Module {
    let (ia, ib) = (RatMatrix::identity(a.dim()), RatMatrix::identity(b.dim()));
    let act = |x: &RatMatrix, y: &RatMatrix| kron(x, &ib).add(&kron(&ia, y));
    SL2Module {
        e: act(&a.e, &b.e),
        f: act(&a.f, &b.f),
        h: act(&a.h, &b.h),
        weights: a
            .weights
            .iter()
            .flat_map(|wa| b.weights.iter().map(move |wb| wa + wb))
            .collect(),
    }
}

/// Increasing `p`-tuples from `0..n` in lexicographic order.
pub fn sorted_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    rec(0, n, p, &mut cur, &mut out);
    out
}

/// `∧^p m` on the wedges of increasing index tuples, in lexicographic order.
pub fn exterior_power(m: &SL2Module, p: usize) -> SL2Module {
    let tuples = sorted_tuples(m.dim(), p);
    let index: BTreeMap<&[usize], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let n = tuples.len();
    let induce = |x: &RatMatrix| {
        let mut out = RatMatrix::zeros(n, n);
        for (col, t) in tuples.iter().enumerate() {
            for r in 0..p {
                for src in 0..m.dim() {
                    let v = &x[(src, t[r])];
                    if v.is_zero() {
                        continue;
                    }
                    let mut img = t.clone();
                    img[r] = src;
                    if let Some((sorted, sign)) = sort_with_sign(img) {
                        let row = index[sorted.as_slice()];
                        out[(row, col)] += v * int(sign);
                    }
                }
            }
        }
        out
    };
    SL2Module {
        e: induce(&m.e),
        f: induce(&m.f),
        h: induce(&m.h),
        weights: tuples
            .iter()
            .map(|t| t.iter().map(|&i| m.weights[i]).sum())
            .collect(),
    }
}

/// Sort by transpositions, tracking the sign; `None` on a repeated index.
fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// Highest weights with multiplicities, largest weight first.
pub fn decompose(m: &SL2Module) -> Result<Vec<(i64, usize)>> {
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for &w in &m.weights {
        *count.entry(w).or_default() += 1;
    }
    let mut parts = Vec::new();
    for (&l, &c) in count.iter().rev() {
        if l < 0 {
            break;
        }
        let above = count.get(&(l + 2)).copied().unwrap_or(0);
        if above > c {
            return Err(Error::Structural(format!(
                "weight {l} is less frequent than weight {}",
                l + 2
            )));
        }
        if c > above {
            parts.push((l, c - above));
        }
    }
    let total: usize = parts.iter().map(|(l, c)| (*l as usize + 1) * c).sum();
    if total != m.dim() {
        return input(format!(
            "weights do not come from an sl2 module: parts cover {total} of {} dimensions",
            m.dim()
        ));
    }
    Ok(parts)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartJson {
    pub highest_weight: i64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub source: String,
    pub parts: Vec<PartJson>,
}

impl DecompositionJson {
    pub fn new(source: impl Into<String>, parts: &[(i64, usize)]) -> Self {
        Self {
            source: source.into(),
            parts: parts
                .iter()
                .map(|&(highest_weight, multiplicity)| PartJson {
                    highest_weight,
                    multiplicity,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_basics() {
        let v1 = irreducible(1);
        assert_eq!(v1.weights, vec![1, -1]);
        assert!(v1.relations_hold());
        let v5 = irreducible(5);
        assert_eq!(v5.dim(), 6);
        let ef = v5.e.mul(&v5.f);
        assert_eq!(ef[(0, 0)], int(5));
    }

    #[test]
    fn small_decompositions() {
        let t = tensor(&irreducible(2), &irreducible(1));
        assert!(t.relations_hold());
        assert_eq!(decompose(&t).unwrap(), vec![(3, 1), (1, 1)]);
        let w = exterior_power(&irreducible(5), 2);
        assert!(w.relations_hold());
        assert_eq!(decompose(&w).unwrap(), vec![(8, 1), (4, 1), (0, 1)]);
        let triv = tensor(&irreducible(4), &irreducible(0));
        assert_eq!(decompose(&triv).unwrap(), vec![(4, 1)]);
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(sort_with_sign(vec![2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(vec![1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(vec![1, 1]), None);
    }

    #[test]
    fn bad_weights_rejected() {
        let mut m = irreducible(2);
        m.weights = vec![2, 2, 0];
        assert!(decompose(&m).is_err());
    }
}
