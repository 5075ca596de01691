//! Pencils `p1 A1 + p2 A2` of skew forms on a space of odd dimension `2k+1`,
//! their kernel curve `X_p`, and the first Kronecker index.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::exact::{
    int, parse_rat, pfaffian, rat_to_string, sturm_real_root_count, Bound, RatMatrix, Rational,
    UniPoly,
};
use crate::liealg::{BasisElement, GradedLieAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPencil {
    k: usize,
    a1: RatMatrix,
    a2: RatMatrix,
}

/// `Σ_j b_j p1^{d-j} p2^j` with vector coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFormVector {
    pub degree: usize,
    pub ambient_dim: usize,
    pub coeffs: Vec<Vec<Rational>>,
}

impl BinaryFormVector {
    pub fn zero(degree: usize, ambient_dim: usize) -> Self {
        Self {
            degree,
            ambient_dim,
            coeffs: vec![vec![Rational::zero(); ambient_dim]; degree + 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn eval(&self, p1: &Rational, p2: &Rational) -> Vec<Rational> {
        let d = self.degree;
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (j, b) in self.coeffs.iter().enumerate() {
            let w = num_traits::pow(p1.clone(), d - j) * num_traits::pow(p2.clone(), j);
            if w.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o += &w * x;
            }
        }
        out
    }

    /// Coefficients of coordinate `i`, ordered as `b_0[i], …, b_d[i]`.
    pub fn coordinate(&self, i: usize) -> Vec<Rational> {
        self.coeffs.iter().map(|b| b[i].clone()).collect()
    }

    /// The `(d+1) × ambient_dim` matrix whose rows are `b_0..b_d`.
    pub fn coefficient_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.coeffs.clone(), self.ambient_dim).expect("uniform lengths")
    }
}

impl SkewPencil {
    pub fn new(k: usize, a1: RatMatrix, a2: RatMatrix) -> Result<Self> {
        let n = 2 * k + 1;
        for (name, m) in [("A1", &a1), ("A2", &a2)] {
            if m.rows() != n || m.cols() != n {
                return input(format!(
                    "{name} is {}x{}, expected {n}x{n} for k = {k}",
                    m.rows(),
                    m.cols()
                ));
            }
            if !m.is_skew() {
                return input(format!("{name} is not skew-symmetric"));
            }
        }
        Ok(Self { k, a1, a2 })
    }

    pub fn zero(k: usize) -> Self {
        let n = 2 * k + 1;
        Self {
            k,
            a1: RatMatrix::zeros(n, n),
            a2: RatMatrix::zeros(n, n),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        2 * self.k + 1
    }

    pub fn a1(&self) -> &RatMatrix {
        &self.a1
    }

    pub fn a2(&self) -> &RatMatrix {
        &self.a2
    }

    pub fn eval(&self, p1: &Rational, p2: &Rational) -> RatMatrix {
        self.a1.scale(p1).add(&self.a2.scale(p2))
    }

    /// Set a pairing in both matrices' skew positions.
    pub fn set_pair(&mut self, which: usize, i: usize, j: usize, v: Rational) {
        let m = if which == 1 {
            &mut self.a1
        } else {
            &mut self.a2
        };
        m[(i, j)] = v.clone();
        m[(j, i)] = -v;
    }
}

/// Signed sub-Pfaffians `(-1)^i Pf(M without row/col i)`.
fn signed_subpfaffians(m: &RatMatrix) -> Vec<Rational> {
    (0..m.rows())
        .map(|i| {
            let pf = pfaffian(&m.principal_minor(i)).expect("minor of a skew matrix");
            if i % 2 == 0 {
                pf
            } else {
                -pf
            }
        })
        .collect()
}

/// The kernel curve `X_p` as a degree-`k` binary form: sample at `(1, t)` for
/// `t = 0..k` and interpolate each coordinate.
pub fn xp_polynomial(p: &SkewPencil) -> BinaryFormVector {
    let k = p.k;
    let n = p.size();
    let samples: Vec<Vec<Rational>> = (0..=k)
        .map(|t| signed_subpfaffians(&p.eval(&Rational::one(), &int(t as i64))))
        .collect();
    // Vandermonde in t: row t = (1, t, t^2, …, t^k)
    let mut v = RatMatrix::zeros(k + 1, k + 1);
    for t in 0..=k {
        let mut pw = Rational::one();
        for j in 0..=k {
            v[(t, j)] = pw.clone();
            pw *= int(t as i64);
        }
    }
    let vinv = v.inverse().expect("distinct sample points");
    let mut coeffs = vec![vec![Rational::zero(); n]; k + 1];
    for i in 0..n {
        let ys: Vec<Rational> = samples.iter().map(|s| s[i].clone()).collect();
        for (j, c) in vinv.mul_vec(&ys).into_iter().enumerate() {
            coeffs[j][i] = c;
        }
    }
    BinaryFormVector {
        degree: k,
        ambient_dim: n,
        coeffs,
    }
}

/// `eval(p) · B(p)` as a binary form of degree `deg B + 1`.
pub fn apply_pencil(p: &SkewPencil, b: &BinaryFormVector) -> BinaryFormVector {
    let n = p.size();
    let d = b.degree;
    let mut out = BinaryFormVector::zero(d + 1, n);
    for (m, bm) in b.coeffs.iter().enumerate() {
        let u = p.a1.mul_vec(bm);
        let v = p.a2.mul_vec(bm);
        for i in 0..n {
            out.coeffs[m][i] += &u[i];
            out.coeffs[m + 1][i] += &v[i];
        }
    }
    out
}

/// Least degree of a nonzero polynomial kernel section, with one such section.
pub fn minimal_kernel(p: &SkewPencil) -> Result<(usize, BinaryFormVector)> {
    let n = p.size();
    for d in 0..=p.k {
        // unknowns b_0..b_d; equation r: A1 b_r + A2 b_{r-1} = 0, r = 0..d+1
        let mut sys = RatMatrix::zeros((d + 2) * n, (d + 1) * n);
        for m in 0..=d {
            for i in 0..n {
                for j in 0..n {
                    sys[(m * n + i, m * n + j)] = p.a1[(i, j)].clone();
                    sys[((m + 1) * n + i, m * n + j)] = p.a2[(i, j)].clone();
                }
            }
        }
        if let Some(sol) = sys.nullspace().into_iter().next() {
            let coeffs = sol.chunks(n).map(<[Rational]>::to_vec).collect();
            return Ok((
                d,
                BinaryFormVector {
                    degree: d,
                    ambient_dim: n,
                    coeffs,
                },
            ));
        }
    }
    Err(Error::Structural(format!(
        "no polynomial kernel of degree <= {} for a pencil of size {}",
        p.k, n
    )))
}

pub fn kronecker_index(p: &SkewPencil) -> Result<usize> {
    minimal_kernel(p).map(|(d, _)| d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G1Report {
    pub g1_holds: bool,
    pub tilde_d_dim: usize,
    pub real_kernel_everywhere_1dim: bool,
    pub degenerate: bool,
}

/// Polynomial in `p1` obtained by setting `p2 = 1` in `Σ_j b_j p1^{d-j} p2^j`.
fn dehomogenize(form: &[Rational]) -> UniPoly {
    UniPoly::new(form.iter().rev().cloned().collect())
}

/// Whether the binary forms share a real projective root.
fn common_real_root(forms: &[Vec<Rational>]) -> Result<bool> {
    let nonzero: Vec<&Vec<Rational>> = forms
        .iter()
        .filter(|f| f.iter().any(|c| !c.is_zero()))
        .collect();
    if nonzero.is_empty() {
        return input("common root of zero forms");
    }
    if nonzero.iter().all(|f| f[0].is_zero()) {
        // every form is divisible by p2, so [1:0] is common
        return Ok(true);
    }
    let g = nonzero
        .iter()
        .map(|f| dehomogenize(f))
        .fold(UniPoly::zero(), |acc, q| acc.gcd(&q));
    if g.degree() == Some(0) {
        return Ok(false);
    }
    Ok(sturm_real_root_count(&g, &Bound::NegInf, &Bound::PosInf)? > 0)
}

pub fn g1_check(p: &SkewPencil) -> Result<G1Report> {
    let x = xp_polynomial(p);
    if x.is_zero() {
        return Ok(G1Report {
            g1_holds: false,
            tilde_d_dim: 0,
            real_kernel_everywhere_1dim: false,
            degenerate: true,
        });
    }
    let tilde_d_dim = x.coefficient_matrix().rank();
    let coords: Vec<Vec<Rational>> = (0..x.ambient_dim).map(|i| x.coordinate(i)).collect();
    Ok(G1Report {
        g1_holds: tilde_d_dim == p.k + 1,
        tilde_d_dim,
        real_kernel_everywhere_1dim: !common_real_root(&coords)?,
        degenerate: false,
    })
}

/// `A1(x_i, y_{k-i}) = 1`, `A2(x_{i+1}, y_{k-i}) = 1` on `(x_0..x_k, y_1..y_k)`.
pub fn symbol_pencil(k: usize) -> Result<SkewPencil> {
    if k == 0 {
        return input("symbol pencil needs k >= 1");
    }
    let mut p = SkewPencil::zero(k);
    let y = |j: usize| k + j;
    for i in 0..k {
        p.set_pair(1, i, y(k - i), Rational::one());
        p.set_pair(2, i + 1, y(k - i), Rational::one());
    }
    Ok(p)
}

/// The 2-step algebra `V ⊕ span{z, n}` with `[u, v] = A1(u, v) z + A2(u, v) n`.
pub fn symbol_algebra(p: &SkewPencil) -> GradedLieAlgebra {
    let k = p.k;
    let mut basis: Vec<BasisElement> = (0..=k)
        .map(|j| BasisElement::new(format!("x{j}"), (-1, -1)))
        .collect();
    basis.extend((1..=k).map(|j| BasisElement::new(format!("y{j}"), (-1, -1))));
    basis.push(BasisElement::new("z", (-2, -2)));
    basis.push(BasisElement::new("n", (-2, -2)));
    let mut g = GradedLieAlgebra::new(basis).expect("distinct labels");
    let (z, n) = (2 * k + 1, 2 * k + 2);
    for i in 0..p.size() {
        for j in i + 1..p.size() {
            let terms = [(z, p.a1[(i, j)].clone()), (n, p.a2[(i, j)].clone())];
            g.set_bracket(i, j, &terms).expect("degrees add up");
        }
    }
    g
}

/// Read the pencil off a 2-step algebra with a two-dimensional top: `g^{-1}`
/// is the span of second degree −1, and its brackets are expanded in the
/// declared basis of the second-degree −2 part.
pub fn pencil_of_symbol(a: &GradedLieAlgebra) -> Result<SkewPencil> {
    let low = a.indices_with_degree2(-1);
    let top = a.indices_with_degree2(-2);
    if low.len() + top.len() != a.dim() {
        return input("pencil of a symbol needs a 2-step algebra in degrees -1, -2");
    }
    if top.len() != 2 {
        return input(format!(
            "pencil of a symbol needs corank 2, got a degree -2 part of dimension {}",
            top.len()
        ));
    }
    if low.len() % 2 == 0 {
        return input("pencil of a symbol needs odd dimension in degree -1");
    }
    let k = (low.len() - 1) / 2;
    let mut p = SkewPencil::zero(k);
    for (a_pos, &i) in low.iter().enumerate() {
        for (b_pos, &j) in low.iter().enumerate().skip(a_pos + 1) {
            for (t, c) in a.bracket_basis(i, j) {
                let which = if t == top[0] { 1 } else { 2 };
                p.set_pair(which, a_pos, b_pos, c);
            }
        }
    }
    Ok(p)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PencilJson {
    pub k: usize,
    #[serde(rename = "A1")]
    pub a1: Vec<Vec<String>>,
    #[serde(rename = "A2")]
    pub a2: Vec<Vec<String>>,
}

fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(rat_to_string).collect())
        .collect()
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<RatMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(parsed, cols)
}

impl From<&SkewPencil> for PencilJson {
    fn from(p: &SkewPencil) -> Self {
        Self {
            k: p.k,
            a1: matrix_strings(&p.a1),
            a2: matrix_strings(&p.a2),
        }
    }
}

impl SkewPencil {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PencilJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PencilJson = serde_json::from_str(s)?;
        Self::new(j.k, parse_matrix(&j.a1)?, parse_matrix(&j.a2)?)
    }
}
