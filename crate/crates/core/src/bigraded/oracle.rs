use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use super::{check_kw, d_kw, x_from_c, CMatrix};
use crate::error::{Error, Result};
use crate::exact::{int, RatMatrix, Rational};

/// The unknowns `c_ij`, `i < j`, `w <= i+j <= k+w-1`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Unknowns {
    pub k: usize,
    pub w: usize,
    pub pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Unknowns {
    pub fn new(k: usize, w: usize) -> Self {
        let mut pairs = Vec::new();
        for i in 0..=k {
            for j in i + 1..=k {
                if i + j >= w && i + j < k + w {
                    pairs.push((i, j));
                }
            }
        }
        let index = pairs.iter().enumerate().map(|(p, &ij)| (ij, p)).collect();
        Self { k, w, pairs, index }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Position and sign of `c_ij` (handles `i > j`); `None` when it is a literal zero.
    pub fn lookup(&self, i: i64, j: i64) -> Option<(usize, i64)> {
        if i < 0 || j < 0 || i == j {
            return None;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        self.index.get(&(a as usize, b as usize)).map(|&p| (p, s))
    }

    pub fn to_cmatrix(&self, v: &[Rational]) -> Result<CMatrix> {
        let mut c = CMatrix::zero(self.k, self.w)?;
        for (&(i, j), x) in self.pairs.iter().zip(v) {
            c.set(i, j, x.clone())?;
        }
        Ok(c)
    }

    pub fn from_cmatrix(&self, c: &CMatrix) -> Vec<Rational> {
        self.pairs.iter().map(|&(i, j)| c.get(i, j)).collect()
    }
}

/// Affine form in the unknowns: key 0 is the constant, key `p + 1` is unknown `p`.
type Affine = BTreeMap<usize, Rational>;

fn constant(v: i64) -> Affine {
    let mut a = Affine::new();
    if v != 0 {
        a.insert(0, int(v));
    }
    a
}

fn unknown(p: usize, sign: i64) -> Affine {
    let mut a = Affine::new();
    a.insert(p + 1, int(sign));
    a
}

fn add_into(acc: &mut Affine, a: &Affine, scale: &Rational) {
    for (k, v) in a {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += v * scale;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Product of two affine forms, at least one of which must be constant.
fn mul(a: &Affine, b: &Affine) -> Affine {
    let a_const = a.keys().all(|&k| k == 0);
    let b_const = b.keys().all(|&k| k == 0);
    let (c, other) = if a_const {
        (a, b)
    } else {
        assert!(
            b_const,
            "Jacobi terms are linear in the structure constants"
        );
        (b, a)
    };
    let s = c.get(&0).cloned().unwrap_or_default();
    let mut out = Affine::new();
    if !s.is_zero() {
        add_into(&mut out, other, &s);
    }
    out
}

/// Symbolic algebra on `E, x_0..x_k, y_1..y_k, z, n` with brackets affine in c.
struct SymbolicAlgebra {
    dim: usize,
    table: HashMap<(usize, usize), Vec<(usize, Affine)>>,
}

impl SymbolicAlgebra {
    fn build(u: &Unknowns) -> Self {
        let (k, w) = (u.k, u.w);
        let e = 0;
        let x = |i: usize| 1 + i;
        let y = |j: usize| k + 1 + j;
        let (z, n) = (2 * k + 2, 2 * k + 3);
        let mut table: HashMap<(usize, usize), Vec<(usize, Affine)>> = HashMap::new();
        let mut put = |a: usize, b: usize, t: usize, coeff: Affine| {
            let neg: Affine = coeff.iter().map(|(k, v)| (*k, -v)).collect();
            table.entry((a, b)).or_default().push((t, coeff));
            table.entry((b, a)).or_default().push((t, neg));
        };
        for j in 0..k {
            put(e, x(j), x(j + 1), constant(1));
        }
        for j in 1..k {
            put(e, y(j), y(j + 1), constant(1));
        }
        put(e, z, n, constant(1));
        for i in 0..k {
            put(x(i), y(k - i), z, constant(if i % 2 == 0 { 1 } else { -1 }));
        }
        for i in 1..=k {
            let s = if i % 2 == 0 { -1 } else { 1 };
            put(x(i), y(k - i + 1), n, constant(s * i as i64));
        }
        for &(i, j) in &u.pairs {
            let t = i + j + 1 - w;
            let p = u.lookup(i as i64, j as i64).expect("listed pair").0;
            put(x(i), x(j), y(t), unknown(p, 1));
        }
        Self {
            dim: 2 * k + 4,
            table,
        }
    }

    fn bracket_affine(&self, v: &[(usize, Affine)], b: usize) -> BTreeMap<usize, Affine> {
        let mut out: BTreeMap<usize, Affine> = BTreeMap::new();
        for (a, coeff) in v {
            if let Some(terms) = self.table.get(&(*a, b)) {
                for (t, c2) in terms {
                    let prod = mul(coeff, c2);
                    let acc = out.entry(*t).or_default();
                    add_into(acc, &prod, &Rational::one());
                }
            }
        }
        out
    }

    fn basis_bracket(&self, a: usize, b: usize) -> Vec<(usize, Affine)> {
        self.table.get(&(a, b)).cloned().unwrap_or_default()
    }
}

/// Exact linear constraints on the unknowns from the Jacobi identity over all
/// basis triples of `E, x, y, z, n`. The `E` triples give the propagation rule
/// `c_ij = c_{i+1,j} + c_{i,j+1}`; the `x` triples give the `z`- and
/// `n`-pairing relations. Rows are deduplicated after scaling to a leading 1.
pub fn jacobi_system(k: usize, w: usize) -> Result<RatMatrix> {
    check_kw(k, w)?;
    let u = Unknowns::new(k, w);
    let alg = SymbolicAlgebra::build(&u);
    let mut rows: BTreeSet<Vec<(usize, Rational)>> = BTreeSet::new();
    let n = alg.dim;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut sum: BTreeMap<usize, Affine> = BTreeMap::new();
                for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let inner = alg.basis_bracket(p, q);
                    for (t, coeff) in alg.bracket_affine(&inner, r) {
                        add_into(sum.entry(t).or_default(), &coeff, &Rational::one());
                    }
                }
                for (_, form) in sum {
                    if form.is_empty() {
                        continue;
                    }
                    if form.contains_key(&0) {
                        return Err(Error::Structural(format!(
                            "constant Jacobi defect on a triple of type ({k},{w})"
                        )));
                    }
                    let lead = form.values().next().unwrap().clone();
                    rows.insert(form.into_iter().map(|(k, v)| (k - 1, v / &lead)).collect());
                }
            }
        }
    }
    let dense = rows
        .into_iter()
        .map(|r| {
            let mut row = vec![Rational::zero(); u.len()];
            for (p, v) in r {
                row[p] = v;
            }
            row
        })
        .collect();
    RatMatrix::from_rows(dense, u.len())
}

/// Which second line of the `x_0`-pairing relations to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System2Form {
    /// Coefficient `-(k+w-i+1)` on `c_{0,i}`; kept as a diagnostic, it fails on the k = 3 model.
    Diagnostic,
    /// Coefficient `+(k+w-i)`, as the Jacobi identity on `(x_0, x_i, x_{k+w-i})` gives.
    Corrected,
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Rows `(coefficient, i, j)` of the `x_0` relations, before substitution.
fn system2_terms(k: usize, w: usize, form: System2Form) -> Vec<Vec<(Rational, i64, i64)>> {
    let (k, w) = (k as i64, w as i64);
    let mut rows = Vec::new();
    for i in 1..=k {
        let j = k + w - 1 - i;
        if (0..=k).contains(&j) {
            rows.push(vec![
                (int(1), i, j),
                (int(-sgn(i)), 0, j),
                (int(sgn(j)), 0, i),
            ]);
        }
    }
    for i in 1..=k {
        let m = k + w - i;
        let second = match form {
            System2Form::Diagnostic => int(-sgn(m) * (m + 1)),
            System2Form::Corrected => int(sgn(m) * m),
        };
        rows.push(vec![(int(sgn(i + 1) * i), 0, m), (second, 0, i)]);
    }
    rows
}

/// Propagation rows for `i < j`, `i+j <= k+w-2`, plus both lines of the
/// `x_0` relations in the requested form.
pub fn relation_system(k: usize, w: usize, form: System2Form) -> Result<RatMatrix> {
    check_kw(k, w)?;
    let u = Unknowns::new(k, w);
    let mut rows = Vec::new();
    let mut push = |terms: &[(Rational, i64, i64)]| {
        let mut row = vec![Rational::zero(); u.len()];
        for (v, i, j) in terms {
            if let Some((p, s)) = u.lookup(*i, *j) {
                row[p] += v * int(s);
            }
        }
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    };
    let (ki, wi) = (k as i64, w as i64);
    for i in 0..=ki {
        for j in i + 1..=ki {
            if i + j <= ki + wi - 2 {
                push(&[(int(1), i, j), (int(-1), i + 1, j), (int(-1), i, j + 1)]);
            }
        }
    }
    for r in system2_terms(k, w, form) {
        push(&r);
    }
    RatMatrix::from_rows(rows, u.len())
}

/// Residual of every `x_0` relation on a concrete c-matrix.
pub fn system2_residuals(c: &CMatrix, form: System2Form) -> Vec<Rational> {
    system2_terms(c.k(), c.w(), form)
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|(v, i, j)| v * c.get_signed(*i, *j))
                .sum::<Rational>()
        })
        .collect()
}

/// Solution set of the type-(k, w) constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeKWFamily {
    pub k: usize,
    pub w: usize,
    /// Homogeneous solutions in x-coordinates.
    pub hom_basis: Vec<Vec<Rational>>,
    /// A solution with `c_{0,w} = 1`, in x-coordinates.
    pub normalized_point: Option<Vec<Rational>>,
    pub normalized_c: Option<CMatrix>,
    /// Dimension of the affine slice `c_{0,w} = 1`; `-1` when it is empty.
    pub family_dim: i64,
}

impl TypeKWFamily {
    pub fn d(&self) -> i64 {
        d_kw(self.k as i64, self.w as i64)
    }

    pub fn hom_dim(&self) -> usize {
        self.hom_basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normalized_point.is_none()
    }
}

pub fn solve_family(k: usize, w: usize) -> Result<TypeKWFamily> {
    let u = Unknowns::new(k, w);
    let sys = jacobi_system(k, w)?;
    let null = sys.nullspace();
    let cs = null
        .iter()
        .map(|v| u.to_cmatrix(v))
        .collect::<Result<Vec<_>>>()?;
    let hom_basis = cs.iter().map(x_from_c).collect();
    let normalized_c = cs
        .iter()
        .find(|c| !c.get(0, w).is_zero())
        .map(|c| c.scale(&(Rational::one() / c.get(0, w))));
    let family_dim = if normalized_c.is_some() {
        null.len() as i64 - 1
    } else {
        -1
    };
    Ok(TypeKWFamily {
        k,
        w,
        hom_basis,
        normalized_point: normalized_c.as_ref().map(x_from_c),
        normalized_c,
        family_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn small_nullities() {
        assert_eq!(jacobi_system(3, 1).unwrap().nullspace().len(), 1);
        assert_eq!(jacobi_system(4, 3).unwrap().nullspace().len(), 0);
    }

    #[test]
    fn k3_and_k4_points() {
        let f = solve_family(3, 1).unwrap();
        let c = f.normalized_c.unwrap();
        assert_eq!(
            c.entries(),
            vec![
                (0, 1, int(1)),
                (0, 2, int(1)),
                (0, 3, int(3)),
                (1, 2, int(-2))
            ]
        );
        let c4 = solve_family(4, 1).unwrap().normalized_c.unwrap();
        assert_eq!(
            c4.entries(),
            vec![
                (0, 1, int(1)),
                (0, 2, int(1)),
                (0, 3, frac(-3, 2)),
                (0, 4, int(-4)),
                (1, 2, frac(5, 2)),
                (1, 3, frac(5, 2)),
            ]
        );
    }

    #[test]
    fn k2_is_empty() {
        let f = solve_family(2, 1).unwrap();
        assert!(f.is_empty());
        assert_eq!(f.family_dim, -1);
    }

    #[test]
    fn system2_forms_on_k3() {
        let c = solve_family(3, 1).unwrap().normalized_c.unwrap();
        assert!(system2_residuals(&c, System2Form::Corrected)
            .iter()
            .all(Zero::is_zero));
        let diag = system2_residuals(&c, System2Form::Diagnostic);
        // line-two row for i = 1 comes after the three line-one rows
        assert_eq!(diag[3], int(7));
    }
}
