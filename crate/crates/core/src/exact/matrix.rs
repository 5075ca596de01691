use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{input, Result};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form: nonzero rows only, with their pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Build from rows. `cols` is needed to describe a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return input(format!(
                "row {bad} has length {}, expected {cols}",
                rows[bad].len()
            ));
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (i + 1..self.cols).all(|j| self[(i, j)] == -&self[(j, i)])
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Delete row `i` and column `i`.
    pub fn principal_minor(&self, i: usize) -> Self {
        self.principal_submatrix(&(0..self.rows).filter(|&t| t != i).collect::<Vec<_>>())
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form. Elimination is fraction-free (Bareiss) over
    /// the integers after clearing row denominators; pivots are chosen as the
    /// leftmost column with a nonzero entry, then the smallest row index.
    pub fn echelon(&self) -> Echelon {
        let bareiss = Bareiss::run(self);
        let mut rows: Vec<Vec<Rational>> = bareiss
            .rows
            .iter()
            .take(bareiss.pivots.len())
            .map(|r| {
                r.iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let pivots = bareiss.pivots;
        for (r, &c) in pivots.iter().enumerate().rev() {
            let p = rows[r][c].clone();
            for x in rows[r].iter_mut().skip(c) {
                *x /= &p;
            }
            let pivot_row = rows[r].clone();
            for row in rows.iter_mut().take(r) {
                let f = row[c].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        Bareiss::run(self).pivots.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column in
    /// increasing column order, with a 1 in that free slot.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return input("determinant of a non-square matrix");
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let b = Bareiss::run_keep_rows(self);
        if b.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let last = b.rows[self.rows - 1][self.cols - 1].clone();
        let mut d = Rational::new(last, b.row_scale_product);
        if b.negate {
            d = -d;
        }
        Ok(d)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return input("inverse of a non-square matrix");
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return input("matrix is singular");
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = ech.rows[i][n + j].clone();
            }
        }
        Ok(inv)
    }
}

/// Integer row-echelon form produced by fraction-free elimination.
struct Bareiss {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    negate: bool,
    row_scale_product: BigInt,
}

impl Bareiss {
    fn run(m: &RatMatrix) -> Self {
        Self::eliminate(m, true)
    }

    fn run_keep_rows(m: &RatMatrix) -> Self {
        Self::eliminate(m, false)
    }

    fn eliminate(m: &RatMatrix, drop_zero_rows: bool) -> Self {
        let mut scale_product = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
        for i in 0..m.rows {
            let row = m.row(i);
            if drop_zero_rows && row.iter().all(Zero::is_zero) {
                continue;
            }
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            rows.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale_product *= l;
        }
        let n_rows = rows.len();
        let mut pivots = Vec::new();
        let mut negate = false;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == n_rows {
                break;
            }
            let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                rows.swap(p, r);
                negate = !negate;
            }
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = &pivot_row[c];
            for row in tail.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..m.cols {
                    let t = pv * &row[j] - &lead * &pivot_row[j];
                    row[j] = if prev.is_one() { t } else { t / &prev };
                }
            }
            prev = rows[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Self {
            rows,
            pivots,
            negate,
            row_scale_product: scale_product,
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(super::rat_to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn nullspace_small_cases() {
        assert!(RatMatrix::identity(3).nullspace().is_empty());
        assert_eq!(RatMatrix::zeros(2, 3).nullspace().len(), 3);
        assert_eq!(m(&[&[1, 1]]).nullspace(), vec![vec![int(-1), int(1)]]);
        assert_eq!(RatMatrix::zeros(0, 4).nullspace().len(), 4);
    }

    #[test]
    fn echelon_is_reduced() {
        let a = m(&[&[0, 2, 4], &[1, 1, 1], &[2, 4, 6]]);
        let e = a.echelon();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], vec![int(1), int(0), int(-1)]);
        assert_eq!(e.rows[1], vec![int(0), int(1), int(2)]);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(3));
        let b = RatMatrix::from_rows(
            vec![vec![frac(1, 2), frac(1, 3)], vec![frac(1, 4), frac(1, 5)]],
            2,
        )
        .unwrap();
        assert_eq!(b.det().unwrap(), frac(1, 10) - frac(1, 12));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
    }

    fn square_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec((-4i64..5, 1i64..4), n * n).prop_map(move |v| {
            RatMatrix::from_rows(
                v.chunks(n)
                    .map(|row| row.iter().map(|&(p, q)| frac(p, q)).collect())
                    .collect(),
                n,
            )
            .unwrap()
        })
    }

    fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |v| {
                RatMatrix::from_rows(
                    v.chunks(c)
                        .map(|row| row.iter().map(|&(n, d)| frac(n, d)).collect())
                        .collect(),
                    c,
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix(6, 6)) {
            let ns = a.nullspace();
            prop_assert_eq!(ns.len() + a.rank(), a.cols());
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
            let basis = RatMatrix::from_rows(ns.clone(), a.cols()).unwrap();
            prop_assert_eq!(basis.rank(), ns.len());
        }

        #[test]
        fn det_multiplicative(
            (a, b) in (1usize..=4).prop_flat_map(|n| (square_matrix(n), square_matrix(n))),
        ) {
            prop_assert_eq!(a.mul(&b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }
    }
}
