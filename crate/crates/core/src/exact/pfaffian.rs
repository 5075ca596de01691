use num_traits::{One, Zero};

use super::{RatMatrix, Rational};
use crate::error::{input, Result};

/// Size up to which the Pfaffian is expanded along the first row.
const EXPANSION_LIMIT: usize = 12;

/// Exact Pfaffian of a skew-symmetric matrix of even size.
pub fn pfaffian(m: &RatMatrix) -> Result<Rational> {
    if !m.is_skew() {
        return input("pfaffian needs a skew-symmetric matrix");
    }
    if m.rows() % 2 == 1 {
        return input(format!("pfaffian needs even size, got {}", m.rows()));
    }
    if m.rows() <= EXPANSION_LIMIT {
        let idx: Vec<usize> = (0..m.rows()).collect();
        Ok(expand(m, &idx))
    } else {
        Ok(eliminate(m))
    }
}

/// Expansion along the first remaining index. Zero entries are skipped, which
/// keeps the sparse pencils in this crate cheap.
fn expand(m: &RatMatrix, idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    let first = idx[0];
    let mut acc = Rational::zero();
    for pos in 1..idx.len() {
        let a = &m[(first, idx[pos])];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != pos)
            .map(|(_, &i)| i)
            .collect();
        let sub = expand(m, &rest);
        if pos % 2 == 1 {
            acc += a * sub;
        } else {
            acc -= a * sub;
        }
    }
    acc
}

/// Skew Gaussian elimination: with `A = [[0, a, u], [-a, 0, v], [-u, -v, B]]`,
/// `Pf(A) = a * Pf(B + (v u^T - u v^T) / a)`.
fn eliminate(m: &RatMatrix) -> Rational {
    let mut a = m.clone();
    let mut n = a.rows();
    let mut result = Rational::one();
    while n > 0 {
        // pivot: first nonzero entry in row 0
        let Some(p) = (1..n).find(|&j| !a[(0, j)].is_zero()) else {
            return Rational::zero();
        };
        if p != 1 {
            swap_index(&mut a, 1, p);
            result = -result;
        }
        let piv = a[(0, 1)].clone();
        result *= &piv;
        let mut next = RatMatrix::zeros(n - 2, n - 2);
        for i in 2..n {
            for j in (i + 1)..n {
                let corr = (&a[(1, i)] * &a[(0, j)] - &a[(0, i)] * &a[(1, j)]) / &piv;
                let v = &a[(i, j)] + corr;
                next[(i - 2, j - 2)] = v.clone();
                next[(j - 2, i - 2)] = -v;
            }
        }
        a = next;
        n -= 2;
    }
    result
}

fn swap_index(a: &mut RatMatrix, p: usize, q: usize) {
    let n = a.rows();
    for j in 0..n {
        let t = a[(p, j)].clone();
        a[(p, j)] = a[(q, j)].clone();
        a[(q, j)] = t;
    }
    for i in 0..n {
        let t = a[(i, p)].clone();
        a[(i, p)] = a[(i, q)].clone();
        a[(i, q)] = t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn skew(n: usize, upper: &[i64]) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = int(*it.next().unwrap());
                m[(i, j)] = v.clone();
                m[(j, i)] = -v;
            }
        }
        m
    }

    #[test]
    fn two_by_two() {
        assert_eq!(pfaffian(&skew(2, &[7])).unwrap(), int(7));
        assert_eq!(pfaffian(&skew(2, &[-3])).unwrap(), int(-3));
    }

    #[test]
    fn symplectic_block_form() {
        // e0 <-> e2, e1 <-> e3 is an odd pairing
        let m = skew(4, &[0, 1, 0, 0, 1, 0]);
        assert_eq!(pfaffian(&m).unwrap(), int(-1));
        // e0 <-> e1, e2 <-> e3
        let m = skew(4, &[1, 0, 0, 0, 0, 1]);
        assert_eq!(pfaffian(&m).unwrap(), int(1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(pfaffian(&RatMatrix::zeros(3, 3)).is_err());
        let mut m = RatMatrix::zeros(2, 2);
        m[(0, 1)] = int(1);
        assert!(pfaffian(&m).is_err());
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(pfaffian(&RatMatrix::zeros(0, 0)).unwrap(), int(1));
    }

    proptest! {
        #[test]
        fn square_is_determinant_4(upper in proptest::collection::vec(-9i64..=9, 6)) {
            let m = skew(4, &upper);
            let pf = pfaffian(&m).unwrap();
            prop_assert_eq!(&pf * &pf, m.det().unwrap());
        }

        #[test]
        fn expansion_and_elimination_agree(
            half in 1usize..=5,
            upper in proptest::collection::vec(-3i64..=3, 45),
        ) {
            let n = 2 * half;
            let m = skew(n, &upper[..n * (n - 1) / 2]);
            let idx: Vec<usize> = (0..n).collect();
            let e = expand(&m, &idx);
            prop_assert_eq!(&e, &eliminate(&m));
            prop_assert_eq!(&e * &e, m.det().unwrap());
        }

        #[test]
        fn large_sizes_use_elimination(upper in proptest::collection::vec(-2i64..=2, 91)) {
            let m = skew(14, &upper);
            let pf = pfaffian(&m).unwrap();
            prop_assert_eq!(&pf * &pf, m.det().unwrap());
        }
    }
}
