//! Small, deliberately naive exact routines used as independent oracles.
#![allow(dead_code)]

use corank2_core::exact::{int, Rational};
use corank2_core::liealg::GradedLieAlgebra;
use corank2_core::pencil::SkewPencil;
use num_traits::{One, Zero};

/// Rank by plain row reduction with division.
pub fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for cc in c..cols {
                    let sub = &factor * &m[rank][cc];
                    m[r][cc] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by the Leibniz permutation sum; only for tiny matrices.
pub fn leibniz_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(p: &mut Vec<usize>, start: usize, m: &[Vec<Rational>], total: &mut Rational) {
    if start == p.len() {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = Rational::one();
        for (r, &c) in p.iter().enumerate() {
            prod *= &m[r][c];
        }
        if inversions % 2 == 1 {
            prod = -prod;
        }
        *total += prod;
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, m, total);
        p.swap(start, i);
    }
}

/// Every cyclic sum `[[a,b],c] + [[b,c],a] + [[c,a],b]` over basis triples vanishes.
pub fn cyclic_sums_vanish(g: &GradedLieAlgebra) -> bool {
    let n = g.dim();
    let units: Vec<Vec<Rational>> = (0..n).map(|i| g.unit(i)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.bracket(&units[a], &units[b]);
            for c in b + 1..n {
                let bc = g.bracket(&units[b], &units[c]);
                let ca = g.bracket(&units[c], &units[a]);
                let s1 = g.bracket(&ab, &units[c]);
                let s2 = g.bracket(&bc, &units[a]);
                let s3 = g.bracket(&ca, &units[b]);
                for t in 0..n {
                    if !(&s1[t] + &s2[t] + &s3[t]).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Integer binomial by Pascal's triangle, zero outside `0 <= b <= a`.
pub fn pascal(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let mut row = vec![1i64];
    for _ in 0..a {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[b as usize]
}

/// Least `d` for which the stacked system `A1 b_r + A2 b_{r-1} = 0`,
/// `r = 0..=d+1`, has a nonzero solution; built here independently.
pub fn brute_force_index(p: &SkewPencil) -> usize {
    let n = p.size();
    for d in 0..=p.k() {
        let cols = (d + 1) * n;
        let mut rows = Vec::new();
        for r in 0..=d + 1 {
            for i in 0..n {
                let mut row = vec![Rational::zero(); cols];
                for j in 0..n {
                    if r <= d {
                        row[r * n + j] += &p.a1()[(i, j)];
                    }
                    if r >= 1 {
                        row[(r - 1) * n + j] += &p.a2()[(i, j)];
                    }
                }
                rows.push(row);
            }
        }
        if naive_rank(&rows) < cols {
            return d;
        }
    }
    panic!("no kernel polynomial up to degree k");
}
