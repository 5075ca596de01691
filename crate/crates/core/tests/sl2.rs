mod common;

use std::collections::BTreeMap;

use corank2_core::bigraded::{compare_projective, solve_family};
use corank2_core::exact::int;
use corank2_core::sl2rep::{
    build_mk, cg_projection, decompose, exterior_power, extract_c, irreducible, n_count, tensor,
    wedge3_multiplicity,
};
use proptest::prelude::*;

/// Peel highest weights off a weight multiset.
fn peel(mut weights: BTreeMap<i64, i64>) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    while let Some((&top, _)) = weights.iter().rev().find(|(_, &m)| m > 0) {
        let m = weights[&top];
        out.push((top, m as usize));
        let mut l = top;
        while l >= -top {
            *weights.get_mut(&l).unwrap() -= m;
            l -= 2;
        }
    }
    out
}

fn weight_counts(ws: impl IntoIterator<Item = i64>) -> BTreeMap<i64, i64> {
    let mut m = BTreeMap::new();
    for w in ws {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

fn wedge2_weights(k: i64) -> Vec<i64> {
    let ws: Vec<i64> = (0..=k).map(|i| k - 2 * i).collect();
    let mut out = Vec::new();
    for a in 0..ws.len() {
        for b in a + 1..ws.len() {
            out.push(ws[a] + ws[b]);
        }
    }
    out
}

#[test]
fn irreducible_basics() {
    for k in 0..=9 {
        let v = irreducible(k);
        assert!(v.relations_hold());
        assert_eq!(v.dim(), k + 1);
        let ef = v.e.mul(&v.f);
        assert_eq!(ef.column(0)[0], int(k as i64));
    }
}

#[test]
fn tensor_decompositions() {
    for k in 0..=9usize {
        for l in 0..=9usize {
            let m = tensor(&irreducible(k), &irreducible(l));
            assert_eq!(m.dim(), (k + 1) * (l + 1));
            let want: Vec<(i64, usize)> = (0..=k.min(l))
                .map(|i| ((k + l - 2 * i) as i64, 1))
                .collect();
            assert_eq!(decompose(&m).unwrap(), want, "V{k} x V{l}");
        }
    }
}

#[test]
fn wedge_decompositions() {
    for k in 1..=9usize {
        let m = exterior_power(&irreducible(k), 2);
        assert!(m.relations_hold());
        assert_eq!(m.dim(), k * (k + 1) / 2);
        let want = peel(weight_counts(wedge2_weights(k as i64)));
        assert_eq!(decompose(&m).unwrap(), want, "wedge2 V{k}");
        let has_km1 = want.iter().any(|p| p.0 == k as i64 - 1);
        assert_eq!(has_km1, k % 4 == 1, "k={k}");
    }
}

#[test]
fn commutation_on_products() {
    let a = irreducible(3);
    let b = irreducible(2);
    assert!(tensor(&a, &b).relations_hold());
    assert!(exterior_power(&irreducible(4), 3).relations_hold());
}

#[test]
fn wedge3_of_v1_vanishes() {
    for k in (1..=13i64).step_by(2) {
        assert_eq!(wedge3_multiplicity(k, 1).unwrap(), 0, "k={k}");
        let s = (k - 1) / 2;
        assert_eq!(n_count(k, 1).unwrap(), n_count(k, 3).unwrap());
        assert_eq!(n_count(k, 1).unwrap(), (s * (s + 1) / 2) as u64, "k={k}");
    }
}

#[test]
fn tau_projection_is_equivariant() {
    let src = exterior_power(&irreducible(5), 2);
    let p = cg_projection(&src, 4).unwrap();
    let tgt = irreducible(4);
    assert_eq!(p.mul(&src.e), tgt.e.mul(&p));
    assert_eq!(p.mul(&src.f), tgt.f.mul(&p));
    assert!(cg_projection(&exterior_power(&irreducible(3), 2), 2).is_err());
}

#[test]
fn mk_models() {
    let g = build_mk(9).unwrap();
    assert_eq!(g.dim(), 21);
    assert!(common::cyclic_sums_vanish(&g));
    let c = extract_c(&g).unwrap();
    assert!(c.entries().iter().all(|(i, j, _)| i + j >= 5));
    let fam = solve_family(9, 5).unwrap().normalized_c.unwrap();
    assert!(compare_projective(&fam, &c).unwrap().is_some());
    assert!(build_mk(11).is_err());
}

proptest! {
    #[test]
    fn tensor_dimension_bookkeeping(k in 0usize..7, l in 0usize..7) {
        let m = tensor(&irreducible(k), &irreducible(l));
        prop_assert!(m.relations_hold());
        let parts = decompose(&m).unwrap();
        let total: usize = parts.iter().map(|(h, mult)| (*h as usize + 1) * mult).sum();
        prop_assert_eq!(total, m.dim());
    }

    #[test]
    fn exterior_dimension_bookkeeping(k in 1usize..7, p in 1usize..4) {
        let m = exterior_power(&irreducible(k), p);
        let parts = decompose(&m).unwrap();
        let total: usize = parts.iter().map(|(h, mult)| (*h as usize + 1) * mult).sum();
        prop_assert_eq!(total, m.dim());
    }
}
