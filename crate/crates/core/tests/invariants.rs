use corank2_core::bigraded::{assemble_frame, solve_family};
use corank2_core::invariants::{
    a_space, dim_a_mod_h, filtration_l, flag_is_complete, i_invariant, invariant_report,
    w_invariant, FrameAlgebra,
};
use corank2_core::liealg::GradedLieAlgebra;

fn frames(kmax: usize) -> Vec<(usize, usize, FrameAlgebra)> {
    let mut out = Vec::new();
    for k in 3..=kmax {
        for w in (1..2 * k).step_by(2) {
            if let Some(c) = solve_family(k, w).unwrap().normalized_c {
                out.push((
                    k,
                    w,
                    FrameAlgebra::new(assemble_frame(&c).unwrap()).unwrap(),
                ));
            }
        }
    }
    out
}

#[test]
fn every_family_point_reads_back_its_type() {
    let all = frames(9);
    assert!(all.len() >= 9);
    for (k, w, f) in &all {
        let dims: Vec<usize> = filtration_l(f).iter().map(|s| s.dim()).collect();
        assert!(flag_is_complete(&dims), "({k},{w}) {dims:?}");
        assert_eq!(w_invariant(f).unwrap(), *w, "({k},{w})");
        assert_eq!(i_invariant(f).unwrap(), 1, "({k},{w})");
        assert_eq!(dim_a_mod_h(f, *w), 1, "({k},{w})");
    }
}

#[test]
fn a_spaces_grow_monotonically() {
    for (k, w, f) in frames(6) {
        let flag = filtration_l(&f);
        let h = f.h_space().dim();
        let dims: Vec<usize> = (0..=2 * k).map(|r| a_space(&f, &flag, r).dim()).collect();
        assert!(dims.windows(2).all(|p| p[0] <= p[1]));
        assert!(dims[..w].iter().all(|&d| d == h), "({k},{w}) {dims:?}");
    }
}

#[test]
fn report_for_k8_w3() {
    let c = solve_family(8, 3).unwrap().normalized_c.unwrap();
    let f = FrameAlgebra::new(assemble_frame(&c).unwrap()).unwrap();
    let r = invariant_report(&f).unwrap();
    assert_eq!((r.k, r.w, r.i), (8, 3, 1));
    assert_eq!(r.flag_l_dims, (2..=10).collect::<Vec<_>>());
}

#[test]
fn missing_frame_labels() {
    let g = GradedLieAlgebra::single_graded(&[("E", -1), ("x0", -1)]).unwrap();
    assert!(FrameAlgebra::new(g).is_err());
    let g = GradedLieAlgebra::single_graded(&[("x0", -1), ("x1", -1)]).unwrap();
    assert!(FrameAlgebra::new(g).is_err());
}
