use super::CMatrix;
use crate::error::Result;
use crate::exact::{int, Rational};
use crate::liealg::{type_kw_nilpotent, BasisElement, GradedLieAlgebra, NSign};

/// Whether the frame of type `(k, w)` carries the extra element `c`.
pub fn frame_has_c(k: usize, w: usize) -> bool {
    2 * w == k + 1
}

fn signed(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The full frame algebra on `E, x_0..x_k, y_1..y_k, z, n, a, b` (and `c` when
/// `w = (k+1)/2`). Fails with a Jacobi witness if `c` is not a solution.
pub fn assemble_frame(c: &CMatrix) -> Result<GradedLieAlgebra> {
    let (k, w) = (c.k(), c.w());
    let (ki, wi) = (k as i64, w as i64);
    let with_c = frame_has_c(k, w);

    let e = 0;
    let x = |i: usize| 1 + i;
    let y = |j: usize| k + 1 + j;
    let (z, n, a, b) = (2 * k + 2, 2 * k + 3, 2 * k + 4, 2 * k + 5);
    let cc = 2 * k + 6;

    let mut basis = vec![BasisElement::new("E", (-1, 0))];
    for j in 0..=ki {
        basis.push(BasisElement::new(format!("x{j}"), (-j, -1)));
    }
    for j in 1..=ki {
        basis.push(BasisElement::new(format!("y{j}"), (-(wi + j - 1), -2)));
    }
    basis.push(BasisElement::new("z", (-(wi + ki - 1), -3)));
    basis.push(BasisElement::new("n", (-wi - ki, -3)));
    basis.push(BasisElement::new("a", (0, 0)));
    basis.push(BasisElement::new("b", (0, 0)));
    if with_c {
        basis.push(BasisElement::new("c", (1, 0)));
    }
    let degrees: Vec<(i64, i64)> = basis.iter().map(|b| b.bidegree).collect();
    let mut g = GradedLieAlgebra::new(basis)?;

    for j in 0..k {
        g.set_bracket(e, x(j), &[(x(j + 1), int(1))])?;
    }
    for j in 1..k {
        g.set_bracket(e, y(j), &[(y(j + 1), int(1))])?;
    }
    g.set_bracket(e, z, &[(n, int(1))])?;
    for i in 0..k {
        g.set_bracket(x(i), y(k - i), &[(z, int(signed(i)))])?;
    }
    for i in 1..=k {
        g.set_bracket(x(i), y(k - i + 1), &[(n, int(-signed(i) * i as i64))])?;
    }
    for (i, j, v) in c.entries() {
        g.set_bracket(x(i), x(j), &[(y(i + j + 1 - w), v)])?;
    }
    for (t, &(d1, d2)) in degrees.iter().enumerate() {
        if t == a || t == b {
            continue;
        }
        if d1 != 0 {
            g.set_bracket(a, t, &[(t, int(-d1))])?;
        }
        if d2 != 0 {
            g.set_bracket(b, t, &[(t, int(-d2))])?;
        }
    }
    if with_c {
        g.set_bracket(cc, e, &[(a, int(-2)), (b, int(ki))])?;
        for j in 1..=k {
            let jj = j as i64;
            g.set_bracket(cc, x(j), &[(x(j - 1), int(jj * (ki - jj + 1)))])?;
        }
        for j in 2..=k {
            let jj = j as i64;
            g.set_bracket(cc, y(j), &[(y(j - 1), int((jj - 1) * (ki - jj + 1)))])?;
        }
        g.set_bracket(cc, n, &[(z, int(1))])?;
    }
    g.verify_jacobi()?;
    Ok(g)
}

/// The nilpotent part `span{x, y, z, n}`, after checking the full frame closes.
pub fn assemble_model(c: &CMatrix) -> Result<GradedLieAlgebra> {
    assemble_frame(c)?;
    let entries: Vec<(usize, usize, Rational)> = c.entries();
    type_kw_nilpotent(c.k(), c.w(), &entries, NSign::Odd)
}

#[cfg(test)]
mod tests {
    use super::super::solve_family;
    use super::*;
    use crate::error::Error;
    use crate::liealg::Subspace;

    #[test]
    fn frame_dimensions() {
        let c3 = solve_family(3, 1).unwrap().normalized_c.unwrap();
        assert_eq!(assemble_frame(&c3).unwrap().dim(), 12);
        let c5 = solve_family(5, 3).unwrap().normalized_c.unwrap();
        assert_eq!(assemble_frame(&c5).unwrap().dim(), 17);
    }

    #[test]
    fn weights_of_a() {
        let c = solve_family(5, 3).unwrap().normalized_c.unwrap();
        let g = assemble_frame(&c).unwrap();
        let a = g.idx("a").unwrap();
        for j in 1..=5usize {
            let yj = g.idx(&format!("y{j}")).unwrap();
            assert_eq!(g.bracket_basis(a, yj), vec![(yj, int(3 + j as i64 - 1))]);
        }
    }

    #[test]
    fn bad_constants_rejected() {
        let mut c = solve_family(3, 1).unwrap().normalized_c.unwrap();
        c.set(1, 2, int(-1)).unwrap();
        assert!(matches!(assemble_frame(&c), Err(Error::Jacobi(..))));
    }

    #[test]
    fn model_growth() {
        let c = solve_family(4, 1).unwrap().normalized_c.unwrap();
        let m = assemble_model(&c).unwrap();
        let xs: Vec<usize> = (0..=4).collect();
        let d = Subspace::coordinate(m.dim(), &xs);
        assert_eq!(
            crate::liealg::weak_derived_flag(&m, &d).unwrap(),
            vec![5, 9, 11]
        );
    }
}
