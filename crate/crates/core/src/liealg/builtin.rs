use super::{BasisElement, GradedLieAlgebra};
use crate::error::{input, Result};
use crate::exact::{frac, int, Rational};

/// Sign convention of the `n`-pairings `[x_j, y_{k-j+1}] = s_j j n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NSign {
    /// `s_j = (-1)^j`, as in the literal model tables.
    Even,
    /// `s_j = (-1)^{j+1}`, the convention compatible with `[E, z] = n`.
    Odd,
}

/// The nilpotent part `span{x_0..x_k, y_1..y_k, z, n}` of a type-(k,w)
/// algebra with `[x_i, x_j] = c_ij y_{i+j-w+1}`. Entries are `(i, j, c_ij)`
/// with `i < j`.
pub fn type_kw_nilpotent(
    k: usize,
    w: usize,
    c: &[(usize, usize, Rational)],
    sign: NSign,
) -> Result<GradedLieAlgebra> {
    if k < 1 || w < 1 {
        return input(format!("type ({k},{w}) needs k >= 1 and w >= 1"));
    }
    let (ki, wi) = (k as i64, w as i64);
    let mut basis = Vec::with_capacity(2 * k + 3);
    for j in 0..=ki {
        basis.push(BasisElement::new(format!("x{j}"), (-j, -1)));
    }
    for j in 1..=ki {
        basis.push(BasisElement::new(format!("y{j}"), (-(wi + j - 1), -2)));
    }
    basis.push(BasisElement::new("z", (-(wi + ki - 1), -3)));
    basis.push(BasisElement::new("n", (-wi - ki, -3)));
    let mut g = GradedLieAlgebra::new(basis)?;
    let x = |i: usize| i;
    let y = |j: usize| k + j;
    let (z, n) = (2 * k + 1, 2 * k + 2);
    for i in 0..k {
        let s = if i % 2 == 0 { 1 } else { -1 };
        g.set_bracket(x(i), y(k - i), &[(z, int(s))])?;
    }
    for i in 1..=k {
        let even = if i % 2 == 0 { 1 } else { -1 };
        let s = match sign {
            NSign::Even => even,
            NSign::Odd => -even,
        };
        g.set_bracket(x(i), y(k - i + 1), &[(n, int(s * i as i64))])?;
    }
    for (i, j, v) in c {
        if *i >= *j || *j > k {
            return input(format!("c entry ({i},{j}) outside 0 <= i < j <= {k}"));
        }
        let t = (*i + *j + 1) as i64 - wi;
        if !(1..=ki).contains(&t) {
            if num_traits::Zero::is_zero(v) {
                continue;
            }
            return input(format!("c_({i},{j}) has no target y_{t}"));
        }
        g.set_bracket(x(*i), x(*j), &[(y(t as usize), v.clone())])?;
    }
    Ok(g)
}

/// The 2-step symbol: `[x_i, y_{k-i}] = z`, `[x_{i+1}, y_{k-i}] = n`.
pub fn symb(k: usize) -> Result<GradedLieAlgebra> {
    if k < 1 {
        return input("symb(k) needs k >= 1");
    }
    let mut elems: Vec<(String, i64)> = (0..=k).map(|j| (format!("x{j}"), -1)).collect();
    elems.extend((1..=k).map(|j| (format!("y{j}"), -1)));
    elems.push(("z".into(), -2));
    elems.push(("n".into(), -2));
    let mut g = GradedLieAlgebra::new(
        elems
            .into_iter()
            .map(|(l, d)| BasisElement::new(l, (d, d)))
            .collect(),
    )?;
    let (z, n) = (2 * k + 1, 2 * k + 2);
    for i in 0..k {
        g.set_bracket(i, k + (k - i), &[(z, int(1))])?;
        g.set_bracket(i + 1, k + (k - i), &[(n, int(1))])?;
    }
    Ok(g)
}

pub fn m7_3_3() -> GradedLieAlgebra {
    let mut g = GradedLieAlgebra::single_graded(&[
        ("x0", -1),
        ("x1", -1),
        ("x2", -1),
        ("y1", -2),
        ("y2", -2),
        ("z", -3),
        ("n", -3),
    ])
    .expect("static basis");
    let one = int(1);
    let table: [(&str, &str, &str); 6] = [
        ("x0", "x1", "y1"),
        ("x0", "x2", "y2"),
        ("x0", "y2", "z"),
        ("x1", "y1", "z"),
        ("x1", "y2", "n"),
        ("x2", "y1", "n"),
    ];
    for (a, b, t) in table {
        g.set(a, b, &[(t, one.clone())]).expect("static table");
    }
    g
}

fn table(k: usize, c: &[(usize, usize, i64, i64)]) -> GradedLieAlgebra {
    let c: Vec<_> = c.iter().map(|&(i, j, p, q)| (i, j, frac(p, q))).collect();
    type_kw_nilpotent(k, 1, &c, NSign::Even).expect("static table")
}

pub fn model_k3() -> GradedLieAlgebra {
    table(
        3,
        &[(0, 1, 1, 1), (0, 2, 1, 1), (0, 3, 3, 1), (1, 2, -2, 1)],
    )
}

pub fn model_k4() -> GradedLieAlgebra {
    table(
        4,
        &[
            (0, 1, 1, 1),
            (0, 2, 1, 1),
            (0, 3, -3, 2),
            (0, 4, -4, 1),
            (1, 2, 5, 2),
            (1, 3, 5, 2),
        ],
    )
}

pub fn model_k6() -> GradedLieAlgebra {
    table(
        6,
        &[
            (0, 1, -10, 7),
            (0, 2, -10, 7),
            (0, 3, -3, 7),
            (0, 4, 4, 7),
            (0, 5, 25, 7),
            (0, 6, 60, 7),
            (1, 2, -1, 1),
            (1, 3, -1, 1),
            (1, 4, -3, 1),
            (1, 5, -5, 1),
            (2, 3, 2, 1),
            (2, 4, 2, 1),
        ],
    )
}

/// Look up a named model: `symb(K)` (or `symbK`), `m7_3_3`, `k3`, `k4`, `k6`.
pub fn builtin_model(name: &str) -> Result<GradedLieAlgebra> {
    match name {
        "m7_3_3" => Ok(m7_3_3()),
        "k3" => Ok(model_k3()),
        "k4" => Ok(model_k4()),
        "k6" => Ok(model_k6()),
        _ => {
            let arg = name
                .strip_prefix("symb")
                .map(|s| s.trim_start_matches('(').trim_end_matches(')'));
            match arg.and_then(|s| s.parse::<usize>().ok()) {
                Some(k) => symb(k),
                None => input(format!(
                    "unknown model {name:?}; expected symb(K), m7_3_3, k3, k4 or k6"
                )),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(symb(2).unwrap().dim(), 7);
        assert_eq!(m7_3_3().dim(), 7);
        assert_eq!(model_k3().dim(), 9);
        assert_eq!(model_k4().dim(), 11);
        assert_eq!(model_k6().dim(), 15);
    }

    #[test]
    fn all_models_close() {
        for g in [
            symb(4).unwrap(),
            m7_3_3(),
            model_k3(),
            model_k4(),
            model_k6(),
        ] {
            assert!(g.jacobi_residual().holds());
            assert!(g.bidegrees_additive());
        }
    }

    #[test]
    fn perturbed_k3_names_first_triple() {
        let mut g = model_k3();
        g.set("x1", "x2", &[("y3", int(-1))]).unwrap();
        let r = g.jacobi_residual();
        assert_eq!(r.witness, Some((0, 1, 2)));
        assert_eq!(r.residual, int(1));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(builtin_model("symb(3)").unwrap(), symb(3).unwrap());
        assert_eq!(builtin_model("symb3").unwrap(), symb(3).unwrap());
        assert!(builtin_model("k5").is_err());
        assert!(builtin_model("symb(x)").is_err());
    }

    #[test]
    fn out_of_support_entry_rejected() {
        // reversed indices, then a target beyond y_k
        assert!(type_kw_nilpotent(3, 1, &[(1, 0, int(1))], NSign::Odd).is_err());
        assert!(type_kw_nilpotent(3, 1, &[(2, 3, int(1))], NSign::Odd).is_err());
    }
}
