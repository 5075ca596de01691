use crate::exact::{binom_int, Rational};

fn alternating(l: i64, s: i64, m: i64, shift: i64) -> Rational {
    (0..=l)
        .map(|j| {
            let t = binom_int(l, j) * binom_int(s + j, m);
            if (j + shift) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// Both sides of `sum_j (-1)^(l-j) binom(l,j) binom(s+j,m) = binom(s, m-l)`.
pub fn ident2_sides(l: i64, s: i64, m: i64) -> (Rational, Rational) {
    (alternating(l, s, m, l), binom_int(s, m - l))
}

pub fn ident2(l: i64, s: i64, m: i64) -> bool {
    let (a, b) = ident2_sides(l, s, m);
    a == b
}

/// The variant with sign `(-1)^j`; off by `(-1)^l`, so it fails for odd `l`
/// unless both sides vanish.
pub fn ident2_variant(l: i64, s: i64, m: i64) -> bool {
    alternating(l, s, m, 0) == binom_int(s, m - l)
}

fn weighted(mu: i64, omega: i64, bottom: impl Fn(i64) -> i64) -> Rational {
    (0..=mu)
        .map(|i| binom_int(mu, i) * binom_int(omega + i, bottom(i)))
        .sum()
}

/// Both sides of
/// `sum_i binom(mu,i) binom(omega+i, y-i) = sum_i binom(mu,i) binom(omega+i, 2mu+omega-y-i)`.
pub fn ident3_sides(mu: i64, omega: i64, y: i64) -> (Rational, Rational) {
    (
        weighted(mu, omega, |i| y - i),
        weighted(mu, omega, |i| 2 * mu + omega - y - i),
    )
}

pub fn ident3(mu: i64, omega: i64, y: i64) -> bool {
    let (a, b) = ident3_sides(mu, omega, y);
    a == b
}

/// The variant whose right side uses an independent `w` in place of `omega`;
/// it only holds when `w = omega` or by coincidence.
pub fn ident3_variant(mu: i64, omega: i64, w: i64, y: i64) -> bool {
    weighted(mu, omega, |i| y - i) == weighted(mu, omega, |i| 2 * mu + w - y - i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn ident2_small_case() {
        assert_eq!(ident2_sides(2, 3, 2), (int(1), int(1)));
        let (lhs, rhs) = ident2_sides(3, 4, 1);
        assert_eq!(rhs, int(0));
        assert_eq!(lhs, rhs);
        assert!(ident2(1, 2, 1));
        assert!(!ident2_variant(1, 2, 1));
        assert!(ident2_variant(2, 3, 2));
    }

    #[test]
    fn ident3_spot_values() {
        assert_eq!(ident3_sides(2, 3, 3), (int(18), int(18)));
        assert!(ident3(2, 3, 3));
        assert!(!ident3_variant(2, 3, 1, 3));
        assert!(ident3_variant(2, 3, 3, 3));
    }
}
