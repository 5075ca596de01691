use num_traits::One;

use super::{int, Rational};

/// Generalized binomial coefficient: zero for `b < 0`, otherwise
/// `a (a-1) ... (a-b+1) / b!` for any rational `a`.
pub fn binom(a: &Rational, b: i64) -> Rational {
    if b < 0 {
        return Rational::from_integer(0.into());
    }
    let mut acc = Rational::one();
    for t in 0..b {
        acc = acc * (a - int(t)) / int(t + 1);
    }
    acc
}

/// Integer-argument shorthand for [`binom`]. A nonnegative top with
/// `b > a` gives zero through the falling factorial.
pub fn binom_int(a: i64, b: i64) -> Rational {
    binom(&int(a), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    #[test]
    fn classical_values() {
        assert_eq!(binom_int(5, 2), int(10));
        assert_eq!(binom_int(7, -1), int(0));
        assert_eq!(binom_int(3, 5), int(0));
        assert_eq!(binom_int(0, 0), int(1));
        assert_eq!(binom_int(-1, 3), int(-1));
    }

    #[test]
    fn half_integer_top() {
        // (1/2)(-1/2)/2
        assert_eq!(binom(&frac(1, 2), 2), frac(-1, 8));
    }

    proptest! {
        #[test]
        fn pascal_recursion(num in -40i64..40, den in 1i64..7, b in 1i64..9) {
            let a = frac(num, den);
            let lhs = binom(&a, b);
            let rhs = binom(&(&a - int(1)), b - 1) + binom(&(&a - int(1)), b);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
