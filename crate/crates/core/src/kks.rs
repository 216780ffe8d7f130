//! Binomial determinants `det(l^{j+b} C(mi+j+c, mi+a) + C(mi-j+d, mi+a))`.

use num_traits::{One, Zero};

use crate::arith::{binomial, pow_rational, rat, Rational};
use crate::error::Result;
use crate::linalg::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KksParams {
    pub m: i64,
    pub l: Rational,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub n: usize,
}

impl KksParams {
    pub fn new(m: i64, l: Rational, a: i64, b: i64, c: i64, d: i64, n: usize) -> Self {
        KksParams { m, l, a, b, c, d, n }
    }

    /// `(m, l; a, 0, a, a)`, twice the count of Delannoy families.
    pub fn delannoy_family(m: i64, l: Rational, a: i64, n: usize) -> Self {
        KksParams::new(m, l, a, 0, a, a, n)
    }

    /// `(m, l; a+1, 1, a+1, a-1)`, the count of H-Delannoy families.
    pub fn h_delannoy_family(m: i64, l: Rational, a: i64, n: usize) -> Self {
        KksParams::new(m, l, a + 1, 1, a + 1, a - 1, n)
    }

    /// `(4, 2; 2, 1, 2, 0)`.
    pub fn wh31(n: usize) -> Self {
        KksParams::new(4, rat(2), 2, 1, 2, 0, n)
    }

    /// `(4, 2; 3, 0, 3, 3)`.
    pub fn wd33(n: usize) -> Self {
        KksParams::new(4, rat(2), 3, 0, 3, 3, n)
    }

    pub fn with_n(&self, n: usize) -> Self {
        KksParams { n, ..self.clone() }
    }
}

pub fn kks_entry(p: &KksParams, i: usize, j: usize) -> Result<Rational> {
    let (i, j) = (i as i64, j as i64);
    let mi = p.m * i;
    let lower = mi + p.a;
    let first = binomial(mi + j + p.c, lower);
    let second = binomial(mi - j + p.d, lower);
    let power = pow_rational(&p.l, j + p.b)?;
    Ok(power * Rational::from_integer(first) + Rational::from_integer(second))
}

/// Rows indexed by `i`, columns by `j`, both from 0.
pub fn kks_matrix(p: &KksParams) -> Result<ExactMatrix> {
    ExactMatrix::try_from_fn(p.n, |i, j| kks_entry(p, i, j))
}

pub fn kks_det(p: &KksParams) -> Result<Rational> {
    Ok(kks_matrix(p)?.det())
}

/// Upper unitriangular `((-1)^{j-i} C(2 rho, j-i))`, the coefficients of
/// `(1 - v)^{2 rho}` along each row.
pub fn shift_factor(rho: i64, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, |i, j| {
        if j < i {
            return Rational::zero();
        }
        let k = (j - i) as i64;
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        sign * Rational::from_integer(binomial(2 * rho, k))
    })
}

/// `[j = 0]`, the matrix whose first column is all ones.
pub fn first_column_ones(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, |_, j| if j == 0 { Rational::one() } else { Rational::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use proptest::prelude::*;

    #[test]
    fn conjectured_values() {
        let wh: Vec<Rational> = (1..=5).map(|n| kks_det(&KksParams::wh31(n)).unwrap()).collect();
        assert_eq!(wh, [2, 30, 3584, 3424256, 26172456960].map(rat));
        let wd: Vec<Rational> = (1..=5).map(|n| kks_det(&KksParams::wd33(n)).unwrap()).collect();
        assert_eq!(wd, [2, 16, 1024, 524288, 2146959360].map(rat));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(kks_det(&KksParams::wh31(0)).unwrap(), rat(1));
    }

    #[test]
    fn zero_base_with_negative_exponent_fails() {
        let p = KksParams::new(1, rat(0), 0, -1, 0, 0, 2);
        assert!(kks_matrix(&p).is_err());
    }

    #[test]
    fn entry_spot_checks() {
        // WH31, (i, j) = (1, 2): 2^3 C(8, 6) + C(2, 6).
        assert_eq!(kks_entry(&KksParams::wh31(3), 1, 2).unwrap(), rat(224));
        // WD33, (0, 0): C(3, 3) + C(3, 3).
        assert_eq!(kks_entry(&KksParams::wd33(1), 0, 0).unwrap(), rat(2));
    }

    #[test]
    fn independent_of_b_when_l_is_one() {
        for b in -2..3 {
            let p = KksParams::new(3, rat(1), 1, b, 2, 1, 4);
            assert_eq!(kks_matrix(&p).unwrap(), kks_matrix(&KksParams { b: 0, ..p.clone() }).unwrap());
        }
    }

    #[test]
    fn binomial_weights_give_twice_a_power() {
        for s in 0..4i64 {
            for c in 0..3 {
                for n in 1..6 {
                    let p = KksParams::new(1, rat(s + 2), 0, 0, c, c, n);
                    let e = (n * (n - 1) / 2) as i64;
                    assert_eq!(kks_det(&p).unwrap(), rat(2) * pow_rational(&rat(s + 1), e).unwrap());
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn shifted_columns(m in 1i64..4, a in 0i64..4, b in -1i64..3, rho in 1i64..3, n in 1usize..6) {
            let base = kks_matrix(&KksParams::new(m, rat(1), a, b, a, a, n)).unwrap();
            let shifted = kks_matrix(&KksParams::new(m, rat(1), a + 2 * rho, b, a + 2 * rho, a, n)).unwrap();
            let rhs = &shifted * &shift_factor(rho, n);
            let ones = first_column_ones(n);
            let lhs = ExactMatrix::from_fn(n, |i, j| base.get(i, j) - ones.get(i, j));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn transpose_has_same_det(m in 1i64..4, lnum in -3i64..4, a in 0i64..3, b in 0i64..2,
                                  c in 0i64..3, d in 0i64..3, n in 1usize..6) {
            let l = ratio(lnum, 2);
            prop_assume!(!l.is_zero());
            let mat = kks_matrix(&KksParams::new(m, l, a, b, c, d, n)).unwrap();
            prop_assert_eq!(mat.det(), mat.transpose().det());
        }
    }
}
