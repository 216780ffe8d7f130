//! Exact integer and rational helpers: the generalized binomial coefficient,
//! rising factorials and Gamma-function ratios that pair off into rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Normalized arbitrary-precision rational (denominator positive, reduced).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `alpha (alpha-1) ... (alpha-p+1) / p!` for `p >= 0`, and `0` for `p < 0`.
///
/// Valid for every integer `alpha`, including negative ones, so that
/// `binomial(-1, p) = (-1)^p`.
pub fn binomial(alpha: i64, p: i64) -> BigInt {
    if p < 0 {
        return BigInt::zero();
    }
    if alpha >= 0 {
        if p > alpha {
            return BigInt::zero();
        }
        return falling_over_factorial(alpha, p.min(alpha - p));
    }
    // C(alpha, p) = (-1)^p C(p - alpha - 1, p) for negative alpha.
    let top = p - alpha - 1;
    let value = falling_over_factorial(top, p.min(top - p));
    if p.is_odd() {
        -value
    } else {
        value
    }
}

/// `C(top, k)` for `0 <= k <= top`; every prefix quotient is an integer.
fn falling_over_factorial(top: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(top - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+k-1)`, i.e. `Gamma(x+k)/Gamma(x)`.
pub fn rising_factorial(x: &Rational, k: u64) -> Result<Rational> {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Err(Error::Pole(format!("rising factorial of {x} over {k} terms")));
        }
        acc *= &factor;
        factor += Rational::one();
    }
    Ok(acc)
}

/// Exact `base^exp`; negative exponents invert.
pub fn pow_rational(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::ZeroToNegative(exp));
    }
    let mag = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    Ok(if exp < 0 { mag.recip() } else { mag })
}

/// `q - floor(q)`, always in `[0, 1)`.
pub fn fractional_part(q: &Rational) -> Rational {
    q - q.floor()
}

/// A strictly positive argument of the Gamma function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaArg(Rational);

impl GammaArg {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_positive() {
            Ok(GammaArg(value))
        } else {
            Err(Error::Pole(format!("Gamma({value})")))
        }
    }

    pub fn int(value: i64) -> Result<Self> {
        Self::new(rat(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for GammaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gamma({})", self.0)
    }
}

/// `Gamma(a) / Gamma(b)` for `a - b` an integer.
fn paired_ratio(a: &Rational, b: &Rational) -> Result<Rational> {
    let diff = a - b;
    debug_assert!(diff.is_integer());
    let steps = diff.to_integer();
    let k: u64 = steps
        .abs()
        .try_into()
        .map_err(|_| Error::InvalidParameter(format!("Gamma shift {steps} too large")))?;
    if steps.is_negative() {
        Ok(rising_factorial(a, k)?.recip())
    } else {
        rising_factorial(b, k)
    }
}

/// `prod Gamma(numer) / prod Gamma(denom)` as an exact rational.
///
/// Arguments are grouped by fractional part; inside each class both sides are
/// sorted ascending and the k-th numerator argument is paired with the k-th
/// denominator argument. Non-integer classes must balance exactly. Integer
/// arguments left over on either side are plain factorials.
pub fn gamma_ratio_product(numer: &[GammaArg], denom: &[GammaArg]) -> Result<Rational> {
    let mut classes: BTreeMap<Rational, (Vec<&Rational>, Vec<&Rational>)> = BTreeMap::new();
    for g in numer {
        classes.entry(fractional_part(&g.0)).or_default().0.push(&g.0);
    }
    for g in denom {
        classes.entry(fractional_part(&g.0)).or_default().1.push(&g.0);
    }

    let mut acc = Rational::one();
    for (class, (mut top, mut bottom)) in classes {
        top.sort();
        bottom.sort();
        if !class.is_zero() && top.len() != bottom.len() {
            return Err(Error::IrrationalRatio(class.to_string()));
        }
        for (a, b) in top.iter().zip(bottom.iter()) {
            acc *= paired_ratio(a, b)?;
        }
        let one = Rational::one();
        let paired = top.len().min(bottom.len());
        // Gamma(m) = (m-1)! = rising(1, m-1) for positive integers m.
        for a in &top[paired..] {
            acc *= paired_ratio(a, &one)?;
        }
        for b in &bottom[paired..] {
            acc /= paired_ratio(b, &one)?;
        }
    }
    Ok(acc)
}

/// Parses `"num/den"` or `"num"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Always `"num/den"`, also for integers (`"4/1"`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}
