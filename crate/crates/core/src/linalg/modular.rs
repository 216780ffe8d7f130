use num_bigint::Sign;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::primes::PRIMES_62;
use crate::arith::BigInt;
use crate::error::{Error, Result};

/// Bookkeeping from one CRT determinant run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularStats {
    pub primes_used: usize,
    pub bound_bits: u64,
}

/// `prod_i ceil(sqrt(sum_j a_ij^2))`, an integer upper bound on `|det a|`.
pub fn hadamard_bound(rows: &[Vec<BigInt>]) -> BigInt {
    rows.iter()
        .map(|row| {
            let norm2: BigInt = row.iter().map(|x| x * x).sum();
            let root = norm2.sqrt();
            if &root * &root == norm2 {
                root
            } else {
                root + 1
            }
        })
        .product()
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.try_into().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Determinant modulo a prime by Gaussian elimination over `F_p`.
fn det_mod_p(rows: &[Vec<BigInt>], p: u64) -> u64 {
    let n = rows.len();
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = p - det;
        }
        let pivot = a[k][k];
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k] == 0 {
                continue;
            }
            let factor = mul_mod(row[k], inv, p);
            for j in k..n {
                let sub = mul_mod(factor, pivot_row[j], p);
                row[j] = if row[j] >= sub { row[j] - sub } else { row[j] + p - sub };
            }
        }
    }
    det % p
}

/// Exact integer determinant via residues modulo the fixed 62-bit prime pool
/// and Chinese remaindering, stopping once the modulus exceeds twice the
/// Hadamard bound.
pub fn det_integer_modular(rows: &[Vec<BigInt>]) -> Result<(BigInt, ModularStats)> {
    let bound = hadamard_bound(rows);
    let target: BigInt = bound.clone() * 2 + 1;

    let mut modulus = BigInt::one();
    let mut count = 0;
    while modulus < target {
        if count == PRIMES_62.len() {
            return Err(Error::PrimePoolExhausted);
        }
        modulus *= PRIMES_62[count];
        count += 1;
    }
    let primes = &PRIMES_62[..count];

    let residues: Vec<u64> = primes.par_iter().map(|&p| det_mod_p(rows, p)).collect();

    // Incremental CRT, always in prime order.
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&p, &r) in primes.iter().zip(&residues) {
        let current = reduce(&value, p);
        let m_mod_p = reduce(&modulus, p);
        let delta = if r >= current { r - current } else { r + p - current };
        let t = mul_mod(delta, pow_mod(m_mod_p, p - 2, p), p);
        value += &modulus * t;
        modulus *= p;
    }
    let half = &modulus >> 1;
    if value > half {
        value -= &modulus;
    }
    let stats = ModularStats {
        primes_used: count,
        bound_bits: if bound.sign() == Sign::NoSign { 0 } else { bound.bits() },
    };
    Ok((value, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_u64(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = n - 1;
        let mut s = 0;
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        // deterministic witness set for 64-bit integers
        'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            let mut x = pow_mod(a % n, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = mul_mod(x, x, n);
                if x == n - 1 {
                    continue 'witness;
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn prime_pool_is_prime_distinct_and_62_bit() {
        let mut prev = u64::MAX;
        for &p in PRIMES_62.iter() {
            assert!(is_prime_u64(p), "{p} is not prime");
            assert!(p < prev);
            assert_eq!(64 - p.leading_zeros(), 62);
            prev = p;
        }
    }

    #[test]
    fn hadamard_bound_is_integral_ceiling() {
        let rows = vec![vec![BigInt::from(3), BigInt::from(4)], vec![BigInt::from(1), BigInt::from(1)]];
        // 5 * ceil(sqrt 2)
        assert_eq!(hadamard_bound(&rows), BigInt::from(10));
    }

    #[test]
    fn negative_determinant_recovered() {
        let rows = vec![vec![BigInt::from(0), BigInt::from(7)], vec![BigInt::from(5), BigInt::from(0)]];
        assert_eq!(det_integer_modular(&rows).unwrap().0, BigInt::from(-35));
    }
}
