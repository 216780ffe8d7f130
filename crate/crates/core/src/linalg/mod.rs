//! Dense exact square matrices: fraction-free and multi-modular determinants,
//! minors and the normalized last-row cofactors used by the holonomic checks.

mod bareiss;
mod modular;
mod primes;

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::arith::{BigInt, Rational};
use crate::error::{Error, Result};

pub use bareiss::det_integer_bareiss;
pub use modular::{det_integer_modular, hadamard_bound, ModularStats};

/// Square matrix of normalized rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ExactMatrix { n, data }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<Rational>) -> Result<Self> {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j)?);
            }
        }
        Ok(ExactMatrix { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: bad.len() });
        }
        Ok(ExactMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// Matrix with row `skip_row` and column `skip_col` deleted.
    pub fn submatrix(&self, skip_row: usize, skip_col: usize) -> Self {
        let keep = |skip: usize| (0..self.n).filter(move |&x| x != skip);
        let rows: Vec<usize> = keep(skip_row).collect();
        let cols: Vec<usize> = keep(skip_col).collect();
        Self::from_fn(self.n - 1, |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Rows scaled by the lcm of their denominators, plus the product of
    /// those scale factors.
    fn cleared_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
                scale *= &lcm;
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect();
        (rows, scale)
    }

    /// Determinant by clearing row denominators, then Bareiss elimination.
    pub fn det_bareiss(&self) -> Rational {
        let (rows, scale) = self.cleared_rows();
        Rational::new(det_integer_bareiss(rows), scale)
    }

    /// Determinant by residues modulo 62-bit primes and Chinese remaindering.
    pub fn det_modular(&self) -> Result<Rational> {
        let (rows, scale) = self.cleared_rows();
        let (det, _) = det_integer_modular(&rows)?;
        Ok(Rational::new(det, scale))
    }

    /// Default determinant route.
    pub fn det(&self) -> Rational {
        self.det_bareiss()
    }

    /// The `(i, j)` minor: determinant with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Rational {
        self.submatrix(i, j).det()
    }

    /// `c[j] = (-1)^(n-1+j) M(n-1,j) / M(n-1,n-1)` for the last row.
    pub fn normalized_cofactors(&self) -> Result<Vec<Rational>> {
        let n = self.n;
        if n == 0 {
            return Ok(Vec::new());
        }
        let corner = self.minor(n - 1, n - 1);
        if corner.is_zero() {
            return Err(Error::VanishingMinor);
        }
        Ok((0..n)
            .map(|j| {
                let m = self.minor(n - 1, j) / &corner;
                if (n - 1 + j) % 2 == 1 {
                    -m
                } else {
                    m
                }
            })
            .collect())
    }

    /// `sum_j a[row][j] * v[j]`.
    pub fn row_dot(&self, row: usize, v: &[Rational]) -> Rational {
        self.row(row).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ExactMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    /// Permutation expansion, independent of elimination.
    fn det_leibniz(a: &ExactMatrix) -> Rational {
        fn go(a: &ExactMatrix, row: usize, used: &mut [bool], acc: Rational, out: &mut Rational) {
            if row == a.dim() {
                *out += acc;
                return;
            }
            for col in 0..a.dim() {
                if used[col] {
                    continue;
                }
                // unused columns to the left count the inversions added here
                let inversions = (0..col).filter(|&c| !used[c]).count();
                let term = &acc * a.get(row, col);
                let term = if inversions % 2 == 0 { term } else { -term };
                used[col] = true;
                go(a, row + 1, used, term, out);
                used[col] = false;
            }
        }
        let mut out = Rational::zero();
        go(a, 0, &mut vec![false; a.dim()], Rational::one(), &mut out);
        out
    }

    /// Laplace expansion along `row`.
    fn det_laplace(a: &ExactMatrix, row: usize) -> Rational {
        if a.dim() == 0 {
            return Rational::one();
        }
        (0..a.dim())
            .map(|j| {
                let term = a.get(row, j) * a.submatrix(row, j).det_bareiss();
                if (row + j) % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[vec![2]]).det_bareiss(), rat(2));
        assert_eq!(ExactMatrix::identity(5).det_bareiss(), rat(1));
        assert_eq!(ExactMatrix::zeros(0).det_bareiss(), rat(1));
        assert_eq!(m(&[vec![1, 2], vec![3, 4]]).det_bareiss(), rat(-2));
        assert_eq!(ExactMatrix::zeros(3).det_bareiss(), rat(0));
        // zero leading pivot forces a row swap
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).det_bareiss(), rat(-1));
        assert_eq!(m(&[vec![0, 0, 1], vec![0, 2, 0], vec![3, 0, 0]]).det_bareiss(), rat(-6));
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).det_bareiss(), rat(0));
    }

    #[test]
    fn rational_entries() {
        let a = ExactMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 5)],
        ])
        .unwrap();
        // 1/10 - 1/12
        assert_eq!(a.det_bareiss(), ratio(1, 60));
        assert_eq!(a.det_modular().unwrap(), ratio(1, 60));
    }

    #[test]
    fn modular_examples() {
        assert_eq!(ExactMatrix::zeros(3).det_modular().unwrap(), rat(0));
        let diag = ExactMatrix::from_fn(6, |i, j| if i == j { rat(i as i64 + 1) } else { rat(0) });
        assert_eq!(diag.det_modular().unwrap(), rat(720));
        assert_eq!(ExactMatrix::zeros(0).det_modular().unwrap(), rat(1));
    }

    #[test]
    fn bareiss_agrees_with_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=6 {
            for _ in 0..10 {
                let a = ExactMatrix::from_fn(n, |_, _| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
                assert_eq!(a.det_bareiss(), det_leibniz(&a));
            }
        }
    }

    #[test]
    fn modular_agrees_with_bareiss_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for case in 0..200 {
            let n = 1 + case % 10;
            let a = ExactMatrix::from_fn(n, |_, _| rat(rng.gen_range(-1_000_000..=1_000_000)));
            assert_eq!(a.det_modular().unwrap(), a.det_bareiss(), "case {case}");
        }
        let a = ExactMatrix::from_fn(8, |_, _| rat(rng.gen_range(-50..=50)));
        assert_eq!(a.det_modular().unwrap(), a.det_bareiss());
    }

    #[test]
    fn laplace_along_any_row() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5 {
            let a = ExactMatrix::from_fn(n, |_, _| rat(rng.gen_range(-20..=20)));
            let d = a.det_bareiss();
            for row in 0..n {
                assert_eq!(det_laplace(&a, row), d);
            }
        }
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(m(&[vec![3]]).normalized_cofactors().unwrap(), vec![rat(1)]);
        assert_eq!(
            ExactMatrix::identity(3).normalized_cofactors().unwrap(),
            vec![rat(0), rat(0), rat(1)]
        );
        let singular_corner = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(singular_corner.normalized_cofactors(), Err(Error::VanishingMinor));
    }

    #[test]
    fn cofactor_relations_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=6 {
            let a = ExactMatrix::from_fn(n, |_, _| rat(rng.gen_range(-9..=9)));
            let Ok(c) = a.normalized_cofactors() else { continue };
            assert_eq!(c[n - 1], rat(1));
            for i in 0..n - 1 {
                assert_eq!(a.row_dot(i, &c), rat(0));
            }
            let ratio = a.det() / a.leading(n - 1).det();
            assert_eq!(a.row_dot(n - 1, &c), ratio);
        }
    }

    #[test]
    fn not_square_is_rejected() {
        let err = ExactMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3)]]).unwrap_err();
        assert_eq!(err, Error::NotSquare { rows: 2, cols: 1 });
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let b = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, m(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), m(&[vec![1, 3], vec![2, 4]]));
        assert_eq!((&a * &a).det(), a.det() * a.det());
    }
}
