//! Truncated power series in one variable and dense truncated bivariate
//! series in `u, v`, with the substitutions `v -> v*beta(v)` and
//! `u -> u*beta(u)` and multiplication by univariate factors.

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Univariate series truncated to `order` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesV {
    coeffs: Vec<Rational>,
}

impl SeriesV {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        SeriesV { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesV { coeffs: vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// Polynomial given by its low-order coefficients, padded/truncated to `order`.
    pub fn polynomial(coeffs: &[Rational], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_order(&self, other: &SeriesV) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(format!("{} vs {}", self.order(), other.order())));
        }
        Ok(())
    }

    pub fn add(&self, other: &SeriesV) -> Result<SeriesV> {
        self.check_order(other)?;
        Ok(SeriesV::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn mul(&self, other: &SeriesV) -> Result<SeriesV> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<SeriesV> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm("0".into()));
        }
        let c0_inv = self.coeffs[0].recip();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out.coeffs[k - i]).sum();
            out.coeffs[k] = -s * &c0_inv;
        }
        Ok(out)
    }

    /// `x * self(x)`, truncated.
    fn shifted(&self) -> SeriesV {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 1..n {
            out.coeffs[k] = self.coeffs[k - 1].clone();
        }
        out
    }

    fn require_unit_constant(&self) -> Result<()> {
        match self.coeffs.first() {
            Some(c) if c.is_one() => Ok(()),
            Some(c) => Err(Error::ConstantTerm(c.to_string())),
            None => Ok(()),
        }
    }
}

/// Dense bivariate series `sum c[i][j] u^i v^j`, `i < nu`, `j < nv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2D {
    nu: usize,
    nv: usize,
    grid: Vec<Rational>,
}

impl Series2D {
    pub fn zero(nu: usize, nv: usize) -> Self {
        Series2D { nu, nv, grid: vec![Rational::zero(); nu * nv] }
    }

    pub fn from_fn(nu: usize, nv: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut s = Self::zero(nu, nv);
        for i in 0..nu {
            for j in 0..nv {
                s.grid[i * nv + j] = f(i, j);
            }
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.nu, self.nv)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.grid[i * self.nv + j]
    }

    fn coeff_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.grid[i * self.nv + j]
    }

    fn check_orders(&self, other: &Series2D) -> Result<()> {
        if self.orders() != other.orders() {
            return Err(Error::OrderMismatch(format!("{:?} vs {:?}", self.orders(), other.orders())));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series2D) -> Result<Series2D> {
        self.check_orders(other)?;
        Ok(Series2D {
            nu: self.nu,
            nv: self.nv,
            grid: self.grid.iter().zip(&other.grid).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Series2D) -> Result<Series2D> {
        self.check_orders(other)?;
        Ok(Series2D {
            nu: self.nu,
            nv: self.nv,
            grid: self.grid.iter().zip(&other.grid).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated to the common orders.
    pub fn mul(&self, other: &Series2D) -> Result<Series2D> {
        self.check_orders(other)?;
        let mut out = Series2D::zero(self.nu, self.nv);
        for i1 in 0..self.nu {
            for j1 in 0..self.nv {
                let a = self.coeff(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..self.nu - i1 {
                    for j2 in 0..self.nv - j1 {
                        let b = other.coeff(i2, j2);
                        if !b.is_zero() {
                            *out.coeff_mut(i1 + i2, j1 + j2) += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `alpha(v) * F(u, v)`.
    pub fn scale_by_v(&self, alpha: &SeriesV) -> Result<Series2D> {
        if alpha.order() < self.nv {
            return Err(Error::OrderMismatch(format!("alpha order {} < nv {}", alpha.order(), self.nv)));
        }
        Ok(Series2D::from_fn(self.nu, self.nv, |i, j| {
            (0..=j).map(|k| alpha.coeff(k) * self.coeff(i, j - k)).sum()
        }))
    }

    /// `alpha(u) * F(u, v)`.
    pub fn scale_by_u(&self, alpha: &SeriesV) -> Result<Series2D> {
        if alpha.order() < self.nu {
            return Err(Error::OrderMismatch(format!("alpha order {} < nu {}", alpha.order(), self.nu)));
        }
        Ok(Series2D::from_fn(self.nu, self.nv, |i, j| {
            (0..=i).map(|k| alpha.coeff(k) * self.coeff(i - k, j)).sum()
        }))
    }

    /// `F(u, v * beta(v))`; `beta` must have constant term 1.
    pub fn substitute_v(&self, beta: &SeriesV) -> Result<Series2D> {
        beta.require_unit_constant()?;
        let powers = substitution_powers(beta, self.nv)?;
        let mut out = Series2D::zero(self.nu, self.nv);
        for i in 0..self.nu {
            for (k, wk) in powers.iter().enumerate() {
                let f = self.coeff(i, k);
                if f.is_zero() {
                    continue;
                }
                for j in k..self.nv {
                    *out.coeff_mut(i, j) += f * wk.coeff(j);
                }
            }
        }
        Ok(out)
    }

    /// `F(u * beta(u), v)`; `beta` must have constant term 1.
    pub fn substitute_u(&self, beta: &SeriesV) -> Result<Series2D> {
        beta.require_unit_constant()?;
        let powers = substitution_powers(beta, self.nu)?;
        let mut out = Series2D::zero(self.nu, self.nv);
        for (k, wk) in powers.iter().enumerate() {
            for j in 0..self.nv {
                let f = self.coeff(k, j);
                if f.is_zero() {
                    continue;
                }
                for i in k..self.nu {
                    *out.coeff_mut(i, j) += f * wk.coeff(i);
                }
            }
        }
        Ok(out)
    }

    /// The `n x n` block `[u^i v^j] F`.
    pub fn coeff_matrix(&self, n: usize) -> Result<ExactMatrix> {
        let have = self.nu.min(self.nv);
        if n > have {
            return Err(Error::TruncationTooSmall { needed: n, have });
        }
        Ok(ExactMatrix::from_fn(n, |i, j| self.coeff(i, j).clone()))
    }
}

/// `(x * beta(x))^k` for `k < order`, each truncated to `order`.
fn substitution_powers(beta: &SeriesV, order: usize) -> Result<Vec<SeriesV>> {
    let beta = SeriesV::polynomial(beta.coeffs(), order);
    let w = beta.shifted();
    let mut powers = Vec::with_capacity(order);
    let mut current = SeriesV::one(order);
    for _ in 0..order {
        let next = current.mul(&w)?;
        powers.push(current);
        current = next;
    }
    Ok(powers)
}
