//! Exact truncated power series in two variables, used to expand the
//! double generating functions of the negative-order families.
//!
//! Coefficients live on an `(N+1) x (K+1)` grid, `coeffs[i][j]` being the
//! coefficient of `x^i y^j`. The same truncation discipline applies per
//! variable: products only fill the box they can determine exactly, and
//! `exp`/`geometric` of a series with zero constant term terminate
//! because every power raises the total degree.

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<Vec<Rational>>,
}

impl BiSeries {
    pub fn zero(order_x: usize, order_y: usize) -> Self {
        BiSeries { coeffs: vec![vec![Rational::zero(); order_y + 1]; order_x + 1] }
    }

    pub fn constant(c: Rational, order_x: usize, order_y: usize) -> Self {
        let mut s = BiSeries::zero(order_x, order_y);
        s.coeffs[0][0] = c;
        s
    }

    /// Embeds a series in `x` (every `y`-degree beyond 0 is zero).
    pub fn from_x(s: &TruncatedSeries, order_y: usize) -> Self {
        let mut out = BiSeries::zero(s.order(), order_y);
        for (i, row) in out.coeffs.iter_mut().enumerate() {
            row[0] = s.coeff(i);
        }
        out
    }

    /// Embeds a series in `y`.
    pub fn from_y(s: &TruncatedSeries, order_x: usize) -> Self {
        let mut out = BiSeries::zero(order_x, s.order());
        for (j, c) in s.coeffs().iter().enumerate() {
            out.coeffs[0][j] = c.clone();
        }
        out
    }

    pub fn order_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        assert!(i <= self.order_x() && j <= self.order_y(), "coefficient beyond truncation box");
        self.coeffs[i][j].clone()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let nx = self.order_x().min(rhs.order_x());
        let ny = self.order_y().min(rhs.order_y());
        let mut out = BiSeries::zero(nx, ny);
        for i in 0..=nx {
            for j in 0..=ny {
                out.coeffs[i][j] = &self.coeffs[i][j] + &rhs.coeffs[i][j];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let nx = self.order_x().min(rhs.order_x());
        let ny = self.order_y().min(rhs.order_y());
        let mut out = BiSeries::zero(nx, ny);
        for i1 in 0..=nx {
            for j1 in 0..=ny {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=nx - i1 {
                    for j2 in 0..=ny - j1 {
                        let b = &rhs.coeffs[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        out.coeffs[i1 + i2][j1 + j2] = &out.coeffs[i1 + i2][j1 + j2] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|row| row.iter().map(|a| a * c).collect()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// `exp` of a series with zero constant term, via the power sum
    /// `sum_p f^p / p!`; powers beyond `order_x + order_y` cannot reach
    /// back into the truncation box.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0][0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        self.power_sum(|p| factorial(p as u32).recip())
    }

    /// `1 / (1 - f)` for a series with zero constant term, via the
    /// geometric sum `sum_p f^p`.
    pub fn geometric(&self) -> Result<Self> {
        if !self.coeffs[0][0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        self.power_sum(|_| Rational::one())
    }

    fn power_sum(&self, weight: impl Fn(usize) -> Rational) -> Result<Self> {
        let (nx, ny) = (self.order_x(), self.order_y());
        let mut acc = BiSeries::zero(nx, ny);
        let mut power = BiSeries::constant(Rational::one(), nx, ny);
        for p in 0..=nx + ny {
            acc = acc.add(&power.scale(&weight(p)));
            if p < nx + ny {
                power = power.mul(self);
            }
        }
        Ok(acc)
    }
}
