//! Exact truncated power series in one variable.
//!
//! A [`TruncatedSeries`] stores the ordinary coefficients `a_0 .. a_N` of
//! a series prefix; the factorial normalization of exponential generating
//! functions happens only at coefficient-extraction time (see the `egf`
//! module), so the ring operations here stay convention-free. Operations
//! never claim coefficients beyond the order they can determine exactly:
//! binary operations truncate to the shorter operand and quotients lose
//! the denominator's valuation.

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::monomial(Rational::one(), 0, order)
    }

    /// `c * x^power` as a series prefix of the given order; the zero
    /// prefix when the power exceeds the order.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^n`. Panics beyond the truncation order: those
    /// coefficients are not known, not zero.
    pub fn coeff(&self, n: usize) -> Rational {
        assert!(n <= self.order(), "coefficient beyond truncation order");
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` if the whole stored
    /// prefix vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_coeffs(
            (0..=n).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_coeffs(
            (0..=n).map(|j| &self.coeffs[j] - &rhs.coeffs[j]).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Exact quotient prefix. Requires `valuation(self) >= valuation(rhs)`
    /// with a nonzero leading denominator coefficient; the result's order
    /// shrinks by the shared valuation, since deeper coefficients of the
    /// quotient would depend on unknown coefficients of the operands.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let v = rhs.valuation().ok_or(Error::DivisionValuation)?;
        match self.valuation() {
            Some(vf) if vf < v => return Err(Error::DivisionValuation),
            _ => {}
        }
        let n = self.order().min(rhs.order()) - v;
        let num = &self.coeffs[v..];
        let den = &rhs.coeffs[v..];
        let lead = den[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = num[i].clone();
            for (j, h) in out.iter().enumerate() {
                acc = acc - &den[i - j] * h;
            }
            out.push(acc * &lead);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp` of a series with zero constant term, via `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let n = self.order();
        let mut out = vec![Rational::one()];
        for i in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                acc = acc + Rational::from_int(j as i64) * &self.coeffs[j] * &out[i - j];
            }
            out.push(acc / Rational::from_int(i as i64));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `ln(1 + qx)`: coefficients `(-1)^{n+1} q^n / n` for `n >= 1`.
    pub fn log1p(q: &Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero()];
        for n in 1..=order as i64 {
            let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
            coeffs.push(sign * q.pow(n) / Rational::from_int(n));
        }
        TruncatedSeries { coeffs }
    }

    /// `(1 + qx)^e` for a rational exponent, as `exp(e ln(1 + qx))`.
    pub fn pow1p(q: &Rational, e: &Rational, order: usize) -> Self {
        TruncatedSeries::log1p(q, order).scale(e).exp().expect("log1p has zero constant term")
    }
}

/// The polylogarithm factorial function applied to a series argument:
/// `Lif_k(u; a) = sum_{p>=0} u^p / ((p+a)^k p!)`, truncated at `u`'s order.
/// `u` must have zero constant term; positive orders require `p + a != 0`
/// for every `p` up to the order.
pub fn lif(k: i32, a_shift: &Rational, u: &TruncatedSeries) -> Result<TruncatedSeries> {
    weighted_power_sum(k, a_shift, u, true)
}

/// The generalized polylogarithm applied to a series argument:
/// `Li_k(u; a) = sum_{p>=1} u^p / (p+a)^k`, truncated at `u`'s order.
pub fn li(k: i32, a_shift: &Rational, u: &TruncatedSeries) -> Result<TruncatedSeries> {
    weighted_power_sum(k, a_shift, u, false)
}

fn weighted_power_sum(
    k: i32,
    a_shift: &Rational,
    u: &TruncatedSeries,
    with_factorial: bool,
) -> Result<TruncatedSeries> {
    if !u.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let n = u.order();
    let p_start = if with_factorial { 0 } else { 1 };
    if k > 0 {
        for p in p_start..=n {
            if (a_shift + Rational::from_int(p as i64)).is_zero() {
                return Err(Error::Pole { index: p as i64 });
            }
        }
    }
    let mut acc = TruncatedSeries::zero(n);
    let mut power = TruncatedSeries::one(n);
    for p in 0..=n {
        if p >= p_start {
            let mut w = (a_shift + Rational::from_int(p as i64)).pow(-(k as i64));
            if with_factorial {
                w = w / factorial(p as u32);
            }
            acc = acc.add(&power.scale(&w));
        }
        if p < n {
            power = power.mul(u);
        }
    }
    Ok(acc)
}
