//! Generalized m-poly-Bernoulli numbers and the H-table algorithms.
//!
//! The explicit formula is
//!
//! ```text
//! B_{n,m} = ((a+m)^k / a^k) * sum_{i=0}^{n} i! (-q)^{n-i} l^{i+a} {n, i} / (a+m+i)^k
//! ```
//!
//! The H-table turns it into a two-term recurrence in the style of the
//! Akiyama-Tanigawa algorithm: seed a constant row, evolve each row
//! locally, read the target sequence off column 0. The classical
//! Bernoulli numbers (with `B_1 = +1/2`) fall out at
//! `k = a = q = l = 1`, `m = 0`.
//!
//! For negative orders, reading the recurrence as advancing the shift
//! `m` (with constant seeds) diverges from the inverse-Stirling
//! definition; substituting `k -> -k` in the positive-order recurrence
//! gives the column-advancing form with factor
//! `l (p+1) (p+a+m+1)^k / (p+a+m)^k`, which is what [`build_h_table`]
//! uses and what the oracle checks confirm (see `verify`, identity
//! `TGQ11`).

use crate::cauchy::{self, CauchyKind, Grid};
use crate::egf::{self, GfFamily};
use crate::error::{Error, Result};
use crate::params::{int_ratio_pow, Params};
use crate::rational::{factorial, Rational};
use crate::stirling;

/// An H-table for fixed parameters: rows `n`, columns `p`, with
/// `H_{n,0} = B_{n,m}` and constant row `H_{0,p} = l^a / a^k`.
/// `x_offset` is 0 for the number case; the polynomial-case recurrence
/// evaluated at a point `x` uses `x_offset = x` (its damping term is
/// `q (x + p)` instead of `q p`).
#[derive(Clone, Debug)]
pub struct HTable {
    params: Params,
    x_offset: Rational,
    values: Grid,
}

impl HTable {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn x_offset(&self) -> &Rational {
        &self.x_offset
    }

    pub fn values(&self) -> &Grid {
        &self.values
    }

    pub fn get(&self, n: u32, p: u32) -> &Rational {
        self.values.get(n, p)
    }

    /// Column `p = 0`, the target sequence `B_{0,m} .. B_{n_max,m}`.
    pub fn target_column(&self) -> Vec<Rational> {
        (0..=self.values.n_max()).map(|n| self.values.get(n, 0).clone()).collect()
    }
}

/// Generalized m-poly-Bernoulli number by the explicit double-factorial
/// sum over second-kind Stirling numbers.
pub fn mpb_explicit(n: u32, p: &Params) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let a = p.a();
    let k = p.k();
    let base = p.shifted_base();
    let mut sum = Rational::zero();
    for i in 0..=n {
        let s = stirling::stirling2(n, i);
        if s.is_zero() {
            continue;
        }
        let term = factorial(i)
            * (-p.q()).pow((n - i) as i64)
            * p.l().pow(i as i64 + a)
            * s
            * Rational::from_int(base + i as i64).pow(-(k as i64));
        sum = sum + term;
    }
    Ok(p.prefactor() * sum)
}

/// Left side of the inverse-Stirling corollary:
/// `sum_{i=0}^{n} s(n,i) (-q)^{n-i} B_{i,m}`. The contract is equality
/// with [`inverse_stirling_closed_form`].
pub fn inverse_stirling_check(n: u32, p: &Params) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let mut sum = Rational::zero();
    for i in 0..=n {
        let s = stirling::stirling1(n, i);
        if s.is_zero() {
            continue;
        }
        sum = sum + s * (-p.q()).pow((n - i) as i64) * mpb_explicit(i, p)?;
    }
    Ok(sum)
}

/// `(a+m)^k n! l^{n+a} / (a (n+a+m))^k`.
pub fn inverse_stirling_closed_form(n: u32, p: &Params) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let base = p.shifted_base();
    Ok(int_ratio_pow(base, p.a(), p.k())
        * factorial(n)
        * p.l().pow(n as i64 + p.a())
        * Rational::from_int(base + n as i64).pow(-(p.k() as i64)))
}

/// H-sequence entry by its defining inverse-Stirling sum:
///
/// ```text
/// H_{n,p}(m) = (1/(p! l^p)) ((p+a+m)/(a+m))^k
///              * sum_{i=0}^{p} s(p,i) (-q)^{p-i} B_{n+i,m}
/// ```
pub fn h_explicit(n: u32, p: &Params, pcol: u32) -> Result<Rational> {
    p.ensure_pole_free(n + pcol)?;
    let base = p.shifted_base();
    if p.k() < 0 && base + pcol as i64 == 0 {
        return Err(Error::Pole { index: pcol as i64 });
    }
    let mut sum = Rational::zero();
    for i in 0..=pcol {
        let s = stirling::stirling1(pcol, i);
        if s.is_zero() {
            continue;
        }
        sum = sum + s * (-p.q()).pow((pcol - i) as i64) * mpb_explicit(n + i, p)?;
    }
    Ok(sum * int_ratio_pow(base + pcol as i64, base, p.k())
        / (factorial(pcol) * p.l().pow(pcol as i64)))
}

/// Builds the H-table by the recurrence
///
/// ```text
/// H_{n+1,p} = l (p+1) ((p+a+m)/(p+a+m+1))^k H_{n,p+1} - q (x_offset + p) H_{n,p}
/// ```
///
/// seeded with the constant row `l^a / a^k`. Negative orders flip the
/// ratio (column-advancing form, see the module docs). Producing column
/// `p <= p_max` at depth `n_max` seeds columns up to `p_max + n_max`.
pub fn build_h_table(p: &Params, n_max: u32, p_max: u32, x_offset: &Rational) -> Result<HTable> {
    let a = p.a();
    let k = p.k();
    let base = p.shifted_base();
    let width = (p_max + n_max) as i64;
    // stepping from column p+1 down divides by (p+a+m+1)^k for k > 0 and
    // by (p+a+m)^|k| for k < 0
    if k > 0 {
        if (1..=width).contains(&-base) {
            return Err(Error::Pole { index: -base });
        }
    } else if (0..width.max(1)).contains(&-base) {
        return Err(Error::Pole { index: -base });
    }
    let seed = p.l().pow(a) * Rational::from_int(a).pow(-(k as i64));
    let mut rows = vec![vec![seed; width as usize + 1]];
    for n in 0..n_max {
        let prev = &rows[n as usize];
        let cols = width as usize - n as usize;
        let mut row = Vec::with_capacity(cols);
        for col in 0..cols as i64 {
            let ratio = if k > 0 {
                int_ratio_pow(base + col, base + col + 1, k)
            } else {
                int_ratio_pow(base + col + 1, base + col, -k)
            };
            let lead = p.l() * Rational::from_int(col + 1) * ratio * &prev[col as usize + 1];
            let damp = (x_offset + Rational::from_int(col)) * p.q() * &prev[col as usize];
            row.push(lead - damp);
        }
        rows.push(row);
    }
    Ok(HTable {
        params: p.clone(),
        x_offset: x_offset.clone(),
        values: Grid::new(rows, n_max, p_max),
    })
}

/// The first `n_max + 1` classical Bernoulli numbers, `B_1 = +1/2`
/// convention, read off column 0 of the classic H-table.
pub fn bernoulli_classic(n_max: u32) -> Vec<Rational> {
    build_h_table(&Params::classic(), n_max, 0, &Rational::zero())
        .expect("classic parameters are pole-free")
        .target_column()
}

/// The four conversion formulas between Bernoulli-type and Cauchy-type
/// numbers, each evaluated verbatim as its defining double sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertRelation {
    /// `B_{n,m} = sum_{j} q^{n-j} sum_{i} i! {n,i} {i-1,j-1} C_{j,m}`
    BFromC1,
    /// `B_{n,m} = (-1)^n sum_{j} sum_{i} q^{n-j} i! {n,i} {i,j} C^_{j,m}`
    BFromC2,
    /// `C_{n,m} = sum_{j} q^{n-j} sum_{i} ((-1)^{i-j}/i!) s(n,i) s(i,j) B_{j,m}`
    C1FromB,
    /// `C^_{n,m} = sum_{j} sum_{i} (-1)^j q^{n-j} (1/i!) s(n,i) s(i,j) B_{j,m}`
    C2FromB,
}

pub fn convert(relation: ConvertRelation, n: u32, p: &Params) -> Result<Rational> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("conversion formulas need n >= 1".into()));
    }
    p.ensure_pole_free(n)?;
    let q = p.q();
    let mut total = Rational::zero();
    match relation {
        ConvertRelation::BFromC1 => {
            for j in 1..=n {
                let c = cauchy::mpc_number_explicit(CauchyKind::First, j, p)?;
                let mut inner = Rational::zero();
                for i in 1..=n {
                    inner = inner
                        + factorial(i) * stirling::stirling2(n, i) * stirling::stirling2(i - 1, j - 1);
                }
                total = total + q.pow((n - j) as i64) * inner * c;
            }
        }
        ConvertRelation::BFromC2 => {
            for j in 1..=n {
                let c = cauchy::mpc_number_explicit(CauchyKind::Second, j, p)?;
                let mut inner = Rational::zero();
                for i in 1..=n {
                    inner = inner + factorial(i) * stirling::stirling2(n, i) * stirling::stirling2(i, j);
                }
                total = total + q.pow((n - j) as i64) * inner * c;
            }
            if n % 2 == 1 {
                total = -total;
            }
        }
        ConvertRelation::C1FromB => {
            for j in 1..=n {
                let b = mpb_explicit(j, p)?;
                let mut inner = Rational::zero();
                for i in 1..=n {
                    let sign = if (i + j) % 2 == 0 { Rational::one() } else { -Rational::one() };
                    inner = inner
                        + sign * stirling::stirling1(n, i) * stirling::stirling1(i, j)
                            / factorial(i);
                }
                total = total + q.pow((n - j) as i64) * inner * b;
            }
        }
        ConvertRelation::C2FromB => {
            for j in 1..=n {
                let b = mpb_explicit(j, p)?;
                let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
                let mut inner = Rational::zero();
                for i in 1..=n {
                    inner = inner
                        + stirling::stirling1(n, i) * stirling::stirling1(i, j) / factorial(i);
                }
                total = total + sign * q.pow((n - j) as i64) * inner * b;
            }
        }
    }
    Ok(total)
}

/// The direct target of a conversion relation, for cross-checking.
pub fn convert_target(relation: ConvertRelation, n: u32, p: &Params) -> Result<Rational> {
    match relation {
        ConvertRelation::BFromC1 | ConvertRelation::BFromC2 => mpb_explicit(n, p),
        ConvertRelation::C1FromB => cauchy::mpc_number_explicit(CauchyKind::First, n, p),
        ConvertRelation::C2FromB => cauchy::mpc_number_explicit(CauchyKind::Second, n, p),
    }
}

/// Outcome of a double-generating-function comparison.
#[derive(Clone, Debug)]
pub struct DgfReport {
    pub checks: u64,
    /// `(n, k, coefficient, direct)` for every disagreement (expected none).
    pub mismatches: Vec<(u32, u32, Rational, Rational)>,
}

impl DgfReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Expands the closed-form double generating function of the chosen
/// negative-order family to orders `(n_max, k_max)` and compares
/// `n! k! [x^n y^k]` with the directly computed numbers of order `-k`,
/// for all `n <= n_max`, `1 <= k <= k_max` (the order-0 cell is excluded
/// because parameter bundles forbid `k = 0`).
pub fn double_egf_check(family: GfFamily, p: &Params, n_max: u32, k_max: u32) -> Result<DgfReport> {
    let grid = egf::double_gf_grid(family, p, n_max, k_max)?;
    let mut report = DgfReport { checks: 0, mismatches: Vec::new() };
    for order in 1..=k_max {
        let pk = p.with_order(-(order as i32))?;
        for n in 0..=n_max {
            let direct = match family {
                GfFamily::Cauchy1 => cauchy::mpc_number_explicit(CauchyKind::First, n, &pk)?,
                GfFamily::Cauchy2 => cauchy::mpc_number_explicit(CauchyKind::Second, n, &pk)?,
                GfFamily::Bernoulli => mpb_explicit(n, &pk)?,
            };
            let coeff = grid[n as usize][order as usize].clone();
            report.checks += 1;
            if coeff != direct {
                report.mismatches.push((n, order, coeff, direct));
            }
        }
    }
    Ok(report)
}
