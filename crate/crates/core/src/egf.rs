//! Generating-function coefficient extraction: the independent oracle
//! route for every family.
//!
//! Each closed form is assembled from exact series primitives and the
//! `n!` (or `n! k!`) normalization is applied at the very end:
//!
//! - first-kind numbers:  `l^a ((a+m)^k/a^k) Lif_k( l ln(1+qx)/q ; a+m)`
//! - second-kind numbers: same with the argument negated
//! - Bernoulli numbers:   `q l^{a-1} ((a+m)^k/a^k) Li_k( (l/q)(1-e^{-qx}) ; a+m-1) / (1-e^{-qx})`
//! - polynomial variants: multiply by `(1+qx)^{-x0/q}` (Cauchy kinds) or
//!   `e^{-q x0 x}` (Bernoulli)
//! - double generating functions of the negative-order families:
//!   `l^a e^{ay} (1+qx)^{+-c(y)}` and `l^a e^{ay} / (1 - c(y)(1-e^{-qx}))`
//!   with `c(y) = (l/q) e^{ay/(a+m)}`, expanded on a bivariate grid.

use crate::biseries::BiSeries;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::rational::{factorial, Rational};
use crate::series::{self, TruncatedSeries};

/// The three sequence families with a generating function in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfFamily {
    Cauchy1,
    Cauchy2,
    Bernoulli,
}

/// Every generating function the crate can expand, as one selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfSelector {
    /// Number families, univariate.
    Numbers(GfFamily),
    /// Polynomial families, univariate in `z` at a fixed point `x0`.
    Polynomials(GfFamily),
    /// Negative-order double generating functions, bivariate.
    Double(GfFamily),
}

/// Coefficients returned by [`egf_coefficients`].
#[derive(Clone, Debug)]
pub enum GfCoefficients {
    Univariate(Vec<Rational>),
    Bivariate(Vec<Vec<Rational>>),
}

/// Uniform entry point over all selectors. Polynomial selectors need
/// `x0`; the double selectors need `k_max`.
pub fn egf_coefficients(
    selector: GfSelector,
    p: &Params,
    x0: Option<&Rational>,
    n_max: u32,
    k_max: Option<u32>,
) -> Result<GfCoefficients> {
    match selector {
        GfSelector::Numbers(family) => {
            Ok(GfCoefficients::Univariate(number_egf_coefficients(family, p, n_max)?))
        }
        GfSelector::Polynomials(family) => {
            let x0 = x0.ok_or(Error::MissingEvaluationPoint)?;
            Ok(GfCoefficients::Univariate(poly_egf_coefficients(family, p, x0, n_max)?))
        }
        GfSelector::Double(family) => {
            let k_max = k_max.ok_or(Error::UnsupportedParameter(
                "double generating functions need a k_max".into(),
            ))?;
            Ok(GfCoefficients::Bivariate(double_gf_grid(family, p, n_max, k_max)?))
        }
    }
}

/// `n! [z^n]` of the number-family generating function, `n <= n_max`.
pub fn number_egf_coefficients(family: GfFamily, p: &Params, n_max: u32) -> Result<Vec<Rational>> {
    let series = number_gf_series(family, p, n_max)?;
    Ok(normalize(&series, n_max))
}

/// `n! [z^n]` of the polynomial-family generating function at `x0`.
pub fn poly_egf_coefficients(
    family: GfFamily,
    p: &Params,
    x0: &Rational,
    n_max: u32,
) -> Result<Vec<Rational>> {
    let base = number_gf_series(family, p, n_max)?;
    let twist = match family {
        GfFamily::Cauchy1 | GfFamily::Cauchy2 => {
            // (1 + qz)^{-x0/q}
            TruncatedSeries::pow1p(p.q(), &-(x0 / p.q()), n_max as usize)
        }
        GfFamily::Bernoulli => {
            // e^{-q x0 z}
            TruncatedSeries::monomial(-(p.q() * x0), 1, n_max as usize)
                .exp()
                .expect("monomial has zero constant term")
        }
    };
    Ok(normalize(&base.mul(&twist), n_max))
}

/// The ordinary-coefficient series prefix of the number generating
/// function, exact to order `n_max`.
pub fn number_gf_series(family: GfFamily, p: &Params, n_max: u32) -> Result<TruncatedSeries> {
    p.ensure_pole_free(n_max)?;
    let a = p.a();
    let k = p.k();
    let base = Rational::from_int(p.shifted_base());
    match family {
        GfFamily::Cauchy1 | GfFamily::Cauchy2 => {
            let order = n_max as usize;
            let mut arg = TruncatedSeries::log1p(p.q(), order).scale(&(p.l() / p.q()));
            if family == GfFamily::Cauchy2 {
                arg = arg.neg();
            }
            let lif = series::lif(k, &base, &arg)?;
            Ok(lif.scale(&(p.l().pow(a) * p.prefactor())))
        }
        GfFamily::Bernoulli => {
            // the quotient by 1 - e^{-qz} (valuation 1) costs one order
            let order = n_max as usize + 1;
            let expneg = TruncatedSeries::monomial(-p.q().clone(), 1, order)
                .exp()
                .expect("monomial has zero constant term");
            let one_minus = TruncatedSeries::one(order).sub(&expneg);
            let arg = one_minus.scale(&(p.l() / p.q()));
            let li = series::li(k, &(base - Rational::one()), &arg)?;
            let quotient = li.div(&one_minus)?;
            let scale = p.q() * p.l().pow(a - 1) * p.prefactor();
            Ok(quotient.scale(&scale))
        }
    }
}

fn normalize(series: &TruncatedSeries, n_max: u32) -> Vec<Rational> {
    (0..=n_max).map(|n| factorial(n) * series.coeff(n as usize)).collect()
}

/// Expands the double generating function of the negative-order family on
/// an `(n_max+1) x (k_max+1)` grid and returns `n! k! [x^n y^k]`.
///
/// Row `n`, column `k` of the result corresponds to the number of order
/// `-k`; column 0 is the degenerate order-0 slot that parameter bundles
/// exclude, left in the grid for completeness.
pub fn double_gf_grid(
    family: GfFamily,
    p: &Params,
    n_max: u32,
    k_max: u32,
) -> Result<Vec<Vec<Rational>>> {
    let base = p.shifted_base();
    if base == 0 {
        return Err(Error::Pole { index: 0 });
    }
    let (nx, ny) = (n_max as usize, k_max as usize);
    let a = p.a();
    // c(y) = (l/q) e^{ay/(a+m)}
    let cy = TruncatedSeries::monomial(Rational::ratio(a, base), 1, ny)
        .exp()
        .expect("monomial has zero constant term")
        .scale(&(p.l() / p.q()));
    let ey = TruncatedSeries::monomial(Rational::from_int(a), 1, ny)
        .exp()
        .expect("monomial has zero constant term");
    let xpart = match family {
        GfFamily::Cauchy1 | GfFamily::Cauchy2 => TruncatedSeries::log1p(p.q(), nx),
        GfFamily::Bernoulli => {
            let expneg = TruncatedSeries::monomial(-p.q().clone(), 1, nx)
                .exp()
                .expect("monomial has zero constant term");
            TruncatedSeries::one(nx).sub(&expneg)
        }
    };
    let core = BiSeries::from_y(&cy, nx).mul(&BiSeries::from_x(&xpart, ny));
    let combined = match family {
        // (1 + qx)^{c(y)} = exp(c(y) ln(1+qx))
        GfFamily::Cauchy1 => core.exp()?,
        // the reciprocal power
        GfFamily::Cauchy2 => core.neg().exp()?,
        // 1 / (1 - c(y)(1 - e^{-qx}))
        GfFamily::Bernoulli => core.geometric()?,
    };
    let full = combined.mul(&BiSeries::from_y(&ey, nx)).scale(&p.l().pow(a));
    Ok((0..=nx)
        .map(|n| {
            (0..=ny)
                .map(|k| factorial(n as u32) * factorial(k as u32) * full.coeff(n, k))
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli;
    use crate::cauchy::{self, CauchyKind};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn first_kind_matrix_column() {
        let p = Params::classic();
        let coeffs = number_egf_coefficients(GfFamily::Cauchy1, &p, 4).unwrap();
        assert_eq!(coeffs, vec![rat(1, 1), rat(1, 2), rat(-1, 6), rat(1, 4), rat(-19, 30)]);
    }

    #[test]
    fn bernoulli_numbers_prefix() {
        let p = Params::classic();
        let coeffs = number_egf_coefficients(GfFamily::Bernoulli, &p, 2).unwrap();
        assert_eq!(coeffs, vec![rat(1, 1), rat(1, 2), rat(1, 6)]);
    }

    #[test]
    fn first_kind_polynomial_at_one() {
        let p = Params::classic();
        let coeffs =
            poly_egf_coefficients(GfFamily::Cauchy1, &p, &Rational::one(), 1).unwrap();
        assert_eq!(coeffs, vec![rat(1, 1), rat(-1, 2)]);
    }

    #[test]
    fn selector_requires_evaluation_point() {
        let p = Params::classic();
        assert_eq!(
            egf_coefficients(GfSelector::Polynomials(GfFamily::Cauchy1), &p, None, 3, None)
                .unwrap_err(),
            Error::MissingEvaluationPoint
        );
    }

    #[test]
    fn selector_routes_match_typed_functions() {
        let p = Params::from_product(2, rat(1, 2), rat(2, 1), 2, 1).unwrap();
        let GfCoefficients::Univariate(u) =
            egf_coefficients(GfSelector::Numbers(GfFamily::Cauchy2), &p, None, 4, None).unwrap()
        else {
            panic!("univariate selector");
        };
        assert_eq!(u, number_egf_coefficients(GfFamily::Cauchy2, &p, 4).unwrap());
        let GfCoefficients::Bivariate(g) =
            egf_coefficients(GfSelector::Double(GfFamily::Bernoulli), &p, None, 3, Some(3))
                .unwrap()
        else {
            panic!("bivariate selector");
        };
        assert_eq!(g, double_gf_grid(GfFamily::Bernoulli, &p, 3, 3).unwrap());
    }

    #[test]
    fn series_route_matches_explicit_sums() {
        let p = Params::from_product(2, rat(1, 2), rat(2, 1), 2, 1).unwrap();
        let c1 = number_egf_coefficients(GfFamily::Cauchy1, &p, 8).unwrap();
        let c2 = number_egf_coefficients(GfFamily::Cauchy2, &p, 8).unwrap();
        let b = number_egf_coefficients(GfFamily::Bernoulli, &p, 8).unwrap();
        for n in 0..=8u32 {
            assert_eq!(c1[n as usize], cauchy::mpc_number_explicit(CauchyKind::First, n, &p).unwrap());
            assert_eq!(c2[n as usize], cauchy::mpc_number_explicit(CauchyKind::Second, n, &p).unwrap());
            assert_eq!(b[n as usize], bernoulli::mpb_explicit(n, &p).unwrap());
        }
    }

    #[test]
    fn lif_coefficient_example() {
        // 2! [x^2] of l^a Lif_1(ln(1+x); 1) is the Cauchy number -1/6
        let u = TruncatedSeries::log1p(&Rational::one(), 2);
        let s = series::lif(1, &Rational::one(), &u).unwrap();
        assert_eq!(s.coeff(2), rat(-1, 12));
        assert_eq!(factorial(2) * s.coeff(2), rat(-1, 6));
    }

    #[test]
    fn double_grid_corner() {
        // [x^0 y^k] of the Bernoulli double GF: e^{ay} alone, so a^k l^a;
        // that is B_{0,m}^{(-k)} = a^k l^a
        let p = Params::from_product(2, Rational::one(), rat(3, 1), -1, 0).unwrap();
        let grid = double_gf_grid(GfFamily::Bernoulli, &p, 3, 3).unwrap();
        for k in 0..=3u32 {
            assert_eq!(grid[0][k as usize], Rational::from_int(2).pow(k as i64) * rat(9, 1));
        }
    }
}
