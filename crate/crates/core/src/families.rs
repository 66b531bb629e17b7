//! Polynomial-valued families: generalized m-poly-Cauchy polynomials of
//! both kinds, m-poly-Bernoulli polynomials, H-polynomials, and the
//! weighted-Stirling expressions and cross-relations among them.
//!
//! Polynomials are assembled in the monomial basis, expanding the
//! rising-factorial and weighted-Stirling forms eagerly; the constant
//! term of every family equals the corresponding number.

use crate::bernoulli::{h_explicit, mpb_explicit};
use crate::cauchy::{mpc_number_explicit, CauchyKind};
use crate::error::{Error, Result};
use crate::params::{int_ratio_pow, Params};
use crate::poly::{rising_factorial, Polynomial};
use crate::rational::{binomial, factorial, Rational};
use crate::stirling::{Family, Triangle};

/// Both values of an identity check, for reporting.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// m-poly-Cauchy polynomial by the binomial/rising-factorial expansion
///
/// ```text
/// C_{n,m}(x) = sum_{j=0}^{n} (-1)^{n-j} C(n,j) C_{j,m} (x)_{q,n-j}
/// ```
pub fn mpc_polynomial(kind: CauchyKind, n: u32, p: &Params) -> Result<Polynomial> {
    p.ensure_pole_free(n)?;
    let mut acc = Polynomial::zero();
    for j in 0..=n {
        let number = mpc_number_explicit(kind, j, p)?;
        let sign = if (n - j).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        let term = rising_factorial(p.q(), n - j).scale(&(sign * binomial(n, j) * number));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The same polynomial evaluated through weighted Stirling numbers of the
/// first kind:
///
/// ```text
/// ((a+m)^k/a^k) sum_i T_n^i(x0/q) q^{n-i} (+-1)^i l^{a+i} / (a+i+m)^k
/// ```
pub fn mpc_poly_weighted_eval(
    kind: CauchyKind,
    n: u32,
    p: &Params,
    x0: &Rational,
) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let tri = Triangle::new(Family::WeightedFirst { x: x0 / p.q() });
    let base = p.shifted_base();
    let mut sum = Rational::zero();
    for i in 0..=n {
        let t = tri.get(n, i);
        if t.is_zero() {
            continue;
        }
        let sign = match kind {
            CauchyKind::First => Rational::one(),
            CauchyKind::Second if i % 2 == 0 => Rational::one(),
            CauchyKind::Second => -Rational::one(),
        };
        sum = sum
            + t * p.q().pow((n - i) as i64)
                * sign
                * p.l().pow(p.a() + i as i64)
                * Rational::from_int(base + i as i64).pow(-(p.k() as i64));
    }
    Ok(p.prefactor() * sum)
}

/// Left side of the weighted-Stirling inversion identity
/// `sum_i q^{n-i} S_n^i(x0/q) C_{i,m}(x0)`; equals
/// [`mpc_poly_inverse_closed_form`] independently of `x0`.
pub fn mpc_poly_inverse_check(n: u32, p: &Params, x0: &Rational) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let tri = Triangle::new(Family::WeightedSecond { x: x0 / p.q() });
    let mut sum = Rational::zero();
    for i in 0..=n {
        let s = tri.get(n, i);
        if s.is_zero() {
            continue;
        }
        let poly_at = mpc_polynomial(CauchyKind::First, i, p)?.eval(x0);
        sum = sum + p.q().pow((n - i) as i64) * s * poly_at;
    }
    Ok(sum)
}

/// `(a+m)^k l^{n+a} / (a^k (a+n+m)^k)`.
pub fn mpc_poly_inverse_closed_form(n: u32, p: &Params) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let base = p.shifted_base();
    Ok(p.prefactor()
        * p.l().pow(n as i64 + p.a())
        * Rational::from_int(base + n as i64).pow(-(p.k() as i64)))
}

/// One side of the polynomial duality: for `n >= 1`,
///
/// ```text
/// sum_{i=1}^{n} C(n-1,i-1) q^{n-i} X_{i,m}(x0) / i!
/// ```
///
/// with `X` the opposite kind; equals `(-1)^n (own kind at n)(-x0) / n!`.
pub fn mpc_poly_dual(kind: CauchyKind, n: u32, p: &Params, x0: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::UnsupportedParameter("polynomial duality needs n >= 1".into()));
    }
    let mut sum = Rational::zero();
    for i in 1..=n {
        let poly_at = mpc_polynomial(kind.other(), i, p)?.eval(x0);
        sum = sum + binomial(n - 1, i - 1) * p.q().pow((n - i) as i64) * poly_at / factorial(i);
    }
    Ok(sum)
}

/// m-poly-Bernoulli polynomial by the binomial expansion
/// `B_{n,m}(x) = sum_i C(n,i) (-q)^{n-i} B_{i,m} x^{n-i}`.
pub fn mpb_polynomial(n: u32, p: &Params) -> Result<Polynomial> {
    p.ensure_pole_free(n)?;
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for i in 0..=n {
        let number = mpb_explicit(i, p)?;
        coeffs[(n - i) as usize] = binomial(n, i) * (-p.q()).pow((n - i) as i64) * number;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// The same polynomial evaluated through weighted Stirling numbers of the
/// second kind:
///
/// ```text
/// ((a+m)^k/a^k) sum_i i! (-q)^{n-i} l^{i+a} S_n^i(x0) / (a+m+i)^k
/// ```
///
/// At integer `x0 = r` the `S` values are the r-braces; at `x0 = r/h`
/// they are `h^{i-n} W_{h,r}(n,i)`.
pub fn mpb_poly_weighted_eval(n: u32, p: &Params, x0: &Rational) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let tri = Triangle::new(Family::WeightedSecond { x: x0.clone() });
    let base = p.shifted_base();
    let mut sum = Rational::zero();
    for i in 0..=n {
        let s = tri.get(n, i);
        if s.is_zero() {
            continue;
        }
        sum = sum
            + factorial(i)
                * (-p.q()).pow((n - i) as i64)
                * p.l().pow(i as i64 + p.a())
                * s
                * Rational::from_int(base + i as i64).pow(-(p.k() as i64));
    }
    Ok(p.prefactor() * sum)
}

/// Left side of the weighted-Stirling transform inversion
/// `sum_i T_n^i(x0) (-q)^{n-i} B_{i,m}(x0)`; equals
/// [`mpb_poly_inverse_closed_form`] independently of `x0`.
pub fn mpb_poly_weighted_inverse_check(n: u32, p: &Params, x0: &Rational) -> Result<Rational> {
    p.ensure_pole_free(n)?;
    let tri = Triangle::new(Family::WeightedFirst { x: x0.clone() });
    let mut sum = Rational::zero();
    for i in 0..=n {
        let t = tri.get(n, i);
        if t.is_zero() {
            continue;
        }
        let poly_at = mpb_polynomial(i, p)?.eval(x0);
        sum = sum + t * (-p.q()).pow((n - i) as i64) * poly_at;
    }
    Ok(sum)
}

/// `(a+m)^k n! l^{n+a} / (a^k (n+a+m)^k)`.
pub fn mpb_poly_inverse_closed_form(n: u32, p: &Params) -> Result<Rational> {
    Ok(factorial(n) * mpc_poly_inverse_closed_form(n, p)?)
}

/// The four polynomial-level conversion relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Thm200Relation {
    /// `B_{n,m}(x) = sum_i i! (-q)^{n-i} S_n^i(x) sum_j q^{i-j} S_i^j(x/q) C_{j,m}(x)`
    For9,
    /// `B_{n,m}(x) = (-1)^n sum_j q^{n-j} sum_i i! S_n^i(x) S_i^j(x/q) C^_{j,m}(x)`
    For10,
    /// `C_{n,m}(x) = sum_j q^{n-j} sum_i ((-1)^{i-j}/i!) T_n^i(x/q) T_i^j(x) B_{j,m}(x)`
    For11,
    /// `C^_{n,m}(x) = sum_j q^{n-j} sum_i ((-1)^j/i!) T_n^i(x/q) T_i^j(x) B_{j,m}(x)`
    For12,
}

/// Evaluates one conversion relation at `x0` and returns both sides.
/// Sums run over their natural vanishing-term truncations.
pub fn thm200_check(
    relation: Thm200Relation,
    n: u32,
    p: &Params,
    x0: &Rational,
) -> Result<IdentityCheck> {
    p.ensure_pole_free(n)?;
    let q = p.q();
    let s_at_x = Triangle::new(Family::WeightedSecond { x: x0.clone() });
    let s_at_xq = Triangle::new(Family::WeightedSecond { x: x0 / q });
    let t_at_x = Triangle::new(Family::WeightedFirst { x: x0.clone() });
    let t_at_xq = Triangle::new(Family::WeightedFirst { x: x0 / q });
    let lhs = match relation {
        Thm200Relation::For9 | Thm200Relation::For10 => mpb_polynomial(n, p)?.eval(x0),
        Thm200Relation::For11 => mpc_polynomial(CauchyKind::First, n, p)?.eval(x0),
        Thm200Relation::For12 => mpc_polynomial(CauchyKind::Second, n, p)?.eval(x0),
    };
    let mut rhs = Rational::zero();
    match relation {
        Thm200Relation::For9 => {
            for i in 0..=n {
                let outer = factorial(i) * (-q).pow((n - i) as i64) * s_at_x.get(n, i);
                if outer.is_zero() {
                    continue;
                }
                let mut inner = Rational::zero();
                for j in 0..=i {
                    let c = mpc_polynomial(CauchyKind::First, j, p)?.eval(x0);
                    inner = inner + q.pow(i as i64 - j as i64) * s_at_xq.get(i, j) * c;
                }
                rhs = rhs + outer * inner;
            }
        }
        Thm200Relation::For10 => {
            for j in 0..=n {
                let c = mpc_polynomial(CauchyKind::Second, j, p)?.eval(x0);
                let mut inner = Rational::zero();
                for i in j..=n {
                    inner = inner + factorial(i) * s_at_x.get(n, i) * s_at_xq.get(i, j);
                }
                rhs = rhs + q.pow((n - j) as i64) * inner * c;
            }
            if n % 2 == 1 {
                rhs = -rhs;
            }
        }
        Thm200Relation::For11 | Thm200Relation::For12 => {
            for j in 0..=n {
                let b = mpb_polynomial(j, p)?.eval(x0);
                let mut inner = Rational::zero();
                for i in j..=n {
                    let sign = match relation {
                        Thm200Relation::For11 if (i + j) % 2 == 0 => Rational::one(),
                        Thm200Relation::For11 => -Rational::one(),
                        _ if j % 2 == 0 => Rational::one(),
                        _ => -Rational::one(),
                    };
                    inner = inner + sign * t_at_xq.get(n, i) * t_at_x.get(i, j) / factorial(i);
                }
                rhs = rhs + q.pow((n - j) as i64) * inner * b;
            }
        }
    }
    Ok(IdentityCheck { lhs, rhs })
}

/// H-polynomial by the binomial expansion
/// `H_{n,p}(m;x) = sum_i C(n,i) (-q)^{n-i} H_{i,p}(m) x^{n-i}`.
pub fn h_polynomial(n: u32, pcol: u32, p: &Params) -> Result<Polynomial> {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for i in 0..=n {
        let number = h_explicit(i, p, pcol)?;
        coeffs[(n - i) as usize] = binomial(n, i) * (-p.q()).pow((n - i) as i64) * number;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// The alternative explicit form of the H-polynomial, evaluated at `x0`:
///
/// ```text
/// ((p+a+m)^k / (p! a^k)) sum_i (i+p)! (-q)^{n-i} l^{i+a} S_n^i(x0+p) / (a+m+i+p)^k
/// ```
pub fn h_polynomial_explicit_eval(
    n: u32,
    pcol: u32,
    p: &Params,
    x0: &Rational,
) -> Result<Rational> {
    p.ensure_pole_free(n + pcol)?;
    let base = p.shifted_base();
    if p.k() < 0 && base + pcol as i64 == 0 {
        return Err(Error::Pole { index: pcol as i64 });
    }
    let tri = Triangle::new(Family::WeightedSecond {
        x: x0 + Rational::from_int(pcol as i64),
    });
    let mut sum = Rational::zero();
    for i in 0..=n {
        let s = tri.get(n, i);
        if s.is_zero() {
            continue;
        }
        sum = sum
            + factorial(i + pcol)
                * (-p.q()).pow((n - i) as i64)
                * p.l().pow(i as i64 + p.a())
                * s
                * Rational::from_int(base + i as i64 + pcol as i64).pow(-(p.k() as i64));
    }
    let pref = int_ratio_pow(base + pcol as i64, p.a(), p.k()) / factorial(pcol);
    Ok(pref * sum)
}
