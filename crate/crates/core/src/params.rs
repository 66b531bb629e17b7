//! Validated parameter bundles shared by every sequence family.
//!
//! A [`Params`] holds the base `a`, the step `q`, the factor list
//! `L = (l_1, ..., l_k')` with its product `l`, the signed order `k`
//! (negative values select the negative-upper-index families) and the
//! nonnegative shift `m`. All formulas downstream depend on `L` only
//! through the product `l`.

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    a: i64,
    q: Rational,
    factors: Vec<Rational>,
    l: Rational,
    k: i32,
    m: u32,
}

impl Params {
    /// Validates and builds a parameter bundle.
    ///
    /// Requires `a != 0`, `q != 0`, a nonempty `L` of nonzero factors and
    /// `k != 0`. For positive orders additionally `a + m != 0`, since the
    /// prefactor `(a+m)^k / a^k` sits over `(a+m)^k` in every explicit
    /// formula's first denominator.
    pub fn new(a: i64, q: Rational, factors: Vec<Rational>, k: i32, m: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::ZeroParameter("a"));
        }
        if q.is_zero() {
            return Err(Error::ZeroParameter("q"));
        }
        if factors.is_empty() {
            return Err(Error::EmptyFactorList);
        }
        if factors.iter().any(Rational::is_zero) {
            return Err(Error::ZeroParameter("l_i"));
        }
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if k > 0 && a + m as i64 == 0 {
            return Err(Error::Pole { index: 0 });
        }
        let l = factors.iter().fold(Rational::one(), |acc, f| acc * f);
        Ok(Params { a, q, factors, l, k, m })
    }

    /// Shorthand for a single-factor list, i.e. `L = (l)`.
    pub fn from_product(a: i64, q: Rational, l: Rational, k: i32, m: u32) -> Result<Self> {
        Params::new(a, q, vec![l], k, m)
    }

    /// The classical specialization `a = q = l = 1`, `k = 1`, `m = 0`.
    pub fn classic() -> Self {
        Params::from_product(1, Rational::one(), Rational::one(), 1, 0).unwrap()
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// The product `l` of the factor list (recomputed at construction,
    /// never stored stale).
    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn factors(&self) -> &[Rational] {
        &self.factors
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `a + m`, the effective base of the shifted sequence.
    pub fn shifted_base(&self) -> i64 {
        self.a + self.m as i64
    }

    /// Same parameters with the shift replaced.
    pub fn with_shift(&self, m: u32) -> Result<Self> {
        Params::new(self.a, self.q.clone(), self.factors.clone(), self.k, m)
    }

    /// Same parameters with the order replaced.
    pub fn with_order(&self, k: i32) -> Result<Self> {
        Params::new(self.a, self.q.clone(), self.factors.clone(), k, self.m)
    }

    /// True iff `a + m + i = 0` while the order is positive: a pole of the
    /// explicit formulas. Callers must refuse such evaluations.
    pub fn pole_check(&self, i: u32) -> bool {
        self.k > 0 && self.a + self.m as i64 + i as i64 == 0
    }

    /// Checks every denominator an index-`n` evaluation touches: for
    /// positive orders `a + m + i` for all `i <= n`, for negative orders
    /// the prefactor denominator `a + m`.
    pub fn ensure_pole_free(&self, n: u32) -> Result<()> {
        if self.k > 0 {
            let base = self.shifted_base();
            if (0..=n as i64).contains(&-base) {
                return Err(Error::Pole { index: -base });
            }
        } else if self.shifted_base() == 0 {
            return Err(Error::Pole { index: 0 });
        }
        Ok(())
    }

    /// The prefactor `(a+m)^k / a^k` common to all shifted families.
    /// Call only after `ensure_pole_free`.
    pub fn prefactor(&self) -> Rational {
        int_ratio_pow(self.shifted_base(), self.a, self.k)
    }
}

/// `(num/den)^k` for a signed exponent, computed so that a vanishing
/// integer only ever appears with a positive exponent. The caller
/// guarantees that whatever lands in the denominator is nonzero.
pub(crate) fn int_ratio_pow(num: i64, den: i64, k: i32) -> Rational {
    if k >= 0 {
        Rational::from_int(num).pow(k as i64) / Rational::from_int(den).pow(k as i64)
    } else {
        let e = -(k as i64);
        Rational::from_int(den).pow(e) / Rational::from_int(num).pow(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn classic_specialization() {
        let p = Params::new(1, Rational::one(), vec![Rational::one()], 1, 0).unwrap();
        assert_eq!(p.l(), &Rational::one());
        assert_eq!(p, Params::classic());
    }

    #[test]
    fn product_of_factor_list() {
        let p = Params::new(2, rat(1, 3), vec![rat(2, 1), rat(1, 2)], 2, 1).unwrap();
        assert_eq!(p.l(), &Rational::one());
        assert_eq!(p.shifted_base(), 3);
    }

    #[test]
    fn rejects_invalid_inputs() {
        let one = Rational::one;
        assert_eq!(
            Params::new(0, one(), vec![one()], 1, 0).unwrap_err(),
            Error::ZeroParameter("a")
        );
        assert_eq!(
            Params::new(1, Rational::zero(), vec![one()], 1, 0).unwrap_err(),
            Error::ZeroParameter("q")
        );
        assert_eq!(
            Params::new(1, one(), vec![one(), Rational::zero()], 1, 0).unwrap_err(),
            Error::ZeroParameter("l_i")
        );
        assert_eq!(Params::new(1, one(), vec![], 1, 0).unwrap_err(), Error::EmptyFactorList);
        assert_eq!(Params::new(1, one(), vec![one()], 0, 0).unwrap_err(), Error::ZeroOrder);
        // positive order forbids a + m = 0
        assert_eq!(
            Params::new(-2, one(), vec![one()], 1, 2).unwrap_err(),
            Error::Pole { index: 0 }
        );
        // negative order allows it at construction time
        assert!(Params::new(-2, one(), vec![one()], -1, 2).is_ok());
    }

    #[test]
    fn pole_check_examples() {
        let p = Params::new(-2, Rational::one(), vec![Rational::one()], 1, 0).unwrap();
        assert!(p.pole_check(2));
        let p = Params::new(1, Rational::one(), vec![Rational::one()], 3, 0).unwrap();
        assert!(!p.pole_check(5));
        let p = Params::new(-2, Rational::one(), vec![Rational::one()], -1, 0).unwrap();
        assert!(!p.pole_check(2));
        assert!(p.ensure_pole_free(4).is_ok());
    }

    #[test]
    fn prefactor_signed_orders() {
        let p = Params::new(2, Rational::one(), vec![Rational::one()], 2, 1).unwrap();
        assert_eq!(p.prefactor(), rat(9, 4));
        let p = p.with_order(-2).unwrap();
        assert_eq!(p.prefactor(), rat(4, 9));
    }
}
