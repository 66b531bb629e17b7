//! Memoized triangles for the Stirling families.
//!
//! One [`Triangle`] per family:
//! - signed Stirling numbers of the first kind `s(n, i)`,
//! - Stirling numbers of the second kind `{n, i}`,
//! - r-Stirling numbers of the second kind (Broder's braces, see
//!   [`r_stirling2`] for the indexing),
//! - weighted Stirling numbers of the first kind `T_n^i(x)`,
//! - weighted Stirling numbers of the second kind `S_n^i(x)`.
//!
//! Every triangle is grown row by row from its two-term recurrence; the
//! explicit summation formulas serve as independent oracles in the tests.
//! Entries outside `0 <= i <= n` are 0. Completed entries are immutable;
//! growth is serialized per triangle behind a write lock while finished
//! rows can be read concurrently.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which family a [`Triangle`] generates, with its fixed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Stirling1,
    Stirling2,
    RStirling2 { r: u32 },
    WeightedFirst { x: Rational },
    WeightedSecond { x: Rational },
}

/// A lazily grown, memoized table of one Stirling-family triangle.
pub struct Triangle {
    family: Family,
    rows: RwLock<Vec<Vec<Rational>>>,
}

impl Triangle {
    pub fn new(family: Family) -> Self {
        Triangle {
            family,
            rows: RwLock::new(vec![vec![Rational::one()]]),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Entry `(n, i)`; zero outside `0 <= i <= n`.
    pub fn get(&self, n: u32, i: u32) -> Rational {
        if i > n {
            return Rational::zero();
        }
        let n = n as usize;
        {
            let rows = self.rows.read().unwrap();
            if n < rows.len() {
                return rows[n][i as usize].clone();
            }
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = self.next_row(rows.last().unwrap(), rows.len() - 1);
            rows.push(next);
        }
        rows[n][i as usize].clone()
    }

    /// Row `n + 1` from row `n`. Each family couples `(n+1, i)` to
    /// `(n, i-1)` and `(n, i)` only.
    fn next_row(&self, prev: &[Rational], n: usize) -> Vec<Rational> {
        let width = prev.len() + 1;
        let zero = Rational::zero();
        (0..width)
            .map(|i| {
                let left = if i >= 1 { &prev[i - 1] } else { &zero };
                let same = if i < prev.len() { &prev[i] } else { &zero };
                match &self.family {
                    Family::Stirling1 => left - Rational::from_int(n as i64) * same,
                    Family::Stirling2 => left + Rational::from_int(i as i64) * same,
                    Family::RStirling2 { r } => {
                        left + Rational::from_int(*r as i64 + i as i64) * same
                    }
                    Family::WeightedFirst { x } => {
                        left - (Rational::from_int(n as i64) + x) * same
                    }
                    Family::WeightedSecond { x } => {
                        left + (x + Rational::from_int(i as i64)) * same
                    }
                }
            })
            .collect()
    }
}

fn stirling1_triangle() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(Family::Stirling1))
}

fn stirling2_triangle() -> &'static Triangle {
    static T: OnceLock<Triangle> = OnceLock::new();
    T.get_or_init(|| Triangle::new(Family::Stirling2))
}

/// Signed Stirling number of the first kind `s(n, i)`:
/// `s(0,0) = 1`, `s(n+1, i) = s(n, i-1) - n s(n, i)`.
pub fn stirling1(n: u32, i: u32) -> Rational {
    stirling1_triangle().get(n, i)
}

/// Stirling number of the second kind `{n, i}`:
/// `{n+1, i} = i {n, i} + {n, i-1}`.
pub fn stirling2(n: u32, i: u32) -> Rational {
    stirling2_triangle().get(n, i)
}

/// r-Stirling number of the second kind, in the indexing of the
/// generating function `e^{rz} (e^z - 1)^i / i!`: this returns the brace
/// `{n+r over i+r}_r`, i.e. `n! [z^n]` of that function. `r = 0` reduces
/// to [`stirling2`].
pub fn r_stirling2(n: u32, i: u32, r: u32) -> Rational {
    Triangle::new(Family::RStirling2 { r }).get(n, i)
}

/// Weighted Stirling number of the second kind
/// `S_n^i(x) = (1/i!) sum_j C(i,j) (-1)^{i-j} (x+j)^n`.
pub fn weighted_s(n: u32, i: u32, x: &Rational) -> Rational {
    Triangle::new(Family::WeightedSecond { x: x.clone() }).get(n, i)
}

/// Weighted Stirling number of the first kind
/// `T_n^i(x) = sum_j (-1)^{n-j} C(n,j) s(j,i) (x)_{1,n-j}`.
pub fn weighted_t(n: u32, i: u32, x: &Rational) -> Rational {
    Triangle::new(Family::WeightedFirst { x: x.clone() }).get(n, i)
}

/// r-Whitney number of the second kind via
/// `W_{h,r}(n, i) = h^{n-i} S_n^i(r/h)`.
pub fn r_whitney2(n: u32, i: u32, h: &Rational, r: &Rational) -> Result<Rational> {
    if h.is_zero() {
        return Err(Error::ZeroParameter("h"));
    }
    Ok(h.pow(n as i64 - i as i64) * weighted_s(n, i, &(r / h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rising_factorial, Polynomial};
    use crate::rational::{binomial, factorial};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    /// Oracle: expand the falling factorial x(x-1)...(x-n+1) by direct
    /// polynomial multiplication; its coefficients are the s(n, i).
    fn stirling1_oracle(n: u32, i: u32) -> Rational {
        let mut p = Polynomial::one();
        for j in 0..n as i64 {
            p = p.mul(&Polynomial::from_coeffs(vec![Rational::from_int(-j), Rational::one()]));
        }
        p.coeff(i as usize)
    }

    /// Oracle: count set partitions of an n-set into i nonempty blocks by
    /// brute-force enumeration of block assignments.
    fn stirling2_oracle(n: u32, i: u32) -> Rational {
        if n == 0 {
            return if i == 0 { Rational::one() } else { Rational::zero() };
        }
        let mut count = 0u64;
        let mut assign = vec![0u32; n as usize];
        loop {
            let used = assign.iter().copied().max().unwrap() + 1;
            if used == i {
                // canonical labelling: block labels appear in first-use order
                let mut seen = 0;
                let mut canonical = true;
                for &b in &assign {
                    if b > seen {
                        canonical = false;
                        break;
                    }
                    if b == seen {
                        seen += 1;
                    }
                }
                if canonical {
                    count += 1;
                }
            }
            let mut pos = n as usize;
            loop {
                if pos == 0 {
                    return Rational::from_int(count as i64);
                }
                pos -= 1;
                if assign[pos] + 1 < i {
                    assign[pos] += 1;
                    break;
                }
                assign[pos] = 0;
            }
        }
    }

    #[test]
    fn first_kind_matches_falling_factorial() {
        assert_eq!(stirling1(0, 0), Rational::one());
        assert_eq!(stirling1(3, 2), Rational::from_int(-3));
        assert_eq!(stirling1(4, 2), Rational::from_int(11));
        for n in 0..=8 {
            assert_eq!(stirling1(n, 0), if n == 0 { Rational::one() } else { Rational::zero() });
            for i in 0..=n {
                assert_eq!(stirling1(n, i), stirling1_oracle(n, i), "s({n},{i})");
            }
        }
    }

    #[test]
    fn second_kind_matches_partition_count() {
        assert_eq!(stirling2(0, 0), Rational::one());
        assert_eq!(stirling2(4, 2), Rational::from_int(7));
        assert_eq!(stirling2(3, 5), Rational::zero());
        for n in 0..=7 {
            for i in 0..=n {
                assert_eq!(stirling2(n, i), stirling2_oracle(n, i), "{{{n},{i}}}");
            }
        }
    }

    #[test]
    fn r_stirling_reductions() {
        // r = 0 reduction
        for n in 0..=8 {
            for i in 0..=n {
                assert_eq!(r_stirling2(n, i, 0), stirling2(n, i));
            }
        }
        // column i = 0 is r^n (from the EGF e^{rz})
        for r in 1..=5u32 {
            for n in 0..=8 {
                assert_eq!(r_stirling2(n, 0, r), Rational::from_int(r as i64).pow(n as i64));
            }
        }
        // 1! [z^1] of e^z(e^z - 1) = 2 - 1
        assert_eq!(r_stirling2(1, 1, 1), Rational::one());
    }

    /// Broder's recurrence, translated to this crate's indexing:
    /// `{n+r over i+r}_r = {n+r over i+r}_{r-1} - (r-1) {n+r-1 over i+r}_{r-1}`.
    #[test]
    fn broder_recurrence() {
        for r in 1..=5u32 {
            let cur = Triangle::new(Family::RStirling2 { r });
            let prev = Triangle::new(Family::RStirling2 { r: r - 1 });
            for n in 0..=12 {
                for i in 0..=n {
                    let rhs = prev.get(n + 1, i + 1)
                        - Rational::from_int(r as i64 - 1) * prev.get(n, i + 1);
                    assert_eq!(cur.get(n, i), rhs, "F3 at r={r} n={n} i={i}");
                }
            }
        }
    }

    fn weighted_s_oracle(n: u32, i: u32, x: &Rational) -> Rational {
        let mut sum = Rational::zero();
        for j in 0..=i {
            let sign = if (i - j).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            sum = sum + sign * binomial(i, j) * (x + Rational::from_int(j as i64)).pow(n as i64);
        }
        sum / factorial(i)
    }

    fn weighted_t_oracle(n: u32, i: u32, x: &Rational) -> Rational {
        let mut sum = Rational::zero();
        for j in 0..=n {
            let sign = if (n - j).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            let rising = rising_factorial(&Rational::one(), n - j).eval(x);
            sum = sum + sign * binomial(n, j) * stirling1(j, i) * rising;
        }
        sum
    }

    #[test]
    fn weighted_triangles_match_explicit_sums() {
        let points = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(3, 7)];
        for x in &points {
            let s_tri = Triangle::new(Family::WeightedSecond { x: x.clone() });
            let t_tri = Triangle::new(Family::WeightedFirst { x: x.clone() });
            for n in 0..=9 {
                for i in 0..=n {
                    assert_eq!(s_tri.get(n, i), weighted_s_oracle(n, i, x), "S at x={x} n={n} i={i}");
                    assert_eq!(t_tri.get(n, i), weighted_t_oracle(n, i, x), "T at x={x} n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn weighted_special_values() {
        assert_eq!(weighted_s(0, 0, &rat(5, 7)), Rational::one());
        assert_eq!(weighted_t(1, 0, &rat(1, 2)), rat(-1, 2));
        for n in 0..=8 {
            for i in 0..=n {
                assert_eq!(weighted_s(n, i, &Rational::zero()), stirling2(n, i));
                assert_eq!(weighted_t(n, i, &Rational::zero()), stirling1(n, i));
                // at integer points the second kind recovers the r-braces
                for r in 0..=4u32 {
                    assert_eq!(weighted_s(n, i, &Rational::from_int(r as i64)), r_stirling2(n, i, r));
                }
            }
        }
        // leading weighted-first-kind coefficient is 1 for any x
        assert_eq!(weighted_t(2, 2, &rat(9, 5)), Rational::one());
    }

    /// The weighted pair is an inverse transform pair:
    /// sum_i T_n^i(x) S_i^j(x) = [n = j] and with the factors swapped.
    #[test]
    fn weighted_orthogonality() {
        let points = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(3, 7)];
        for x in &points {
            let s_tri = Triangle::new(Family::WeightedSecond { x: x.clone() });
            let t_tri = Triangle::new(Family::WeightedFirst { x: x.clone() });
            for n in 0..=10u32 {
                for j in 0..=n {
                    let mut ts = Rational::zero();
                    let mut st = Rational::zero();
                    for i in j..=n {
                        ts = ts + t_tri.get(n, i) * s_tri.get(i, j);
                        st = st + s_tri.get(n, i) * t_tri.get(i, j);
                    }
                    let expect = if n == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(ts, expect, "T*S at x={x} n={n} j={j}");
                    assert_eq!(st, expect, "S*T at x={x} n={n} j={j}");
                }
            }
        }
    }

    /// The two summation identities used in the proof of the
    /// Bernoulli-from-Cauchy conversion theorem.
    #[test]
    fn conversion_proof_identities() {
        for i in 1..=10u32 {
            for p in 1..=i {
                let mut lhs = Rational::zero();
                for j in 1..=i {
                    lhs = lhs + stirling2(i - 1, j - 1) * stirling1(j, p);
                }
                let sign = if (i - p) % 2 == 0 { Rational::one() } else { -Rational::one() };
                assert_eq!(lhs, sign * binomial(i - 1, p - 1), "identity 1 at i={i} p={p}");
            }
        }
        for n in 1..=10u32 {
            for p in 1..=n {
                let mut lhs = Rational::zero();
                for i in 1..=n {
                    let sign = if (i + p) % 2 == 0 { Rational::one() } else { -Rational::one() };
                    lhs = lhs + sign * factorial(i) * stirling2(n, i) * binomial(i - 1, p - 1);
                }
                let sign = if (n - p) % 2 == 0 { Rational::one() } else { -Rational::one() };
                assert_eq!(lhs, sign * factorial(p) * stirling2(n, p), "identity 2 at n={n} p={p}");
            }
        }
        // orthogonality of s and {}: sum_j s(i,j) {j, p} = [i = p]
        for i in 1..=10u32 {
            for p in 1..=i {
                let mut lhs = Rational::zero();
                for j in 1..=i {
                    lhs = lhs + stirling1(i, j) * stirling2(j, p);
                }
                let expect = if i == p { Rational::one() } else { Rational::zero() };
                assert_eq!(lhs, expect);
            }
        }
    }

    /// Concurrent readers share one triangle; growth is serialized behind
    /// the write lock and finished entries never change.
    #[test]
    fn concurrent_growth_and_reads() {
        use std::sync::Arc;
        let tri = Arc::new(Triangle::new(Family::Stirling1));
        let expected = stirling1(20, 10);
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let tri = Arc::clone(&tri);
                std::thread::spawn(move || {
                    for n in 0..=20u32 {
                        let _ = tri.get(n + t % 3, n / 2);
                    }
                    tri.get(20, 10)
                })
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), expected);
        }
    }

    #[test]
    fn whitney_reductions() {
        assert_eq!(r_whitney2(5, 2, &Rational::zero(), &Rational::one()).unwrap_err(),
            crate::error::Error::ZeroParameter("h"));
        for n in 0..=7 {
            for i in 0..=n {
                assert_eq!(
                    r_whitney2(n, i, &Rational::one(), &Rational::zero()).unwrap(),
                    stirling2(n, i)
                );
                for r in 0..=3i64 {
                    assert_eq!(
                        r_whitney2(n, i, &Rational::one(), &Rational::from_int(r)).unwrap(),
                        r_stirling2(n, i, r as u32)
                    );
                }
            }
            // i = 0 column: h^n (r/h)^n = r^n
            assert_eq!(
                r_whitney2(n, 0, &rat(3, 2), &rat(5, 1)).unwrap(),
                Rational::from_int(5).pow(n as i64)
            );
        }
    }
}
