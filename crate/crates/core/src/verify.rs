//! Named identity suites: every recurrence, resummation, duality,
//! conversion and generating-function claim, cross-checked over index
//! ranges and a fixed parameter sample.
//!
//! Identity ids are short stable labels (`Q1`, `Re1`, `AN1`, `TGQ11`,
//! `thm200:For9`, `DGF-B`, ...). Each suite compares two or more
//! independent computation routes and records every disagreement; a suite
//! passes when its failure list is empty. Pole cases are skipped by the
//! same predicates the evaluation functions enforce. Where a relation is
//! only claimed for positive orders, negative orders are still exercised
//! and reported as notes without being asserted.

use crate::bernoulli::{self, ConvertRelation};
use crate::cauchy::{self, CauchyKind};
use crate::egf::{self, GfFamily};
use crate::error::{Error, Result};
use crate::families::{self, Thm200Relation};
use crate::params::{int_ratio_pow, Params};
use crate::poly::Polynomial;
use crate::rational::{factorial, Rational};
use crate::stirling::{self, Family, Triangle};

/// All identity ids, in report order.
pub const IDENTITY_IDS: &[&str] = &[
    "F3",
    "F4",
    "Q1",
    "Re1",
    "Re2",
    "Re3",
    "AN1",
    "AN2",
    "GenFi",
    "B-from-C1",
    "B-from-C2",
    "C1-from-B",
    "C2-from-B",
    "Gq1",
    "TGQ1",
    "TGQ11",
    "Alg1",
    "GGF",
    "ws",
    "zR1",
    "zR2",
    "thm14",
    "thm14:wst",
    "For5",
    "For6",
    "For7",
    "thm200:For9",
    "thm200:For10",
    "thm200:For11",
    "thm200:For12",
    "For13",
    "For14",
    "DGF-C1",
    "DGF-C2",
    "DGF-B",
];

/// Range overrides for a verification run. `None` picks each identity's
/// default (the ranges of the acceptance suite).
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub n_max: Option<u32>,
    pub m_max: Option<u32>,
    /// Replaces the built-in five-point `(a, q, L)` sample.
    pub sample: Option<(i64, Rational, Vec<Rational>)>,
    /// Replaces the built-in order set `{1, 2, 3, -1, -2}`.
    pub orders: Option<Vec<i32>>,
}

impl VerifyOptions {
    fn samples(&self) -> Vec<(i64, Rational, Vec<Rational>)> {
        if let Some(s) = &self.sample {
            return vec![s.clone()];
        }
        let one = Rational::one;
        vec![
            (1, one(), vec![one()]),
            (2, one(), vec![one()]),
            (1, Rational::ratio(1, 2), vec![Rational::from_int(2)]),
            (3, Rational::from_int(2), vec![Rational::ratio(1, 2), Rational::from_int(3)]),
            (-3, one(), vec![one()]),
        ]
    }

    fn orders(&self) -> Vec<i32> {
        self.orders.clone().unwrap_or_else(|| vec![1, 2, 3, -1, -2])
    }

    fn positive_orders(&self) -> Vec<i32> {
        self.orders().into_iter().filter(|&k| k > 0).collect()
    }

    fn negative_orders(&self) -> Vec<i32> {
        self.orders().into_iter().filter(|&k| k < 0).collect()
    }

    fn n(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    fn m(&self, default: u32) -> u32 {
        self.m_max.unwrap_or(default)
    }

    /// Evaluation points for the polynomial identities.
    fn x_points(&self) -> Vec<Rational> {
        vec![
            Rational::zero(),
            Rational::one(),
            -Rational::one(),
            Rational::ratio(2, 3),
        ]
    }
}

/// One disagreement between two routes.
#[derive(Clone, Debug)]
pub struct Failure {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity suite.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub id: &'static str,
    pub ranges: String,
    pub checks: u64,
    pub failures: Vec<Failure>,
    /// Observations that are reported but not asserted (e.g. negative
    /// orders of relations stated only for positive ones).
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    checks: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn eq(&mut self, loc: impl FnOnce() -> String, lhs: &Rational, rhs: &Rational) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                location: loc(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    fn eq_results(
        &mut self,
        loc: impl FnOnce() -> String,
        lhs: Result<Rational>,
        rhs: Result<Rational>,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => self.eq(loc, &l, &r),
            (l, r) => {
                self.checks += 1;
                self.failures.push(Failure {
                    location: loc(),
                    lhs: format!("{l:?}"),
                    rhs: format!("{r:?}"),
                });
            }
        }
    }

    fn into_report(self, id: &'static str, ranges: String) -> VerifyReport {
        VerifyReport {
            id,
            ranges,
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn sample_label(p: &Params) -> String {
    format!("(a={}, q={}, l={}, k={}, m={})", p.a(), p.q(), p.l(), p.k(), p.m())
}

/// Largest `n <= n_max` whose index-`n` evaluation is pole-free, if any.
fn max_pole_free_n(p: &Params, n_max: u32) -> Option<u32> {
    let base = p.shifted_base();
    if p.k() > 0 {
        let pole = -base;
        if (0..=n_max as i64).contains(&pole) {
            if pole == 0 {
                None
            } else {
                Some(pole as u32 - 1)
            }
        } else {
            Some(n_max)
        }
    } else if base == 0 {
        None
    } else {
        Some(n_max)
    }
}

/// Pole freedom of the *unshifted* numbers `c_0 .. c_n` consumed by the
/// r-Stirling resummation.
fn unshifted_pole_free(p: &Params, n: u32) -> bool {
    p.k() <= 0 || !(0..=n as i64).contains(&-p.a())
}

fn params_for(
    sample: &(i64, Rational, Vec<Rational>),
    k: i32,
    m: u32,
) -> Option<Params> {
    Params::new(sample.0, sample.1.clone(), sample.2.clone(), k, m).ok()
}

/// Runs one identity suite by id.
pub fn run_identity(id: &str, opts: &VerifyOptions) -> Result<VerifyReport> {
    match id {
        "F3" => Ok(broder_recurrence(opts)),
        "F4" => Ok(rstirling_row(opts)),
        "Q1" => Ok(resummation(opts)),
        "Re1" => Ok(cauchy_recurrence(opts, true)),
        "Re2" => Ok(cauchy_recurrence(opts, false)),
        "Re3" => Ok(m_cauchy_suite(opts)),
        "AN1" => Ok(number_duality(opts, CauchyKind::First)),
        "AN2" => Ok(number_duality(opts, CauchyKind::Second)),
        "GenFi" => Ok(bernoulli_explicit_suite(opts)),
        "B-from-C1" => Ok(conversion(opts, ConvertRelation::BFromC1, "B-from-C1")),
        "B-from-C2" => Ok(conversion(opts, ConvertRelation::BFromC2, "B-from-C2")),
        "C1-from-B" => Ok(conversion(opts, ConvertRelation::C1FromB, "C1-from-B")),
        "C2-from-B" => Ok(conversion(opts, ConvertRelation::C2FromB, "C2-from-B")),
        "Gq1" => Ok(h_table_vs_explicit(opts)),
        "TGQ1" => Ok(h_recurrence(opts, true)),
        "TGQ11" => Ok(h_recurrence(opts, false)),
        "Alg1" => Ok(classical_bernoulli(opts)),
        "GGF" => Ok(polynomial_vs_gf(opts)),
        "ws" => Ok(weighted_evaluation(opts)),
        "zR1" => Ok(polynomial_duality(opts, CauchyKind::First, "zR1")),
        "zR2" => Ok(polynomial_duality(opts, CauchyKind::Second, "zR2")),
        "thm14" => Ok(cauchy_inversion(opts)),
        "thm14:wst" => Ok(weighted_orthogonality(opts)),
        "For5" => Ok(bernoulli_weighted_evaluation(opts)),
        "For6" => Ok(bernoulli_inversion(opts)),
        "For7" => Ok(bernoulli_polynomial_vs_gf(opts)),
        "thm200:For9" => Ok(thm200(opts, Thm200Relation::For9, "thm200:For9")),
        "thm200:For10" => Ok(thm200(opts, Thm200Relation::For10, "thm200:For10")),
        "thm200:For11" => Ok(thm200(opts, Thm200Relation::For11, "thm200:For11")),
        "thm200:For12" => Ok(thm200(opts, Thm200Relation::For12, "thm200:For12")),
        "For13" => Ok(h_polynomial_routes(opts)),
        "For14" => Ok(h_polynomial_recurrence(opts)),
        "DGF-C1" => Ok(double_gf(opts, GfFamily::Cauchy1, "DGF-C1")),
        "DGF-C2" => Ok(double_gf(opts, GfFamily::Cauchy2, "DGF-C2")),
        "DGF-B" => Ok(double_gf(opts, GfFamily::Bernoulli, "DGF-B")),
        _ => Err(Error::UnknownIdentity(id.to_string())),
    }
}

/// Runs every identity suite, in id order.
pub fn run_all(opts: &VerifyOptions) -> Vec<VerifyReport> {
    IDENTITY_IDS
        .iter()
        .map(|id| run_identity(id, opts).expect("built-in ids are known"))
        .collect()
}

fn broder_recurrence(opts: &VerifyOptions) -> VerifyReport {
    let n_max = opts.n(12);
    let mut c = Checker::new();
    for r in 1..=5u32 {
        let cur = Triangle::new(Family::RStirling2 { r });
        let prev = Triangle::new(Family::RStirling2 { r: r - 1 });
        for n in 0..=n_max {
            for i in 0..=n {
                let rhs = prev.get(n + 1, i + 1)
                    - Rational::from_int(r as i64 - 1) * prev.get(n, i + 1);
                c.eq(|| format!("r={r} n={n} i={i}"), &cur.get(n, i), &rhs);
            }
        }
    }
    c.into_report("F3", format!("1 <= r <= 5, n <= {n_max}"))
}

fn rstirling_row(opts: &VerifyOptions) -> VerifyReport {
    let n_max = opts.n(12);
    let mut c = Checker::new();
    for r in 1..=5u32 {
        for n in 0..=n_max {
            c.eq(
                || format!("r={r} n={n}"),
                &stirling::r_stirling2(n, 0, r),
                &Rational::from_int(r as i64).pow(n as i64),
            );
        }
    }
    for n in 0..=n_max {
        for i in 0..=n {
            c.eq(
                || format!("r=0 n={n} i={i}"),
                &stirling::r_stirling2(n, i, 0),
                &stirling::stirling2(n, i),
            );
        }
    }
    c.into_report("F4", format!("r <= 5, n <= {n_max}"))
}

fn resummation(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(5));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                if !unshifted_pole_free(&p, n_ok + m) {
                    continue;
                }
                for kind in [CauchyKind::First, CauchyKind::Second] {
                    for n in 0..=n_ok {
                        if !unshifted_pole_free(&p, n + m) {
                            continue;
                        }
                        c.eq_results(
                            || format!("{} kind={kind:?} n={n}", sample_label(&p)),
                            cauchy::mpc_number_via_rstirling(kind, n, &p),
                            cauchy::mpc_number_explicit(kind, n, &p),
                        );
                    }
                }
            }
        }
    }
    c.into_report("Q1", format!("n <= {n_max}, m <= {m_max}, both kinds"))
}

fn cauchy_recurrence(opts: &VerifyOptions, positive: bool) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(5));
    let orders = if positive { opts.positive_orders() } else { opts.negative_orders() };
    let id = if positive { "Re1" } else { "Re2" };
    let mut c = Checker::new();
    for sample in opts.samples() {
        for &k in &orders {
            for kind in [CauchyKind::First, CauchyKind::Second] {
                let family = match kind {
                    CauchyKind::First => GfFamily::Cauchy1,
                    CauchyKind::Second => GfFamily::Cauchy2,
                };
                let Some(p) = params_for(&sample, k, 0) else { continue };
                // recurrence table, where its whole dependency cone is clear
                if let Ok(table) = cauchy::build_cauchy_table(kind, &p, n_max, m_max) {
                    for m in 0..=m_max {
                        let pm = p.with_shift(m).expect("cone-clear shift");
                        for n in 0..=n_max {
                            c.eq_results(
                                || format!("table {} kind={kind:?} n={n}", sample_label(&pm)),
                                Ok(table.get(n, m).clone()),
                                cauchy::mpc_number_explicit(kind, n, &pm),
                            );
                        }
                    }
                }
                // generating-function route, column by column up to the
                // pole-free order
                for m in 0..=m_max {
                    let Some(pm) = params_for(&sample, k, m) else { continue };
                    let Some(n_ok) = max_pole_free_n(&pm, n_max) else { continue };
                    match egf::number_egf_coefficients(family, &pm, n_ok) {
                        Ok(coeffs) => {
                            for n in 0..=n_ok {
                                c.eq_results(
                                    || format!("egf {} kind={kind:?} n={n}", sample_label(&pm)),
                                    Ok(coeffs[n as usize].clone()),
                                    cauchy::mpc_number_explicit(kind, n, &pm),
                                );
                            }
                        }
                        Err(e) => {
                            c.checks += 1;
                            c.failures.push(Failure {
                                location: format!("egf {} kind={kind:?}", sample_label(&pm)),
                                lhs: format!("{e}"),
                                rhs: "series".into(),
                            });
                        }
                    }
                }
            }
        }
    }
    c.into_report(id, format!("n <= {n_max}, m <= {m_max}, both kinds"))
}

fn m_cauchy_suite(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(8), opts.m(4));
    let mut c = Checker::new();
    // (Re3) residual
    for n in 0..n_max {
        for m in 0..=m_max {
            let lhs = Rational::from_int(2 + m as i64) * cauchy::m_cauchy(n + 1, m);
            let rhs = Rational::from_int(1 + m as i64) * cauchy::m_cauchy(n, m + 1)
                - Rational::from_int(n as i64 * (2 + m as i64)) * cauchy::m_cauchy(n, m);
            c.eq(|| format!("Re3 n={n} m={m}"), &lhs, &rhs);
        }
    }
    // closed forms of the first columns
    for m in 0..=20i64 {
        c.eq(
            || format!("C1 closed form m={m}"),
            &cauchy::m_cauchy(1, m as u32),
            &Rational::ratio(1 + m, 2 + m),
        );
        c.eq(
            || format!("C2 closed form m={m}"),
            &cauchy::m_cauchy(2, m as u32),
            &-Rational::ratio(1 + m, (2 + m) * (3 + m)),
        );
        c.eq(
            || format!("C4 closed form m={m}"),
            &cauchy::m_cauchy(4, m as u32),
            &Rational::ratio(
                -2 * (1 + m) * (38 + 12 * m + m * m),
                (2 + m) * (3 + m) * (4 + m) * (5 + m),
            ),
        );
    }
    // the matrix-consistent C3 closed form
    for m in 0..=3i64 {
        c.eq(
            || format!("C3 matrix-consistent form m={m}"),
            &cauchy::m_cauchy(3, m as u32),
            &Rational::ratio((1 + m) * (6 + m), (2 + m) * (3 + m) * (4 + m)),
        );
    }
    // Gregory: n! G_{n,m} = C_{n,m}, G_{0,m} = 1
    let g = cauchy::gregory_table(n_max, m_max);
    for n in 0..=n_max {
        for m in 0..=m_max {
            c.eq(
                || format!("Gregory n={n} m={m}"),
                &(factorial(n) * g.get(n, m)),
                &cauchy::m_cauchy(n, m),
            );
        }
    }
    c.into_report("Re3", format!("n <= {n_max}, m <= {m_max}, closed forms m <= 20"))
}

fn number_duality(opts: &VerifyOptions, kind: CauchyKind) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(5));
    let id = match kind {
        CauchyKind::First => "AN1",
        CauchyKind::Second => "AN2",
    };
    let mut c = Checker::new();
    let mut negative_checked = 0u64;
    let mut negative_agreed = 0u64;
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for n in 1..=n_ok {
                    let own = match cauchy::mpc_number_explicit(kind, n, &p) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    let signed = if n % 2 == 1 { -own } else { own };
                    let rhs = signed / factorial(n);
                    let lhs = cauchy::dual_side(kind, n, &p);
                    if k > 0 {
                        c.eq_results(
                            || format!("{} n={n}", sample_label(&p)),
                            lhs,
                            Ok(rhs),
                        );
                    } else {
                        negative_checked += 1;
                        if lhs.as_ref() == Ok(&rhs) {
                            negative_agreed += 1;
                        }
                    }
                }
            }
        }
    }
    if negative_checked > 0 {
        c.notes.push(format!(
            "negative orders (not asserted): {negative_agreed}/{negative_checked} agree"
        ));
    }
    c.into_report(id, format!("1 <= n <= {n_max}, m <= {m_max}, positive orders"))
}

fn bernoulli_explicit_suite(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(5));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                // generating-function route
                match egf::number_egf_coefficients(GfFamily::Bernoulli, &p, n_ok) {
                    Ok(coeffs) => {
                        for n in 0..=n_ok {
                            c.eq_results(
                                || format!("egf {} n={n}", sample_label(&p)),
                                Ok(coeffs[n as usize].clone()),
                                bernoulli::mpb_explicit(n, &p),
                            );
                        }
                    }
                    Err(e) => {
                        c.checks += 1;
                        c.failures.push(Failure {
                            location: format!("egf {}", sample_label(&p)),
                            lhs: format!("{e}"),
                            rhs: "series".into(),
                        });
                    }
                }
                // inverse-Stirling corollary
                for n in 0..=n_ok {
                    c.eq_results(
                        || format!("inverse-stirling {} n={n}", sample_label(&p)),
                        bernoulli::inverse_stirling_check(n, &p),
                        bernoulli::inverse_stirling_closed_form(n, &p),
                    );
                }
            }
        }
    }
    c.into_report("GenFi", format!("n <= {n_max}, m <= {m_max}"))
}

fn conversion(
    opts: &VerifyOptions,
    relation: ConvertRelation,
    id: &'static str,
) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(4));
    let orders: Vec<i32> = opts.positive_orders().into_iter().filter(|&k| k <= 3).collect();
    let mut c = Checker::new();
    for sample in opts.samples() {
        for &k in &orders {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for n in 1..=n_ok {
                    c.eq_results(
                        || format!("{} n={n}", sample_label(&p)),
                        bernoulli::convert(relation, n, &p),
                        bernoulli::convert_target(relation, n, &p),
                    );
                }
            }
        }
    }
    c.into_report(id, format!("1 <= n <= {n_max}, m <= {m_max}, k in {orders:?}"))
}

fn h_table_vs_explicit(opts: &VerifyOptions) -> VerifyReport {
    let total = opts.n(10);
    let m_max = opts.m(5);
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Ok(table) = bernoulli::build_h_table(&p, total, total, &Rational::zero())
                else {
                    continue;
                };
                for n in 0..=total {
                    for pcol in 0..=(total - n) {
                        c.eq_results(
                            || format!("{} n={n} p={pcol}", sample_label(&p)),
                            bernoulli::h_explicit(n, &p, pcol),
                            Ok(table.get(n, pcol).clone()),
                        );
                    }
                }
            }
        }
    }
    c.into_report("Gq1", format!("n + p <= {total}, m <= {m_max}, both order signs"))
}

fn h_recurrence(opts: &VerifyOptions, positive: bool) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(5));
    let orders = if positive { opts.positive_orders() } else { opts.negative_orders() };
    let id = if positive { "TGQ1" } else { "TGQ11" };
    let mut c = Checker::new();
    for sample in opts.samples() {
        for &k in &orders {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Ok(table) = bernoulli::build_h_table(&p, n_max, 4, &Rational::zero()) else {
                    continue;
                };
                // column p = 0 is the target sequence
                for n in 0..=n_max {
                    c.eq_results(
                        || format!("column {} n={n}", sample_label(&p)),
                        Ok(table.get(n, 0).clone()),
                        bernoulli::mpb_explicit(n, &p),
                    );
                }
                // constant seed row
                let seed = p.l().pow(p.a()) * Rational::from_int(p.a()).pow(-(k as i64));
                for pcol in 0..=4 {
                    c.eq(|| format!("row0 {} p={pcol}", sample_label(&p)), table.get(0, pcol), &seed);
                }
                // full table against the inverse-Stirling definition
                for n in 0..=n_max.min(8) {
                    for pcol in 0..=4.min(8 - n.min(8)) {
                        c.eq_results(
                            || format!("h {} n={n} p={pcol}", sample_label(&p)),
                            bernoulli::h_explicit(n, &p, pcol),
                            Ok(table.get(n, pcol).clone()),
                        );
                    }
                }
            }
        }
    }
    c.into_report(id, format!("n <= {n_max}, m <= {m_max}, p <= 4"))
}

fn classical_bernoulli(opts: &VerifyOptions) -> VerifyReport {
    let n_max = opts.n(12);
    let mut c = Checker::new();
    let seq = bernoulli::bernoulli_classic(n_max);
    let p = Params::classic();
    for (n, v) in seq.iter().enumerate() {
        c.eq_results(
            || format!("B_{n}"),
            Ok(v.clone()),
            bernoulli::mpb_explicit(n as u32, &p),
        );
    }
    if n_max >= 1 {
        c.eq(|| "B_1 = +1/2".into(), &seq[1], &Rational::ratio(1, 2));
    }
    for n in (3..=n_max as usize).step_by(2) {
        c.eq(|| format!("odd zero B_{n}"), &seq[n], &Rational::zero());
    }
    c.into_report("Alg1", format!("n <= {n_max}, classic parameters"))
}

fn polynomial_vs_gf(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for kind in [CauchyKind::First, CauchyKind::Second] {
                    let family = match kind {
                        CauchyKind::First => GfFamily::Cauchy1,
                        CauchyKind::Second => GfFamily::Cauchy2,
                    };
                    for x0 in opts.x_points() {
                        let Ok(coeffs) = egf::poly_egf_coefficients(family, &p, &x0, n_ok)
                        else {
                            continue;
                        };
                        for n in 0..=n_ok {
                            let poly = families::mpc_polynomial(kind, n, &p)
                                .map(|pl| pl.eval(&x0));
                            c.eq_results(
                                || format!("{} kind={kind:?} n={n} x0={x0}", sample_label(&p)),
                                Ok(coeffs[n as usize].clone()),
                                poly,
                            );
                        }
                    }
                }
            }
        }
    }
    c.into_report("GGF", format!("n <= {n_max}, m <= {m_max}, x0 in {{0, 1, -1, 2/3}}"))
}

fn weighted_evaluation(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for kind in [CauchyKind::First, CauchyKind::Second] {
                    for x0 in opts.x_points() {
                        for n in 0..=n_ok {
                            let direct = families::mpc_polynomial(kind, n, &p)
                                .map(|pl| pl.eval(&x0));
                            c.eq_results(
                                || format!("{} kind={kind:?} n={n} x0={x0}", sample_label(&p)),
                                families::mpc_poly_weighted_eval(kind, n, &p, &x0),
                                direct,
                            );
                        }
                    }
                }
            }
        }
    }
    c.into_report("ws", format!("n <= {n_max}, m <= {m_max}, x0 in {{0, 1, -1, 2/3}}"))
}

fn polynomial_duality(
    opts: &VerifyOptions,
    kind: CauchyKind,
    id: &'static str,
) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let mut c = Checker::new();
    let mut negative_checked = 0u64;
    let mut negative_agreed = 0u64;
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for x0 in opts.x_points() {
                    for n in 1..=n_ok {
                        let own = match families::mpc_polynomial(kind, n, &p) {
                            Ok(pl) => pl.eval(&-&x0),
                            Err(_) => continue,
                        };
                        let own = if n % 2 == 1 { -own } else { own };
                        let rhs = own / factorial(n);
                        let lhs = families::mpc_poly_dual(kind, n, &p, &x0);
                        if k > 0 {
                            c.eq_results(
                                || format!("{} n={n} x0={x0}", sample_label(&p)),
                                lhs,
                                Ok(rhs),
                            );
                        } else {
                            negative_checked += 1;
                            if lhs.as_ref() == Ok(&rhs) {
                                negative_agreed += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    if negative_checked > 0 {
        c.notes.push(format!(
            "negative orders (not asserted): {negative_agreed}/{negative_checked} agree"
        ));
    }
    c.into_report(id, format!("1 <= n <= {n_max}, m <= {m_max}, x0 in {{0, 1, -1, 2/3}}"))
}

fn cauchy_inversion(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let points = [Rational::zero(), Rational::one(), -Rational::one()];
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for n in 0..=n_ok {
                    let closed = bernoulli_like_closed(&p, n, false);
                    for x0 in &points {
                        c.eq_results(
                            || format!("{} n={n} x0={x0}", sample_label(&p)),
                            families::mpc_poly_inverse_check(n, &p, x0),
                            closed.clone(),
                        );
                    }
                }
            }
        }
    }
    c.into_report("thm14", format!("n <= {n_max}, m <= {m_max}, three points"))
}

fn bernoulli_like_closed(p: &Params, n: u32, with_factorial: bool) -> Result<Rational> {
    let v = families::mpc_poly_inverse_closed_form(n, p)?;
    Ok(if with_factorial { factorial(n) * v } else { v })
}

fn weighted_orthogonality(opts: &VerifyOptions) -> VerifyReport {
    let n_max = opts.n(10);
    let points = [
        Rational::zero(),
        Rational::one(),
        -Rational::one(),
        Rational::ratio(1, 2),
        Rational::ratio(3, 7),
    ];
    let mut c = Checker::new();
    for x in &points {
        let s_tri = Triangle::new(Family::WeightedSecond { x: x.clone() });
        let t_tri = Triangle::new(Family::WeightedFirst { x: x.clone() });
        for n in 0..=n_max {
            for j in 0..=n {
                let mut ts = Rational::zero();
                let mut st = Rational::zero();
                for i in j..=n {
                    ts = ts + t_tri.get(n, i) * s_tri.get(i, j);
                    st = st + s_tri.get(n, i) * t_tri.get(i, j);
                }
                let expect = if n == j { Rational::one() } else { Rational::zero() };
                c.eq(|| format!("T.S x={x} n={n} j={j}"), &ts, &expect);
                c.eq(|| format!("S.T x={x} n={n} j={j}"), &st, &expect);
            }
        }
    }
    c.into_report("thm14:wst", format!("n <= {n_max}, five points"))
}

fn bernoulli_weighted_evaluation(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for x0 in opts.x_points() {
                    for n in 0..=n_ok {
                        let direct = families::mpb_polynomial(n, &p).map(|pl| pl.eval(&x0));
                        c.eq_results(
                            || format!("{} n={n} x0={x0}", sample_label(&p)),
                            families::mpb_poly_weighted_eval(n, &p, &x0),
                            direct,
                        );
                    }
                }
            }
        }
    }
    c.into_report("For5", format!("n <= {n_max}, m <= {m_max}, x0 in {{0, 1, -1, 2/3}}"))
}

fn bernoulli_inversion(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let points = [Rational::zero(), Rational::one(), -Rational::one()];
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for n in 0..=n_ok {
                    let closed = bernoulli_like_closed(&p, n, true);
                    for x0 in &points {
                        c.eq_results(
                            || format!("{} n={n} x0={x0}", sample_label(&p)),
                            families::mpb_poly_weighted_inverse_check(n, &p, x0),
                            closed.clone(),
                        );
                    }
                }
            }
        }
    }
    c.into_report("For6", format!("n <= {n_max}, m <= {m_max}, three points"))
}

fn bernoulli_polynomial_vs_gf(opts: &VerifyOptions) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(2));
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for x0 in opts.x_points() {
                    let Ok(coeffs) =
                        egf::poly_egf_coefficients(GfFamily::Bernoulli, &p, &x0, n_ok)
                    else {
                        continue;
                    };
                    for n in 0..=n_ok {
                        let poly = families::mpb_polynomial(n, &p);
                        c.eq_results(
                            || format!("{} n={n} x0={x0}", sample_label(&p)),
                            Ok(coeffs[n as usize].clone()),
                            poly.as_ref().map(|pl| pl.eval(&x0)).map_err(Clone::clone),
                        );
                        // constant term is the number
                        if x0.is_zero() {
                            c.eq_results(
                                || format!("{} n={n} constant term", sample_label(&p)),
                                poly.map(|pl| pl.eval(&Rational::zero())),
                                bernoulli::mpb_explicit(n, &p),
                            );
                        }
                    }
                }
            }
        }
    }
    c.into_report("For7", format!("n <= {n_max}, m <= {m_max}, x0 in {{0, 1, -1, 2/3}}"))
}

fn thm200(opts: &VerifyOptions, relation: Thm200Relation, id: &'static str) -> VerifyReport {
    let (n_max, m_max) = (opts.n(10), opts.m(4));
    let orders: Vec<i32> = opts.positive_orders().into_iter().filter(|&k| k <= 3).collect();
    let mut c = Checker::new();
    let mut negative_checked = 0u64;
    let mut negative_agreed = 0u64;
    for sample in opts.samples() {
        for &k in &orders {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let Some(n_ok) = max_pole_free_n(&p, n_max) else { continue };
                for x0 in opts.x_points() {
                    for n in 0..=n_ok {
                        match families::thm200_check(relation, n, &p, &x0) {
                            Ok(check) => c.eq(
                                || format!("{} n={n} x0={x0}", sample_label(&p)),
                                &check.lhs,
                                &check.rhs,
                            ),
                            Err(e) => {
                                c.checks += 1;
                                c.failures.push(Failure {
                                    location: format!("{} n={n} x0={x0}", sample_label(&p)),
                                    lhs: format!("{e}"),
                                    rhs: "check".into(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // negative orders observed, not asserted
    for sample in opts.samples() {
        for k in opts.negative_orders() {
            let Some(p) = params_for(&sample, k, 0) else { continue };
            let Some(n_ok) = max_pole_free_n(&p, n_max.min(6)) else { continue };
            for n in 0..=n_ok {
                if let Ok(check) = families::thm200_check(relation, n, &p, &Rational::one()) {
                    negative_checked += 1;
                    if check.passed() {
                        negative_agreed += 1;
                    }
                }
            }
        }
    }
    if negative_checked > 0 {
        c.notes.push(format!(
            "negative orders (not asserted): {negative_agreed}/{negative_checked} agree"
        ));
    }
    c.into_report(id, format!("n <= {n_max}, m <= {m_max}, k in {orders:?}"))
}

fn h_polynomial_routes(opts: &VerifyOptions) -> VerifyReport {
    let total = opts.n(8);
    let m_max = opts.m(2);
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                for n in 0..=total {
                    for pcol in 0..=(total - n) {
                        let Ok(hp) = families::h_polynomial(n, pcol, &p) else { continue };
                        for x0 in opts.x_points() {
                            c.eq_results(
                                || format!("{} n={n} p={pcol} x0={x0}", sample_label(&p)),
                                families::h_polynomial_explicit_eval(n, pcol, &p, &x0),
                                Ok(hp.eval(&x0)),
                            );
                        }
                    }
                }
                // boundary rows: p = 0 gives the Bernoulli polynomials
                for n in 0..=total {
                    let lhs = families::h_polynomial(n, 0, &p).map(|pl| pl.eval(&Rational::one()));
                    let rhs = families::mpb_polynomial(n, &p).map(|pl| pl.eval(&Rational::one()));
                    if lhs.is_ok() || rhs.is_ok() {
                        c.eq_results(|| format!("{} H_n0 = B_n n={n}", sample_label(&p)), lhs, rhs);
                    }
                }
            }
        }
    }
    c.into_report("For13", format!("n + p <= {total}, m <= {m_max}"))
}

fn h_polynomial_recurrence(opts: &VerifyOptions) -> VerifyReport {
    let total = opts.n(8);
    let m_max = opts.m(2);
    let x = Polynomial::monomial(Rational::one(), 1);
    let mut c = Checker::new();
    for sample in opts.samples() {
        for k in opts.orders() {
            for m in 0..=m_max {
                let Some(p) = params_for(&sample, k, m) else { continue };
                let base = p.shifted_base();
                for n in 0..total {
                    for pcol in 0..=(total - n - 1) {
                        // factor denominators must be clear
                        if (k > 0 && base + pcol as i64 + 1 == 0)
                            || (k < 0 && base + pcol as i64 == 0)
                        {
                            continue;
                        }
                        let lhs = families::h_polynomial(n + 1, pcol, &p);
                        let next = families::h_polynomial(n, pcol + 1, &p);
                        let cur = families::h_polynomial(n, pcol, &p);
                        let (Ok(lhs), Ok(next), Ok(cur)) = (lhs, next, cur) else { continue };
                        let factor = p.l()
                            * Rational::from_int(pcol as i64 + 1)
                            * int_ratio_pow(base + pcol as i64, base + pcol as i64 + 1, k);
                        let damp = x
                            .add(&Polynomial::constant(Rational::from_int(pcol as i64)))
                            .scale(p.q());
                        let rhs = next.scale(&factor).sub(&damp.mul(&cur));
                        c.checks += 1;
                        if lhs != rhs {
                            c.failures.push(Failure {
                                location: format!("{} n={n} p={pcol}", sample_label(&p)),
                                lhs: format!("{lhs:?}"),
                                rhs: format!("{rhs:?}"),
                            });
                        }
                        // reduction to the number recurrence at x = 0
                        c.eq_results(
                            || format!("{} n={} p={pcol} at x=0", sample_label(&p), n + 1),
                            Ok(lhs.eval(&Rational::zero())),
                            bernoulli::h_explicit(n + 1, &p, pcol),
                        );
                    }
                }
            }
        }
    }
    c.into_report("For14", format!("n + p <= {total}, m <= {m_max}, polynomial identity"))
}

fn double_gf(opts: &VerifyOptions, family: GfFamily, id: &'static str) -> VerifyReport {
    let (n_max, k_max) = (opts.n(5), 5u32);
    let mut c = Checker::new();
    let points = [
        Params::classic(),
        Params::from_product(2, Rational::ratio(1, 2), Rational::from_int(2), 1, 1)
            .expect("valid non-classic point"),
    ];
    for p in &points {
        match bernoulli::double_egf_check(family, p, n_max, k_max) {
            Ok(report) => {
                c.checks += report.checks;
                for (n, kk, got, want) in report.mismatches {
                    c.failures.push(Failure {
                        location: format!("{} n={n} order=-{kk}", sample_label(p)),
                        lhs: got.to_string(),
                        rhs: want.to_string(),
                    });
                }
            }
            Err(e) => {
                c.checks += 1;
                c.failures.push(Failure {
                    location: sample_label(p),
                    lhs: format!("{e}"),
                    rhs: "grid".into(),
                });
            }
        }
    }
    c.into_report(id, format!("n <= {n_max}, orders -1 .. -{k_max}, two parameter points"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_identity_is_an_error() {
        assert_eq!(
            run_identity("nope", &VerifyOptions::default()).unwrap_err(),
            Error::UnknownIdentity("nope".into())
        );
    }

    #[test]
    fn small_ranges_pass_quickly() {
        let opts = VerifyOptions { n_max: Some(5), m_max: Some(2), ..Default::default() };
        for id in ["Q1", "Re1", "Re2", "AN1", "AN2", "Alg1", "Re3"] {
            let report = run_identity(id, &opts).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.failures.first());
            assert!(report.checks > 0, "{id} ran no checks");
        }
    }

    #[test]
    fn identity_list_is_exhaustive() {
        let opts = VerifyOptions { n_max: Some(3), m_max: Some(1), ..Default::default() };
        for id in IDENTITY_IDS {
            assert!(run_identity(id, &opts).is_ok(), "{id} should be known");
        }
    }
}
