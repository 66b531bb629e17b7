//! Exact computation of generalized m-poly-Cauchy and m-poly-Bernoulli
//! numbers and polynomials over arbitrary-precision rationals.
//!
//! Everything is computed by at least two independent routes (explicit
//! Stirling sums, diagonal recurrences over seed rows, r-Stirling
//! resummation, truncated generating functions, and for integer bases a
//! direct integration oracle), and the `verify` module cross-checks them
//! all. The building blocks:
//!
//! - [`rational`]: canonical big-rational scalars ([`Rational`])
//! - [`params`]: validated parameter bundles ([`Params`])
//! - [`stirling`]: memoized triangles for the Stirling families
//! - [`series`] / [`biseries`]: exact truncated power series kernels
//! - [`poly`]: dense polynomials and the generalized rising factorial
//! - [`cauchy`]: m-poly-Cauchy numbers of both kinds, their tables,
//!   duality, Gregory coefficients and the integral oracle
//! - [`bernoulli`]: m-poly-Bernoulli numbers, H-tables, the classical
//!   Bernoulli specialization and Bernoulli/Cauchy conversions
//! - [`families`]: the polynomial-valued families and their relations
//! - [`egf`]: generating-function coefficient extraction
//! - [`verify`]: the named identity suites behind `verify` in the CLI
//!
//! ```
//! use polycauchy::cauchy::{self, CauchyKind};
//! use polycauchy::{Params, Rational};
//!
//! let p = Params::from_product(2, Rational::ratio(1, 2), Rational::from_int(2), 2, 1)?;
//! let c = cauchy::mpc_number_explicit(CauchyKind::First, 5, &p)?;
//! let table = cauchy::build_cauchy_table(CauchyKind::First, &p, 10, 5)?;
//! assert_eq!(table.get(5, 1), &c);
//! # Ok::<(), polycauchy::Error>(())
//! ```

pub mod bernoulli;
pub mod biseries;
pub mod cauchy;
pub mod egf;
pub mod error;
pub mod families;
pub mod params;
pub mod poly;
pub mod rational;
pub mod series;
pub mod stirling;
pub mod verify;

pub use biseries::BiSeries;
pub use cauchy::{CauchyKind, CauchyTable, Grid};
pub use error::{Error, Result};
pub use params::Params;
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use stirling::Triangle;
