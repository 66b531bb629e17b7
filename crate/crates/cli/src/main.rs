//! Command-line front end: sequence tables, polynomial coefficients, the
//! Gregory triangle, classical Bernoulli numbers, and the identity
//! verification runner.
//!
//! Exit status: 0 on success, 1 on verification failure, 2 on usage or
//! parameter errors (including poles, reported with the offending index).

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use polycauchy::bernoulli;
use polycauchy::cauchy::{self, CauchyKind};
use polycauchy::families;
use polycauchy::verify::{self, VerifyOptions};
use polycauchy::{Params, Polynomial, Rational};

#[derive(Parser)]
#[command(
    name = "polycauchy",
    version,
    about = "Exact generalized m-poly-Cauchy and m-poly-Bernoulli numbers and polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of sequence values over (n, m) (or (n, p) for family h)
    Table(TableCmd),
    /// Print polynomial coefficient lists for n = 0 .. n-max
    Poly(PolyCmd),
    /// Print the Gregory coefficient triangle
    Gregory(GregoryCmd),
    /// Print the classical Bernoulli numbers B_0 .. B_n (B_1 = +1/2)
    BernoulliClassic(BernoulliClassicCmd),
    /// Cross-check the named identities over index ranges and the
    /// built-in parameter sample
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    /// m-poly-Cauchy numbers of the first kind
    Cauchy1,
    /// m-poly-Cauchy numbers of the second kind
    Cauchy2,
    /// m-poly-Bernoulli numbers
    Bernoulli,
    /// the H-table (columns p at the fixed shift --m)
    H,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    Cauchy1,
    Cauchy2,
    Bernoulli,
    /// H-polynomials at the column --p-col
    H,
}

/// The parameter bundle flags shared by every computing subcommand.
#[derive(Args)]
struct ParamArgs {
    /// Nonzero integer base a
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    a: i64,
    /// Nonzero rational step q (e.g. 1, -2, 3/4)
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: Rational,
    /// The product l directly (equivalent to --L with one factor; the
    /// formulas depend on L only through the product)
    #[arg(long, conflicts_with = "factors", allow_hyphen_values = true)]
    l: Option<Rational>,
    /// Comma-separated factor list l_1,l_2,...
    #[arg(long = "L", value_delimiter = ',', allow_hyphen_values = true)]
    factors: Option<Vec<Rational>>,
    /// Nonzero order k; negative selects the negative-upper-index family
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i32,
    /// Nonnegative shift m
    #[arg(long, default_value_t = 0)]
    m: u32,
}

impl ParamArgs {
    fn build(&self) -> Result<Params, polycauchy::Error> {
        let factors = match (&self.l, &self.factors) {
            (Some(l), None) => vec![l.clone()],
            (None, Some(fs)) => fs.clone(),
            (None, None) => vec![Rational::one()],
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
        Params::new(self.a, self.q.clone(), factors, self.k, self.m)
    }
}

#[derive(Args)]
struct TableCmd {
    #[arg(long, value_enum)]
    family: TableFamily,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// Largest shift column (cauchy/bernoulli families)
    #[arg(long, default_value_t = 3)]
    m_max: u32,
    /// Largest p column (family h)
    #[arg(long, default_value_t = 3)]
    p_max: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct PolyCmd {
    #[arg(long, value_enum)]
    family: PolyFamily,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// H-polynomial column (family h)
    #[arg(long, default_value_t = 0)]
    p_col: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct GregoryCmd {
    #[arg(long, default_value_t = 6)]
    n_max: u32,
    #[arg(long, default_value_t = 4)]
    m_max: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct BernoulliClassicCmd {
    #[arg(long, default_value_t = 12)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyCmd {
    /// Identity id(s) to run (repeatable); see --list
    #[arg(long = "identity", conflicts_with = "all")]
    identities: Vec<String>,
    /// Run every identity suite
    #[arg(long)]
    all: bool,
    /// Print the known identity ids and exit
    #[arg(long)]
    list: bool,
    /// Override the per-identity default n range
    #[arg(long)]
    n_max: Option<u32>,
    /// Override the per-identity default m range
    #[arg(long)]
    m_max: Option<u32>,
    /// Replace the built-in five-point parameter sample by a single point
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<Rational>,
    #[arg(long, conflicts_with = "factors", allow_hyphen_values = true)]
    l: Option<Rational>,
    #[arg(long = "L", value_delimiter = ',', allow_hyphen_values = true)]
    factors: Option<Vec<Rational>>,
    /// Restrict to a single order k
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            // ignore a closed pipe (e.g. piping into `head`)
            let _ = std::io::stdout().write_all(out.as_bytes());
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(String, ExitCode), polycauchy::Error> {
    match cli.command {
        Command::Table(cmd) => table(cmd).map(|out| (out, ExitCode::SUCCESS)),
        Command::Poly(cmd) => poly(cmd).map(|out| (out, ExitCode::SUCCESS)),
        Command::Gregory(cmd) => gregory(cmd).map(|out| (out, ExitCode::SUCCESS)),
        Command::BernoulliClassic(cmd) => {
            bernoulli_classic(cmd).map(|out| (out, ExitCode::SUCCESS))
        }
        Command::Verify(cmd) => verify_cmd(cmd),
    }
}

fn params_json(p: &Params) -> serde_json::Value {
    json!({
        "a": p.a(),
        "q": p.q().to_string(),
        "L": p.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "l": p.l().to_string(),
        "k": p.k(),
        "m": p.m(),
    })
}

fn grid_csv(col_name: &str, values: &[Vec<Rational>]) -> String {
    let mut out = format!("n,{col_name},value\n");
    for (n, row) in values.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            let _ = writeln!(out, "{n},{c},{v}");
        }
    }
    out
}

fn grid_json(values: &[Vec<Rational>]) -> serde_json::Value {
    json!(values
        .iter()
        .map(|row| row.iter().map(Rational::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn table(cmd: TableCmd) -> Result<String, polycauchy::Error> {
    let p = cmd.params.build()?;
    let (col_name, family_name, values): (&str, &str, Vec<Vec<Rational>>) = match cmd.family {
        TableFamily::Cauchy1 | TableFamily::Cauchy2 => {
            let kind = if cmd.family == TableFamily::Cauchy1 {
                CauchyKind::First
            } else {
                CauchyKind::Second
            };
            let table = cauchy::build_cauchy_table(kind, &p, cmd.n_max, cmd.m_max)?;
            let values = (0..=cmd.n_max)
                .map(|n| (0..=cmd.m_max).map(|m| table.get(n, m).clone()).collect())
                .collect();
            let name = if kind == CauchyKind::First { "cauchy1" } else { "cauchy2" };
            ("m", name, values)
        }
        TableFamily::Bernoulli => {
            let mut values = Vec::new();
            for n in 0..=cmd.n_max {
                let mut row = Vec::new();
                for m in 0..=cmd.m_max {
                    row.push(bernoulli::mpb_explicit(n, &p.with_shift(m)?)?);
                }
                values.push(row);
            }
            ("m", "bernoulli", values)
        }
        TableFamily::H => {
            let table = bernoulli::build_h_table(&p, cmd.n_max, cmd.p_max, &Rational::zero())?;
            let values = (0..=cmd.n_max)
                .map(|n| (0..=cmd.p_max).map(|pc| table.get(n, pc).clone()).collect())
                .collect();
            ("p", "h", values)
        }
    };
    Ok(match cmd.format {
        OutputFormat::Csv => grid_csv(col_name, &values),
        OutputFormat::Json => {
            let col_max = if cmd.family == TableFamily::H { cmd.p_max } else { cmd.m_max };
            let doc = json!({
                "family": family_name,
                "params": params_json(&p),
                "n_max": cmd.n_max,
                format!("{col_name}_max"): col_max,
                "values": grid_json(&values),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid json"))
        }
    })
}

fn poly(cmd: PolyCmd) -> Result<String, polycauchy::Error> {
    let p = cmd.params.build()?;
    let polys: Vec<Polynomial> = (0..=cmd.n_max)
        .map(|n| match cmd.family {
            PolyFamily::Cauchy1 => families::mpc_polynomial(CauchyKind::First, n, &p),
            PolyFamily::Cauchy2 => families::mpc_polynomial(CauchyKind::Second, n, &p),
            PolyFamily::Bernoulli => families::mpb_polynomial(n, &p),
            PolyFamily::H => families::h_polynomial(n, cmd.p_col, &p),
        })
        .collect::<Result<_, _>>()?;
    let coeff_lists: Vec<Vec<String>> = polys
        .iter()
        .map(|poly| {
            let coeffs = poly.coeff_strings();
            if coeffs.is_empty() {
                vec!["0".to_string()]
            } else {
                coeffs
            }
        })
        .collect();
    Ok(match cmd.format {
        OutputFormat::Csv => {
            let mut out = String::from("n,degree,coefficient\n");
            for (n, coeffs) in coeff_lists.iter().enumerate() {
                for (deg, c) in coeffs.iter().enumerate() {
                    let _ = writeln!(out, "{n},{deg},{c}");
                }
            }
            out
        }
        OutputFormat::Json => {
            let family = match cmd.family {
                PolyFamily::Cauchy1 => "cauchy1",
                PolyFamily::Cauchy2 => "cauchy2",
                PolyFamily::Bernoulli => "bernoulli",
                PolyFamily::H => "h",
            };
            let mut doc = json!({
                "family": family,
                "params": params_json(&p),
                "n_max": cmd.n_max,
                "polys": coeff_lists,
            });
            if cmd.family == PolyFamily::H {
                doc["p_col"] = json!(cmd.p_col);
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid json"))
        }
    })
}

fn gregory(cmd: GregoryCmd) -> Result<String, polycauchy::Error> {
    let grid = cauchy::gregory_table(cmd.n_max, cmd.m_max);
    let values: Vec<Vec<Rational>> = (0..=cmd.n_max)
        .map(|n| (0..=cmd.m_max).map(|m| grid.get(n, m).clone()).collect())
        .collect();
    Ok(match cmd.format {
        OutputFormat::Csv => grid_csv("m", &values),
        OutputFormat::Json => {
            let doc = json!({
                "family": "gregory",
                "n_max": cmd.n_max,
                "m_max": cmd.m_max,
                "values": grid_json(&values),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid json"))
        }
    })
}

fn bernoulli_classic(cmd: BernoulliClassicCmd) -> Result<String, polycauchy::Error> {
    let values = bernoulli::bernoulli_classic(cmd.n_max);
    Ok(match cmd.format {
        OutputFormat::Csv => {
            let line: Vec<String> = values.iter().map(Rational::to_string).collect();
            format!("{}\n", line.join(", "))
        }
        OutputFormat::Json => {
            let doc = json!({
                "family": "bernoulli-classic",
                "n_max": cmd.n_max,
                "values": values.iter().map(Rational::to_string).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid json"))
        }
    })
}

fn verify_cmd(cmd: VerifyCmd) -> Result<(String, ExitCode), polycauchy::Error> {
    if cmd.list {
        let mut out = String::new();
        for id in verify::IDENTITY_IDS {
            let _ = writeln!(out, "{id}");
        }
        return Ok((out, ExitCode::SUCCESS));
    }
    let sample = if cmd.a.is_some() || cmd.q.is_some() || cmd.l.is_some() || cmd.factors.is_some()
    {
        let factors = match (&cmd.l, &cmd.factors) {
            (Some(l), None) => vec![l.clone()],
            (None, Some(fs)) => fs.clone(),
            (None, None) => vec![Rational::one()],
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
        Some((cmd.a.unwrap_or(1), cmd.q.clone().unwrap_or_else(Rational::one), factors))
    } else {
        None
    };
    let opts = VerifyOptions {
        n_max: cmd.n_max,
        m_max: cmd.m_max,
        sample,
        orders: cmd.k.map(|k| vec![k]),
    };
    let reports = if cmd.all || cmd.identities.is_empty() {
        verify::run_all(&opts)
    } else {
        let mut reports = Vec::new();
        for id in &cmd.identities {
            reports.push(verify::run_identity(id, &opts)?);
        }
        reports
    };
    let mut all_passed = true;
    let mut out = String::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {:<14} checks={:<7} {}", r.id, r.checks, r.ranges);
        for note in &r.notes {
            let _ = writeln!(out, "     note: {note}");
        }
        if !r.passed() {
            all_passed = false;
            for f in r.failures.iter().take(5) {
                let _ = writeln!(out, "     at {}: lhs={} rhs={}", f.location, f.lhs, f.rhs);
            }
            if r.failures.len() > 5 {
                let _ = writeln!(out, "     ... and {} more failures", r.failures.len() - 5);
            }
        }
    }
    Ok((out, if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) }))
}
