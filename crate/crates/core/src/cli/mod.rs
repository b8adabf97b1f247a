//! Argument parsing, rendering and dispatch for the `hypercomplex` binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 counterexample found
//! under `--expect-holds`, 3 domain error (degenerate norm, pole, singular
//! transform, ...).

mod text;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{make_spec, AlgebraSpec, Branch, Element, Family};
use crate::analysis::{check_identity, classify_in, norm, Identity, IdentityReport};
use crate::error::AlgebraError;
use crate::periodic::{periodic_params, unit_power, Rho};
use crate::representation::{rep_octonion, rep_quadratic_quaternion, rep_sedenion, RepSet};
use crate::scalar::{format_scalar, Scalar};

pub use text::{
    format_element, format_entry, format_mat, format_with, parse_element, parse_scalar,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    C,
    Q,
    O,
    S,
}

impl FamilyArg {
    pub fn family(self) -> Family {
        match self {
            FamilyArg::C => Family::Quadratic,
            FamilyArg::Q => Family::Quaternion,
            FamilyArg::O => Family::Octonion,
            FamilyArg::S => Family::Sedenion,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Algebra family: C (dim 2), Q (4), O (8) or S (16).
    #[arg(
        long,
        global = true,
        value_enum,
        ignore_case = true,
        default_value = "q"
    )]
    pub family: FamilyArg,
    /// Parameter p as a complex literal, e.g. `0`, `-1`, `0.5+2i`.
    #[arg(long, global = true, value_parser = parse_scalar, default_value = "0", allow_hyphen_values = true)]
    pub p: Scalar,
    /// Parameter q as a complex literal.
    #[arg(long, global = true, value_parser = parse_scalar, default_value = "1", allow_hyphen_values = true)]
    pub q: Scalar,
    /// Relative tolerance for equality tests.
    #[arg(long, global = true, value_parser = parse_positive, default_value = "1e-9")]
    pub tol: f64,
    /// Seed for `verify` sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random trials for `verify`.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..), default_value = "1000")]
    pub samples: u64,
    /// Root taken where a ± appears in the representation matrices.
    #[arg(long, global = true, value_enum, default_value = "upper")]
    pub branch: BranchArg,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Exit with status 2 when `verify` finds a counterexample.
    #[arg(long, global = true)]
    pub expect_holds: bool,
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hypercomplex",
    version,
    about = "Parameterized hypercomplex algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unit multiplication table.
    Table,
    /// Product of two elements given as comma-separated coefficients.
    Mul {
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        x: Element,
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        y: Element,
    },
    /// Norm of an element.
    Norm {
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        x: Element,
    },
    /// Division, split or nil-degenerate, with the leading minors.
    Classify,
    /// Unit representation matrices (Q for any p, q; O and S at p = 0, q = 1).
    Rep,
    /// The power e1^theta in the periodic algebra for rho and k.
    Power {
        #[arg(long, default_value = "1")]
        rho: Rho,
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Seeded random check of an algebraic identity.
    Verify {
        /// commutativity, associativity, left-alt, right-alt, flexible or norm-composition
        #[arg(long)]
        identity: Identity,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok((body, code)) => {
            let _ = out.write_all(body.as_bytes());
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            if cli.config.format == Format::Json {
                let v = json!({ "error": error_kind(&e), "message": e.to_string() });
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            EXIT_DOMAIN
        }
    }
}

enum Failure {
    Usage(String),
    Domain(AlgebraError),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::DimensionMismatch { .. } | AlgebraError::NonFinite(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other),
        }
    }
}

fn error_kind(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::IndexOutOfRange { .. } => "IndexOutOfRange",
        AlgebraError::DimensionMismatch { .. } => "DimensionMismatch",
        AlgebraError::UnsupportedDimension(_) => "UnsupportedDimension",
        AlgebraError::NonFinite(_) => "NonFinite",
        AlgebraError::SingularParameter { .. } => "SingularParameter",
        AlgebraError::UnsupportedTransform => "UnsupportedTransform",
        AlgebraError::DegenerateNorm { .. } => "DegenerateNorm",
        AlgebraError::ComplexParameters => "ComplexParameters",
        AlgebraError::PoleAtEvenK { .. } => "PoleAtEvenK",
        AlgebraError::InconsistentRoot { .. } => "InconsistentRoot",
    }
}

fn spec_of(c: &Config) -> Result<AlgebraSpec, Failure> {
    let branch = match c.branch {
        BranchArg::Upper => Branch::Upper,
        BranchArg::Lower => Branch::Lower,
    };
    Ok(make_spec(c.family.family(), c.p, c.q, branch)?.with_tol(c.tol))
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn scalar_json(z: Scalar) -> serde_json::Value {
    json!([z.re, z.im])
}

fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    let c = &cli.config;
    let body = match &cli.command {
        Command::Table => table(&spec_of(c)?, c.format),
        Command::Mul { x, y } => {
            let spec = spec_of(c)?;
            let z = crate::algebra::multiply(&spec, x, y)?;
            element_output(&z, c.format)
        }
        Command::Norm { x } => {
            let n = norm(&spec_of(c)?, x)?;
            match c.format {
                Format::Text => format!("{}\n", format_scalar(n)),
                Format::Json => json_line(json!({ "norm": scalar_json(n) })),
                Format::Csv => format!("re,im\n{},{}\n", n.re, n.im),
            }
        }
        Command::Classify => {
            let cl = classify_in(c.p, c.q, c.family.family().dim())?;
            match c.format {
                Format::Text => format!("{}\n", cl.kind.name()),
                Format::Json => json_line(serde_json::to_value(&cl).expect("serializable")),
                Format::Csv => {
                    let mut s = String::from("kind,minor,re,im\n");
                    for (i, m) in cl.minors.iter().enumerate() {
                        s += &format!("{},{},{},{}\n", cl.kind.name(), i + 1, m.re, m.im);
                    }
                    s
                }
            }
        }
        Command::Rep => rep(c)?,
        Command::Power { rho, k, theta } => power(*rho, *k, *theta, c.format)?,
        Command::Verify { identity } => {
            let spec = spec_of(c)?;
            let report = check_identity(&spec, *identity, c.samples as usize, c.seed, c.tol);
            let code = if c.expect_holds && !report.holds() {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            };
            return Ok((verify_output(&report, c.format), code));
        }
    };
    Ok((body, EXIT_OK))
}

fn element_output(x: &Element, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", format_element(x)),
        Format::Json => json_line(serde_json::to_value(x).expect("serializable")),
        Format::Csv => {
            let mut s = String::from("unit,re,im\n");
            for (i, z) in x.coeffs().iter().enumerate() {
                s += &format!("e{i},{},{}\n", z.re, z.im);
            }
            s
        }
    }
}

fn table(spec: &AlgebraSpec, format: Format) -> String {
    let dim = spec.dim();
    let cells: Vec<Vec<Element>> = (0..dim)
        .map(|i| (0..dim).map(|j| spec.table().entry(i, j)).collect())
        .collect();
    match format {
        Format::Json => json_line(json!({
            "family": spec.family().letter().to_string(),
            "p": scalar_json(spec.p()),
            "q": scalar_json(spec.q()),
            "dim": dim,
            "entries": cells,
        })),
        Format::Csv => {
            let mut s = String::new();
            let header: Vec<String> = (0..dim).map(|j| format!("e{j}")).collect();
            s += &format!(",{}\n", header.join(","));
            for (i, row) in cells.iter().enumerate() {
                let r: Vec<String> = row.iter().map(format_element).collect();
                s += &format!("e{i},{}\n", r.join(","));
            }
            s
        }
        Format::Text => {
            let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new())
                .chain((0..dim).map(|j| format!("e{j}")))
                .collect()];
            for (i, row) in cells.iter().enumerate() {
                grid.push(
                    std::iter::once(format!("e{i}"))
                        .chain(row.iter().map(format_element))
                        .collect(),
                );
            }
            let width: Vec<usize> = (0..=dim)
                .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
                .collect();
            let mut s = format!("{spec}\n");
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .zip(&width)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                s += line.join("  ").trim_end();
                s.push('\n');
            }
            s
        }
    }
}

fn rep(c: &Config) -> Result<String, Failure> {
    let set: RepSet = match c.family {
        FamilyArg::C => return Err(Failure::Usage("rep supports families Q, O and S".into())),
        FamilyArg::Q => {
            let branch = match c.branch {
                BranchArg::Upper => Branch::Upper,
                BranchArg::Lower => Branch::Lower,
            };
            rep_quadratic_quaternion(c.p, c.q, branch)?
        }
        FamilyArg::O | FamilyArg::S => {
            if c.p != Scalar::new(0.0, 0.0) || c.q != Scalar::new(1.0, 0.0) {
                return Err(Failure::Usage(
                    "O and S representations exist only for p = 0, q = 1".into(),
                ));
            }
            if c.family == FamilyArg::O {
                rep_octonion()
            } else {
                rep_sedenion()
            }
        }
    };
    Ok(match c.format {
        Format::Text => set
            .labels
            .iter()
            .zip(&set.mats)
            .map(|(l, m)| format!("{l} = {}\n", format_mat(m)))
            .collect(),
        Format::Json => {
            let units: Vec<_> = set
                .labels
                .iter()
                .zip(&set.mats)
                .map(|(l, m)| json!({ "label": l, "matrix": m }))
                .collect();
            json_line(json!({ "coeff_dim": set.coeff_spec.dim(), "units": units }))
        }
        Format::Csv => {
            let mut s = String::from("unit,row,col,entry\n");
            for (l, m) in set.labels.iter().zip(&set.mats) {
                for r in 0..2 {
                    for col in 0..2 {
                        s += &format!(
                            "{l},{},{},{}\n",
                            r + 1,
                            col + 1,
                            format_entry(m.entry(r, col))
                        );
                    }
                }
            }
            s
        }
    })
}

fn power(rho: Rho, k: f64, theta: f64, format: Format) -> Result<String, Failure> {
    let x = unit_power(rho, k, theta)?;
    let (p, q) = periodic_params(rho, k);
    Ok(match format {
        Format::Text => format!("{}\n", format_element(&x)),
        Format::Json => json_line(json!({
            "rho": rho.to_string(),
            "k": k,
            "theta": theta,
            "element": x,
            "p": scalar_json(p),
            "q": scalar_json(q),
        })),
        Format::Csv => element_output(&x, Format::Csv),
    })
}

fn verify_output(r: &IdentityReport, format: Format) -> String {
    match format {
        Format::Json => json_line(serde_json::to_value(r).expect("serializable")),
        Format::Csv => format!(
            "identity,trials,seed,max_residual,holds\n{},{},{},{:e},{}\n",
            r.identity,
            r.trials,
            r.seed,
            r.max_residual,
            r.holds()
        ),
        Format::Text => {
            let mut s = format!(
                "identity: {}\ntrials: {}\nseed: {}\nmax_residual: {:e}\n",
                r.identity, r.trials, r.seed, r.max_residual
            );
            match &r.counterexample {
                None => s += "result: holds\n",
                Some(cx) => {
                    s += "result: counterexample\n";
                    s += &format!("X = {}\n", format_element(&cx.x));
                    s += &format!("Y = {}\n", format_element(&cx.y));
                    if let Some(z) = &cx.z {
                        s += &format!("Z = {}\n", format_element(z));
                    }
                }
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hypercomplex").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn classify_split() {
        assert_eq!(call(&["classify", "--p", "0", "--q", "-1"]).1, "split\n");
    }

    #[test]
    fn dual_numbers_table() {
        let (code, out, _) = call(&["table", "--family", "C", "--p", "0", "--q", "0"]);
        assert_eq!(code, 0);
        assert!(out.lines().last().unwrap().ends_with("0"), "{out}");
    }

    #[test]
    fn mul_and_norm() {
        let (_, out, _) = call(&["mul", "0,0,1,0", "0,1,0,0"]);
        assert_eq!(out, "-e3\n");
        let (_, out, _) = call(&["norm", "1,1,1,1"]);
        assert_eq!(out, "4\n");
        let (code, _, err) = call(&["mul", "1,0", "0,1"]);
        assert_eq!(code, EXIT_USAGE, "{err}");
    }

    #[test]
    fn power_json() {
        let (code, out, _) = call(&[
            "power", "--rho", "1", "--k", "3", "--theta", "2", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rho"], "1");
        assert_eq!(v["element"]["dim"], 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["power", "--k", "2", "--theta", "1"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["classify", "--p", "1+"]).0, EXIT_USAGE);
        assert_eq!(call(&["--tol", "0", "classify"]).0, EXIT_USAGE);
        let args = [
            "verify",
            "--family",
            "S",
            "--identity",
            "left-alt",
            "--samples",
            "200",
            "--seed",
            "7",
        ];
        assert_eq!(call(&args).0, EXIT_OK);
        let mut strict = args.to_vec();
        strict.push("--expect-holds");
        assert_eq!(call(&strict).0, EXIT_COUNTEREXAMPLE);
    }

    #[test]
    fn domain_error_json() {
        let (code, out, _) = call(&["power", "--k", "4", "--theta", "1", "--format", "json"]);
        assert_eq!(code, EXIT_DOMAIN);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "PoleAtEvenK");
    }
}
