//! Command-line front end.
//!
//! Every subcommand renders its whole output into a `String` before anything
//! is printed, so a failure never leaves partial output behind.

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::classify_exhaustive;
use crate::count::{
    closed_s, spanning_tree_count, CountMethod, DEFAULT_EXPANSION_THRESHOLD, MAX_EXPANSION_STEP,
};
use crate::entropy::{
    entropy_comparison, entropy_table, log10_count, residual_text, MIN_PRECISION_DIGITS,
};
use crate::error::{Error, Result};
use crate::graph::{build_iterative, build_merged, ExportFormat, Step};
use crate::oracle::tree_count_kirchhoff;
use crate::verify::{run_checks, VerifyBounds};

#[derive(Debug, Parser)]
#[command(
    name = "apollonian",
    version,
    about = "Spanning trees of Apollonian networks, counted exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    ClosedForm,
    Kirchhoff,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    EdgeList,
    Dot,
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Iterative,
    Merged,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build A(n) and print it as an edge list, DOT or JSON.
    Generate {
        #[arg(short = 'n', long = "step")]
        n: u32,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: Format,
        #[arg(long, value_enum, default_value = "iterative")]
        construction: Construction,
    },
    /// Count the spanning trees of A(n).
    Count {
        #[arg(short = 'n', long = "step")]
        n: u32,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: Method,
        /// Print full decimal integers even above the expansion threshold.
        #[arg(long)]
        expand: bool,
        /// Largest n printed as a full integer without --expand.
        #[arg(long, default_value_t = DEFAULT_EXPANSION_THRESHOLD)]
        threshold: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Tabulate z_n = ln(s_n) / V_n for n = 0..=n_max.
    Entropy {
        #[arg(short = 'n', long = "n-max")]
        n_max: u32,
        /// Significant decimal digits (at least 15).
        #[arg(long, default_value_t = 20)]
        precision: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run every cross-method check up to n_max.
    Verify {
        #[arg(short = 'n', long = "n-max", default_value_t = 20)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Enumerate and classify the spanning forests of A(n) (n <= 2).
    Classify {
        #[arg(short = 'n', long = "step")]
        n: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

/// Text to print and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "--format {format:?} is not valid for {command}"
        )))
    }
}

pub fn run(command: &Command) -> Result<Outcome> {
    let output = match *command {
        Command::Generate {
            n,
            format,
            construction,
        } => {
            let export = match format {
                Format::EdgeList => ExportFormat::EdgeList,
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
                other => {
                    return Err(Error::Usage(format!(
                        "--format {other:?} is not valid for generate"
                    )))
                }
            };
            let g = match construction {
                Construction::Iterative => build_iterative(Step(n))?,
                Construction::Merged => build_merged(Step(n))?,
            };
            g.export(export)
        }
        Command::Count {
            n,
            method,
            expand,
            threshold,
            format,
        } => {
            require_format(format, &[Format::Plain], "count")?;
            count(Step(n), method, expand, threshold)?
        }
        Command::Entropy {
            n_max,
            precision,
            format,
        } => {
            require_format(format, &[Format::Csv, Format::Plain], "entropy")?;
            entropy(Step(n_max), precision, format)?
        }
        Command::Verify { n_max, format } => {
            require_format(format, &[Format::Plain], "verify")?;
            let outcomes = run_checks(VerifyBounds::up_to(n_max));
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let mut out: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            out.push_str(&format!("{} checks, {failed} failed\n", outcomes.len()));
            return Ok(Outcome {
                output: out,
                status: if failed == 0 { 0 } else { 1 },
            });
        }
        Command::Classify { n, format } => {
            require_format(format, &[Format::Plain, Format::Csv], "classify")?;
            classify(Step(n), format)?
        }
    };
    Ok(Outcome { output, status: 0 })
}

fn count(n: Step, method: Method, expand: bool, threshold: u32) -> Result<String> {
    let factored = closed_s(n)?;
    let limit = if expand {
        MAX_EXPANSION_STEP
    } else {
        threshold
    };
    let mut out = format!("n: {n}\nfactored: {factored}\n");
    let methods: &[Method] = match method {
        Method::All => &[Method::Recursion, Method::ClosedForm, Method::Kirchhoff],
        ref m => std::slice::from_ref(m),
    };
    if n.0 > limit {
        // too large to print in full: summarize from the factored form
        if methods.iter().any(|m| *m != Method::ClosedForm) {
            return Err(Error::SizeGuard(format!(
                "n = {n} exceeds the expansion limit {limit}; only the closed form can report it"
            )));
        }
        let (log10, digits) = log10_count(&factored, 15);
        out.push_str(&format!(
            "closed-form: {digits} digits, log10 = {}\n",
            log10.to_decimal(15)
        ));
        return Ok(out);
    }
    for m in methods {
        let (name, value) = match m {
            Method::Recursion => (
                "recursion",
                spanning_tree_count(n, CountMethod::Recursion, limit)?,
            ),
            Method::ClosedForm => (
                "closed-form",
                spanning_tree_count(n, CountMethod::ClosedForm, limit)?,
            ),
            Method::Kirchhoff => ("kirchhoff", tree_count_kirchhoff(&build_iterative(n)?)?),
            Method::All => unreachable!("expanded above"),
        };
        out.push_str(&format!("{name}: {value}\n"));
    }
    Ok(out)
}

fn entropy(n_max: Step, precision: u32, format: Format) -> Result<String> {
    if precision < MIN_PRECISION_DIGITS {
        return Err(Error::Usage(format!(
            "--precision must be at least {MIN_PRECISION_DIGITS}"
        )));
    }
    let table = entropy_table(n_max, precision)?;
    let limit = table.limit.to_decimal(precision);
    let residual = residual_text(table.final_residual(), precision);
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&table.to_csv());
            out.push_str(&format!("# limit ln(15)/2 = {limit}\n"));
            out.push_str(&format!("# residual |z_{n_max} - ln(15)/2| = {residual}\n"));
        }
        _ => {
            for row in &table.rows {
                out.push_str(&format!("z_{} = {}\n", row.n, row.z.to_decimal(precision)));
            }
            out.push_str(&format!("limit = {limit}\nresidual = {residual}\n"));
            for row in entropy_comparison() {
                out.push_str(&format!("{}: {:.4}\n", row.graph, row.entropy));
            }
        }
    }
    Ok(out)
}

fn classify(n: Step, format: Format) -> Result<String> {
    let census = classify_exhaustive(&build_iterative(n)?)?;
    let check = census.check_bijections();
    let mut out = String::new();
    let sep = if format == Format::Csv { "," } else { "\t" };
    out.push_str(&format!("class{sep}count\n"));
    for (tag, value) in census.rows() {
        out.push_str(&format!("{tag}{sep}{value}\n"));
    }
    if format == Format::Plain {
        let verdict = match &check {
            Ok(()) => "ok".to_string(),
            Err(e) => e.to_string(),
        };
        out.push_str(&format!(
            "hub-edge bijections d = a, e = b, f = a: {verdict}\n"
        ));
    }
    check?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("apollonian").chain(args.iter().copied()))
            .map_err(|e| Error::Usage(e.to_string()))?;
        run(&cli.command)
    }

    #[test]
    fn count_all_methods() {
        let out = run_args(&["count", "-n", "2", "--method", "all"]).unwrap();
        assert_eq!(
            out.output,
            "n: 2\nfactored: 3^0 * 5^1 * 17^2\nrecursion: 1445\nclosed-form: 1445\nkirchhoff: 1445\n"
        );
    }

    #[test]
    fn count_above_threshold_summarizes() {
        let out = run_args(&["count", "-n", "13"]).unwrap().output;
        assert!(out.contains("digits, log10 = "), "{out}");
        assert!(matches!(
            run_args(&["count", "-n", "13", "--method", "recursion"]),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn generate_triangle() {
        let out = run_args(&["generate", "-n", "0"]).unwrap();
        assert_eq!(out.output, "0 1\n0 2\n1 2\n");
        assert!(matches!(
            run_args(&["generate", "-n", "1", "--format", "csv"]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn classify_one() {
        let out = run_args(&["classify", "-n", "1"]).unwrap().output;
        assert!(
            out.contains("A\t3\nB\t1\nB'\t1\nB''\t1\nC\t1\nD\t3\nE\t1\nF\t3\ns\t16\n"),
            "{out}"
        );
        assert!(out.ends_with(": ok\n"));
    }

    #[test]
    fn negative_step_is_rejected() {
        assert!(matches!(
            run_args(&["count", "-n", "-1"]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn low_precision_is_rejected() {
        assert!(matches!(
            run_args(&["entropy", "-n", "3", "--precision", "10"]),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn output_is_deterministic() {
        let a = run_args(&["entropy", "-n", "6"]).unwrap();
        let b = run_args(&["entropy", "-n", "6"]).unwrap();
        assert_eq!(a, b);
    }
}
