//! Command-line front end: analyze dual generators or ideals, check
//! H-vector growth bounds, and run the finite classification searches.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use apolar::apolarity::{DualGenerator, HVector};
use apolar::artin::LinearForm;
use apolar::classify::{
    check_conjectured_tables, classify_ci, classify_equigenerated, classify_k4_filtered,
};
use apolar::report::{
    analyze, bounds_report, dual_from_ideal_text, dual_from_text, dual_report, jordan_report,
    parse_linear_form, render_ci_report, render_conjecture_report, render_equigenerated_report,
    render_k4_report, AnalyzeOptions, InputEcho,
};
use apolar::{Error, Result};

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact invariants of Artinian Gorenstein algebras via Macaulay duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Dual generator in the uppercase alphabet, e.g. "X1*X2*X3*X4^2"
    #[arg(long, conflicts_with = "ideal")]
    dual: Option<String>,
    /// Comma-separated ideal generators in the lowercase alphabet
    #[arg(long, requires = "socle")]
    ideal: Option<String>,
    /// Socle degree of the Gorenstein quotient (required with --ideal)
    #[arg(long, conflicts_with = "dual")]
    socle: Option<usize>,
    /// Number of variables; inferred from the input when omitted
    #[arg(long)]
    n: Option<usize>,
}

impl InputArgs {
    fn resolve(&self) -> Result<(DualGenerator, InputEcho)> {
        match (&self.dual, &self.ideal) {
            (Some(text), None) => Ok((dual_from_text(text, self.n)?, InputEcho::dual(text))),
            (None, Some(text)) => {
                let socle = self
                    .socle
                    .ok_or_else(|| Error::InvalidInput("--ideal requires --socle".to_string()))?;
                Ok((
                    dual_from_ideal_text(text, socle, self.n)?,
                    InputEcho::ideal(text, socle),
                ))
            }
            _ => Err(Error::InvalidInput(
                "exactly one of --dual or --ideal is required".to_string(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: Hilbert function, Betti table, growth bounds,
    /// Lefschetz properties, Jordan type
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Linear form coefficients, comma separated, e.g. "1,1,1,1"
        #[arg(long)]
        ell: Option<String>,
        /// Seed for the random Lefschetz probe
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random candidates probed besides all-ones
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Random candidate coefficients are drawn from [-bound, bound]
        #[arg(long, default_value_t = 10)]
        coeff_bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recover the dual generator of an ideal's Gorenstein quotient
    Dual {
        /// Comma-separated ideal generators in the lowercase alphabet
        #[arg(long)]
        ideal: String,
        /// Socle degree of the quotient
        #[arg(long)]
        socle: usize,
        /// Number of variables; inferred from the input when omitted
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check an H-vector against the Macaulay growth bounds
    Bounds {
        /// Comma-separated values, e.g. "1,4,7,7,4,1"
        #[arg(long)]
        hvector: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run one of the finite classification searches
    Classify {
        #[command(subcommand)]
        target: ClassifyTarget,
    },
    /// Jordan type of multiplication by a linear form
    Jordan {
        #[command(flatten)]
        input: InputArgs,
        /// Linear form coefficients; defaults to all ones
        #[arg(long)]
        ell: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum ClassifyTarget {
    /// Complete intersections with the given n and socle degree
    Ci {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        socle: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The two equigenerated templates in four variables, socle degree 5
    Equigenerated {
        /// Exhaustive-search bound for the quadric template's system
        #[arg(long, default_value_t = 20)]
        bound: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for symmetric Betti tables with H = (1,4,4,4,4,1)
    K4 {
        /// Bound on each unknown table entry
        #[arg(long, default_value_t = 20)]
        bound: usize,
        /// Constraint names to disable, comma separated
        #[arg(long)]
        skip: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Consistency checks for the conjectured (1,4,7,7,4,1) tables
    Tables {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_hvector(text: &str) -> Result<HVector> {
    let mut values = Vec::new();
    for part in text.split(',') {
        let trimmed = part.trim();
        let v = trimmed.parse::<usize>().map_err(|e| Error::Parse {
            position: 0,
            message: format!("invalid H-vector entry `{trimmed}`: {e}"),
        })?;
        values.push(v);
    }
    Ok(HVector(values))
}

fn emit<T: serde::Serialize>(value: &T, text: String, format: Format) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize to JSON")
        ),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze {
            input,
            ell,
            seed,
            trials,
            coeff_bound,
            format,
        } => {
            let (dual, echo) = input.resolve()?;
            let ell = match ell {
                Some(text) => Some(parse_linear_form(&text)?),
                None => None,
            };
            let opts = AnalyzeOptions {
                seed,
                trials,
                coeff_bound,
            };
            let report = analyze(dual, echo, &opts, ell.as_ref())?;
            emit(&report, report.to_text(), format);
        }
        Command::Dual {
            ideal,
            socle,
            n,
            format,
        } => {
            let report = dual_report(&ideal, socle, n)?;
            emit(&report, report.to_text(), format);
        }
        Command::Bounds { hvector, format } => {
            let report = bounds_report(parse_hvector(&hvector)?);
            emit(&report, report.to_text(), format);
        }
        Command::Jordan { input, ell, format } => {
            let (dual, echo) = input.resolve()?;
            let ell = match ell {
                Some(text) => parse_linear_form(&text)?,
                None => LinearForm::ones(dual.nvars()),
            };
            let report = jordan_report(dual, echo, &ell)?;
            emit(&report, report.to_text(), format);
        }
        Command::Classify { target } => match target {
            ClassifyTarget::Ci { n, socle, format } => {
                if n == 0 || socle == 0 {
                    return Err(Error::InvalidInput(
                        "--n and --socle must be at least 1".to_string(),
                    ));
                }
                let report = classify_ci(n, socle);
                emit(&report, render_ci_report(&report), format);
            }
            ClassifyTarget::Equigenerated { bound, format } => {
                let report = classify_equigenerated(bound);
                emit(&report, render_equigenerated_report(&report), format);
            }
            ClassifyTarget::K4 {
                bound,
                skip,
                format,
            } => {
                let skip_names: Vec<String> = skip
                    .map(|s| s.split(',').map(|p| p.trim().to_string()).collect())
                    .unwrap_or_default();
                let skip_refs: Vec<&str> = skip_names.iter().map(String::as_str).collect();
                let report = classify_k4_filtered(bound, &skip_refs)?;
                emit(&report, render_k4_report(&report), format);
            }
            ClassifyTarget::Tables { format } => {
                let report = check_conjectured_tables();
                emit(&report, render_conjecture_report(&report), format);
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
