//! Argument parsing and per-subcommand validation.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use tbk_core::ford::{DEFAULT_SAMPLES, MAX_SCAN_LEN, MIN_SAMPLES};
use tbk_core::{validate_form, IntPolynomial, TwoBridgeForm};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "tbk",
    version,
    about = "Parabolic representations of two-bridge knot groups",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FormArgs {
    #[arg(allow_negative_numbers = true)]
    alpha: i64,
    #[arg(allow_negative_numbers = true)]
    beta: i64,
}

#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Machine-readable JSON on stdout.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct RootChoice {
    /// 1-based index into the sorted roots (of the factor, if given).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    root: Option<u32>,
    /// Integer factor as ascending coefficients `c0,c1,...`, or `@FILE`.
    #[arg(long, allow_hyphen_values = true)]
    factor: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent sequence, relator and longitude words.
    Word {
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        common: Common,
    },
    /// The p-rep polynomial.
    Prep {
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Complex roots of the p-rep polynomial (or of --factor).
    Roots {
        #[command(flatten)]
        form: FormArgs,
        /// Root this integer polynomial instead.
        #[arg(long, allow_hyphen_values = true)]
        factor: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Irreducible-class factors with their longitude entries.
    Factors {
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Longitude entry g at each root; exact residue when --factor is given.
    Longitude {
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        choice: RootChoice,
        #[command(flatten)]
        common: Common,
    },
    /// Isometric spheres and the Ford pattern at one root.
    Ford {
        #[command(flatten)]
        form: FormArgs,
        #[command(flatten)]
        choice: RootChoice,
        /// Longest relator subword used for spheres.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
        depth: u32,
        /// Sample points per circle.
        #[arg(long, default_value_t = DEFAULT_SAMPLES as u32)]
        samples: u32,
        /// Write the pattern as SVG.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a word violating Shimizu's inequality.
    Shimizu {
        #[arg(allow_negative_numbers = true)]
        alpha: Option<i64>,
        #[arg(allow_negative_numbers = true)]
        beta: Option<i64>,
        #[command(flatten)]
        choice: RootChoice,
        /// Scan <A, B_omega> for this omega (`RE` or `RE,IM`) instead of a root.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["alpha", "root", "factor"])]
        omega: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_len: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Check the presentation relations for 8_11 exactly.
    #[command(name = "verify-8-11")]
    Verify811 {
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial, roots and classes in one document.
    Report {
        #[command(flatten)]
        form: FormArgs,
        /// Record per-stage wall-clock times.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubcommandKind {
    Word,
    Prep,
    Roots,
    Factors,
    Longitude,
    Ford,
    Shimizu,
    Verify811,
    Report,
}

impl SubcommandKind {
    pub fn name(self) -> &'static str {
        match self {
            SubcommandKind::Word => "word",
            SubcommandKind::Prep => "prep",
            SubcommandKind::Roots => "roots",
            SubcommandKind::Factors => "factors",
            SubcommandKind::Longitude => "longitude",
            SubcommandKind::Ford => "ford",
            SubcommandKind::Shimizu => "shimizu",
            SubcommandKind::Verify811 => "verify-8-11",
            SubcommandKind::Report => "report",
        }
    }
}

/// Validated options; fields a subcommand does not take stay at defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub root: Option<usize>,
    pub factor: Option<IntPolynomial>,
    pub omega: Option<Complex64>,
    pub depth: usize,
    pub max_len: usize,
    pub samples: usize,
    pub svg: Option<PathBuf>,
    pub json: bool,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            root: None,
            factor: None,
            omega: None,
            depth: 6,
            max_len: 8,
            samples: DEFAULT_SAMPLES,
            svg: None,
            json: false,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandRequest {
    pub subcommand: SubcommandKind,
    pub form: Option<TwoBridgeForm>,
    pub options: Options,
}

fn form(f: &FormArgs) -> Result<TwoBridgeForm, CliError> {
    validate_form(f.alpha, f.beta).map_err(|e| CliError::Usage(e.to_string()))
}

fn factor(spec: &str) -> Result<IntPolynomial, CliError> {
    let text = match spec.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?,
        None => spec.to_string(),
    };
    let p: IntPolynomial = text
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("--factor: {e}")))?;
    if p.degree().unwrap_or(0) < 1 {
        return Err(CliError::Usage(
            "--factor must have degree at least 1".into(),
        ));
    }
    Ok(p)
}

fn omega(spec: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Usage(format!("--omega: expected RE or RE,IM, got {spec:?}"));
    let parts: Vec<f64> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let z = match parts[..] {
        [re] => Complex64::new(re, 0.0),
        [re, im] => Complex64::new(re, im),
        _ => return Err(bad()),
    };
    if z.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn apply_choice(o: &mut Options, c: &RootChoice) -> Result<(), CliError> {
    o.root = c.root.map(|r| r as usize);
    o.factor = c.factor.as_deref().map(factor).transpose()?;
    Ok(())
}

/// Parses `argv` (including the program name). Help and version requests
/// come back as [`CliError::Clap`] too; callers print them via `exit`.
pub fn parse_command<I, T>(argv: I) -> Result<CommandRequest, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(CliError::Clap)?;
    let mut o = Options::default();
    let (subcommand, form) = match &cli.command {
        Command::Word { form: f, common } => {
            o.json = common.json;
            (SubcommandKind::Word, Some(form(f)?))
        }
        Command::Prep { form: f, common } => {
            o.json = common.json;
            (SubcommandKind::Prep, Some(form(f)?))
        }
        Command::Roots {
            form: f,
            factor: fac,
            common,
        } => {
            o.json = common.json;
            o.factor = fac.as_deref().map(factor).transpose()?;
            (SubcommandKind::Roots, Some(form(f)?))
        }
        Command::Factors { form: f, common } => {
            o.json = common.json;
            (SubcommandKind::Factors, Some(form(f)?))
        }
        Command::Longitude {
            form: f,
            choice,
            common,
        } => {
            o.json = common.json;
            apply_choice(&mut o, choice)?;
            (SubcommandKind::Longitude, Some(form(f)?))
        }
        Command::Ford {
            form: f,
            choice,
            depth,
            samples,
            svg,
            common,
        } => {
            o.json = common.json;
            apply_choice(&mut o, choice)?;
            if o.root.is_none() {
                return Err(CliError::Usage("ford needs --root".into()));
            }
            if (*samples as usize) < MIN_SAMPLES {
                return Err(CliError::Usage(format!(
                    "--samples must be at least {MIN_SAMPLES}, got {samples}"
                )));
            }
            o.depth = *depth as usize;
            o.samples = *samples as usize;
            o.svg = svg.clone();
            (SubcommandKind::Ford, Some(form(f)?))
        }
        Command::Shimizu {
            alpha,
            beta,
            choice,
            omega: om,
            max_len,
            common,
        } => {
            o.json = common.json;
            if *max_len as usize > MAX_SCAN_LEN || *max_len == 0 {
                return Err(CliError::Usage(format!(
                    "--max-len must be in 1..={MAX_SCAN_LEN}, got {max_len}"
                )));
            }
            o.max_len = *max_len as usize;
            let f = match (alpha, beta, om) {
                (_, _, Some(z)) => {
                    o.omega = Some(omega(z)?);
                    None
                }
                (Some(a), Some(b), None) => {
                    apply_choice(&mut o, choice)?;
                    if o.root.is_none() {
                        return Err(CliError::Usage("shimizu needs --root or --omega".into()));
                    }
                    Some(form(&FormArgs {
                        alpha: *a,
                        beta: *b,
                    })?)
                }
                _ => {
                    return Err(CliError::Usage(
                        "shimizu needs ALPHA BETA --root N, or --omega".into(),
                    ))
                }
            };
            (SubcommandKind::Shimizu, f)
        }
        Command::Verify811 { common } => {
            o.json = common.json;
            (SubcommandKind::Verify811, None)
        }
        Command::Report {
            form: f,
            timings,
            common,
        } => {
            o.json = common.json;
            o.timings = *timings;
            (SubcommandKind::Report, Some(form(f)?))
        }
    };
    Ok(CommandRequest {
        subcommand,
        form,
        options: o,
    })
}
