//! Argument parsing and the top-level driver.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use folinv::exactalg::rat::render;
use folinv::gallery::list_examples;

use crate::job::{parse_rat, ConfigOverrides, DivisorTerm, JobKind, JobSpec};
use crate::report::{ReportDoc, EXIT_INPUT, EXIT_OK};
use crate::run::{input_error_doc, run_with};
use crate::InputError;

/// Config file read when `--config` is not given and the file exists.
pub const DEFAULT_CONFIG: &str = "folcli.toml";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "folcli", version, about = "Exact invariants of plane foliations and their invariant curves")]
pub struct Cli {
    /// Job document (JSON).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_name = "N")]
    pub degree_cap: Option<u32>,
    #[arg(long, global = true, value_name = "N")]
    pub precision_cap: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// TOML file with degree_cap, precision_cap, seed.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Germs at the origin of the plane.
    Local {
        #[command(subcommand)]
        command: LocalCommand,
    },
    /// Foliations of the projective plane.
    Global {
        #[command(subcommand)]
        command: GlobalCommand,
    },
    /// Built-in worked examples.
    Example {
        #[command(subcommand)]
        command: ExampleCommand,
    },
}

#[derive(Debug, Args)]
pub struct LocalArgs {
    /// Coefficient P of P dx + Q dy.
    #[arg(long = "p", value_name = "POLY", allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Coefficient Q of P dx + Q dy.
    #[arg(long = "q", value_name = "POLY", allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Invariant curve.
    #[arg(long = "f", value_name = "POLY", allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Divisor component as COEFF:POLY, repeatable.
    #[arg(long = "divisor", value_name = "COEFF:POLY", allow_hyphen_values = true)]
    pub divisor: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum LocalCommand {
    /// Milnor, Tjurina and multiplicity numbers.
    Invariants(LocalArgs),
    /// Run one named check, or `all`.
    Check {
        name: String,
        #[command(flatten)]
        args: LocalArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum GlobalCommand {
    /// Run one named check, or `all`.
    Check {
        name: String,
        #[arg(long = "a", value_name = "FORM", allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long = "b", value_name = "FORM", allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long = "c", value_name = "FORM", allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, value_name = "FORM", allow_hyphen_values = true)]
        curve: Option<String>,
        /// Singular point x:y:z, repeatable.
        #[arg(long = "point", value_name = "X:Y:Z", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Treat the curve as irreducible.
        #[arg(long)]
        irreducible: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExampleCommand {
    /// Compute an example and compare with its published values.
    Run {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: Option<String>,
    },
    /// Names, parameters and expected values.
    List,
}

#[derive(Debug, Serialize)]
struct ListedCase<'a> {
    invocation: &'a str,
    expected: Vec<(&'a str, String)>,
}

#[derive(Debug, Serialize)]
struct Listed<'a> {
    name: &'a str,
    summary: &'a str,
    parameters: &'a str,
    cases: Vec<ListedCase<'a>>,
}

fn read_config(path: &Path) -> Result<ConfigOverrides, InputError> {
    let err = |message: String| InputError::Config {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    toml::from_str(&text).map_err(|e| err(e.to_string()))
}

fn overrides(cli: &Cli) -> Result<ConfigOverrides, InputError> {
    let file = match &cli.config {
        Some(p) => read_config(p)?,
        None if Path::new(DEFAULT_CONFIG).exists() => read_config(Path::new(DEFAULT_CONFIG))?,
        None => ConfigOverrides::default(),
    };
    Ok(file)
}

fn flag_overrides(cli: &Cli) -> ConfigOverrides {
    ConfigOverrides {
        degree_cap: cli.degree_cap,
        precision_cap: cli.precision_cap,
        seed: cli.seed,
    }
}

fn set(slot: &mut Option<String>, v: &Option<String>) {
    if v.is_some() {
        *slot = v.clone();
    }
}

fn divisor_term(s: &str) -> Result<DivisorTerm, InputError> {
    let bad = || InputError::Value {
        field: "divisor".into(),
        message: format!("`{s}` is not COEFF:POLY"),
    };
    let (c, f) = s.split_once(':').ok_or_else(bad)?;
    let coeff = c.trim().parse::<i64>().map_err(|_| bad())?;
    Ok(DivisorTerm {
        f: f.trim().to_string(),
        coeff,
    })
}

fn apply_local(job: &mut JobSpec, args: &LocalArgs) -> Result<(), InputError> {
    set(&mut job.p, &args.p);
    set(&mut job.q, &args.q);
    set(&mut job.f, &args.f);
    if !args.divisor.is_empty() {
        job.divisor = args.divisor.iter().map(|s| divisor_term(s)).collect::<Result<_, _>>()?;
    }
    Ok(())
}

/// The job described by the input file and the flags, flags winning.
pub fn build_job(cli: &Cli) -> Result<JobSpec, InputError> {
    let mut job = match &cli.input {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| InputError::Document(format!("{}: {e}", path.display())))?;
            JobSpec::from_json(&text)?
        }
        None => JobSpec::default(),
    };
    let kind = match &cli.command {
        Command::Local { command } => match command {
            LocalCommand::Invariants(args) => {
                apply_local(&mut job, args)?;
                JobKind::LocalInvariants
            }
            LocalCommand::Check { name, args } => {
                apply_local(&mut job, args)?;
                job.checks = vec![name.clone()];
                JobKind::LocalCheck
            }
        },
        Command::Global { command } => match command {
            GlobalCommand::Check {
                name,
                a,
                b,
                c,
                curve,
                points,
                irreducible,
            } => {
                set(&mut job.a, a);
                set(&mut job.b, b);
                set(&mut job.c, c);
                set(&mut job.curve, curve);
                if !points.is_empty() {
                    job.points = points.clone();
                }
                job.irreducible |= *irreducible;
                job.checks = vec![name.clone()];
                JobKind::GlobalCheck
            }
        },
        Command::Example { command } => match command {
            ExampleCommand::Run {
                name,
                k,
                lambda,
                n,
                zeta,
                lambda2,
            } => {
                job.example = Some(name.clone());
                for (key, v) in [("k", k), ("lambda", lambda), ("n", n), ("zeta", zeta), ("lambda2", lambda2)] {
                    if let Some(v) = v {
                        parse_rat(key, v)?;
                        job.params.insert(key.to_string(), v.clone());
                    }
                }
                JobKind::Example
            }
            ExampleCommand::List => JobKind::Example,
        },
    };
    if let Some(k) = job.kind {
        if k != kind {
            return Err(InputError::Value {
                field: "kind".into(),
                message: format!("the document is a {} job, the command is {}", k.command(), kind.command()),
            });
        }
    }
    job.kind = Some(kind);
    let merged = overrides(cli)?.merged(&job.config).merged(&flag_overrides(cli));
    job.config = merged;
    Ok(job)
}

fn listing(format: Format) -> String {
    let all = list_examples();
    match format {
        Format::Structured => {
            let docs: Vec<Listed> = all
                .iter()
                .map(|e| Listed {
                    name: e.name,
                    summary: e.summary,
                    parameters: e.parameters,
                    cases: e
                        .cases
                        .iter()
                        .map(|c| ListedCase {
                            invocation: &c.invocation,
                            expected: c.expected.iter().map(|(k, v)| (k.as_str(), render(v))).collect(),
                        })
                        .collect(),
                })
                .collect();
            serde_json::to_string_pretty(&docs).expect("listing serializes") + "\n"
        }
        Format::Text => {
            let mut s = String::new();
            for e in &all {
                s.push_str(&format!("{}: {}\n", e.name, e.summary));
                if !e.parameters.is_empty() {
                    s.push_str(&format!("  parameters: {}\n", e.parameters));
                }
                for c in &e.cases {
                    let vals: Vec<String> = c.expected.iter().map(|(k, v)| format!("{k} = {}", render(v))).collect();
                    s.push_str(&format!("  {}: {}\n", c.invocation, vals.join(", ")));
                }
            }
            s
        }
    }
}

fn emit(cli: &Cli, text: &str) -> i32 {
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
            EXIT_OK
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            EXIT_OK
        }
    }
}

fn render_report(doc: &ReportDoc, format: Format) -> String {
    match format {
        Format::Text => doc.to_text(),
        Format::Structured => doc.to_json() + "\n",
    }
}

/// Runs the parsed command line; returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    if let Command::Example {
        command: ExampleCommand::List,
    } = &cli.command
    {
        return emit(cli, &listing(cli.format));
    }
    let doc = match build_job(cli) {
        Ok(job) => {
            let limits = job.config.limits();
            run_with(&job, &limits)
        }
        Err(e) => {
            let limits = flag_overrides(cli).limits();
            let mut doc = ReportDoc::new(
                "invalid job",
                crate::report::Certificates {
                    degree_cap: limits.degree_cap,
                    precision_cap: limits.precision_cap,
                    seed: limits.seed,
                    details: Vec::new(),
                },
            );
            doc.errors.push(input_error_doc(&e));
            doc.settle();
            doc
        }
    };
    for e in &doc.errors {
        eprintln!("error: {}", e.message);
    }
    let code = emit(cli, &render_report(&doc, cli.format));
    if code != EXIT_OK {
        return code;
    }
    doc.exit_code
}

/// Entry point for the binary.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_OK
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("folcli").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn flags_fill_the_job() {
        let cli = parse(&["example", "run", "fk", "--k", "4", "--seed", "9"]);
        let job = build_job(&cli).unwrap();
        assert_eq!(job.kind, Some(JobKind::Example));
        assert_eq!(job.params.get("k").map(String::as_str), Some("4"));
        assert_eq!(job.config.seed, Some(9));
    }

    #[test]
    fn local_flags() {
        let cli = parse(&["local", "check", "all", "--p", "x", "--q", "-y", "--divisor", "1:x", "--divisor", "-1: y"]);
        let job = build_job(&cli).unwrap();
        assert_eq!(job.checks, vec!["all".to_string()]);
        assert_eq!(job.divisor[1], DivisorTerm { f: "y".into(), coeff: -1 });
        let cli = parse(&["local", "invariants", "--divisor", "x"]);
        assert!(build_job(&cli).is_err());
    }

    #[test]
    fn listing_mentions_cases() {
        let t = listing(Format::Text);
        assert!(t.contains("alcantara --n 2"));
        assert!(t.contains("fk --k 4"));
        let j: serde_json::Value = serde_json::from_str(&listing(Format::Structured)).unwrap();
        assert_eq!(j.as_array().unwrap().len(), 5);
    }
}
