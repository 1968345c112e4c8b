use std::path::PathBuf;
use std::process::ExitCode;

use balanced_cli::checks::run_all;
use balanced_cli::spec_file::SpecFile;
use balanced_cli::{render, table2, CliError};
use balanced_core::colouring::colour_prefix;
use balanced_core::critexp::{e_total, Analysis};
use balanced_core::sturmian::{alphabet, generate_prefix, sturmian_exponents, Slope};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Critical exponents of balanced sequences built by colouring Sturmian
/// sequences.
#[derive(Parser)]
#[command(name = "balanced", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct SpecArgs {
    /// JSON spec file.
    #[arg(long, conflicts_with_all = ["slope", "y", "yp"])]
    spec: Option<PathBuf>,
    /// Slope, e.g. "0;2,3;(2)".
    #[arg(long, requires_all = ["y", "yp"])]
    slope: Option<String>,
    /// One period of the sequence colouring `a`.
    #[arg(long)]
    y: Option<String>,
    /// One period of the sequence colouring `b`.
    #[arg(long)]
    yp: Option<String>,
    #[arg(long, default_value_t = 0)]
    shift_y: usize,
    #[arg(long, default_value_t = 0)]
    shift_yp: usize,
}

impl SpecArgs {
    fn load(&self) -> Result<SpecFile, CliError> {
        match (&self.spec, &self.slope, &self.y, &self.yp) {
            (Some(path), _, _, _) => SpecFile::read(path),
            (None, Some(slope), Some(y), Some(yp)) => Ok(SpecFile {
                slope: slope.clone(),
                y: y.clone(),
                yp: yp.clone(),
                shift_y: self.shift_y,
                shift_yp: self.shift_yp,
                expected: None,
            }),
            _ => Err(CliError::Usage(
                "give --spec or all of --slope, --y, --yp".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Prefix of the standard Sturmian sequence.
    Generate {
        #[arg(long)]
        slope: String,
        #[arg(long)]
        length: usize,
    },
    /// Prefix of the coloured sequence.
    Colour {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        length: usize,
    },
    /// E, E* and the full evidence.
    Analyze {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// E* and the class table only.
    Asympt {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Property checks and the stored expected values, if any.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 10_000)]
        oracle_prefix: usize,
    },
    /// Recompute the bundled table for alphabets of size 3 to 10.
    Table2 {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Serialize)]
struct AsymptReport {
    #[serde(rename = "Estar")]
    e_star: balanced_core::quadratic::QuadNum,
    h: usize,
    #[serde(rename = "H")]
    big_h: usize,
    classes: Vec<balanced_core::critexp::ClassRow>,
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("plain data")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate { slope, length } => {
            let slope: Slope = slope.parse()?;
            println!("{}", alphabet().render(&generate_prefix(&slope, length)));
        }
        Command::Colour { spec, length } => {
            let spec = spec.load()?.to_spec()?;
            println!("{}", spec.alphabet().render(&colour_prefix(&spec, length)));
        }
        Command::Analyze { spec, format } => {
            let report = e_total(&spec.load()?.to_spec()?)?;
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Table => print!("{}", render::report(&report)),
            }
        }
        Command::Asympt { spec, format } => {
            let spec = spec.load()?.to_spec()?;
            let report = if spec.per_product() == 1 {
                AsymptReport {
                    e_star: sturmian_exponents(spec.slope()).e_star,
                    h: spec.slope().preperiod().len(),
                    big_h: spec.slope().period().len(),
                    classes: Vec::new(),
                }
            } else {
                let mut job = Analysis::new(&spec)?;
                let (classes, _) = job.class_rows()?;
                let e_star = classes
                    .iter()
                    .map(|c| c.e_star_im.clone())
                    .reduce(|a, b| a.max(b))
                    .expect("at least one class");
                AsymptReport {
                    e_star,
                    h: job.h(),
                    big_h: job.H(),
                    classes,
                }
            };
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Table => {
                    let mut out = format!(
                        "E* = {}  ~ {}\nh = {}, H = {}\n\n",
                        report.e_star,
                        report.e_star.approx(),
                        report.h,
                        report.big_h
                    );
                    render::class_table(&mut out, &report.classes);
                    print!("{out}");
                }
            }
        }
        Command::Verify {
            spec,
            oracle_prefix,
        } => {
            let file = spec.load()?;
            let spec = file.to_spec()?;
            let report = e_total(&spec)?;
            let checks = run_all(&spec, &report, oracle_prefix, file.expected.as_ref());
            for c in &checks {
                println!("{}", c.line());
            }
            let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
            if !failed.is_empty() {
                return Err(CliError::Mismatch(format!("failed: {}", failed.join(", "))));
            }
        }
        Command::Table2 { format } => {
            let results = table2::run(&table2::rows())?;
            match format {
                Format::Json => println!("{}", json(&results)),
                Format::Table => print!("{}", render::table2(&results)),
            }
            let bad: Vec<String> = results
                .iter()
                .filter(|r| !r.matches)
                .map(|r| r.d.to_string())
                .collect();
            if !bad.is_empty() {
                return Err(CliError::Mismatch(format!("rows differ: d = {}", bad.join(", "))));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
