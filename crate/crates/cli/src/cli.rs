//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use csl_core::coloring::Coloring;
use csl_core::csl;

use crate::formats::{ColorReportJson, IsometryJson, LatticeJson};
use crate::names::{resolve_lattice, IsometrySpec, LATTICE_NAMES};
use crate::suites::{self, SuiteParams, SUITES};
use crate::table::{self, Family, Format, TableRequest};
use crate::{closure, CliError};

#[derive(Debug, Parser)]
#[command(name = "csl", version, about = "Exact coincidence site lattices and color coincidences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct IsometryArgs {
    /// Rotation R_q of 3-space, e.g. "(1,1,1,0)" or "(1/2,1/2,1/2,1/2)"
    #[arg(long, allow_hyphen_values = true)]
    pub quat: Option<String>,
    /// Rotation R_{q,p} of 4-space, e.g. "(1,1,0,0);(1,0,1,0)"
    #[arg(long, allow_hyphen_values = true)]
    pub pair: Option<String>,
    /// JSON isometry {denominator, numerator_rows, kind}
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
    /// Use −R_q (3-space) or T_{q,p} (4-space) instead of the rotation
    #[arg(long)]
    pub rotoreflection: bool,
}

impl IsometryArgs {
    fn spec(&self) -> IsometrySpec {
        IsometrySpec {
            quat: self.quat.clone(),
            pair: self.pair.clone(),
            matrix_file: self.matrix_file.as_ref().map(|p| p.display().to_string()),
            rotoreflection: self.rotoreflection,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coincidence index, CSL basis and denominator of an isometry
    Sigma {
        /// Built-in name or path to a lattice JSON file
        #[arg(long)]
        lattice: String,
        #[command(flatten)]
        isometry: IsometryArgs,
        /// text or json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Full color-coincidence report for a coloring Γ₁ ⊃ Γ₂
    ColorReport {
        #[arg(long)]
        parent: String,
        #[arg(long)]
        sub: String,
        #[command(flatten)]
        isometry: IsometryArgs,
        /// text or json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Σ table: cubic3, hypercubic4 or custom (with --parent and --sub)
    Table {
        family: String,
        /// Bound on Σ of the parent lattice
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        parent: Option<String>,
        #[arg(long)]
        sub: Option<String>,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Output file; standard output if absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite ("list" shows them all)
    Verify {
        suite: String,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Products and inverses of color coincidences that leave the set
    ClosureSearch {
        #[arg(long)]
        parent: String,
        #[arg(long)]
        sub: String,
        /// Bound on Σ of the parent lattice
        #[arg(long, default_value_t = 9)]
        bound: u64,
        /// Output file; standard output if absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn text_or_json(format: &str) -> Result<bool, CliError> {
    match format {
        "text" => Ok(false),
        "json" => Ok(true),
        _ => Err(CliError::Usage(format!("unknown format {format:?}; expected text or json"))),
    }
}

fn emit(bytes: &[u8], path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Sigma { lattice, isometry, format } => {
            let json = text_or_json(&format)?;
            let lattice = resolve_lattice(&lattice)?;
            let r = isometry.spec().resolve(lattice.dim())?;
            let sigma = csl::sigma(&lattice, &r)?;
            let csl = csl::csl_lattice(&lattice, &r)?;
            let den = csl::denominator(&lattice, &r)?;
            if json {
                let value = serde_json::json!({
                    "sigma": sigma.to_string(),
                    "denominator": den.to_string(),
                    "csl": LatticeJson::from(&csl),
                    "isometry": IsometryJson::from(&r),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            } else {
                writeln!(out, "Σ = {sigma}")?;
                writeln!(out, "den(R) = {den}")?;
                writeln!(out, "CSL basis (rows) = {csl}")?;
            }
        }
        Command::ColorReport { parent, sub, isometry, format } => {
            let json = text_or_json(&format)?;
            let c = Coloring::new(&resolve_lattice(&parent)?, &resolve_lattice(&sub)?)?;
            let r = isometry.spec().resolve(c.parent().dim())?;
            let report = c.report(&r)?;
            if json {
                let value = ColorReportJson::new(c.colors(), &report);
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            } else {
                writeln!(out, "m = {}", report.m)?;
                writeln!(out, "Σ₁ = {}, Σ₂ = {}", report.sigma1, report.sigma2)?;
                writeln!(out, "s = {}, t = {}, u = {}, v = {}", report.s, report.t, report.u, report.v)?;
                writeln!(out, "color coincidence: {}", report.is_color_coincidence)?;
                if let Some(p) = &report.permutation {
                    writeln!(out, "permutation: {}", crate::formats::cycle_notation(&c.cycles(p)))?;
                }
                for (i, color) in c.colors().iter().enumerate() {
                    writeln!(out, "c{i} = {color}")?;
                }
            }
        }
        Command::Table { family, bound, parent, sub, format, out: path } => {
            let family = match (family.as_str(), parent, sub) {
                ("cubic3", None, None) => Family::Cubic3,
                ("hypercubic4", None, None) => Family::Hypercubic4,
                ("custom", Some(p), Some(s)) => Family::Custom { parent: resolve_lattice(&p)?, sub: resolve_lattice(&s)? },
                ("custom", _, _) => return Err(CliError::Usage("custom tables need --parent and --sub".into())),
                ("cubic3" | "hypercubic4", _, _) => {
                    return Err(CliError::Usage(format!("{family} has fixed lattices; --parent/--sub are for custom")))
                }
                _ => return Err(CliError::Usage(format!("unknown family {family:?}; expected cubic3, hypercubic4 or custom"))),
            };
            let req = TableRequest::new(family, bound, format.parse::<Format>()?)?;
            let rows = table::build(&req)?;
            emit(&table::render(&req, &rows)?, path.as_ref(), out)?;
        }
        Command::Verify { suite, bound, samples, seed, dim } => {
            if suite == "list" {
                for (name, about) in SUITES {
                    writeln!(out, "{name:21} {about}")?;
                }
                writeln!(out, "lattice names: {}", LATTICE_NAMES.join(", "))?;
                return Ok(());
            }
            let report = suites::run(&suite, &SuiteParams { bound, samples, seed, dim })?;
            out.write_all(report.render().as_bytes())?;
            if !report.passed() {
                return Err(CliError::ChecksFailed(report.failed_checks()));
            }
        }
        Command::ClosureSearch { parent, sub, bound, out: path } => {
            let report = closure::search(&resolve_lattice(&parent)?, &resolve_lattice(&sub)?, bound)?;
            let mut bytes = serde_json::to_vec_pretty(&report)?;
            bytes.push(b'\n');
            emit(&bytes, path.as_ref(), out)?;
        }
    }
    Ok(())
}
