use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use boxkite_cli::verify::Section;
use boxkite_cli::{emit, verify, CliError, Format, RenderSpec, Result, StrutSelection, Target};
use boxkite_core::Strut;
use clap::{Parser, Subcommand};

/// Box-kites, lariats and emanation tables of the Cayley-Dickson algebras.
#[derive(Debug, Parser)]
#[command(name = "boxkite", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render one structure as a table or graph.
    Emit {
        /// strut-table, box-kite, yard, mock, quizzical, sync-table, pathion,
        /// census, tripsync or zd-graph
        target: Target,
        /// Algebra dimension 2^n (16, 32, 64, ...).
        #[arg(long)]
        dim: Option<u64>,
        /// Strut constant: a value, a range `a-b`, a comma list, or `all`.
        #[arg(long)]
        strut: Option<StrutSelection>,
        /// Strut pair for `mock`: A-F, B-E or C-D.
        #[arg(long, value_parser = parse_pair)]
        pair: Option<Strut>,
        /// Which box-kite (1-based, search order) for `box-kite` above 16 dimensions.
        #[arg(long)]
        kite: Option<usize>,
        /// md, csv, json or dot.
        #[arg(long, default_value = "md")]
        format: Format,
        /// Output file; `-` or absent writes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check computed structures against the embedded reference tables.
    Verify {
        /// `all` or a comma list of section names.
        #[arg(long, default_value = "all", value_parser = Section::parse_list)]
        sections: ::std::vec::Vec<Section>,
        /// md, csv or json.
        #[arg(long, default_value = "md")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_pair(text: &str) -> std::result::Result<Strut, String> {
    Strut::parse(text).ok_or_else(|| format!("unknown strut pair {text:?} (A-F, B-E, C-D)"))
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) if path.as_os_str() != "-" => fs::write(path, text)?,
        _ => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Emit { target, dim, strut, pair, kite, format, out } => {
            let spec = RenderSpec { target, format, dim, struts: strut, pair, kite };
            write_out(out.as_ref(), &emit(&spec)?)?;
            Ok(0)
        }
        Command::Verify { sections, format, out } => {
            let report = verify(&sections)?;
            write_out(out.as_ref(), &report.render(format)?)?;
            let s = &report.summary;
            eprintln!("{} checks: {} pass, {} fail, {} flagged", s.checks, s.pass, s.fail, s.flagged);
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                other => other.exit_code(),
            })
        }
    }
}
