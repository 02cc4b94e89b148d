use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use latk::io::{parse_input, run, write_report, Goals, Outcome, RunConfig};
use latk::Error;

/// Hilbert bases, Hilbert series and related invariants of rational cones
/// and polyhedra.
#[derive(Parser, Debug)]
#[command(name = "latk", version)]
struct Cli {
    /// Input file.
    input: PathBuf,
    /// Output file; defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    hilbert_basis: bool,
    #[arg(long)]
    hilbert_series: bool,
    /// Hilbert series over the degrees of a homogeneous system of parameters.
    #[arg(long)]
    hsop: bool,
    #[arg(long)]
    class_group: bool,
    /// Generators of the integral closure over the monoid of the input cone generators.
    #[arg(long)]
    module_generators: bool,
    #[arg(long)]
    triangulation: bool,
    /// Force the bottom decomposition.
    #[arg(short = 'b', long)]
    bottom: bool,
    /// Worker threads; all cores by default.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    verbose: bool,
    #[arg(long, hide = true)]
    force_quotient: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::EmptyLattice | Error::EmptyModule => 3,
        Error::Arithmetic(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| {
        let text = std::fs::read_to_string(&cli.input)?;
        let input = parse_input(&text)?;
        let cfg = RunConfig {
            goals: Goals {
                hilbert_basis: cli.hilbert_basis,
                hilbert_series: cli.hilbert_series,
                hsop: cli.hsop,
                class_group: cli.class_group,
                module_generators: cli.module_generators,
                triangulation: cli.triangulation,
            },
            bottom: cli.bottom,
            verbose: cli.verbose,
            threads: cli.threads,
            force_quotient: cli.force_quotient,
        };
        let report = run(&input, &cfg)?;
        let text = write_report(&report);
        match &cli.out {
            Some(p) => std::fs::write(p, &text)?,
            None => print!("{text}"),
        }
        Ok::<_, Error>(report.outcome)
    })();
    match result {
        Ok(Outcome::Complete) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(3),
        Err(e) => {
            eprintln!("latk: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
