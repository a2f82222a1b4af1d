use clap::{Parser, ValueEnum};
use defectforms::cli::{parse_scenario, run, Command, Options};
use defectforms::defects::Suite;
use std::io::ErrorKind;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Identities,
    Decompose,
    Defects,
    Continuity,
    Holonomy,
    All,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Identities => Command::Identities,
            Cmd::Decompose => Command::Decompose,
            Cmd::Defects => Command::Defects,
            Cmd::Continuity => Command::Continuity,
            Cmd::Holonomy => Command::Holonomy,
            Cmd::All => Command::All,
        }
    }
}

/// Exact verification of defect-density identities on a scenario file.
///
/// Exit status: 0 when no claim fails, 1 when any claim fails (or reports,
/// with --strict-report), 2 on usage, I/O or scenario errors.
#[derive(Parser, Debug)]
#[command(name = "defectforms", version)]
struct Cli {
    command: Cmd,
    scenario: String,
    /// Claim-registry suites for `continuity`, comma separated
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// Zero-test seed; overrides the scenario's
    #[arg(long)]
    seed: Option<u64>,
    /// Zero-test sample points; overrides the scenario's
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Treat REPORT as failure
    #[arg(long)]
    strict_report: bool,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut suites = Vec::new();
    for s in &cli.suite {
        match Suite::from_name(s) {
            Some(x) => suites.push(x),
            None => {
                let names: Vec<_> = defectforms::defects::SUITES.iter().map(|s| s.name()).collect();
                return fail(format!("unknown suite `{s}` (expected one of {})", names.join(", ")));
            }
        }
    }
    let text = match std::fs::read_to_string(&cli.scenario) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return fail(format!("file not found: {}", cli.scenario)),
        Err(e) => return fail(format!("{}: {e}", cli.scenario)),
    };
    let mut sc = match parse_scenario(&text) {
        Ok(sc) => sc,
        Err(e) => return fail(format!("{}: {e}", cli.scenario)),
    };
    if let Some(seed) = cli.seed {
        sc.zero.seed = seed;
    }
    if let Some(points) = cli.points {
        sc.zero.num_points = points;
    }
    if let Err(e) = sc.zero.validate() {
        return fail(e);
    }
    let opts = Options { suites, strict_report: cli.strict_report };
    let report = match run(cli.command.into(), &sc, &cli.scenario, &opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    print!("{}", if cli.json { report.json() } else { report.text() });
    ExitCode::from(report.exit_code(opts.strict_report) as u8)
}
