use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use falsevac::report::{
    cmd_audit, cmd_kessence, cmd_landscape, cmd_profile, cmd_rates, cmd_slowroll, ReportError, RunConfig,
};

/// Tabulate the false-vacuum model and audit its quoted values.
#[derive(Parser)]
#[command(name = "falsevac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Potential and its derivatives (landscape.csv) plus the vacua (vacua.csv).
    Landscape(Common),
    /// Kink-antikink profile across the wall (profile.csv).
    Profile(Common),
    /// Equation of state and sound speeds across the wall (eos.csv).
    Kessence(Common),
    /// Slow-roll diagnostics at the stationary points and phi_star (slowroll.csv).
    Slowroll(Common),
    /// Nucleation rates and tunneling amplitudes (rates.csv).
    Rates(Common),
    /// Quoted values against their recomputation (audit.csv).
    Audit(Common),
}

#[derive(Args)]
struct Common {
    /// File of `key = value` lines.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Override one key; repeatable, applied after the config file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Output directory; overrides run.output_dir.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> Result<RunConfig, ReportError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path).map_err(|e| match e {
                ReportError::Io { path, source } => {
                    ReportError::Config(format!("cannot read {}: {source}", path.display()))
                }
                other => other,
            })?;
        }
        for assignment in &self.set {
            cfg.apply_assignment(assignment)?;
        }
        if let Some(out) = &self.out {
            cfg.output_dir = out.clone();
        }
        Ok(cfg)
    }
}

type Report = fn(&RunConfig) -> Result<Vec<PathBuf>, ReportError>;

fn run(command: Command) -> Result<Vec<PathBuf>, ReportError> {
    let (common, f): (_, Report) = match command {
        Command::Landscape(c) => (c, cmd_landscape),
        Command::Profile(c) => (c, cmd_profile),
        Command::Kessence(c) => (c, cmd_kessence),
        Command::Slowroll(c) => (c, cmd_slowroll),
        Command::Rates(c) => (c, cmd_rates),
        Command::Audit(c) => (c, cmd_audit),
    };
    f(&common.config()?)
}

fn main() -> ExitCode {
    let help = RunConfig::describe_keys();
    let command = Cli::command().mut_subcommands(|sc| sc.after_help(help.clone()));
    let cli = match command.try_get_matches().and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
