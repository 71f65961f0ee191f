mod args;
mod commands;
mod source;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

fn run(cli: Cli) -> anyhow::Result<u8> {
    let c = &cli.common;
    if let Some(n) = c.workers {
        rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global()?;
    }
    match cli.command {
        Command::Compute { ref source, r } => commands::compute(c, source, r),
        Command::Sweep { t_max, max_graphs } => commands::run_sweep(c, t_max, max_graphs),
        Command::VerifyConfig { ref family, t, i, a } => commands::verify_config(c, family, t, i, a),
        Command::Enumerate { t, m, list } => commands::enumerate(c, t, m, list),
        Command::Check { t, m, a, max_graphs } => commands::check(c, t, m, a, max_graphs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
