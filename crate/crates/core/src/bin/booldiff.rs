use std::io::Write;
use std::process::ExitCode;

use booldiff::cli::{run, Cli, CliConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = CliConfig::from_env().and_then(|cfg| run(&cli, &cfg));
    match result {
        Ok(Some(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("booldiff: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
