use std::process::ExitCode;

use hyperpi_cli::{parse_args, run, CliError};

fn main() -> ExitCode {
    let result = parse_args(std::env::args_os()).and_then(|config| run(&config, &mut std::io::stdout().lock()));
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(CliError::Info(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hyperpi: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
