use std::process::ExitCode;

use clap::Parser;

use c123_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdin.lock(), &mut stdout.lock()) {
        Ok(answer) => ExitCode::from(answer.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
