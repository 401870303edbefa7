use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gammamin::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match gammamin::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe downstream is not our failure
            let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
