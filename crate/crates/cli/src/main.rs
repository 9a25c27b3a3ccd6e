use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use edcf::app::{execute, exit_code_for, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // Help and version requests are not configuration errors.
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match execute(&cli, &args, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
