use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use p6c4_cli::{run, Cli};

/// Decomposition recurses once per tree level; give it room on big inputs.
const STACK_SIZE: usize = 512 * 1024 * 1024;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let worker = std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(move || run(&cli))
        .expect("spawn worker thread");
    let result = match worker.join() {
        Ok(result) => result,
        Err(_) => {
            eprintln!("error: internal invariant failure: worker panicked");
            return ExitCode::from(2);
        }
    };
    match result {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
