use std::process::ExitCode;

use cherednik_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let doc = if cli.opts.json {
        report.to_json() + "\n"
    } else {
        report.to_string()
    };
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{doc}"),
    }
    ExitCode::from(report.exit_code())
}
