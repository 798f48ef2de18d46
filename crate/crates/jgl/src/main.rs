use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use jgl::cli::{command_echo, run, Cli, Outcome};

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let limit = match jgl::max_enum() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = match run(&cli, limit) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (text, code) = match outcome {
        Outcome::Report(mut o) => {
            if o.command.is_empty() {
                o.command = command_echo(&args);
            }
            let code = if o.passed() { 0 } else { 1 };
            (o.render(cli.report_format, Some(start.elapsed())), code)
        }
        Outcome::Document(v) => (serde_json::to_string(&v).expect("serializable") + "\n", 0),
        Outcome::Listing(s) => (s, 0),
    };
    if let Err(e) = emit(&text, cli.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
