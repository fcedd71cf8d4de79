use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use monoidrep_cli::{configure_threads, render_text, report, run, Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();
    let start = Instant::now();
    let result = match run(&cli.command) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("monoidrep {}: {}", cli.command.name(), e.message);
            return ExitCode::from(e.code as u8);
        }
    };
    let rep = report(&cli.command, result, cli.timing.then(|| start.elapsed().as_millis()));
    let mut text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&rep).expect("serializable"),
        Format::Text => render_text(&rep),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("monoidrep: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    ExitCode::SUCCESS
}
