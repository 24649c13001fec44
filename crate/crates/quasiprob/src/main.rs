use std::process::ExitCode;

use clap::Parser;
use quasiprob::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.format == Format::Structured {
                let doc = serde_json::json!({
                    "error": e.name(),
                    "message": e.to_string(),
                    "hint": e.hint(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
            }
            eprintln!("error: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
