mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;
use output::Exit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage as u8 } else { Exit::Ok as u8 });
        }
    };
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: worker pool: {e}");
            return ExitCode::from(Exit::Usage as u8);
        }
    }
    let config = json!({
        "args": &cli,
        "workers": rayon::current_num_threads(),
        "version": env!("CARGO_PKG_VERSION"),
    });
    let rendered = commands::run(&cli.command, cli.guard).and_then(|r| Ok((r.render(cli.format, &config)?, r.exit)));
    match rendered {
        Ok((out, exit)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(Exit::Usage as u8);
            }
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Exit::Usage as u8)
        }
    }
}
