//! `promaton` command-line front end. Reports are JSON; exit status is 0
//! on success, 1 when a verification fails, 2 on usage errors, 3 when a
//! resource cap is hit, 4 on malformed input files and 5 otherwise.

mod args;
mod run;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: cannot configure {jobs} workers: {e}");
            return ExitCode::from(5);
        }
    }
    let outcome = run::run(&cli).and_then(|o| Ok((run::render(&o.json)?, o.success)));
    match outcome {
        Ok((text, success)) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(5);
            }
            ExitCode::from(if success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(run::exit_code(&e) as u8)
        }
    }
}
