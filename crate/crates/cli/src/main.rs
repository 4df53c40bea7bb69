mod args;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use convexity::Budget;

use args::Cli;
use input::Inputs;
use report::{render, Context};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };

    let mut inputs = Inputs::default();
    let mut budget = Budget::new(cli.budget);
    let start = Instant::now();
    let outcome = commands::execute(&cli.command, cli.seed, &mut inputs, &mut budget);
    let ctx = Context {
        verb: cli.command.verb(),
        seed: cli.seed,
        inputs: &inputs,
        budget: &budget,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
    };
    let (report, code) = match &outcome {
        Ok(result) => (ctx.success(result.clone()), 0),
        Err(err) => {
            eprintln!(
                "error: {}",
                ctx.failure(err)["error"]["message"]
                    .as_str()
                    .unwrap_or_default()
            );
            (ctx.failure(err), err.exit_code())
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(render(&report, cli.format).as_bytes())
        .is_err()
    {
        return ExitCode::from(74);
    }
    ExitCode::from(code)
}
