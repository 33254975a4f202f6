use clap::error::ErrorKind;
use clap::Parser;

use nnhier_cli::args::{Cli, Command};
use nnhier_cli::commands;

// Exit codes: 0 success, 2 I/O, 3 malformed data, 4 invalid flags.
fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 4,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Cluster(args) => commands::cmd_cluster(args),
        Command::BenchKstar(args) => commands::cmd_bench_kstar(args),
        Command::Scaling(args) => commands::cmd_scaling(args),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
