use clap::Parser;
use trendpaa::harness::{run, Cli};

fn main() -> std::process::ExitCode {
    run(Cli::parse())
}
