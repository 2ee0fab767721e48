use clap::Parser;
use kneserlab::cli::{run, CliArgs};

fn main() {
    let args = CliArgs::parse();
    std::process::exit(run(&args));
}
