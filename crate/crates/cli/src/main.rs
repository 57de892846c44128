mod args;
mod commands;
mod output;

use clap::Parser;

use args::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    let threads = match &cli.command {
        Command::Bounds(a) => a.common.threads,
        Command::Sphere(a) => a.common.threads,
        Command::Asym(a) => a.common.threads,
        Command::Construct(a) => a.common.threads,
        Command::Color(a) => a.common.threads,
        Command::Verify(a) => a.common.threads,
    };
    if threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let result = match &cli.command {
        Command::Bounds(a) => commands::bounds(a),
        Command::Sphere(a) => commands::sphere(a),
        Command::Asym(a) => commands::asym(a),
        Command::Construct(a) => commands::construct(a),
        Command::Color(a) => commands::color(a),
        Command::Verify(a) => commands::verify(a),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            f.code
        }
    };
    std::process::exit(code);
}
