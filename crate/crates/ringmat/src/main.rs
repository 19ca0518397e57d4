use std::io::{self, Write};
use std::process::exit;

use clap::Parser;

fn main() {
    let cli = ringmat::cli::Cli::parse();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = ringmat::cli::run(cli, &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    exit(code);
}
