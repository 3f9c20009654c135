// Copyright 2026 the Bessrad Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

use clap::Parser;

fn main() {
    let cli = bessrad_cli::Cli::parse();
    let outcome = bessrad_cli::run(cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.exit);
}
