use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;
use wheeler_lcp_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            drop(out);
            eprintln!("wlcp: {f}");
            ExitCode::from(f.code)
        }
    }
}
