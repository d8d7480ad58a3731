use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(&cli, &mut out, &mut io::stderr());
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code as u8)
}
