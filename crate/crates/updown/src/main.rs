use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(updown::cli::run(std::env::args()) as u8)
}
