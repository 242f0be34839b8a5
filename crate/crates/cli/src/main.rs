use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = capax_cli::run(std::env::args_os());
    let text = outcome.output.trim_end();
    // A closed pipe is not an error worth reporting.
    let _ = if outcome.stderr {
        writeln!(std::io::stderr(), "{text}")
    } else {
        writeln!(std::io::stdout(), "{text}")
    };
    ExitCode::from(outcome.exit_code as u8)
}
