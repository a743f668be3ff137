use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_output = std::env::var(qforms::cli::OUTPUT_ENV).ok();
    let code = qforms::cli::run(
        std::env::args_os(),
        env_output.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
