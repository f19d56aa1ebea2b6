use std::process::ExitCode;

fn main() -> ExitCode {
    let code = moonshine::cli::run_cli(std::env::args_os());
    ExitCode::from(code)
}
