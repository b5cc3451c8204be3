use std::process::ExitCode;

fn main() -> ExitCode {
    liecoh::cli::main_entry()
}
