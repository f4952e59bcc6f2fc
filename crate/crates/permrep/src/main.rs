//! Thin binary entry point; all logic lives in the library's `cli`
//! module.

use std::process::ExitCode;

fn main() -> ExitCode {
    permrep::cli::main_entry()
}
