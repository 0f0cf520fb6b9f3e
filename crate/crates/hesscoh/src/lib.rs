//! The `hesscoh` command-line tool.

mod args;
mod commands;
mod request;

use clap::Parser;
use serde_json::json;

pub use args::{Cli, Command, PetersonCommand};
pub use commands::{execute, ExecError, Report};
pub use request::{validate, weyl_order, InputError, Request, LARGE_N};

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Sets up the global thread pool from `HESSCOH_THREADS`.
fn configure_threads() -> Result<(), InputError> {
    let value = std::env::var("HESSCOH_THREADS").ok();
    if let Some(k) = request::threads(value.as_deref())? {
        // a pool built earlier in the same process is kept
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let failure = |code: i32, kind: &str, message: String, command: &str| {
        let stdout = if cli.json {
            let doc = json!({"schema_version": 1, "command": command, "error": {"kind": kind, "message": message}});
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default())
        } else {
            String::new()
        };
        Outcome { code, stdout, stderr: format!("error: {message}\n") }
    };
    if let Err(e) = configure_threads() {
        return failure(2, e.constraint, e.to_string(), "");
    }
    let req = match validate(&cli.command) {
        Ok(r) => r,
        Err(e) => return failure(2, e.constraint, e.to_string(), ""),
    };
    let report = match execute(&req) {
        Ok(r) => r,
        Err(e) => return failure(1, "computation", e.to_string(), req.name()),
    };
    let code = if report.passed { 0 } else { 1 };
    let stdout = if cli.json {
        let doc = json!({
            "schema_version": 1,
            "command": req.name(),
            "result": report.json,
            "passed": report.passed,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default())
    } else {
        report.text
    };
    Outcome { code, stdout, stderr: String::new() }
}
