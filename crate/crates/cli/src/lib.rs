//! Command-line front end for `frobenius-core`.
//!
//! [`run`] parses arguments, dispatches to a subcommand and maps the
//! outcome to an exit status: 0 on success, 1 on usage or validation
//! errors, 2 when `--strict` is set and two methods disagree.

pub mod args;
pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{Output, Quantity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let result = dispatch(&cli);
    let output = match result {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let written = match &cli.common.output {
        Some(path) => std::fs::write(path, &output.body)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(output.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }

    if output.disagreement {
        let _ = writeln!(err, "warning: at least one cross-check disagreed");
        if cli.common.strict {
            return EXIT_DISAGREE;
        }
    }
    EXIT_OK
}

fn dispatch(cli: &Cli) -> Result<Output, String> {
    let limits = cli.common.limits();
    let format = cli.common.format;
    match &cli.command {
        Command::Apery { gens, x } => commands::apery(gens, x.as_ref(), format, &limits),
        Command::Frobenius(v) => commands::value(v, Quantity::Frobenius, format, &limits),
        Command::Genus(v) => commands::value(v, Quantity::Genus, format, &limits),
        Command::Gaps { gens } => commands::gaps(gens, format, &limits),
        Command::Minimal { gens } => commands::minimal(gens, format, &limits),
        Command::Table(g) => commands::table(g, format, &limits),
        Command::Verify(g) => commands::verify(g, format, &limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("frobenius").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["apery", "--gens", "7,11,13"]).0, EXIT_OK);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["apery", "--gens", "4,6"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        let args = [
            "verify",
            "--family",
            "thabit-second-kind",
            "--b",
            "2",
            "--n",
            "2",
        ];
        assert_eq!(call(&args).0, EXIT_OK);
        let strict: Vec<&str> = args.iter().copied().chain(["--strict"]).collect();
        assert_eq!(call(&strict).0, EXIT_DISAGREE);
    }

    #[test]
    fn errors_go_to_stderr() {
        let (code, out, err) = call(&["apery", "--gens", "7,11,13", "--x", "8"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.starts_with("error:"), "{err}");
    }

    #[test]
    fn residue_cap_is_reported() {
        let (code, _, err) = call(&["apery", "--gens", "1000,1001", "--max-residues", "10"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("10"), "{err}");
    }
}
