//! The `rlp` command-line tool.
//!
//! Byte strings travel as hex (`0x` optional in, lowercase `0x` out) and
//! trees as the textual notation from [`crate::treetext`]. Every subcommand
//! reads from `--input FILE` if given, else from its positional argument,
//! else from stdin, and writes results to stdout unless `--output FILE`
//! redirects them.
//!
//! Exit codes tell the four outcomes apart:
//!
//! - 0: success;
//! - 1: the input was readable but rejected — an invalid encoding, or a
//!   conformance run with failing cases;
//! - 2: the input itself was unusable — bad hex digits, bad JSON,
//!   unreadable files, usage errors;
//! - 3: encoding was impossible because a payload reached 2^64 bytes.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rlp_core::{decode_tree, encode_tree, parse_tree, RlpError};

use crate::conformance::{report_path_for, run_suite, CaseResult};
use crate::hexstr::{format_hex, parse_hex};
use crate::treetext::{format_tree_text, parse_tree_text};

const EXIT_OK: i32 = 0;
const EXIT_REJECTED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_UNENCODABLE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "rlp",
    version,
    about = "Strict RLP codec: encode, decode, validate, and run conformance suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode tree text (JSON: "0x.." / "#.." strings and arrays) to hex
    Encode(IoArgs),
    /// Decode hex holding exactly one complete encoding to tree text
    Decode(IoArgs),
    /// Parse one tree off the front of hex input, reporting the rest
    Parse(IoArgs),
    /// Report whether hex input is a valid encoding
    Check(IoArgs),
    /// Run a JSON conformance suite and write a report next to it
    Conformance(ConformanceArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input text; omit it (and --input) to read stdin
    value: Option<String>,
    /// Read input from this file instead of the argument or stdin
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ConformanceArgs {
    /// The suite file to run
    suite: PathBuf,
    /// Write the JSON report here instead of next to the suite
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
}

/// Parses arguments from the environment and runs to an exit code.
pub fn run() -> i32 {
    match Cli::parse().command {
        Command::Encode(args) => cmd_encode(&args),
        Command::Decode(args) => cmd_decode(&args),
        Command::Parse(args) => cmd_parse(&args),
        Command::Check(args) => cmd_check(&args),
        Command::Conformance(args) => cmd_conformance(&args),
    }
}

fn cmd_encode(args: &IoArgs) -> i32 {
    let Some(text) = read_input(args) else { return EXIT_USAGE };
    let tree = match parse_tree_text(text.trim()) {
        Ok(tree) => tree,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    match encode_tree(&tree) {
        Ok(encoding) => write_output(args, &format_hex(&encoding)),
        Err(err @ RlpError::InputTooLong { .. }) => {
            eprintln!("error: {err}");
            EXIT_UNENCODABLE
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_REJECTED
        }
    }
}

fn cmd_decode(args: &IoArgs) -> i32 {
    let Some(encoding) = read_hex_input(args) else { return EXIT_USAGE };
    match decode_tree(&encoding) {
        Ok(tree) => write_output(args, &format_tree_text(&tree)),
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_REJECTED
        }
    }
}

fn cmd_parse(args: &IoArgs) -> i32 {
    let Some(input) = read_hex_input(args) else { return EXIT_USAGE };
    match parse_tree(&input) {
        Ok(parsed) => {
            let lines = format!(
                "tree: {}\nrest: {}",
                format_tree_text(&parsed.tree),
                format_hex(parsed.rest)
            );
            write_output(args, &lines)
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_REJECTED
        }
    }
}

fn cmd_check(args: &IoArgs) -> i32 {
    let Some(encoding) = read_hex_input(args) else { return EXIT_USAGE };
    match decode_tree(&encoding) {
        Ok(_) => write_output(args, "valid"),
        Err(err) => {
            let written = write_output(args, &format!("invalid: {err}"));
            if written == EXIT_OK {
                EXIT_REJECTED
            } else {
                written
            }
        }
    }
}

fn cmd_conformance(args: &ConformanceArgs) -> i32 {
    let report = match run_suite(&args.suite) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    for case in &report.cases {
        if case.is_pass() {
            println!("PASS {}", case.name);
        } else {
            println!("FAIL {}: {}", case.name, failure_detail(case));
        }
    }
    println!("{} cases: {} passed, {} failed", report.total, report.passed, report.failed);

    let report_path = args.report.clone().unwrap_or_else(|| report_path_for(&args.suite));
    if let Err(err) = fs::write(&report_path, report.to_json()) {
        eprintln!("error: cannot write report {}: {err}", report_path.display());
        return EXIT_USAGE;
    }
    eprintln!("report written to {}", report_path.display());

    if report.failed == 0 {
        EXIT_OK
    } else {
        EXIT_REJECTED
    }
}

fn failure_detail(case: &CaseResult) -> String {
    let mut parts = Vec::new();
    if let Some(error) = &case.error {
        parts.push(error.clone());
    }
    if let Some(expected) = &case.expected {
        parts.push(format!("expected {expected}"));
    }
    if let Some(actual) = &case.actual {
        parts.push(format!("got {actual}"));
    }
    parts.join("; ")
}

/// Reads per the precedence `--input` file, positional value, stdin.
/// Reports and returns `None` on IO failure.
fn read_input(args: &IoArgs) -> Option<String> {
    if let Some(path) = &args.input {
        return match fs::read_to_string(path) {
            Ok(text) => Some(text),
            Err(err) => {
                eprintln!("error: cannot read {}: {err}", path.display());
                None
            }
        };
    }
    if let Some(value) = &args.value {
        return Some(value.clone());
    }
    let mut text = String::new();
    match std::io::stdin().read_to_string(&mut text) {
        Ok(_) => Some(text),
        Err(err) => {
            eprintln!("error: cannot read stdin: {err}");
            None
        }
    }
}

/// [`read_input`], then hex. `None` already reported, exit 2 territory.
fn read_hex_input(args: &IoArgs) -> Option<Vec<u8>> {
    let text = read_input(args)?;
    match parse_hex(text.trim()) {
        Ok(bytes) => Some(bytes),
        Err(err) => {
            eprintln!("error: {err}");
            None
        }
    }
}

fn write_output(args: &IoArgs, text: &str) -> i32 {
    match &args.output {
        Some(path) => {
            if let Err(err) = fs::write(path, format!("{text}\n")) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        None => {
            println!("{text}");
            EXIT_OK
        }
    }
}
