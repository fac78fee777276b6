//! Argument parsing and the four subcommands, returning text rather than
//! printing so the whole tool can be driven in-process.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ordloc::Flavour;
use serde_json::{json, Value};

use crate::check::{run_law, Law};
use crate::doc::load_document;
use crate::dot::{render, View};
use crate::error::{CliError, CliResult};
use crate::functor::{apply, Direction};
use crate::roundtrip;

#[derive(Debug, Parser)]
#[command(name = "ordloc", version, about = "Laws, functors and dualities for finite ordered spaces and ordered locales")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_flavour(s: &str) -> Result<Flavour, String> {
    Flavour::parse(s).ok_or_else(|| format!("unknown flavour {s:?}, expected em, upper or lower"))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check laws on a document, or on every .json file in a directory.
    Check {
        path: PathBuf,
        /// Law to check; may be repeated.
        #[arg(long = "law", value_enum, conflicts_with = "all")]
        laws: Vec<Law>,
        /// Check every law that applies to the document's kind.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "em", value_parser = parse_flavour)]
        flavour: Flavour,
    },
    /// Apply the opens functor `o` or the points functor `pt`.
    Functor {
        #[arg(value_enum)]
        direction: Direction,
        path: PathBuf,
        #[arg(long, default_value = "em", value_parser = parse_flavour)]
        flavour: Flavour,
        /// Write the result here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a document is a fixed point of its round trip.
    Roundtrip {
        path: PathBuf,
        #[arg(long, default_value = "em", value_parser = parse_flavour)]
        flavour: Flavour,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Emit a Graphviz diagram.
    Dot {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "hasse")]
        what: View,
        #[arg(long, default_value = "em", value_parser = parse_flavour)]
        flavour: Flavour,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failed(err: &CliError) -> Self {
        Outcome {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let result = match cli.command {
        Command::Check { path, laws, all, flavour } => return check(&path, &laws, all, flavour),
        Command::Functor { direction, path, flavour, out } => functor(&path, direction, flavour, out.as_deref()),
        Command::Roundtrip { path, flavour, json } => roundtrip_cmd(&path, flavour, json),
        Command::Dot { path, what, flavour } => load_document(&path)
            .and_then(|p| render(&p.doc, what, flavour))
            .map(|stdout| Outcome { stdout, ..Outcome::default() }),
    };
    result.unwrap_or_else(|e| Outcome::failed(&e))
}

fn notes_to_stderr(notes: &[String]) -> String {
    notes.iter().map(|n| format!("note: {n}\n")).collect()
}

fn functor(path: &Path, direction: Direction, flavour: Flavour, out: Option<&Path>) -> CliResult<Outcome> {
    let parsed = load_document(path)?;
    let text = apply(&parsed.doc, direction, flavour)?.to_canonical_string();
    let stderr = notes_to_stderr(&parsed.notes);
    match out {
        Some(target) => {
            std::fs::write(target, text).map_err(|e| CliError::Io {
                path: target.display().to_string(),
                message: e.to_string(),
            })?;
            Ok(Outcome { stderr, ..Outcome::default() })
        }
        None => Ok(Outcome { code: 0, stdout: text, stderr }),
    }
}

fn roundtrip_cmd(path: &Path, flavour: Flavour, as_json: bool) -> CliResult<Outcome> {
    let parsed = load_document(path)?;
    let report = roundtrip::run(&parsed.doc, flavour)?;
    let stdout = if as_json {
        let mut s = serde_json::to_string_pretty(&report.to_json()).expect("values serialize");
        s.push('\n');
        s
    } else {
        report.to_lines().into_iter().map(|l| l + "\n").collect()
    };
    Ok(Outcome { code: 0, stdout, stderr: notes_to_stderr(&parsed.notes) })
}

/// `.json` files directly inside `dir`, sorted by name.
fn json_files(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let io = |e: std::io::Error| CliError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.is_file() && p.extension().is_some_and(|e| e == "json") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

/// One file's report and exit code.
fn check_file(path: &Path, laws: &[Law], all: bool, flavour: Flavour) -> (Value, i32) {
    let file = path.display().to_string();
    let failed = |e: CliError| (json!({"file": file, "ok": false, "error": e.to_json()}), e.exit_code());
    let parsed = match load_document(path) {
        Ok(p) => p,
        Err(e) => return failed(e),
    };
    let kind = parsed.doc.kind();
    let chosen: Vec<Law> = if all { Law::applicable(kind).to_vec() } else { laws.to_vec() };
    let mut verdicts = Vec::new();
    for law in chosen {
        match run_law(&parsed.doc, law, flavour) {
            Some(v) => verdicts.push(v),
            None => return failed(CliError::Usage(format!("law {law} does not apply to {kind} documents"))),
        }
    }
    let ok = verdicts.iter().all(|v| v.holds);
    let report = json!({
        "file": file,
        "kind": kind,
        "flavour": flavour.name(),
        "ok": ok,
        "laws": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        "notes": parsed.notes,
    });
    (report, if ok { 0 } else { 1 })
}

fn check(path: &Path, laws: &[Law], all: bool, flavour: Flavour) -> Outcome {
    if laws.is_empty() && !all {
        return Outcome::failed(&CliError::Usage("give at least one --law, or --all".into()));
    }
    let (report, code) = if path.is_dir() {
        let files = match json_files(path) {
            Ok(f) => f,
            Err(e) => return Outcome::failed(&e),
        };
        let results: Vec<(Value, i32)> = files.iter().map(|f| check_file(f, laws, all, flavour)).collect();
        // a usage or parse problem outranks a failed law
        let code = results.iter().map(|r| r.1).max().unwrap_or(0);
        let ok = code == 0;
        let reports: Vec<Value> = results.into_iter().map(|r| r.0).collect();
        (json!({"ok": ok, "reports": reports}), code)
    } else {
        check_file(path, laws, all, flavour)
    };
    let mut stdout = serde_json::to_string_pretty(&report).expect("values serialize");
    stdout.push('\n');
    let stderr = match code {
        0 => String::new(),
        1 => "some laws failed\n".to_string(),
        _ => "some documents could not be checked\n".to_string(),
    };
    Outcome { code, stdout, stderr }
}
