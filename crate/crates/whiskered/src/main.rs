//! Command-line driver: validate documents, run the identity check suites,
//! print commutator tables and brackets, and generate family documents.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use whiskered::commutator::commutator;
use whiskered::constructions;
use whiskered::core::MorId;
use whiskered::io::{self, Loaded};
use whiskered::linear::{linearize, render_formal_sum};
use whiskered::report::{run_checks, CheckBudget, Suite};

#[derive(Parser)]
#[command(name = "whiskered", version, about = "finite whiskered categories and groupoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure document; exit 0 iff every law holds.
    Validate { path: PathBuf },
    /// Run an identity check suite and print the identities report.
    Check {
        path: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the commutator table [a,b] for all morphism pairs.
    Commutators {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the bracket of two basis morphisms in the linearization.
    Bracket {
        path: PathBuf,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a family document to standard output.
    Generate {
        family: String,
        parameters: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Loaded, String> {
    io::load(path).map_err(|e| e.to_string())
}

/// Writes to stdout; a closed pipe (downstream stopped reading) just ends
/// the output.
fn emit(text: &str) -> bool {
    use std::io::Write;
    std::io::stdout().lock().write_all(text.as_bytes()).is_ok()
}

/// Resolves a morphism identifier: a declared name, `m<index>`, or a bare
/// index.
fn resolve_morphism(loaded: &Loaded, ident: &str) -> Result<MorId, String> {
    if let Some(names) = &loaded.document.morphism_names {
        if let Some(i) = names.iter().position(|n| n == ident) {
            return Ok(MorId(i as u32));
        }
    }
    let digits = ident.strip_prefix('m').unwrap_or(ident);
    let count = loaded.document.morphisms.len() as u32;
    match digits.parse::<u32>() {
        Ok(i) if i < count => Ok(MorId(i)),
        _ => Err(format!("unknown morphism identifier {ident:?}")),
    }
}

fn morphism_name(loaded: &Loaded, m: MorId) -> String {
    match &loaded.document.morphism_names {
        Some(names) => names[m.0 as usize].clone(),
        None => m.to_string(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { path } => match io::load(&path) {
            Ok(loaded) => {
                println!("ok: {} ({})", loaded.document.kind, loaded.fingerprint);
                Ok(ExitCode::SUCCESS)
            }
            Err(io::LoadError::Invalid { report }) => {
                print!("{report}");
                Ok(ExitCode::FAILURE)
            }
            Err(other) => Err(other.to_string()),
        },
        Command::Check { path, suite, format } => {
            let suite: Suite = suite.parse()?;
            let loaded = load(&path)?;
            let report =
                run_checks(&loaded.structure, suite, &loaded.fingerprint, CheckBudget::default());
            match format {
                Format::Text => emit(&report.to_text()),
                Format::Json => emit(&report.to_json()),
            };
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Commutators { path, format } => {
            let loaded = load(&path)?;
            let w = loaded
                .structure
                .whiskered()
                .ok_or("commutator tables need a whiskered structure")?;
            if w.groupoid().is_none() {
                return Err("commutator tables need a groupoid base".to_string());
            }
            let c = w.category();
            let mut rows = Vec::new();
            for a in c.morphisms() {
                for b in c.morphisms() {
                    let k = commutator(w, a, b).expect("groupoid base");
                    rows.push((
                        morphism_name(&loaded, a),
                        morphism_name(&loaded, b),
                        morphism_name(&loaded, k),
                    ));
                }
            }
            match format {
                Format::Text => {
                    for (a, b, k) in rows {
                        if !emit(&format!("[{a},{b}] = {k}\n")) {
                            break;
                        }
                    }
                }
                Format::Json => {
                    let table: Vec<serde_json::Value> = rows
                        .into_iter()
                        .map(|(a, b, k)| serde_json::json!({"a": a, "b": b, "commutator": k}))
                        .collect();
                    let doc = serde_json::to_string_pretty(&serde_json::json!({
                        "fingerprint": loaded.fingerprint,
                        "commutators": table,
                    }))
                    .expect("serializes");
                    emit(&format!("{doc}\n"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bracket { path, a, b, format } => {
            let loaded = load(&path)?;
            let w = loaded
                .structure
                .whiskered()
                .ok_or("brackets need a whiskered structure")?;
            let alg = linearize(w);
            let ma = resolve_morphism(&loaded, &a)?;
            let mb = resolve_morphism(&loaded, &b)?;
            let bracket = alg.bracket(&alg.basis(ma), &alg.basis(mb));
            let names = loaded.document.morphism_names.clone();
            let rendered = render_formal_sum(&bracket, names.as_deref());
            match format {
                Format::Text => println!("{rendered}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "fingerprint": loaded.fingerprint,
                        "a": a,
                        "b": b,
                        "bracket": rendered,
                    }))
                    .expect("serializes")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, parameters } => {
            let params: Vec<&str> = parameters.iter().map(String::as_str).collect();
            let inst = constructions::instance(&family, &params).map_err(|e| e.to_string())?;
            emit(&io::render(&io::document_of_instance(&inst)));
            Ok(ExitCode::SUCCESS)
        }
    }
}
