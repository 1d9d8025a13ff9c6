//! Command-line front end.
//!
//! One verb per library surface: `decompose` and `structure` for products
//! of simples, `tilting` for a single tilting module, `char` for raw
//! characters, `verify-corpus` for the shipped golden data, and `sweep`
//! for the exhaustive consistency suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 internal invariant violation.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sl2_tensor::render::{character_text, decomposition_text, diagram_dot, structure_text};
use sl2_tensor::{
    admissible_expansion, conservation_sweep, containment_sweep, decompose,
    enumerate_tilting_factorizations, factorization_sweep, indecomposability_sweep, load_corpus,
    roundtrip_sweep, simple_character, structure_sweep, tensor_with_L2, tensor_with_natural,
    tilting_character, tilting_soundness_sweep, verify_corpus, weyl_character,
    weyl_simplicity_sweep, Diagram, Error, FormalCharacter, Prime, Result, StructureCase,
    SweepOutcome, TiltingFactorizations, VerifyReport, Weight,
};

#[derive(Parser)]
#[command(
    name = "sl2-tensor",
    version,
    about = "Tensor products of simple SL2 modules in characteristic p"
)]
struct Cli {
    /// Prime characteristic.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose L(R) ⊗ L(S) into indecomposable summands.
    Decompose { r: Weight, s: Weight },

    /// Submodule structure of L(R) ⊗ L(OTHER) for OTHER = 1 or 2.
    Structure { r: Weight, other: Weight },

    /// Inspect the tilting module T(U).
    Tilting {
        #[command(subcommand)]
        action: TiltingAction,
    },

    /// Print one character as a Laurent polynomial.
    Char {
        r: Weight,
        #[arg(long, value_enum, default_value_t = CharKind::Simple)]
        kind: CharKind,
    },

    /// Recompute every entry of a JSONL corpus file and compare.
    VerifyCorpus { path: PathBuf },

    /// Run the exhaustive consistency sweeps.
    Sweep {
        /// Largest highest weight in the swept boxes.
        #[arg(long, default_value_t = 200)]
        max_weight: Weight,

        /// Primes to sweep, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 5, 7])]
        primes: Vec<u64>,

        /// Seed for the randomized round-trip suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TiltingAction {
    /// Print the admissible digit expansion of U.
    Expand { u: Weight },
    /// Print the character of T(U).
    Char { u: Weight },
    /// Enumerate the factorizations T(U) = L(r) ⊗ L(s).
    Factorize { u: Weight },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharKind {
    Simple,
    Weyl,
    Tilting,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::NotAModuleCharacter(_) | Error::Internal(_) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    let out = cli.out;
    match cli.command {
        Command::Decompose { r, s } => {
            let p = Prime::new(cli.p)?;
            let dec = decompose(r, s, p);
            let body = match format {
                Format::Text => decomposition_text(&dec),
                Format::Json => to_json(&dec)?,
                Format::Dot => return Err(no_dot("decompose")),
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Command::Structure { r, other } => {
            let p = Prime::new(cli.p)?;
            let report = match other {
                1 => tensor_with_natural(r, p),
                2 => tensor_with_L2(r, p)?,
                _ => {
                    return Err(Error::Unsupported(format!(
                        "structure reports cover tensoring with L(1) or L(2), not L({other})"
                    )))
                }
            };
            let body = match format {
                Format::Text => structure_text(&report),
                Format::Json => to_json(&report)?,
                Format::Dot => {
                    let diagram = report.diagram().or_else(|| match &report.case {
                        StructureCase::SimpleResult { weight } => {
                            Some(Diagram::uniserial(&[*weight]))
                        }
                        _ => None,
                    });
                    match diagram {
                        Some(d) => diagram_dot(&d),
                        None => {
                            return Err(Error::Unsupported(
                                "this product splits; render its summands separately".into(),
                            ))
                        }
                    }
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Command::Tilting { action } => {
            let p = Prime::new(cli.p)?;
            let body = match action {
                TiltingAction::Expand { u } => {
                    let exp = admissible_expansion(u, p);
                    match format {
                        Format::Text => {
                            let digits = exp
                                .digits()
                                .iter()
                                .map(|d| d.to_string())
                                .collect::<Vec<_>>()
                                .join(", ");
                            format!("{u} = [{digits}] (base {})", p.get())
                        }
                        Format::Json => to_json(&exp)?,
                        Format::Dot => return Err(no_dot("tilting expand")),
                    }
                }
                TiltingAction::Char { u } => {
                    character_body(&tilting_character(u, p), "tilting", u, Some(p), format)?
                }
                TiltingAction::Factorize { u } => {
                    let found = enumerate_tilting_factorizations(u, p);
                    match format {
                        Format::Text => factorizations_text(&found),
                        Format::Json => to_json(&found)?,
                        Format::Dot => return Err(no_dot("tilting factorize")),
                    }
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }
        Command::Char { r, kind } => {
            let (ch, name, p) = match kind {
                CharKind::Simple => {
                    let p = Prime::new(cli.p)?;
                    (simple_character(r, p), "simple", Some(p))
                }
                CharKind::Weyl => (weyl_character(r), "weyl", None),
                CharKind::Tilting => {
                    let p = Prime::new(cli.p)?;
                    (tilting_character(r, p), "tilting", Some(p))
                }
            };
            let body = character_body(&ch, name, r, p, format)?;
            emit(&out, &body)?;
            Ok(0)
        }
        Command::VerifyCorpus { path } => {
            let entries = load_corpus(&path)?;
            let report = verify_corpus(&entries);
            let body = match format {
                Format::Text => verify_text(&report),
                Format::Json => to_json(&report)?,
                Format::Dot => return Err(no_dot("verify-corpus")),
            };
            emit(&out, &body)?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Sweep {
            max_weight,
            primes,
            seed,
        } => {
            let outcomes = vec![
                conservation_sweep(&primes, max_weight)?,
                indecomposability_sweep(&primes, max_weight)?,
                tilting_soundness_sweep(&primes, max_weight)?,
                factorization_sweep(&primes, max_weight)?,
                structure_sweep(&primes)?,
                weyl_simplicity_sweep(&primes, 4)?,
                containment_sweep(&primes, max_weight)?,
                roundtrip_sweep(&primes, max_weight, 200, seed)?,
            ];
            let body = match format {
                Format::Text => sweeps_text(&outcomes),
                Format::Json => to_json(&outcomes)?,
                Format::Dot => return Err(no_dot("sweep")),
            };
            emit(&out, &body)?;
            Ok(if outcomes.iter().all(SweepOutcome::passed) {
                0
            } else {
                1
            })
        }
    }
}

fn no_dot(what: &str) -> Error {
    Error::Unsupported(format!("{what} has no DOT form; use --format text or json"))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Internal(format!("serialization: {e}")))
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Serialized form of one character: the weight it belongs to, the terms
/// as (exponent, coefficient) pairs in ascending exponent order, and the
/// dimension.
#[derive(Serialize)]
struct CharacterJson {
    kind: &'static str,
    weight: Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    dim: i64,
    terms: Vec<(i64, i64)>,
}

fn character_body(
    ch: &FormalCharacter,
    kind: &'static str,
    weight: Weight,
    p: Option<Prime>,
    format: Format,
) -> Result<String> {
    match format {
        Format::Text => Ok(character_text(ch)),
        Format::Json => to_json(&CharacterJson {
            kind,
            weight,
            p: p.map(Prime::get),
            dim: ch.dim(),
            terms: ch.terms().collect(),
        }),
        Format::Dot => Err(no_dot("char")),
    }
}

fn factorizations_text(found: &TiltingFactorizations) -> String {
    let mut out = String::new();
    for pair in &found.pairs {
        let _ = writeln!(out, "T({}) = L({}) ⊗ L({})", found.weight, pair.r, pair.s);
    }
    let _ = write!(
        out,
        "{} unordered, {} ordered",
        found.unordered_count(),
        found.ordered_count
    );
    if let Some(n) = found.predicted_unordered {
        let _ = write!(out, "; predicted unordered {n}");
    }
    if let Some(n) = found.predicted_ordered {
        let _ = write!(out, "; predicted ordered {n}");
    }
    out
}

fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for failure in &report.failures {
        let _ = writeln!(
            out,
            "line {} ({}): {}",
            failure.line, failure.source, failure.detail
        );
    }
    let _ = write!(out, "{} of {} entries pass", report.passed, report.total);
    out
}

fn sweeps_text(outcomes: &[SweepOutcome]) -> String {
    let mut out = String::new();
    for outcome in outcomes {
        let _ = writeln!(
            out,
            "{}: {} checks, {} mismatches ({} ms)",
            outcome.label,
            outcome.cases,
            outcome.mismatches.len(),
            outcome.elapsed_ms
        );
        for line in &outcome.mismatches {
            let _ = writeln!(out, "  mismatch: {line}");
        }
        for line in &outcome.notes {
            let _ = writeln!(out, "  note: {line}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let _ = match failed {
        0 => write!(out, "all sweeps passed"),
        n => write!(out, "{n} sweeps failed"),
    };
    out
}
