//! Reference corpus of tensor product decompositions.
//!
//! A corpus file is JSON Lines: one entry per product `L(r) ⊗ L(s)`,
//! listing the expected indecomposable summands in descending order of
//! highest weight. Each expected summand may assert any combination of
//!
//! * `tilting: w` — the summand is a tilting module of highest weight `w`,
//! * `simple: w` — the summand is a simple module of highest weight `w`,
//! * `series: [a, b, ...]` — the summand is uniserial with these
//!   composition factors, socle first,
//! * `layers: [[..], ..]` — the full radical layering, socle layer first,
//!   weights within a layer in descending order,
//! * `edges: [[[l, i], [l+1, j]], ..]` — extension edges between vertices
//!   of adjacent layers, in the coordinates of `layers`.
//!
//! The verifier recomputes every product and checks each stored assertion,
//! reporting all mismatches with their line numbers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::classify_summand;
use crate::decompose::{decompose, SummandProfile};
use crate::error::{Error, Result};
use crate::padic::{Prime, Weight};
use crate::render::summand_label;
use crate::structure::summand_layers;

/// An extension edge between two diagram vertices, each addressed as
/// `(layer index, position within layer)` in the coordinates of a
/// `layers` list.
pub type CorpusEdge = ((usize, usize), (usize, usize));

/// Expected properties of one indecomposable summand.
///
/// Every field is optional; absent fields are simply not checked. The
/// `edges` field requires `layers` to give the vertex coordinates meaning.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSummand {
    /// Summand is tilting with this highest weight.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilting: Option<Weight>,
    /// Summand is simple with this highest weight.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<Weight>,
    /// Summand is uniserial with these factors, socle first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<Weight>>,
    /// Radical layering, socle layer first, descending within a layer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers: Option<Vec<Vec<Weight>>>,
    /// Extension edges between adjacent layers of `layers`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<CorpusEdge>>,
}

/// One corpus line: a product and its expected summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    /// The characteristic.
    pub p: u64,
    /// Highest weight of the left factor.
    pub r: Weight,
    /// Highest weight of the right factor.
    pub s: Weight,
    /// Human-readable name of the product, for reports.
    pub source: String,
    /// Expected summands in descending order of highest weight.
    pub expected: Vec<ExpectedSummand>,
}

/// A failed check for one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyFailure {
    /// 1-based line number in the corpus file.
    pub line: usize,
    /// The entry's `source` label.
    pub source: String,
    /// What went wrong.
    pub detail: String,
}

/// Outcome of verifying a whole corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// Number of entries checked.
    pub total: usize,
    /// Number of entries with every assertion satisfied.
    pub passed: usize,
    /// All failed checks, in file order.
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    /// True when every entry passed.
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Load a corpus file, keeping the 1-based line number of each entry.
///
/// Blank lines are skipped. A malformed line is a hard error naming the
/// file and line, since a corpus with unreadable entries cannot be said
/// to have been verified.
pub fn load_corpus(path: &Path) -> Result<Vec<(usize, CorpusEntry)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entry: CorpusEntry = serde_json::from_str(line).map_err(|e| {
            Error::Unsupported(format!(
                "{}:{}: invalid corpus entry: {e}",
                path.display(),
                idx + 1
            ))
        })?;
        entries.push((idx + 1, entry));
    }
    Ok(entries)
}

/// Check one expected summand against a computed profile.
fn check_summand(profile: &SummandProfile, exp: &ExpectedSummand, out: &mut Vec<String>) {
    let label = summand_label(profile);
    let class = classify_summand(profile);
    let w = profile.highest_weight();

    if let Some(want) = exp.tilting {
        if !class.is_tilting() || w != want {
            out.push(format!(
                "expected a tilting module of weight {want}, computed {label}"
            ));
        }
    }
    if let Some(want) = exp.simple {
        if !class.is_simple() || w != want {
            out.push(format!(
                "expected a simple module of weight {want}, computed {label}"
            ));
        }
    }

    let want_layers: Option<Vec<Vec<Weight>>> = match (&exp.layers, &exp.series) {
        (Some(layers), _) => Some(layers.clone()),
        (None, Some(series)) => Some(series.iter().map(|&f| vec![f]).collect()),
        (None, None) => None,
    };
    if let Some(want) = want_layers {
        match summand_layers(profile) {
            Some(got) if got == want => {}
            Some(got) => out.push(format!(
                "layer mismatch for {label}: expected {want:?}, computed {got:?}"
            )),
            None => out.push(format!("no layer structure computed for {label}")),
        }
    }

    if let Some(edges) = &exp.edges {
        match &exp.layers {
            None => out.push(format!("{label}: edges stored without layers")),
            Some(layers) => {
                for &((al, ai), (bl, bi)) in edges {
                    let ok = bl == al + 1
                        && al < layers.len()
                        && bl < layers.len()
                        && ai < layers[al].len()
                        && bi < layers[bl].len();
                    if !ok {
                        out.push(format!(
                            "{label}: edge ({al},{ai})-({bl},{bi}) does not join \
                             adjacent layers of the stored shape"
                        ));
                    }
                }
            }
        }
    }
}

/// Recompute one entry and collect every violated assertion.
pub fn verify_entry(entry: &CorpusEntry) -> Vec<String> {
    let p = match Prime::new(entry.p) {
        Ok(p) => p,
        Err(e) => return vec![e.to_string()],
    };
    let dec = decompose(entry.r, entry.s, p);
    let summands = dec.summands();
    if summands.len() != entry.expected.len() {
        let mut msg = format!(
            "expected {} summands, computed {}:",
            entry.expected.len(),
            summands.len()
        );
        for s in summands {
            let _ = write!(msg, " {}", summand_label(s));
        }
        return vec![msg];
    }
    let mut problems = Vec::new();
    for (i, (profile, exp)) in summands.iter().zip(&entry.expected).enumerate() {
        let mut local = Vec::new();
        check_summand(profile, exp, &mut local);
        problems.extend(local.into_iter().map(|d| format!("summand {i}: {d}")));
    }
    problems
}

/// Verify a list of loaded entries.
pub fn verify_corpus(entries: &[(usize, CorpusEntry)]) -> VerifyReport {
    let mut failures = Vec::new();
    let mut passed = 0;
    for (line, entry) in entries {
        let problems = verify_entry(entry);
        if problems.is_empty() {
            passed += 1;
        } else {
            failures.extend(problems.into_iter().map(|detail| VerifyFailure {
                line: *line,
                source: entry.source.clone(),
                detail,
            }));
        }
    }
    VerifyReport {
        total: entries.len(),
        passed,
        failures,
    }
}

/// Load and verify a corpus file in one step.
pub fn verify_corpus_file(path: &Path) -> Result<VerifyReport> {
    let entries = load_corpus(path)?;
    Ok(verify_corpus(&entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;
    use std::path::PathBuf;

    fn data_file(name: &str) -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../data")
            .join(name)
    }

    #[test]
    fn shipped_corpus_at_two_passes() {
        let report = verify_corpus_file(&data_file("corpus-p2.jsonl")).unwrap();
        assert_eq!(report.total, 49);
        assert!(report.all_passed(), "failures: {:#?}", report.failures);
    }

    #[test]
    fn shipped_corpus_at_three_passes() {
        let report = verify_corpus_file(&data_file("corpus-p3.jsonl")).unwrap();
        assert_eq!(report.total, 64);
        assert!(report.all_passed(), "failures: {:#?}", report.failures);
    }

    fn entry(json: &str) -> CorpusEntry {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn wrong_summand_count_is_reported() {
        let e = entry(r#"{"p":3,"r":1,"s":1,"source":"[1] x [1]","expected":[{"tilting":2}]}"#);
        let problems = verify_entry(&e);
        assert_eq!(problems.len(), 1);
        assert!(problems[0].contains("expected 1 summands, computed 2"));
    }

    #[test]
    fn wrong_class_and_weight_are_reported() {
        // L(4) at p = 3 is simple but not tilting.
        let e = entry(r#"{"p":3,"r":3,"s":1,"source":"[3] x [1]","expected":[{"tilting":4}]}"#);
        assert_eq!(verify_entry(&e).len(), 1);
        let e = entry(r#"{"p":3,"r":3,"s":1,"source":"[3] x [1]","expected":[{"simple":5}]}"#);
        assert_eq!(verify_entry(&e).len(), 1);
        let e = entry(r#"{"p":3,"r":3,"s":1,"source":"[3] x [1]","expected":[{"simple":4}]}"#);
        assert!(verify_entry(&e).is_empty());
    }

    #[test]
    fn wrong_series_is_reported() {
        let e =
            entry(r#"{"p":3,"r":2,"s":1,"source":"[2] x [1]","expected":[{"series":[1,3,1]}]}"#);
        assert!(verify_entry(&e).is_empty());
        let e =
            entry(r#"{"p":3,"r":2,"s":1,"source":"[2] x [1]","expected":[{"series":[3,1,3]}]}"#);
        let problems = verify_entry(&e);
        assert_eq!(problems.len(), 1);
        assert!(problems[0].contains("layer mismatch"));
    }

    #[test]
    fn invalid_edges_are_reported() {
        // A homomorphic image of a valid entry with one edge index out of
        // bounds and one edge skipping a layer.
        let e = entry(
            r#"{"p":3,"r":5,"s":1,"source":"[5] x [1]","expected":[
                {"tilting":6,"layers":[[4],[6,0],[4]],
                 "edges":[[[0,0],[1,2]],[[0,0],[2,0]]]}]}"#
                .replace('\n', " ")
                .as_str(),
        );
        assert_eq!(verify_entry(&e).len(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(
            f,
            r#"{{"p":2,"r":1,"s":1,"source":"[1] x [1]","expected":[]}}"#
        )
        .unwrap();
        writeln!(f, r#"{{"p":2,"r":1,"s":1,"#).unwrap();
        drop(f);
        let err = load_corpus(&path).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("bad.jsonl:2"), "message was: {msg}");
    }

    #[test]
    fn tampered_corpus_fails_verification() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tampered.jsonl");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(
            f,
            r#"{{"p":2,"r":2,"s":1,"source":"[2] x [1]","expected":[{{"tilting":3}}]}}"#
        )
        .unwrap();
        writeln!(
            f,
            r#"{{"p":2,"r":3,"s":1,"source":"[3] x [1]","expected":[{{"tilting":5}}]}}"#
        )
        .unwrap();
        drop(f);
        let report = verify_corpus_file(&path).unwrap();
        assert_eq!((report.total, report.passed), (2, 1));
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].line, 2);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let res: std::result::Result<CorpusEntry, _> =
            serde_json::from_str(r#"{"p":2,"r":1,"s":1,"source":"x","expected":[{"tilitng":2}]}"#);
        assert!(res.is_err());
    }
}
