//! Exhaustive and randomized consistency sweeps.
//!
//! Each sweep checks one global invariant of the decomposition machinery
//! over a parameter box and reports every violation found. The sweeps
//! back both the integration test suite and the `sweep` CLI subcommand.
//!
//! Character-heavy checks run on dense coefficient vectors indexed by
//! exponent (offset by the span), with per-prime caches keyed by digit
//! profile, so the large boxes stay fast on a single core.

use std::collections::HashMap;
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chars::{
    character_from_factors, peel_into_simples, simple_character, tilting_character, weyl_character,
    FactorMultiset, FormalCharacter,
};
use crate::classify::{
    classify_summand, construct_tensor_containing, enumerate_tilting_factorizations,
    is_indecomposable_product, product_is_this_tilting, FactorizationPair,
};
use crate::decompose::{decompose, summand_count, SummandProfile};
use crate::error::Result;
use crate::padic::{residue_data, Prime, Weight};
use crate::structure::{tensor_with_L2, tensor_with_natural};

/// Result of one sweep: how much was checked and what failed.
#[derive(Debug, Clone, Serialize)]
pub struct SweepOutcome {
    /// Short name of the invariant swept.
    pub label: String,
    /// Number of individual checks performed.
    pub cases: u64,
    /// Description of every violated check, sorted.
    pub mismatches: Vec<String>,
    /// Informational notes that are not failures.
    pub notes: Vec<String>,
    /// Wall-clock time in milliseconds.
    pub elapsed_ms: u64,
}

impl SweepOutcome {
    fn finish(
        label: &str,
        cases: u64,
        mut mismatches: Vec<String>,
        notes: Vec<String>,
        start: Instant,
    ) -> SweepOutcome {
        mismatches.sort();
        SweepOutcome {
            label: label.to_string(),
            cases,
            mismatches,
            notes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// True when no mismatch was found.
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn primes_of(list: &[u64]) -> Result<Vec<Prime>> {
    list.iter().map(|&v| Prime::new(v)).collect()
}

// ----------------------------------------------------------------- dense

/// Dense coefficient vector of a character: exponent `e` lives at index
/// `e + span`. The span must dominate the largest exponent in absolute
/// value.
fn dense_from(ch: &FormalCharacter, span: i64) -> Vec<i64> {
    let mut v = vec![0i64; (2 * span + 1) as usize];
    for (e, c) in ch.terms() {
        v[(e + span) as usize] += c;
    }
    v
}

/// Convolution of a sparse term list against a dense vector with span
/// `bspan`, into a fresh dense vector with span `outspan`.
fn conv_sparse_dense(a: &[(i64, i64)], b: &[i64], bspan: i64, outspan: i64) -> Vec<i64> {
    let mut out = vec![0i64; (2 * outspan + 1) as usize];
    for &(ea, ca) in a {
        let base = (ea - bspan + outspan) as usize;
        for (slot, &cb) in out[base..base + b.len()].iter_mut().zip(b) {
            *slot += ca * cb;
        }
    }
    out
}

/// Peel a dense symmetric character into Weyl multiplicities, top weight
/// first. Returns `None` when the remainder is not a sum of Weyl
/// characters at all (nonzero leftover); negative multiplicities are
/// returned, not treated as an error, so callers can test positivity.
fn dense_peel_weyls(mut v: Vec<i64>, span: i64) -> Option<Vec<(Weight, i64)>> {
    let mut peeled = Vec::new();
    for e in (0..=span).rev() {
        let m = v[(e + span) as usize];
        if m == 0 {
            continue;
        }
        peeled.push((e as Weight, m));
        let mut idx = (span - e) as usize;
        let top = (span + e) as usize;
        while idx <= top {
            v[idx] -= m;
            idx += 2;
        }
    }
    if v.iter().any(|&c| c != 0) {
        return None;
    }
    Some(peeled)
}

/// Per-prime cache of dense simple and summand characters.
struct DenseCache {
    p: Prime,
    span: i64,
    simples: HashMap<Weight, Vec<i64>>,
    profiles: HashMap<Vec<u64>, Vec<i64>>,
}

impl DenseCache {
    fn new(p: Prime, span: i64) -> Self {
        DenseCache {
            p,
            span,
            simples: HashMap::new(),
            profiles: HashMap::new(),
        }
    }

    /// Dense simple character, tight: span is the weight itself.
    fn simple(&mut self, w: Weight) -> &Vec<i64> {
        let p = self.p;
        self.simples
            .entry(w)
            .or_insert_with(|| dense_from(&simple_character(w, p), w as i64))
    }

    fn profile(&mut self, profile: &SummandProfile) -> &Vec<i64> {
        let span = self.span;
        self.profiles
            .entry(profile.digits().to_vec())
            .or_insert_with(|| dense_from(&profile.character(), span))
    }
}

// ------------------------------------------------------- conservation

/// Character conservation: the summand characters of `L(r) ⊗ L(s)` add
/// up to the product of the two simple characters, exactly, for every
/// `0 <= s <= r <= max_weight` and every listed prime.
pub fn conservation_sweep(primes: &[u64], max_weight: Weight) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        let span = 2 * max_weight as i64;
        let mut cache = DenseCache::new(p, span);
        for r in 0..=max_weight {
            let r_terms: Vec<(i64, i64)> = simple_character(r, p).terms().collect();
            for s in 0..=r {
                cases += 1;
                let product = {
                    let s_dense = cache.simple(s);
                    conv_sparse_dense(&r_terms, s_dense, s as i64, span)
                };
                let mut sum = vec![0i64; (2 * span + 1) as usize];
                for summand in decompose(r, s, p).summands() {
                    for (slot, &c) in sum.iter_mut().zip(cache.profile(summand)) {
                        *slot += c;
                    }
                }
                if sum != product {
                    mismatches.push(format!(
                        "p={}, r={r}, s={s}: summand characters do not add up to the product",
                        p.get()
                    ));
                }
            }
        }
    }
    Ok(SweepOutcome::finish(
        "character conservation",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// ------------------------------------------------- indecomposability

/// The digit criterion for indecomposability agrees with the summand
/// count, and at `p = 2` every product is indecomposable.
pub fn indecomposability_sweep(primes: &[u64], max_weight: Weight) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        for r in 0..=max_weight {
            for s in 0..=r {
                cases += 1;
                let predicted = is_indecomposable_product(r, s, p);
                let actual = summand_count(r, s, p) == 1;
                if predicted != actual {
                    mismatches.push(format!(
                        "p={}, r={r}, s={s}: digit criterion says {predicted}, count says {actual}",
                        p.get()
                    ));
                }
                if p.get() == 2 && !actual {
                    mismatches.push(format!("p=2, r={r}, s={s}: product split at two"));
                }
            }
        }
    }
    Ok(SweepOutcome::finish(
        "indecomposability criterion",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// ------------------------------------------------- tilting soundness

/// Every summand classified as tilting really has the character of the
/// tilting module of its highest weight, and that character peels into
/// Weyl characters with nonnegative multiplicities and multiplicity one
/// at the top.
///
/// The box is the same as [`conservation_sweep`]; distinct digit profiles
/// are checked once each.
pub fn tilting_soundness_sweep(primes: &[u64], max_weight: Weight) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        let mut seen: std::collections::BTreeSet<Vec<u64>> = Default::default();
        for r in 0..=max_weight {
            for s in 0..=r {
                for summand in decompose(r, s, p).summands() {
                    if classify_summand(summand).is_tilting() {
                        seen.insert(summand.digits().to_vec());
                    }
                }
            }
        }
        for digits in seen {
            cases += 1;
            let profile = SummandProfile::new(p, digits.clone())?;
            let w = profile.highest_weight();
            let ch = profile.character();
            if ch != tilting_character(w, p) {
                mismatches.push(format!(
                    "p={}, profile {digits:?}: character differs from the weight-{w} tilting character",
                    p.get()
                ));
                continue;
            }
            let span = w as i64;
            match dense_peel_weyls(dense_from(&ch, span), span) {
                None => mismatches.push(format!(
                    "p={}, profile {digits:?}: character is not a sum of Weyl characters",
                    p.get()
                )),
                Some(peeled) => {
                    if peeled.iter().any(|&(_, m)| m < 0) {
                        mismatches.push(format!(
                            "p={}, profile {digits:?}: negative Weyl multiplicity",
                            p.get()
                        ));
                    }
                    if peeled.first() != Some(&(w, 1)) {
                        mismatches.push(format!(
                            "p={}, profile {digits:?}: top Weyl multiplicity is not one at {w}",
                            p.get()
                        ));
                    }
                }
            }
        }
    }
    Ok(SweepOutcome::finish(
        "tilting classification soundness",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// ---------------------------------------------------- factorizations

/// The digit-driven enumeration of factorizations `T(u) = L(r) ⊗ L(s)`
/// equals a brute-force scan over all `r + s = u`, and the digit-pattern
/// count predictions hold where they claim to apply.
pub fn factorization_sweep(primes: &[u64], max_weight: Weight) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut notes = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        let pv = p.get();
        let mut ordered_reading_ok = 0u64;
        let mut unordered_reading_ok = 0u64;
        for u in 0..=max_weight {
            cases += 1;
            let enumerated = enumerate_tilting_factorizations(u, p);
            let mut scan = Vec::new();
            let mut scan_ordered = 0u64;
            for r in 0..=u {
                let s = u - r;
                if product_is_this_tilting(r, s, u, p) {
                    scan_ordered += 1;
                    if r >= s {
                        scan.push(FactorizationPair::new(r, s));
                    }
                }
            }
            scan.sort_by(|a, b| b.cmp(a));
            if scan != enumerated.pairs {
                mismatches.push(format!(
                    "p={pv}, u={u}: enumeration {:?} differs from scan {:?}",
                    enumerated.pairs, scan
                ));
            }
            if scan_ordered != enumerated.ordered_count {
                mismatches.push(format!(
                    "p={pv}, u={u}: ordered count {} differs from scan {scan_ordered}",
                    enumerated.ordered_count
                ));
            }
            if pv > 2 && enumerated.unordered_prediction_matches() != Some(true) {
                mismatches.push(format!(
                    "p={pv}, u={u}: predicted unordered count {:?} differs from {}",
                    enumerated.predicted_unordered,
                    enumerated.unordered_count()
                ));
            }
            if pv == 2 {
                if enumerated.ordered_prediction_matches() == Some(true) {
                    ordered_reading_ok += 1;
                }
                if enumerated.unordered_prediction_matches() == Some(true) {
                    unordered_reading_ok += 1;
                }
            }
        }
        if pv == 2 {
            notes.push(format!(
                "p=2 count readings over {} weights: ordered 2^t matched {}, unordered 2^(t') matched {}",
                max_weight + 1,
                ordered_reading_ok,
                unordered_reading_ok
            ));
        }
    }
    Ok(SweepOutcome::finish(
        "tilting factorization enumeration",
        cases,
        mismatches,
        notes,
        start,
    ))
}

// -------------------------------------------------------- structure

/// Structure reports for products with the natural module and with
/// `L(2)`, checked against character oracles.
///
/// For every `r ≡ -1 (mod p)` up to `p^4`: the reported composition
/// factors equal the peel of `ch L(r) · ch ∇(1)`, the socle is `L(r-1)`,
/// and `k = 0` anchors have the full tilting character of `T(r+1)`. For
/// every `r` up to `p^4` at odd primes, the `L(2)` report's character
/// equals `ch L(r) · ch L(2)`.
pub fn structure_sweep(primes: &[u64]) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        let pv = p.get();
        let max = pv.pow(4);
        for r in (pv - 1..=max).step_by(pv as usize) {
            cases += 1;
            let report = tensor_with_natural(r, p);
            let product = simple_character(r, p).multiply(&weyl_character(1));
            if report.character() != product {
                mismatches.push(format!("p={pv}, r={r}: natural-product character mismatch"));
                continue;
            }
            let oracle = peel_into_simples(&product, p)?;
            if report.factors() != oracle {
                mismatches.push(format!(
                    "p={pv}, r={r}: factors differ from the peeled character"
                ));
            }
            if report.socle() != Some(r - 1) {
                mismatches.push(format!(
                    "p={pv}, r={r}: socle {:?} is not L({})",
                    report.socle(),
                    r - 1
                ));
            }
            let rd = residue_data(r, p)?;
            if rd.k == 0 && report.character() != tilting_character(r + 1, p) {
                mismatches.push(format!(
                    "p={pv}, r={r}: k=0 anchor is not the weight-{} tilting character",
                    r + 1
                ));
            }
        }
        if pv > 2 {
            let l2 = simple_character(2, p);
            for r in 0..=max {
                cases += 1;
                let report = tensor_with_L2(r, p)?;
                if report.character() != simple_character(r, p).multiply(&l2) {
                    mismatches.push(format!("p={pv}, r={r}: L(2)-product character mismatch"));
                }
            }
        }
    }
    Ok(SweepOutcome::finish(
        "structure reports",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// ---------------------------------------------------- Weyl simplicity

/// Weyl characters at weights `a·p^t - 1` are already simple: the peel
/// returns exactly that one simple factor.
pub fn weyl_simplicity_sweep(primes: &[u64], max_exponent: u32) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        let pv = p.get();
        for a in 1..pv {
            for t in 0..=max_exponent {
                cases += 1;
                let w = a * pv.pow(t) - 1;
                let peeled = peel_into_simples(&weyl_character(w), p)?;
                if peeled != FactorMultiset::from([(w, 1)]) {
                    mismatches.push(format!(
                        "p={pv}, a={a}, t={t}: Weyl character at {w} is not simple"
                    ));
                }
            }
        }
    }
    Ok(SweepOutcome::finish(
        "simple Weyl weights",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// -------------------------------------------------------- containment

/// The constructive witness really works: for every `u`, the product of
/// the constructed pair contains a tilting summand of highest weight `u`.
pub fn containment_sweep(primes: &[u64], max_weight: Weight) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0u64;
    for p in primes_of(primes)? {
        for u in 0..=max_weight {
            cases += 1;
            let (r, s) = construct_tensor_containing(u, p);
            let found = decompose(r, s, p).summands().iter().any(|summand| {
                let class = classify_summand(summand);
                class.is_tilting() && summand.highest_weight() == u
            });
            if !found {
                mismatches.push(format!(
                    "p={}, u={u}: L({r}) ⊗ L({s}) has no tilting summand of weight {u}",
                    p.get()
                ));
            }
        }
    }
    Ok(SweepOutcome::finish(
        "tilting containment witnesses",
        cases,
        mismatches,
        Vec::new(),
        start,
    ))
}

// ---------------------------------------------------------- roundtrip

/// Random multisets of simple factors survive the character round trip:
/// build the character from the factors, peel it, and get the same
/// multiset back.
pub fn roundtrip_sweep(
    primes: &[u64],
    max_weight: Weight,
    samples: u64,
    seed: u64,
) -> Result<SweepOutcome> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let prime_list = primes_of(primes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let p = prime_list[rng.random_range(0..prime_list.len())];
        let mut factors = FactorMultiset::new();
        for _ in 0..rng.random_range(1..=6u32) {
            *factors.entry(rng.random_range(0..=max_weight)).or_insert(0) +=
                rng.random_range(1..=3u64);
        }
        let ch = character_from_factors(&factors, p);
        let peeled = peel_into_simples(&ch, p)?;
        if peeled != factors {
            mismatches.push(format!(
                "sample {i} (p={}): peeled {:?}, expected {:?}",
                p.get(),
                peeled,
                factors
            ));
        }
    }
    Ok(SweepOutcome::finish(
        "character peel round trip",
        samples,
        mismatches,
        Vec::new(),
        start,
    ))
}
