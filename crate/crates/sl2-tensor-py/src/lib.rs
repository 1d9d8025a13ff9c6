//! Python bindings: tensor products of simple SL2 modules in
//! characteristic p.
//!
//! The module mirrors the command-line surface. Weights are plain ints,
//! characters are dicts mapping exponent to coefficient, and factor
//! multisets are dicts mapping highest weight to multiplicity. Invalid
//! input (a composite characteristic, an impossible character) raises
//! `ValueError`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sl2_tensor::render;
use sl2_tensor::{
    classify_summand, construct_tensor_containing as construct_pair, decompose as decompose_rs,
    enumerate_tilting_factorizations, peel_into_simples as peel_rs, summand_layers, tensor_with_L2,
    tensor_with_natural, verify_corpus_file as verify_rs, Error, FormalCharacter, Prime,
    StructureReport, SummandClass, SummandProfile, Weight,
};

fn value_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn prime(p: u64) -> PyResult<Prime> {
    Prime::new(p).map_err(value_err)
}

fn char_dict(ch: &FormalCharacter) -> BTreeMap<i64, i64> {
    ch.terms().collect()
}

fn dict_char(terms: BTreeMap<i64, i64>) -> FormalCharacter {
    FormalCharacter::from_terms(terms)
}

/// One indecomposable summand of a tensor product.
#[pyclass(frozen)]
struct Summand {
    profile: SummandProfile,
}

#[pymethods]
impl Summand {
    /// Digit profile: entry i is the fundamental tilting weight tensored
    /// in with an i-fold Frobenius twist.
    #[getter]
    fn digits(&self) -> Vec<u64> {
        self.profile.digits().to_vec()
    }

    #[getter]
    fn highest_weight(&self) -> Weight {
        self.profile.highest_weight()
    }

    #[getter]
    fn socle(&self) -> Weight {
        self.profile.socle_weight()
    }

    /// "tilting", "simple", "simple tilting", or "neither".
    #[getter]
    fn classification(&self) -> &'static str {
        match classify_summand(&self.profile) {
            SummandClass::Tilting(_) => "tilting",
            SummandClass::Simple(_) => "simple",
            SummandClass::SimpleTilting(_) => "simple tilting",
            SummandClass::Neither => "neither",
        }
    }

    /// Display label: T(w), L(w), or J(digits; socle=w).
    #[getter]
    fn label(&self) -> String {
        render::summand_label(&self.profile)
    }

    /// Formal character as a dict mapping exponent to coefficient.
    fn character(&self) -> BTreeMap<i64, i64> {
        char_dict(&self.profile.character())
    }

    /// Composition factor multiset as a dict mapping weight to count.
    fn factors(&self) -> BTreeMap<Weight, u64> {
        self.profile.factors()
    }

    /// Socle-first Loewy layers, or None when no layer formula applies.
    fn layers(&self) -> Option<Vec<Vec<Weight>>> {
        summand_layers(&self.profile)
    }

    fn __repr__(&self) -> String {
        format!("<Summand {}>", render::summand_label(&self.profile))
    }
}

/// The decomposition of L(r) ⊗ L(s) into indecomposable summands.
#[pyclass(frozen)]
struct Decomposition {
    inner: sl2_tensor::Decomposition,
}

#[pymethods]
impl Decomposition {
    #[getter]
    fn p(&self) -> u64 {
        self.inner.p.get()
    }

    #[getter]
    fn r(&self) -> Weight {
        self.inner.r
    }

    #[getter]
    fn s(&self) -> Weight {
        self.inner.s
    }

    /// Summands in descending highest-weight order.
    #[getter]
    fn summands(&self) -> Vec<Summand> {
        self.inner
            .summands()
            .iter()
            .map(|profile| Summand {
                profile: profile.clone(),
            })
            .collect()
    }

    #[getter]
    fn is_indecomposable(&self) -> bool {
        self.inner.is_indecomposable()
    }

    fn character(&self) -> BTreeMap<i64, i64> {
        char_dict(&self.inner.character())
    }

    fn factors(&self) -> BTreeMap<Weight, u64> {
        self.inner.factors()
    }

    /// JSON form, identical to the CLI's --format json output.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        render::decomposition_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "<Decomposition p={} L({}) ⊗ L({}) = {}>",
            self.inner.p.get(),
            self.inner.r,
            self.inner.s,
            render::decomposition_text(&self.inner)
        )
    }
}

/// Submodule structure of L(r) ⊗ L(other) for other in {1, 2}.
#[pyclass(frozen)]
struct Structure {
    inner: StructureReport,
}

#[pymethods]
impl Structure {
    #[getter]
    fn p(&self) -> u64 {
        self.inner.p.get()
    }

    #[getter]
    fn r(&self) -> Weight {
        self.inner.r
    }

    #[getter]
    fn other(&self) -> Weight {
        self.inner.other
    }

    /// "simple", "split", "uniserial", or "biserial".
    #[getter]
    fn kind(&self) -> &'static str {
        use sl2_tensor::StructureCase::*;
        match self.inner.case {
            SimpleResult { .. } => "simple",
            SplitSum { .. } => "split",
            Uniserial { .. } => "uniserial",
            Biserial { .. } => "biserial",
        }
    }

    /// Socle weight, when the product is indecomposable with known layers.
    #[getter]
    fn socle(&self) -> Option<Weight> {
        self.inner.socle()
    }

    fn character(&self) -> BTreeMap<i64, i64> {
        char_dict(&self.inner.character())
    }

    fn factors(&self) -> BTreeMap<Weight, u64> {
        self.inner.factors()
    }

    /// DOT rendering of the structure diagram, or None for split sums.
    fn dot(&self) -> Option<String> {
        self.inner.diagram().map(|d| render::diagram_dot(&d))
    }

    /// JSON form, identical to the CLI's --format json output.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        render::structure_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("<Structure {}>", render::structure_text(&self.inner))
    }
}

/// Decompose L(r) ⊗ L(s) in characteristic p.
#[pyfunction]
fn decompose(p: u64, r: Weight, s: Weight) -> PyResult<Decomposition> {
    Ok(Decomposition {
        inner: decompose_rs(r, s, prime(p)?),
    })
}

/// Structure report for L(r) ⊗ L(other), other in {1, 2}.
#[pyfunction]
fn structure(p: u64, r: Weight, other: Weight) -> PyResult<Structure> {
    let p = prime(p)?;
    let inner = match other {
        1 => tensor_with_natural(r, p),
        2 => tensor_with_L2(r, p).map_err(value_err)?,
        _ => {
            return Err(PyValueError::new_err(format!(
                "structure reports cover tensoring with L(1) or L(2), not L({other})"
            )))
        }
    };
    Ok(Structure { inner })
}

/// True when L(r) ⊗ L(s) is indecomposable (digit criterion).
#[pyfunction]
fn is_indecomposable_product(p: u64, r: Weight, s: Weight) -> PyResult<bool> {
    Ok(sl2_tensor::is_indecomposable_product(r, s, prime(p)?))
}

/// A pair (r, s) whose product contains T(u) as a summand.
#[pyfunction]
fn construct_tensor_containing(p: u64, u: Weight) -> PyResult<(Weight, Weight)> {
    Ok(construct_pair(u, prime(p)?))
}

/// The admissible digit expansion of u.
#[pyfunction]
fn admissible_expansion(p: u64, u: Weight) -> PyResult<Vec<u64>> {
    Ok(sl2_tensor::admissible_expansion(u, prime(p)?)
        .digits()
        .to_vec())
}

/// All factorizations T(u) = L(r) ⊗ L(s), with counts and predictions.
#[pyfunction]
fn tilting_factorizations(p: u64, u: Weight) -> PyResult<Py<PyAny>> {
    let found = enumerate_tilting_factorizations(u, prime(p)?);
    Python::attach(|py| {
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item("weight", found.weight)?;
        dict.set_item(
            "pairs",
            found
                .pairs
                .iter()
                .map(|pair| (pair.r, pair.s))
                .collect::<Vec<_>>(),
        )?;
        dict.set_item("ordered_count", found.ordered_count)?;
        dict.set_item("unordered_count", found.unordered_count())?;
        dict.set_item("predicted_unordered", found.predicted_unordered)?;
        dict.set_item("predicted_ordered", found.predicted_ordered)?;
        Ok(dict.into_any().unbind())
    })
}

/// Character of the simple module L(r).
#[pyfunction]
fn simple_character(p: u64, r: Weight) -> PyResult<BTreeMap<i64, i64>> {
    Ok(char_dict(&sl2_tensor::simple_character(r, prime(p)?)))
}

/// Character of the Weyl module Δ(r) (characteristic-free).
#[pyfunction]
fn weyl_character(r: Weight) -> BTreeMap<i64, i64> {
    char_dict(&sl2_tensor::weyl_character(r))
}

/// Character of the tilting module T(u).
#[pyfunction]
fn tilting_character(p: u64, u: Weight) -> PyResult<BTreeMap<i64, i64>> {
    Ok(char_dict(&sl2_tensor::tilting_character(u, prime(p)?)))
}

/// Peel a character dict into simple composition factors.
#[pyfunction]
fn peel_into_simples(p: u64, terms: BTreeMap<i64, i64>) -> PyResult<BTreeMap<Weight, u64>> {
    peel_rs(&dict_char(terms), prime(p)?).map_err(value_err)
}

/// Verify a JSONL corpus file; returns total, passed, and failure lines.
#[pyfunction]
fn verify_corpus_file(path: PathBuf) -> PyResult<Py<PyAny>> {
    let report = verify_rs(&path).map_err(value_err)?;
    Python::attach(|py| {
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item("total", report.total)?;
        dict.set_item("passed", report.passed)?;
        dict.set_item("all_passed", report.all_passed())?;
        dict.set_item(
            "failures",
            report
                .failures
                .iter()
                .map(|f| (f.line, f.source.clone(), f.detail.clone()))
                .collect::<Vec<_>>(),
        )?;
        Ok(dict.into_any().unbind())
    })
}

#[pymodule]
fn sl2_tensor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Summand>()?;
    m.add_class::<Decomposition>()?;
    m.add_class::<Structure>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(structure, m)?)?;
    m.add_function(wrap_pyfunction!(is_indecomposable_product, m)?)?;
    m.add_function(wrap_pyfunction!(construct_tensor_containing, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(tilting_factorizations, m)?)?;
    m.add_function(wrap_pyfunction!(simple_character, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_character, m)?)?;
    m.add_function(wrap_pyfunction!(tilting_character, m)?)?;
    m.add_function(wrap_pyfunction!(peel_into_simples, m)?)?;
    m.add_function(wrap_pyfunction!(verify_corpus_file, m)?)?;
    Ok(())
}
