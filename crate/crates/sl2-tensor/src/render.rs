//! Text and DOT emitters for decompositions, structure reports, and
//! characters.
//!
//! Text output follows the naming conventions of the source material:
//! tilting summands print as `T(w)`, simple summands as `L(w)`, and a
//! summand that is neither prints its digit profile and socle. All
//! emitters are deterministic: equal inputs yield byte-identical output.

use std::fmt::Write as _;

use crate::chars::FormalCharacter;
use crate::classify::{classify_summand, SummandClass};
use crate::decompose::{Decomposition, SummandProfile};
use crate::structure::{Component, Diagram, StructureCase, StructureReport};

/// Display label for one summand: `T(w)`, `L(w)`, or `J(digits; socle=w)`.
///
/// A summand that is simple and tilting at once prints as `L(w)` when it
/// is a restricted weight (single digit) and as `T(w)` otherwise, matching
/// how such modules are usually written in decomposition lists.
pub fn summand_label(profile: &SummandProfile) -> String {
    match classify_summand(profile) {
        SummandClass::Tilting(w) => format!("T({w})"),
        SummandClass::Simple(w) => format!("L({w})"),
        SummandClass::SimpleTilting(w) => {
            if profile.digits().len() == 1 {
                format!("L({w})")
            } else {
                format!("T({w})")
            }
        }
        SummandClass::Neither => {
            let digits = profile
                .digits()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("J({digits}; socle={})", profile.socle_weight())
        }
    }
}

/// One-line rendering of a decomposition, summands joined by `⊕` in
/// descending highest-weight order.
pub fn decomposition_text(dec: &Decomposition) -> String {
    dec.summands()
        .iter()
        .map(summand_label)
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

/// The tilting expression `T(base)` or `T(base) ⊗ L(k)^Fℓ` recorded in a
/// report, when present.
fn tilting_expression(report: &StructureReport) -> Option<String> {
    let base = report.base_tilting?;
    let k = report.shift_k?;
    if k == 0 {
        Some(format!("T({base})"))
    } else {
        let level = report.residue?.t + 1;
        Some(format!("T({base}) ⊗ L({k})^F{level}"))
    }
}

/// Bracket form of a layer list: `[2,0,4,0,2]` for singleton layers,
/// `[4 | 6,0 | 4]` with bars between thicker layers.
fn layers_text(layers: &[Vec<u64>]) -> String {
    let body = layers
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(" | ");
    format!("[{body}]")
}

fn component_text(c: &Component) -> String {
    match c {
        Component::Simple { weight } => format!("L({weight})"),
        Component::TwistedTilting { base, k, level } => {
            if *k == 0 {
                format!("T({base})")
            } else {
                format!("T({base}) ⊗ L({k})^F{level}")
            }
        }
        Component::Nested(inner) => {
            tilting_expression(inner).unwrap_or_else(|| structure_text(inner))
        }
    }
}

/// One-line rendering of a structure report.
///
/// Simple results print as `L(w)`; split sums join their components with
/// `⊕`; uniserial series print socle first as `[2,0,4,0,2] = T(4)`; and
/// biserial diagrams print their layers as `[4 | 6,0 | 4] = T(6)`, in
/// both cases followed by the tilting expression the module is
/// isomorphic to.
pub fn structure_text(report: &StructureReport) -> String {
    match &report.case {
        StructureCase::SimpleResult { weight } => format!("L({weight})"),
        StructureCase::SplitSum { components } => components
            .iter()
            .map(component_text)
            .collect::<Vec<_>>()
            .join(" ⊕ "),
        StructureCase::Uniserial { series } => {
            let body = series
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(",");
            match tilting_expression(report) {
                Some(expr) => format!("[{body}] = {expr}"),
                None => format!("[{body}]"),
            }
        }
        StructureCase::Biserial { diagram } => match tilting_expression(report) {
            Some(expr) => format!("{} = {expr}", layers_text(&diagram.layers)),
            None => layers_text(&diagram.layers),
        },
    }
}

/// DOT rendering of a structure diagram: an undirected graph read bottom
/// to top, one `rank=same` group per socle layer, vertices labeled by
/// weight.
pub fn diagram_dot(diagram: &Diagram) -> String {
    let mut out = String::from("graph {\n  rankdir=BT;\n");
    for (i, layer) in diagram.layers.iter().enumerate() {
        let _ = write!(out, "  {{ rank=same;");
        for (j, w) in layer.iter().enumerate() {
            let _ = write!(out, " v{i}_{j} [label=\"{w}\"];");
        }
        out.push_str(" }\n");
    }
    for ((a_layer, a_pos), (b_layer, b_pos)) in &diagram.edges {
        let _ = writeln!(out, "  v{a_layer}_{a_pos} -- v{b_layer}_{b_pos};");
    }
    out.push_str("}\n");
    out
}

/// Laurent polynomial form of a formal character, exponents descending:
/// `x^5 + x^3 + x + x^-1 + x^-3 + x^-5`.
pub fn character_text(ch: &FormalCharacter) -> String {
    if ch.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut terms: Vec<(i64, i64)> = ch.terms().collect();
    terms.reverse();
    for (e, c) in terms {
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.unsigned_abs();
        match e {
            0 => {
                let _ = write!(out, "{mag}");
            }
            1 => {
                if mag != 1 {
                    let _ = write!(out, "{mag}");
                }
                out.push('x');
            }
            _ => {
                if mag != 1 {
                    let _ = write!(out, "{mag}");
                }
                let _ = write!(out, "x^{e}");
            }
        }
    }
    out
}
