//! Tilting modules in the fundamental range `0..=2p-2` and the rule for
//! tensoring two restricted simple modules.
//!
//! For restricted weights `r, s <= p-1` the product `L(r) (x) L(s)` is a
//! direct sum of indecomposable tilting modules whose highest weights are
//! read off the classical Clebsch-Gordan range by a cancellation rule: every
//! weight `u >= p` in the range absorbs the weight `2p-2-u`.

use crate::chars::FactorMultiset;
use crate::error::Error;
use crate::padic::{tilde, Prime, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The surviving weights when two restricted simple modules are tensored.
///
/// `weights` is sorted descending, so decompositions enumerate summands by
/// highest weight first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WSet {
    /// The prime.
    pub p: Prime,
    /// The two restricted highest weights, larger first.
    pub a: Weight,
    /// See `a`.
    pub b: Weight,
    /// Highest weights of the tilting summands, descending.
    pub weights: Vec<Weight>,
}

/// The uniserial structure of a tilting module in the range `0..=2p-2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalTilting {
    /// The prime.
    pub p: Prime,
    /// Highest weight, at most `2p-2`.
    pub u: Weight,
    /// Composition series, socle first.
    pub series: Vec<Weight>,
}

impl FundamentalTilting {
    /// Highest weight of the socle (equal to the head).
    pub fn socle_weight(&self) -> Weight {
        self.series[0]
    }
}

/// Highest weights of the indecomposable tilting summands of
/// `L(r) (x) L(s)` for restricted `r` and `s`, in decreasing order.
///
/// Starting from the classical range `r+s, r+s-2, ..., |r-s|`, each member
/// `u >= p` strikes `2p-2-u` from the list; what survives is the answer.
pub fn tilting_summand_weights(r: Weight, s: Weight, p: Prime) -> Result<Vec<Weight>, Error> {
    let pv = p.get();
    for v in [r, s] {
        if v > pv - 1 {
            return Err(Error::OutOfRange {
                what: "restricted weight",
                value: v,
                max: pv - 1,
            });
        }
    }
    let (r, s) = if r >= s { (r, s) } else { (s, r) };
    let range: Vec<Weight> = (0..=s).map(|i| r + s - 2 * i).collect();
    let mut struck = BTreeSet::new();
    for &u in &range {
        if u >= pv {
            let cancelled = 2 * pv - 2 - u;
            debug_assert!(range.contains(&cancelled));
            let fresh = struck.insert(cancelled);
            debug_assert!(fresh);
        }
    }
    Ok(range.into_iter().filter(|u| !struck.contains(u)).collect())
}

/// The summand weights packaged with their inputs.
#[allow(non_snake_case)]
pub fn small_tensor_W(a: Weight, b: Weight, p: Prime) -> Result<WSet, Error> {
    let weights = tilting_summand_weights(a, b, p)?;
    Ok(WSet {
        p,
        a: a.max(b),
        b: a.min(b),
        weights,
    })
}

/// The series of `T(u)` packaged with its inputs.
pub fn fundamental_structure(u: Weight, p: Prime) -> Result<FundamentalTilting, Error> {
    let series = fundamental_tilting_series(u, p)?;
    Ok(FundamentalTilting { p, u, series })
}

/// Composition series of the indecomposable tilting module of highest weight
/// `u <= 2p-2`, listed socle first. A single factor for `u <= p-1`; for
/// larger `u` the module is uniserial with layers `2p-2-u, u, 2p-2-u`.
pub fn fundamental_tilting_series(u: Weight, p: Prime) -> Result<Vec<Weight>, Error> {
    let reflected = tilde(u, p)?;
    if u < p.get() {
        Ok(vec![u])
    } else {
        Ok(vec![reflected, u, reflected])
    }
}

/// Composition factor multiset of the same module.
pub fn fundamental_tilting_factors(u: Weight, p: Prime) -> Result<FactorMultiset, Error> {
    let mut factors = FactorMultiset::new();
    for w in fundamental_tilting_series(u, p)? {
        *factors.entry(w).or_insert(0) += 1;
    }
    Ok(factors)
}
