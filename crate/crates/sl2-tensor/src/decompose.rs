//! Direct sum decomposition of `L(r) (x) L(s)`.
//!
//! Both factors split digit by digit into twisted products of restricted
//! simples, each digit pair splits into fundamental tilting modules, and
//! distributing the tensor product over those sums yields one indecomposable
//! summand per choice of tilting weight at every digit. A summand is recorded
//! by that vector of choices, its profile.

use crate::chars::{
    fundamental_tilting_character, peel_into_simples, FactorMultiset, FormalCharacter,
};
use crate::error::Error;
use crate::fundamental::tilting_summand_weights;
use crate::padic::{padic_digits, tilde, weight_from_digits, Prime, Weight};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Digit vector of one indecomposable summand.
///
/// Entry `i` is the highest weight of the fundamental tilting module tensored
/// in with an i-fold Frobenius twist, so every entry is at most `2p-2`.
/// Trailing zeros are trimmed (a twisted trivial factor changes nothing);
/// the zero profile is kept as a single `[0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SummandProfile {
    p: Prime,
    digits: Vec<u64>,
}

impl SummandProfile {
    pub fn new(p: Prime, mut digits: Vec<u64>) -> Result<SummandProfile, Error> {
        if digits.is_empty() {
            return Err(Error::Unsupported("empty summand profile".into()));
        }
        for &d in &digits {
            if d > 2 * p.get() - 2 {
                return Err(Error::OutOfRange {
                    what: "profile digit",
                    value: d,
                    max: 2 * p.get() - 2,
                });
            }
        }
        while digits.len() > 1 && *digits.last().unwrap() == 0 {
            digits.pop();
        }
        Ok(SummandProfile { p, digits })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Highest weight of the summand, `sum of digit_i * p^i`.
    pub fn highest_weight(&self) -> Weight {
        weight_from_digits(&self.digits, self.p)
    }

    /// Weight of the socle, which is also the head: each digit reflects to
    /// `min(digit, 2p-2-digit)`.
    pub fn socle_weight(&self) -> Weight {
        let reflected: Vec<u64> = self
            .digits
            .iter()
            .map(|&d| tilde(d, self.p).expect("profile digits are at most 2p-2"))
            .collect();
        weight_from_digits(&reflected, self.p)
    }

    pub fn character(&self) -> FormalCharacter {
        let mut result = FormalCharacter::one();
        for (i, &d) in self.digits.iter().enumerate() {
            if d != 0 {
                let factor = fundamental_tilting_character(d, self.p)
                    .expect("profile digits are at most 2p-2");
                result = result.multiply(&factor.frobenius_twist(self.p, i as u32));
            }
        }
        result
    }

    /// Composition factors, recovered from the character.
    pub fn factors(&self) -> FactorMultiset {
        peel_into_simples(&self.character(), self.p)
            .expect("a tilting product character is a sum of simple characters")
    }

    pub fn dim(&self) -> i64 {
        self.digits
            .iter()
            .map(|&d| {
                if d >= self.p.get() {
                    2 * self.p.get() as i64
                } else {
                    d as i64 + 1
                }
            })
            .product()
    }
}

/// The full decomposition of `L(r) (x) L(s)` in characteristic p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub p: Prime,
    pub r: Weight,
    pub s: Weight,
    summands: Vec<SummandProfile>,
}

impl Decomposition {
    /// Summands in strictly decreasing order of highest weight.
    pub fn summands(&self) -> &[SummandProfile] {
        &self.summands
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    /// Character of the direct sum; must equal the product character.
    pub fn character(&self) -> FormalCharacter {
        let mut sum = FormalCharacter::zero();
        for summand in &self.summands {
            sum.add_scaled(&summand.character(), 1);
        }
        sum
    }

    /// Composition factors of the whole product.
    pub fn factors(&self) -> FactorMultiset {
        let mut all = FactorMultiset::new();
        for summand in &self.summands {
            for (w, mult) in summand.factors() {
                *all.entry(w).or_insert(0) += mult;
            }
        }
        all
    }
}

/// Decomposes `L(r) (x) L(s)` into indecomposable summands.
pub fn decompose(r: Weight, s: Weight, p: Prime) -> Decomposition {
    let mut rd = padic_digits(r, p);
    let mut sd = padic_digits(s, p);
    let len = rd.len().max(sd.len());
    rd.resize(len, 0);
    sd.resize(len, 0);

    let per_digit: Vec<Vec<Weight>> = rd
        .iter()
        .zip(&sd)
        .map(|(&a, &b)| tilting_summand_weights(a, b, p).expect("base-p digits are restricted"))
        .collect();

    let mut summands: Vec<SummandProfile> = per_digit
        .iter()
        .map(|choices| choices.iter().copied())
        .multi_cartesian_product()
        .map(|digits| SummandProfile::new(p, digits).expect("digit choices are in range"))
        .collect();

    summands.sort_by_key(|summand| std::cmp::Reverse(summand.highest_weight()));
    debug_assert!(
        summands
            .windows(2)
            .all(|w| w[0].highest_weight() > w[1].highest_weight()),
        "summands of one product have pairwise distinct highest weights"
    );

    Decomposition { p, r, s, summands }
}

/// Character of a single summand. Free-function view of
/// [`SummandProfile::character`].
pub fn summand_character(summand: &SummandProfile) -> FormalCharacter {
    summand.character()
}

/// Composition factors of a single summand. Free-function view of
/// [`SummandProfile::factors`].
pub fn summand_factors(summand: &SummandProfile) -> FactorMultiset {
    summand.factors()
}

/// Socle (and head) weight of a single summand. Free-function view of
/// [`SummandProfile::socle_weight`].
pub fn socle_weight(summand: &SummandProfile) -> Weight {
    summand.socle_weight()
}

/// Number of indecomposable summands of `L(r) (x) L(s)`, without building
/// the profiles.
pub fn summand_count(r: Weight, s: Weight, p: Prime) -> u64 {
    let mut rd = padic_digits(r, p);
    let mut sd = padic_digits(s, p);
    let len = rd.len().max(sd.len());
    rd.resize(len, 0);
    sd.resize(len, 0);
    rd.iter()
        .zip(&sd)
        .map(|(&a, &b)| {
            tilting_summand_weights(a, b, p)
                .expect("base-p digits are restricted")
                .len() as u64
        })
        .product()
}
