//! Formal characters of SL2 modules.
//!
//! A character is a Laurent polynomial in one variable `e`, stored sparsely
//! as exponent -> coefficient. Characters are the bookkeeping device for
//! every correctness check in this crate: two modules built from the same
//! pieces must have equal characters, and a direct sum decomposition must
//! conserve the character of the product.

use crate::error::Error;
use crate::padic::{admissible_expansion, padic_digits, tilde, Prime, Weight};
use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Multiset of composition factors, weight -> multiplicity.
pub type FactorMultiset = BTreeMap<Weight, u64>;

/// Signed multiset of Weyl module weights, weight -> coefficient.
pub type WeylMultiset = BTreeMap<Weight, i64>;

/// Sparse Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<i64, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        FormalCharacter::default()
    }

    /// The character of the trivial module.
    pub fn one() -> Self {
        FormalCharacter {
            terms: BTreeMap::from([(0, 1)]),
        }
    }

    /// Builds a character from `(exponent, coefficient)` pairs. Repeated
    /// exponents accumulate; zero coefficients are dropped.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in pairs {
            let entry = terms.entry(e).or_insert(0);
            *entry += c;
        }
        terms.retain(|_, c| *c != 0);
        FormalCharacter { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Exponent of the highest nonzero term.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `e = 1`, the dimension for a module character.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Iterates `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Adds `scale` times `other` in place.
    pub fn add_scaled(&mut self, other: &FormalCharacter, scale: i64) {
        if scale == 0 {
            return;
        }
        for (&e, &c) in &other.terms {
            let entry = self.terms.entry(e).or_insert(0);
            *entry += scale * c;
            if *entry == 0 {
                self.terms.remove(&e);
            }
        }
    }

    pub fn multiply(&self, other: &FormalCharacter) -> FormalCharacter {
        if self.is_zero() || other.is_zero() {
            return FormalCharacter::zero();
        }
        let a: Vec<(i64, i64)> = self.terms().collect();
        let b: Vec<(i64, i64)> = other.terms().collect();
        let offset = a[0].0 + b[0].0;
        let span = (a[a.len() - 1].0 + b[b.len() - 1].0 - offset) as usize;
        let mut acc = vec![0i64; span + 1];
        for &(ea, ca) in &a {
            for &(eb, cb) in &b {
                acc[(ea + eb - offset) as usize] += ca * cb;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(i, c)| (offset + i as i64, c))
            .collect();
        FormalCharacter { terms }
    }

    /// Scales every exponent by `p^i`, the character of an i-fold Frobenius
    /// twist.
    pub fn frobenius_twist(&self, p: Prime, i: u32) -> FormalCharacter {
        let scale = p.get().pow(i) as i64;
        FormalCharacter {
            terms: self.terms.iter().map(|(&e, &c)| (e * scale, c)).collect(),
        }
    }
}

impl Serialize for FormalCharacter {
    /// Serialized as `[[exponent, coefficient], ...]` by descending exponent.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, &c) in self.terms.iter().rev() {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, i64)>::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for (e, c) in pairs {
            let entry = terms.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(&e);
            }
        }
        Ok(FormalCharacter { terms })
    }
}

/// Character of the Weyl module of highest weight `r`:
/// `e^r + e^(r-2) + ... + e^(-r)`.
pub fn weyl_character(r: Weight) -> FormalCharacter {
    let r = r as i64;
    FormalCharacter {
        terms: (0..=r).map(|j| (r - 2 * j, 1)).collect(),
    }
}

/// Character of the simple module of highest weight `r` in characteristic p,
/// computed digit by digit from the twisted tensor product decomposition.
pub fn simple_character(r: Weight, p: Prime) -> FormalCharacter {
    let mut result = FormalCharacter::one();
    for (i, d) in padic_digits(r, p).into_iter().enumerate() {
        if d != 0 {
            result = result.multiply(&weyl_character(d).frobenius_twist(p, i as u32));
        }
    }
    result
}

/// Character of the indecomposable tilting module of highest weight
/// `u <= 2p-2`. Simple for `u <= p-1`; for larger `u` it has Weyl
/// factors of highest weights `u` and `2p-2-u`.
pub fn fundamental_tilting_character(u: Weight, p: Prime) -> Result<FormalCharacter, Error> {
    let reflected = tilde(u, p)?;
    let mut ch = weyl_character(u);
    if u > p.get() - 1 {
        ch.add_scaled(&weyl_character(2 * p.get() - 2 - u), 1);
        debug_assert_eq!(2 * p.get() - 2 - u, reflected);
    }
    Ok(ch)
}

/// Character of the indecomposable tilting module of highest weight `u`,
/// computed from the admissible expansion of `u`.
pub fn tilting_character(u: Weight, p: Prime) -> FormalCharacter {
    let mut result = FormalCharacter::one();
    for (i, d) in admissible_expansion(u, p).digits().iter().enumerate() {
        if *d != 0 {
            let factor =
                fundamental_tilting_character(*d, p).expect("admissible digits are at most 2p-2");
            result = result.multiply(&factor.frobenius_twist(p, i as u32));
        }
    }
    result
}

/// Character of the direct sum of simples described by `factors`.
pub fn character_from_factors(factors: &FactorMultiset, p: Prime) -> FormalCharacter {
    let mut result = FormalCharacter::zero();
    for (&w, &mult) in factors {
        result.add_scaled(&simple_character(w, p), mult as i64);
    }
    result
}

/// Writes `ch` as a nonnegative sum of simple characters by repeatedly
/// stripping the highest weight.
///
/// Fails with `NotAModuleCharacter` when the input is not such a sum, which
/// the peeling detects as a negative leading coefficient or a leftover term
/// of negative exponent.
pub fn peel_into_simples(ch: &FormalCharacter, p: Prime) -> Result<FactorMultiset, Error> {
    let mut rest = ch.clone();
    let mut factors = FactorMultiset::new();
    while let Some(top) = rest.max_exponent() {
        let mult = rest.coeff(top);
        if top < 0 || mult < 0 {
            return Err(Error::NotAModuleCharacter(format!(
                "leading term {mult} * e^{top} cannot come from a direct sum of simples"
            )));
        }
        rest.add_scaled(&simple_character(top as Weight, p), -mult);
        factors.insert(top as Weight, mult as u64);
    }
    Ok(factors)
}

/// Writes `ch` as an integer combination of Weyl characters. Every character
/// symmetric under negating exponents has exactly one such expression;
/// asymmetric input fails with `NotAModuleCharacter`.
pub fn peel_into_weyls(ch: &FormalCharacter) -> Result<WeylMultiset, Error> {
    let mut rest = ch.clone();
    let mut weights = WeylMultiset::new();
    while let Some(top) = rest.max_exponent() {
        if top < 0 {
            return Err(Error::NotAModuleCharacter(format!(
                "leftover term at exponent {top} is not in the span of Weyl characters"
            )));
        }
        let mult = rest.coeff(top);
        rest.add_scaled(&weyl_character(top as Weight), -mult);
        weights.insert(top as Weight, mult);
    }
    Ok(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn weyl_basics() {
        let ch = weyl_character(3);
        assert_eq!(
            ch.terms().collect::<Vec<_>>(),
            vec![(-3, 1), (-1, 1), (1, 1), (3, 1)]
        );
        assert_eq!(ch.dim(), 4);
        assert_eq!(weyl_character(0), FormalCharacter::one());
    }

    #[test]
    fn multiply_small() {
        let sq = weyl_character(1).multiply(&weyl_character(1));
        assert_eq!(
            sq.terms().collect::<Vec<_>>(),
            vec![(-2, 1), (0, 2), (2, 1)]
        );
        let zero = FormalCharacter::zero();
        assert!(zero.multiply(&sq).is_zero());
    }

    #[test]
    fn simple_character_examples() {
        let ch = simple_character(3, p(2));
        assert_eq!(
            ch.terms().collect::<Vec<_>>(),
            vec![(-3, 1), (-1, 1), (1, 1), (3, 1)]
        );
        // Restricted weights give Weyl characters.
        for pv in [2u64, 3, 5, 7] {
            for r in 0..pv {
                assert_eq!(simple_character(r, p(pv)), weyl_character(r));
            }
        }
    }

    #[test]
    fn simple_dimension_is_product_of_digit_dimensions() {
        for pv in [2u64, 3, 5, 7] {
            let pr = p(pv);
            for r in 0..=500 {
                let expected: i64 = padic_digits(r, pr).iter().map(|&d| d as i64 + 1).product();
                assert_eq!(simple_character(r, pr).dim(), expected, "p={pv}, r={r}");
            }
        }
    }

    #[test]
    fn fundamental_tilting_characters() {
        let t4 = fundamental_tilting_character(4, p(3)).unwrap();
        assert_eq!(
            t4.terms().collect::<Vec<_>>(),
            vec![(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)]
        );
        for pv in [2u64, 3, 5, 7] {
            let pr = p(pv);
            for u in 0..pv {
                let ch = fundamental_tilting_character(u, pr).unwrap();
                assert_eq!(ch, simple_character(u, pr));
            }
            for u in pv..=2 * pv - 2 {
                let ch = fundamental_tilting_character(u, pr).unwrap();
                assert_eq!(ch.dim(), 2 * pv as i64);
            }
            assert!(fundamental_tilting_character(2 * pv - 1, pr).is_err());
        }
    }

    #[test]
    fn tilting_character_from_expansion() {
        // 14 = 2 + 2*2 + 2*4 in the admissible expansion at p = 2, so the
        // tilting character is a threefold twisted product of dimension 64.
        let ch = tilting_character(14, p(2));
        assert_eq!(ch.dim(), 64);
        assert_eq!(ch.max_exponent(), Some(14));
        assert_eq!(ch.coeff(14), 1);

        // Below p the tilting module is simple.
        assert_eq!(tilting_character(4, p(5)), simple_character(4, p(5)));
    }

    #[test]
    fn peel_product_of_simples() {
        let pr = p(2);
        let product = simple_character(1, pr).multiply(&simple_character(1, pr));
        let factors = peel_into_simples(&product, pr).unwrap();
        assert_eq!(factors, FactorMultiset::from([(2, 1), (0, 2)]));
    }

    #[test]
    fn peel_rejects_non_module_characters() {
        let pr = p(2);
        // 1 - e^2 - e^(-2): negative leading coefficient.
        let mut ch = FormalCharacter::one();
        ch.add_scaled(&simple_character(2, pr), -1);
        assert!(matches!(
            peel_into_simples(&ch, pr),
            Err(Error::NotAModuleCharacter(_))
        ));

        // A bare e^1 is not symmetric.
        let lopsided: FormalCharacter = serde_json::from_str("[[1, 1]]").unwrap();
        assert!(matches!(
            peel_into_simples(&lopsided, pr),
            Err(Error::NotAModuleCharacter(_))
        ));
        assert!(matches!(
            peel_into_weyls(&lopsided),
            Err(Error::NotAModuleCharacter(_))
        ));
    }

    #[test]
    fn weyl_multiset_of_simples() {
        assert_eq!(
            peel_into_weyls(&simple_character(3, p(3))).unwrap(),
            WeylMultiset::from([(3, 1), (1, -1)])
        );
        // 5 = 2*3 - 1, and Weyl modules of such weights are simple.
        assert_eq!(
            peel_into_weyls(&simple_character(5, p(3))).unwrap(),
            WeylMultiset::from([(5, 1)])
        );
        assert_eq!(
            peel_into_weyls(&simple_character(5, p(2))).unwrap(),
            WeylMultiset::from([(5, 1), (1, -1)])
        );
    }

    #[test]
    fn serde_layout() {
        let ch = simple_character(3, p(2));
        assert_eq!(
            serde_json::to_string(&ch).unwrap(),
            "[[3,1],[1,1],[-1,1],[-3,1]]"
        );
        let back: FormalCharacter = serde_json::from_str("[[3,1],[1,1],[-1,1],[-3,1]]").unwrap();
        assert_eq!(back, ch);
    }

    proptest! {
        #[test]
        fn peel_simples_round_trip(
            pv in prop::sample::select(vec![2u64, 3, 5, 7]),
            entries in prop::collection::btree_map(0u64..40, 1u64..4, 0..4),
        ) {
            let pr = p(pv);
            let ch = character_from_factors(&entries, pr);
            prop_assert_eq!(peel_into_simples(&ch, pr).unwrap(), entries);
        }

        #[test]
        fn peel_weyls_round_trip(
            entries in prop::collection::btree_map(0u64..40, -3i64..4, 0..4),
        ) {
            let entries: WeylMultiset =
                entries.into_iter().filter(|&(_, c)| c != 0).collect();
            let mut ch = FormalCharacter::zero();
            for (&w, &c) in &entries {
                ch.add_scaled(&weyl_character(w), c);
            }
            prop_assert_eq!(peel_into_weyls(&ch).unwrap(), entries);
        }

        #[test]
        fn multiply_matches_dimension(
            a in 0u64..60,
            b in 0u64..60,
        ) {
            let product = weyl_character(a).multiply(&weyl_character(b));
            prop_assert_eq!(product.dim(), (a as i64 + 1) * (b as i64 + 1));
            prop_assert_eq!(product.max_exponent(), Some((a + b) as i64));
        }
    }
}
