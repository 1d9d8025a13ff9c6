//! Classification of indecomposable summands and tilting-product tests.
//!
//! A summand profile can be simple, tilting, both, or neither; the test
//! reads directly off the digit vector. This module also decides when a
//! whole tensor product of two simples is indecomposable, when it equals
//! a single indecomposable tilting module, and enumerates all ways to
//! realize a given tilting module as such a product.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::decompose::{decompose, SummandProfile};
use crate::padic::{admissible_expansion, padic_digits, weight_from_digits, Prime, Weight};

/// What kind of module an indecomposable summand is.
///
/// The first three variants carry the highest weight of the summand.
/// `SimpleTilting` covers the overlap where the summand is simultaneously
/// simple and tilting (for example any summand with a single digit
/// `<= p-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SummandClass {
    /// Tilting but not simple: isomorphic to `T(w)`.
    Tilting(Weight),
    /// Simple but not tilting: isomorphic to `L(w)`.
    Simple(Weight),
    /// Simple and tilting at once: `L(w) = T(w)`.
    SimpleTilting(Weight),
    /// Neither simple nor tilting.
    Neither,
}

impl SummandClass {
    /// Highest weight of the classified summand, when the class carries one.
    pub fn weight(&self) -> Option<Weight> {
        match *self {
            SummandClass::Tilting(w) | SummandClass::Simple(w) | SummandClass::SimpleTilting(w) => {
                Some(w)
            }
            SummandClass::Neither => None,
        }
    }

    /// True for `Tilting` and `SimpleTilting`.
    pub fn is_tilting(&self) -> bool {
        matches!(
            self,
            SummandClass::Tilting(_) | SummandClass::SimpleTilting(_)
        )
    }

    /// True for `Simple` and `SimpleTilting`.
    pub fn is_simple(&self) -> bool {
        matches!(
            self,
            SummandClass::Simple(_) | SummandClass::SimpleTilting(_)
        )
    }
}

/// Classify a summand profile as simple, tilting, both, or neither.
///
/// With trimmed digits `(u_0, ..., u_m)` (no trailing zeros beyond the
/// first entry), the summand is simple exactly when every digit is at most
/// `p-1`, and tilting exactly when every digit below the top one is at
/// least `p-1`. The top digit is unconstrained for the tilting test: a top
/// digit in `p..=2p-2` corresponds to an admissible expansion one digit
/// longer whose own top digit is zero.
pub fn classify_summand(profile: &SummandProfile) -> SummandClass {
    let p = profile.prime().get();
    let digits = profile.digits();
    let w = profile.highest_weight();
    let simple = digits.iter().all(|&d| d < p);
    let tilting = digits[..digits.len() - 1].iter().all(|&d| d >= p - 1);
    match (simple, tilting) {
        (true, true) => SummandClass::SimpleTilting(w),
        (true, false) => SummandClass::Simple(w),
        (false, true) => SummandClass::Tilting(w),
        (false, false) => SummandClass::Neither,
    }
}

/// Decide whether `L(r) ⊗ L(s)` is indecomposable, digit by digit.
///
/// The product is indecomposable exactly when for every position `i`,
/// either one of the digits `δ_i(r)`, `δ_i(s)` is zero, or their sum is
/// `p` with one of them equal to `1`. At `p = 2` every digit is `0` or
/// `1`, so one of the two conditions always holds and every product is
/// indecomposable.
pub fn is_indecomposable_product(r: Weight, s: Weight, p: Prime) -> bool {
    let pv = p.get();
    let mut a = padic_digits(r, p);
    let mut b = padic_digits(s, p);
    let len = a.len().max(b.len());
    a.resize(len, 0);
    b.resize(len, 0);
    a.iter()
        .zip(&b)
        .all(|(&x, &y)| x == 0 || y == 0 || (x + y == pv && (x == 1 || y == 1)))
}

/// Decide whether `L(r) ⊗ L(s)` is an indecomposable tilting module.
///
/// Writing `δ_i` for the digits of `r` and `s` padded to the same length
/// `m+1`, the product is indecomposable tilting exactly when all of the
/// following hold:
///
/// * `p-1 <= δ_i(r) + δ_i(s) <= p` for every `i < m`;
/// * `δ_m(r) + δ_m(s) <= p`;
/// * whenever a digit sum equals `p`, one of the two digits is `1`;
/// * whenever a digit sum is less than `p`, one of the two digits is `0`.
///
/// In that case the product is `T(r+s)` and `Some(r+s)` is returned.
pub fn indecomposable_tilting_product(r: Weight, s: Weight, p: Prime) -> Option<Weight> {
    let pv = p.get();
    let mut a = padic_digits(r, p);
    let mut b = padic_digits(s, p);
    let len = a.len().max(b.len());
    a.resize(len, 0);
    b.resize(len, 0);
    for i in 0..len {
        let (x, y) = (a[i], b[i]);
        let sum = x + y;
        if sum > pv {
            return None;
        }
        if i + 1 < len && sum < pv - 1 {
            return None;
        }
        if sum == pv && x != 1 && y != 1 {
            return None;
        }
        if sum < pv && x != 0 && y != 0 {
            return None;
        }
    }
    Some(r + s)
}

/// An unordered pair of simple highest weights multiplying to a tilting
/// module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FactorizationPair {
    /// The larger weight.
    pub r: Weight,
    /// The smaller weight.
    pub s: Weight,
}

impl FactorizationPair {
    /// Build a pair, swapping so that `r >= s`.
    pub fn new(a: Weight, b: Weight) -> Self {
        FactorizationPair {
            r: a.max(b),
            s: a.min(b),
        }
    }
}

/// All factorizations of a tilting module as a tensor product of simples,
/// together with the counts that the digit pattern predicts.
///
/// The enumeration is the authoritative answer. The `predicted_*` fields
/// restate it from the admissible digits alone and are reported for
/// comparison, never asserted: for odd primes `predicted_unordered` counts
/// unordered pairs as `2^m` (top admissible digit nonzero) or `2^(m-1)`
/// (top digit zero), where `m` is the largest digit position. At `p = 2`
/// the same exponent rule is ambiguous; `predicted_ordered` counts ordered
/// pairs as `2^t` with `t` the number of admissible digits equal to `1`
/// anywhere (which matches the enumeration everywhere we have checked),
/// while `predicted_unordered` restricts `t` to positions below `m` (which
/// overcounts when the top digit is zero, e.g. at weight 5).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingFactorizations {
    /// The highest weight `u` of the tilting module `T(u)`.
    pub weight: Weight,
    /// The prime.
    pub p: Prime,
    /// Unordered pairs with `L(r) ⊗ L(s) = T(u)`, sorted by descending `r`.
    pub pairs: Vec<FactorizationPair>,
    /// Number of ordered pairs `(r, s)` with `L(r) ⊗ L(s) = T(u)`.
    pub ordered_count: u64,
    /// Digit-pattern prediction for the unordered count, when one applies.
    pub predicted_unordered: Option<u64>,
    /// Digit-pattern prediction for the ordered count (`p = 2` only).
    pub predicted_ordered: Option<u64>,
}

impl TiltingFactorizations {
    /// Number of unordered factorizations actually found.
    pub fn unordered_count(&self) -> u64 {
        self.pairs.len() as u64
    }

    /// Whether the unordered prediction agrees with the enumeration.
    pub fn unordered_prediction_matches(&self) -> Option<bool> {
        self.predicted_unordered
            .map(|n| n == self.unordered_count())
    }

    /// Whether the ordered prediction agrees with the enumeration.
    pub fn ordered_prediction_matches(&self) -> Option<bool> {
        self.predicted_ordered.map(|n| n == self.ordered_count)
    }
}

/// Enumerate the pairs `(r, s)` for which `L(r) ⊗ L(s) ≅ T(u)`.
///
/// Work digit by digit on the admissible expansion `u = Σ u_i p^i`. A
/// digit `u_i = 0` forces both factor digits to zero; `1 <= u_i <= p-1`
/// forces `{u_i, 0}`; `u_i = p` forces `{p-1, 1}`; any digit in
/// `p+1..=2p-2` admits no splitting at all and the pair set is empty.
/// Factor weights are reassembled from the digit choices, so each factor
/// is a genuine `p`-adic expansion and the product decomposes by digitwise
/// tensor products of the fundamental pieces.
pub fn enumerate_tilting_factorizations(u: Weight, p: Prime) -> TiltingFactorizations {
    let pv = p.get();
    let expansion = admissible_expansion(u, p);
    let digits = expansion.digits();

    let mut ordered: Vec<(Weight, Weight)> = vec![(0, 0)];
    for (i, &d) in digits.iter().enumerate() {
        let choices: Vec<(u64, u64)> = if d == 0 {
            vec![(0, 0)]
        } else if d < pv {
            vec![(d, 0), (0, d)]
        } else if d == pv {
            if pv == 2 {
                vec![(1, 1)]
            } else {
                vec![(pv - 1, 1), (1, pv - 1)]
            }
        } else {
            Vec::new()
        };
        let scale = pv.pow(i as u32);
        let mut next = Vec::with_capacity(ordered.len() * choices.len().max(1));
        for &(r0, s0) in &ordered {
            for &(x, y) in &choices {
                next.push((r0 + x * scale, s0 + y * scale));
            }
        }
        ordered = next;
        if ordered.is_empty() {
            break;
        }
    }

    let ordered_count = ordered.len() as u64;
    let mut set: BTreeSet<FactorizationPair> = BTreeSet::new();
    for (r, s) in ordered {
        set.insert(FactorizationPair::new(r, s));
    }
    let mut pairs: Vec<FactorizationPair> = set.into_iter().collect();
    pairs.sort_by(|a, b| b.cmp(a));

    let (predicted_unordered, predicted_ordered) = predicted_counts(digits, pv);

    TiltingFactorizations {
        weight: u,
        p,
        pairs,
        ordered_count,
        predicted_unordered,
        predicted_ordered,
    }
}

/// Factorization counts predicted from the admissible digits alone.
///
/// Returns `(unordered, ordered)` predictions; `None` entries mean the
/// digit pattern makes no prediction of that kind. Any digit above `p`
/// admits no splitting and forces count zero outright.
fn predicted_counts(digits: &[u64], pv: u64) -> (Option<u64>, Option<u64>) {
    if digits.iter().any(|&d| d > pv) {
        return (Some(0), if pv == 2 { Some(0) } else { None });
    }
    let m = digits.len() - 1;
    if pv == 2 {
        let t_all = digits.iter().filter(|&&d| d == 1).count() as u32;
        let t_below = digits[..m].iter().filter(|&&d| d == 1).count() as u32;
        return (Some(1u64 << t_below), Some(1u64 << t_all));
    }
    if digits == [0] {
        return (Some(1), None);
    }
    let unordered = if digits[m] > 0 {
        1u64 << m
    } else {
        1u64 << m.saturating_sub(1)
    };
    (Some(unordered), None)
}

/// Find weights `r >= s` with `L(r) ⊗ L(s)` containing `T(u)` as a summand.
///
/// Take the `p`-adic digits of the choice `r_i = min(u_i, p-1)`,
/// `s_i = u_i - r_i` over the admissible expansion of `u`. Each digit sum
/// `r_i + s_i = u_i` lands in the corresponding small tensor product's
/// surviving weight set because the largest listed weight is never struck,
/// so `T(u)` always appears among the summands of `L(r) ⊗ L(s)`.
pub fn construct_tensor_containing(u: Weight, p: Prime) -> (Weight, Weight) {
    let pv = p.get();
    let expansion = admissible_expansion(u, p);
    let rd: Vec<u64> = expansion.digits().iter().map(|&d| d.min(pv - 1)).collect();
    let sd: Vec<u64> = expansion
        .digits()
        .iter()
        .zip(&rd)
        .map(|(&d, &x)| d - x)
        .collect();
    let r = weight_from_digits(&rd, p);
    let s = weight_from_digits(&sd, p);
    (r.max(s), r.min(s))
}

/// Exhaustive check that `L(r) ⊗ L(s) ≅ T(u)`, via the full decomposition.
///
/// Used as an oracle in tests: decompose the product and ask for a single
/// summand classified as tilting with highest weight `u`.
pub fn product_is_this_tilting(r: Weight, s: Weight, u: Weight, p: Prime) -> bool {
    if r + s != u {
        return false;
    }
    let dec = decompose(r, s, p);
    if !dec.is_indecomposable() {
        return false;
    }
    classify_summand(&dec.summands()[0]).is_tilting()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{simple_character, tilting_character};

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn fp(r: Weight, s: Weight) -> FactorizationPair {
        FactorizationPair::new(r, s)
    }

    #[test]
    fn classify_examples() {
        let mk = |digits: &[u64], pv: u64| SummandProfile::new(p(pv), digits.to_vec()).unwrap();

        // Single fundamental digits.
        assert_eq!(
            classify_summand(&mk(&[2], 3)),
            SummandClass::SimpleTilting(2)
        );
        assert_eq!(classify_summand(&mk(&[4], 3)), SummandClass::Tilting(4));
        assert_eq!(
            classify_summand(&mk(&[0], 2)),
            SummandClass::SimpleTilting(0)
        );

        // All digits at least p-1 below the top: tilting.
        assert_eq!(
            classify_summand(&mk(&[2, 2, 1], 3)),
            SummandClass::SimpleTilting(17)
        );
        assert_eq!(classify_summand(&mk(&[4, 2], 3)), SummandClass::Tilting(10));
        assert_eq!(classify_summand(&mk(&[3, 1], 3)), SummandClass::Tilting(6));
        assert_eq!(classify_summand(&mk(&[4, 4], 3)), SummandClass::Tilting(16));

        // A small digit below the top breaks the tilting property.
        assert_eq!(classify_summand(&mk(&[1, 1], 3)), SummandClass::Simple(4));
        assert_eq!(classify_summand(&mk(&[1, 2], 3)), SummandClass::Simple(7));
        assert_eq!(classify_summand(&mk(&[0, 4], 3)), SummandClass::Neither);
        assert_eq!(classify_summand(&mk(&[1, 4], 3)), SummandClass::Neither);

        // Trailing zeros are trimmed at construction, so T(2) at p=3
        // built from digits (2, 0) classifies by the single digit 2.
        assert_eq!(
            classify_summand(&mk(&[2, 0], 3)),
            SummandClass::SimpleTilting(2)
        );
    }

    #[test]
    fn classification_matches_characters() {
        // A summand is simple iff its character equals a simple character,
        // and tilting iff its character equals a tilting character, both
        // at the summand's highest weight.
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for r in 0..=40u64 {
                for s in 0..=r {
                    for profile in decompose(r, s, pr).summands() {
                        let class = classify_summand(profile);
                        let w = profile.highest_weight();
                        if let Some(cw) = class.weight() {
                            assert_eq!(cw, w);
                        }
                        let ch = profile.character();
                        assert_eq!(
                            class.is_simple(),
                            ch == simple_character(w, pr),
                            "simple test failed at p={pv}, r={r}, s={s}, w={w}"
                        );
                        assert_eq!(
                            class.is_tilting(),
                            ch == tilting_character(w, pr),
                            "tilting test failed at p={pv}, r={r}, s={s}, w={w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn indecomposable_iff_single_summand() {
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for r in 0..=80u64 {
                for s in 0..=r {
                    let expected = decompose(r, s, pr).is_indecomposable();
                    assert_eq!(
                        is_indecomposable_product(r, s, pr),
                        expected,
                        "p={pv}, r={r}, s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn products_at_two_are_always_indecomposable() {
        let pr = p(2);
        for r in 0..=200u64 {
            for s in 0..=r {
                assert!(is_indecomposable_product(r, s, pr));
            }
        }
    }

    #[test]
    fn tilting_product_examples() {
        // L(2) ⊗ L(2) at p=3 decomposes as T(4) ⊕ T(2): not indecomposable.
        assert_eq!(indecomposable_tilting_product(2, 2, p(3)), None);
        // L(4) ⊗ L(2) at p=3: digits (1,1) and (2,0), sums (3,1): the low
        // sum is p with a digit 1, the top sum 1 has a zero digit: T(6).
        assert_eq!(indecomposable_tilting_product(4, 2, p(3)), Some(6));
        // L(5) ⊗ L(1) at p=3: digits (2,1) and (1,0): T(6).
        assert_eq!(indecomposable_tilting_product(5, 1, p(3)), Some(6));
        // L(8) ⊗ L(4) at p=3: digits (2,2) and (1,1), sums (3,3): T(12).
        assert_eq!(indecomposable_tilting_product(8, 4, p(3)), Some(12));
        // L(3) ⊗ L(2) at p=3: digits (0,1) and (2,0), sums (2,1): each sum
        // below p has a zero digit and the low sum is p-1: T(5).
        assert_eq!(indecomposable_tilting_product(3, 2, p(3)), Some(5));
        // L(1) ⊗ L(1) at p=2: digit sum 2 = p with both digits 1: T(2).
        assert_eq!(indecomposable_tilting_product(1, 1, p(2)), Some(2));
        // L(3) ⊗ L(3) at p=2: digit sums (2,2), every sum p with digits 1.
        assert_eq!(indecomposable_tilting_product(3, 3, p(2)), Some(6));
        // L(2) ⊗ L(1) at p=3: single position, sum 3 = p with a 1: T(3).
        assert_eq!(indecomposable_tilting_product(2, 1, p(3)), Some(3));
        // L(4) ⊗ L(4) at p=3: low digit sum 2+2 = 4 > p: fails.
        assert_eq!(indecomposable_tilting_product(4, 4, p(3)), None);
        // L(4) ⊗ L(1) at p=3: low digit sum 1+1 = 2 < p with no zero digit.
        assert_eq!(indecomposable_tilting_product(4, 1, p(3)), None);
    }

    #[test]
    fn tilting_product_matches_decomposition_oracle() {
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for r in 0..=60u64 {
                for s in 0..=r {
                    let claimed = indecomposable_tilting_product(r, s, pr);
                    let actual = product_is_this_tilting(r, s, r + s, pr);
                    assert_eq!(
                        claimed.is_some(),
                        actual,
                        "p={pv}, r={r}, s={s}, claimed={claimed:?}"
                    );
                    if let Some(u) = claimed {
                        assert_eq!(u, r + s);
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_examples() {
        // T(6) at p=3 has admissible digits (3, 1): the digit 3 = p splits
        // as {2,1}, the top digit 1 as {1,0}: pairs {(5,1), (4,2)}.
        let f = enumerate_tilting_factorizations(6, p(3));
        assert_eq!(f.pairs, vec![fp(5, 1), fp(4, 2)]);
        assert_eq!(f.ordered_count, 4);
        assert_eq!(f.predicted_unordered, Some(2));

        // T(5) at p=2 has admissible digits (1, 2, 0): the low digit 1
        // splits two ways, the digit 2 = p forces (1, 1): pairs {(3, 2)}.
        let f = enumerate_tilting_factorizations(5, p(2));
        assert_eq!(f.pairs, vec![fp(3, 2)]);
        assert_eq!(f.ordered_count, 2);
        assert_eq!(f.predicted_ordered, Some(2));
        // The below-the-top digit reading overcounts here: flagged, not hidden.
        assert_eq!(f.predicted_unordered, Some(2));
        assert_eq!(f.unordered_prediction_matches(), Some(false));
        assert_eq!(f.ordered_prediction_matches(), Some(true));

        // T(4) at p=3 has admissible digits (4, 0): digit 4 > p, no
        // factorization.
        let f = enumerate_tilting_factorizations(4, p(3));
        assert!(f.pairs.is_empty());
        assert_eq!(f.predicted_unordered, Some(0));

        // T(3) at p=2: admissible digits (1, 1): each digit splits as
        // (1,0) or (0,1): ordered count 4, unordered pairs {(3,0), (2,1)}.
        let f = enumerate_tilting_factorizations(3, p(2));
        assert_eq!(f.pairs, vec![fp(3, 0), fp(2, 1)]);
        assert_eq!(f.ordered_count, 4);
        assert_eq!(f.predicted_ordered, Some(4));
        assert_eq!(f.predicted_unordered, Some(2));
        assert_eq!(f.unordered_prediction_matches(), Some(true));

        // T(2) at p=2: admissible digits (2, 0): digit 2 = p forces (1,1).
        let f = enumerate_tilting_factorizations(2, p(2));
        assert_eq!(f.pairs, vec![fp(1, 1)]);
        assert_eq!(f.ordered_count, 1);
        assert_eq!(f.predicted_ordered, Some(1));

        // T(0): only the trivial factorization.
        let f = enumerate_tilting_factorizations(0, p(5));
        assert_eq!(f.pairs, vec![fp(0, 0)]);
        assert_eq!(f.predicted_unordered, Some(1));
    }

    #[test]
    fn factorizations_match_exhaustive_scan() {
        // Ground truth: scan all pairs r >= s with r + s = u and keep
        // those whose product is indecomposable tilting.
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for u in 0..=80u64 {
                let enumerated = enumerate_tilting_factorizations(u, pr);
                let mut scanned = Vec::new();
                for r in 0..=u {
                    let s = u - r;
                    if s > r {
                        continue;
                    }
                    if product_is_this_tilting(r, s, u, pr) {
                        scanned.push(fp(r, s));
                    }
                }
                scanned.sort_by(|a, b| b.cmp(a));
                assert_eq!(
                    enumerated.pairs, scanned,
                    "factorization mismatch at p={pv}, u={u}"
                );
            }
        }
    }

    #[test]
    fn factorization_pairs_really_multiply_to_the_tilting_character() {
        for pv in [2u64, 3, 5, 7] {
            let pr = p(pv);
            for u in 0..=120u64 {
                let f = enumerate_tilting_factorizations(u, pr);
                let target = tilting_character(u, pr);
                for pair in &f.pairs {
                    let prod = simple_character(pair.r, pr).multiply(&simple_character(pair.s, pr));
                    assert_eq!(prod, target, "p={pv}, u={u}, pair={pair:?}");
                }
            }
        }
    }

    #[test]
    fn factorizability_iff_digits_allow_it() {
        // Nonempty pair set exactly when every admissible digit below the
        // top is p-1 or p (digits above p never split; the top digit is
        // at most p-1 by construction).
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for u in 0..=150u64 {
                let f = enumerate_tilting_factorizations(u, pr);
                let expansion = admissible_expansion(u, pr);
                let digits = expansion.digits();
                let allowed = digits[..digits.len() - 1]
                    .iter()
                    .all(|&d| d == pv - 1 || d == pv);
                assert_eq!(!f.pairs.is_empty(), allowed, "p={pv}, u={u}");
            }
        }
    }

    #[test]
    fn ordered_reading_always_matches_at_two() {
        let pr = p(2);
        for u in 0..=300u64 {
            let f = enumerate_tilting_factorizations(u, pr);
            assert_eq!(
                f.ordered_prediction_matches(),
                Some(true),
                "u={u}: predicted {:?}, found {}",
                f.predicted_ordered,
                f.ordered_count
            );
        }
    }

    #[test]
    fn unordered_reading_at_two_fails_exactly_on_even_tops() {
        // The below-the-top digit count matches the unordered enumeration
        // exactly when the top admissible digit is 1 or no digit is 1 at
        // all; a zero top digit above 1-digits makes it overcount by 2.
        let pr = p(2);
        for u in 1..=300u64 {
            let f = enumerate_tilting_factorizations(u, pr);
            let expansion = admissible_expansion(u, pr);
            let digits = expansion.digits();
            let ones = digits.iter().filter(|&&d| d == 1).count();
            let top_is_zero = *digits.last().unwrap() == 0;
            let expect_match = !(top_is_zero && ones > 0);
            assert_eq!(
                f.unordered_prediction_matches(),
                Some(expect_match),
                "u={u}, digits={digits:?}"
            );
        }
    }

    #[test]
    fn closed_form_counts_at_odd_primes() {
        // For p > 2 the prediction counts unordered pairs: 2^m when the
        // top admissible digit is nonzero, 2^(m-1) when it vanishes.
        let pr = p(3);
        // u = 21 at p=3 has admissible digits (3, 3, 1): top nonzero,
        // m = 2: four unordered factorizations.
        let f = enumerate_tilting_factorizations(21, pr);
        assert_eq!(f.predicted_unordered, Some(4));
        assert_eq!(f.unordered_count(), 4);
        // u = 12 at p=3 has admissible digits (3, 3, 0): top zero: two.
        let f = enumerate_tilting_factorizations(12, pr);
        assert_eq!(f.predicted_unordered, Some(2));
        assert_eq!(f.unordered_count(), 2);

        for pv in [3u64, 5, 7] {
            let pr = p(pv);
            for u in 0..=200u64 {
                let f = enumerate_tilting_factorizations(u, pr);
                assert_eq!(
                    f.unordered_prediction_matches(),
                    Some(true),
                    "u={u}, p={pv}"
                );
            }
        }
    }

    #[test]
    fn closed_form_counts_at_two() {
        // Ordered counts: 2^t where t is the number of admissible digits
        // equal to 1, over all positions including the top.
        let pr = p(2);
        for (u, expected) in [(0u64, 1u64), (1, 2), (2, 1), (3, 4), (4, 2), (6, 1), (7, 8)] {
            let f = enumerate_tilting_factorizations(u, pr);
            assert_eq!(f.predicted_ordered, Some(expected), "u={u}");
            assert_eq!(f.ordered_count, expected, "u={u}");
        }
    }

    #[test]
    fn construct_tensor_examples() {
        // T(4) at p=3: admissible digits (4, 0), low split min(4,2) = 2:
        // the pair (2, 2).
        assert_eq!(construct_tensor_containing(4, p(3)), (2, 2));
        // T(14) at p=2: admissible digits (2, 2, 2, 0): each digit 2
        // splits as 1+1: the pair (7, 7).
        assert_eq!(construct_tensor_containing(14, p(2)), (7, 7));
        // T(6) at p=3: digits (3, 1): r = 2 + 1*3 = 5, s = 1.
        assert_eq!(construct_tensor_containing(6, p(3)), (5, 1));
        // Small weights factor trivially.
        assert_eq!(construct_tensor_containing(3, p(5)), (3, 0));
    }

    #[test]
    fn constructed_tensor_contains_the_tilting_summand() {
        for pv in [2u64, 3, 5] {
            let pr = p(pv);
            for u in 0..=100u64 {
                let (r, s) = construct_tensor_containing(u, pr);
                assert_eq!(r + s, u);
                let dec = decompose(r, s, pr);
                let found = dec.summands().iter().any(|profile| {
                    profile.highest_weight() == u && classify_summand(profile).is_tilting()
                });
                assert!(found, "no tilting summand T({u}) at p={pv} in ({r}, {s})");
            }
        }
    }
}
