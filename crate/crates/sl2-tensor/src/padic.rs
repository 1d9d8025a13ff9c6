//! Base-p arithmetic on dominant weights.
//!
//! Everything downstream works digit by digit: the decomposition of a tensor
//! product, the classification of its summands, and the structure reports all
//! read off p-adic digits, admissible digit vectors, and the reflected digit
//! `tilde`.

use crate::error::Error;
use serde::{Deserialize, Deserializer, Serialize};

/// A dominant weight of SL2, identified with a nonnegative integer.
pub type Weight = u64;

/// A verified prime characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    /// Validates primality by deterministic trial division.
    pub fn new(p: u64) -> Result<Prime, Error> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<'de> Deserialize<'de> for Prime {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = u64::deserialize(deserializer)?;
        Prime::new(raw).map_err(serde::de::Error::custom)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The base-p digits of `r`, lowest power first. `0` has digits `[0]`.
pub fn padic_digits(r: Weight, p: Prime) -> Vec<u64> {
    let p = p.get();
    if r == 0 {
        return vec![0];
    }
    let mut digits = Vec::new();
    let mut rest = r;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    digits
}

/// The digit of `r` at position `i`, zero beyond the last digit.
pub fn digit(r: Weight, p: Prime, i: u32) -> u64 {
    (r / p.get().pow(i)) % p.get()
}

/// Reassembles a weight from base-p digits (lowest power first). Digits may
/// exceed p-1; carries are folded in, so this also evaluates admissible
/// digit vectors.
pub fn weight_from_digits(digits: &[u64], p: Prime) -> Weight {
    let p = p.get();
    digits
        .iter()
        .rev()
        .fold(0u64, |acc, &d| acc.checked_mul(p).unwrap() + d)
}

/// Digit vector of the unique expansion `u = sum u_i p^i` with
/// `p-1 <= u_i <= 2p-2` below the top digit and `0 <= u_m <= p-1` at the top.
///
/// The top digit is 0 exactly when the digit below it is at least p; that
/// convention makes the expansion unique (dropping such a trailing zero would
/// leave an out-of-range top digit).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleExpansion {
    p: Prime,
    digits: Vec<u64>,
}

impl AdmissibleExpansion {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Number of digits, i.e. m+1 for top index m.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> Weight {
        weight_from_digits(&self.digits, self.p)
    }
}

/// Greedy construction of the admissible expansion of `u`.
///
/// At each step the residue of the remaining weight mod p admits exactly one
/// digit in `[p-1, 2p-2]`; the loop stops as soon as the rest fits in the top
/// digit range `[0, p-1]`.
pub fn admissible_expansion(u: Weight, p: Prime) -> AdmissibleExpansion {
    let pv = p.get();
    let mut digits = Vec::new();
    let mut rest = u;
    while rest > pv - 1 {
        let c = rest % pv;
        let d = if c == pv - 1 { pv - 1 } else { c + pv };
        digits.push(d);
        rest = (rest - d) / pv;
    }
    digits.push(rest);
    AdmissibleExpansion { p, digits }
}

/// Reflected digit: `u` for `u <= p-1`, else `2p-2-u`. Defined for
/// `u <= 2p-2`; this is the weight of the socle (and head) of the
/// indecomposable tilting module of highest weight `u` in that range.
pub fn tilde(u: Weight, p: Prime) -> Result<Weight, Error> {
    let pv = p.get();
    if u > 2 * pv - 2 {
        return Err(Error::OutOfRange {
            what: "fundamental tilting weight",
            value: u,
            max: 2 * pv - 2,
        });
    }
    Ok(if u < pv { u } else { 2 * pv - 2 - u })
}

/// The unique data `(t, a, k)` with `r = a p^t - 1 + k p^(t+1)`,
/// `1 <= a <= p-1`, `t >= 1`, attached to a weight `r = -1 mod p`.
///
/// `t` is the least index whose digit differs from p-1 and `a` is one more
/// than that digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueData {
    pub t: u32,
    pub a: u64,
    pub k: u64,
}

pub fn residue_data(r: Weight, p: Prime) -> Result<ResidueData, Error> {
    let pv = p.get();
    if r % pv != pv - 1 {
        return Err(Error::Unsupported(format!(
            "residue data requires r = -1 mod {pv}, got r = {r}"
        )));
    }
    let digits = padic_digits(r, p);
    let t = digits
        .iter()
        .position(|&d| d != pv - 1)
        .unwrap_or(digits.len()) as u32;
    let a = 1 + digit(r, p, t);
    let k = (r + 1 - a * pv.pow(t)) / pv.pow(t + 1);
    Ok(ResidueData { t, a, k })
}
