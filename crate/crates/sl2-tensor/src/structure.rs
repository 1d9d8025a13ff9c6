//! Full module structure for tensor products with `L(1)` and `L(2)`.
//!
//! Tensoring an arbitrary simple module with the two smallest nontrivial
//! simples either splits into simples, stays simple, or produces a single
//! indecomposable module whose complete submodule structure is known: a
//! uniserial tower or a biserial diamond with chains attached. The weights
//! appearing are read off the residue data of `r`, and every module here
//! is a Frobenius-shifted copy of the pattern at `k = 0`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::chars::{
    peel_into_simples, simple_character, tilting_character, FactorMultiset, FormalCharacter,
};
use crate::decompose::SummandProfile;
use crate::error::{Error, Result};
use crate::padic::{
    digit, padic_digits, residue_data, weight_from_digits, Prime, ResidueData, Weight,
};

/// Vertex address inside a [`Diagram`]: (layer index, position in layer),
/// with layer 0 at the bottom (socle) and positions ordered by descending
/// weight.
pub type VertexId = (u32, u32);

/// Structure diagram: composition factors arranged in socle layers, with
/// edges marking non-split extensions between factors in adjacent layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    /// Socle layers, bottom first; weights within a layer descend.
    pub layers: Vec<Vec<Weight>>,
    /// Undirected edges, each stored with its lower vertex first.
    pub edges: BTreeSet<(VertexId, VertexId)>,
}

impl Diagram {
    /// A single chain of factors, bottom first.
    pub fn uniserial(series: &[Weight]) -> Diagram {
        let layers = series.iter().map(|&w| vec![w]).collect();
        let edges = (0..series.len().saturating_sub(1))
            .map(|i| ((i as u32, 0), (i as u32 + 1, 0)))
            .collect();
        Diagram { layers, edges }
    }

    /// A diamond with a chain below and its mirror image above.
    ///
    /// `chain` lists the lower chain bottom-up; its last entry sits just
    /// under the two-vertex middle layer, which holds `middle` sorted
    /// descending. The upper half mirrors the lower half and all four
    /// edges incident to the middle layer are present.
    pub fn diamond(chain: &[Weight], middle: (Weight, Weight)) -> Diagram {
        assert!(
            !chain.is_empty(),
            "a diamond needs at least one chain factor"
        );
        let t = chain.len();
        let mut layers: Vec<Vec<Weight>> = chain.iter().map(|&w| vec![w]).collect();
        layers.push(vec![middle.0.max(middle.1), middle.0.min(middle.1)]);
        layers.extend(chain.iter().rev().map(|&w| vec![w]));

        let mut edges = BTreeSet::new();
        let mid = t as u32;
        for i in 0..t as u32 - 1 {
            edges.insert(((i, 0), (i + 1, 0)));
            edges.insert(((mid + 1 + i, 0), (mid + 2 + i, 0)));
        }
        edges.insert(((mid - 1, 0), (mid, 0)));
        edges.insert(((mid - 1, 0), (mid, 1)));
        edges.insert(((mid, 0), (mid + 1, 0)));
        edges.insert(((mid, 1), (mid + 1, 0)));
        Diagram { layers, edges }
    }

    /// All vertices with their weights, bottom layer first.
    pub fn vertices(&self) -> Vec<(VertexId, Weight)> {
        let mut out = Vec::new();
        for (i, layer) in self.layers.iter().enumerate() {
            for (j, &w) in layer.iter().enumerate() {
                out.push(((i as u32, j as u32), w));
            }
        }
        out
    }

    /// Composition factor multiset over all layers.
    pub fn factors(&self) -> FactorMultiset {
        let mut out = FactorMultiset::new();
        for layer in &self.layers {
            for &w in layer {
                *out.entry(w).or_insert(0) += 1;
            }
        }
        out
    }

    /// The weight at a vertex, if the vertex exists.
    pub fn weight_at(&self, v: VertexId) -> Option<Weight> {
        self.layers
            .get(v.0 as usize)
            .and_then(|layer| layer.get(v.1 as usize))
            .copied()
    }

    /// Every edge connects existing vertices in adjacent layers.
    pub fn edges_are_adjacent(&self) -> bool {
        self.edges.iter().all(|&(a, b)| {
            self.weight_at(a).is_some() && self.weight_at(b).is_some() && a.0 + 1 == b.0
        })
    }

    /// Invariance under flipping the layer order (with positions kept).
    pub fn is_self_dual(&self) -> bool {
        let n = self.layers.len() as u32;
        let flipped_layers: Vec<Vec<Weight>> = self.layers.iter().rev().cloned().collect();
        if flipped_layers != self.layers {
            return false;
        }
        let flip = |v: VertexId| (n - 1 - v.0, v.1);
        self.edges.iter().all(|&(a, b)| {
            let (fa, fb) = (flip(b), flip(a));
            self.edges.contains(&(fa, fb))
        })
    }

    /// The same diagram with every weight scaled, as under a Frobenius
    /// twist.
    fn scaled(self, scale: u64) -> Diagram {
        Diagram {
            layers: self
                .layers
                .into_iter()
                .map(|layer| layer.into_iter().map(|w| w * scale).collect())
                .collect(),
            edges: self.edges,
        }
    }
}

/// One direct summand inside a split structure result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    /// A simple module `L(weight)`.
    Simple {
        /// Highest weight.
        weight: Weight,
    },
    /// `T(base) ⊗ L(k)` twisted `level` times: the standard description of
    /// the non-simple summand when no finer diagram is stated.
    TwistedTilting {
        /// Highest weight of the tilting factor.
        base: Weight,
        /// Highest weight of the twisted simple factor.
        k: Weight,
        /// Number of Frobenius twists applied to the `L(k)` factor.
        level: u32,
    },
    /// A summand whose own structure is known in full.
    Nested(Box<StructureReport>),
}

impl Component {
    /// Formal character of the component.
    pub fn character(&self, p: Prime) -> FormalCharacter {
        match self {
            Component::Simple { weight } => simple_character(*weight, p),
            Component::TwistedTilting { base, k, level } => tilting_character(*base, p)
                .multiply(&simple_character(*k, p).frobenius_twist(p, *level)),
            Component::Nested(report) => report.character(),
        }
    }

    /// Composition factors of the component.
    pub fn factors(&self, p: Prime) -> FactorMultiset {
        match self {
            Component::Simple { weight } => FactorMultiset::from([(*weight, 1)]),
            Component::TwistedTilting { .. } => peel_into_simples(&self.character(p), p)
                .expect("a tilting-times-simple character is a sum of simple characters"),
            Component::Nested(report) => report.factors(),
        }
    }
}

/// The four possible shapes of a structured tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureCase {
    /// The product is simple.
    SimpleResult {
        /// Highest weight.
        weight: Weight,
    },
    /// The product splits; each component is itself understood.
    SplitSum {
        /// The direct summands, by descending highest weight.
        components: Vec<Component>,
    },
    /// Indecomposable with a unique composition series, listed socle first.
    Uniserial {
        /// The series, bottom (socle) first.
        series: Vec<Weight>,
    },
    /// Indecomposable with a diamond diagram.
    Biserial {
        /// The full structure diagram.
        diagram: Diagram,
    },
}

impl StructureCase {
    /// Formal character of the module this case describes.
    pub fn character(&self, p: Prime) -> FormalCharacter {
        match self {
            StructureCase::SimpleResult { weight } => simple_character(*weight, p),
            StructureCase::SplitSum { components } => {
                let mut sum = FormalCharacter::zero();
                for c in components {
                    sum.add_scaled(&c.character(p), 1);
                }
                sum
            }
            StructureCase::Uniserial { series } => {
                let mut sum = FormalCharacter::zero();
                for &w in series {
                    sum.add_scaled(&simple_character(w, p), 1);
                }
                sum
            }
            StructureCase::Biserial { diagram } => {
                let mut sum = FormalCharacter::zero();
                for (_, w) in diagram.vertices() {
                    sum.add_scaled(&simple_character(w, p), 1);
                }
                sum
            }
        }
    }

    /// Composition factor multiset of the module this case describes.
    pub fn factors(&self, p: Prime) -> FactorMultiset {
        let mut out = FactorMultiset::new();
        match self {
            StructureCase::SimpleResult { weight } => {
                out.insert(*weight, 1);
            }
            StructureCase::SplitSum { components } => {
                for c in components {
                    for (w, m) in c.factors(p) {
                        *out.entry(w).or_insert(0) += m;
                    }
                }
            }
            StructureCase::Uniserial { series } => {
                for &w in series {
                    *out.entry(w).or_insert(0) += 1;
                }
            }
            StructureCase::Biserial { diagram } => out = diagram.factors(),
        }
        out
    }

    /// The structure diagram, for the two indecomposable shapes.
    pub fn diagram(&self) -> Option<Diagram> {
        match self {
            StructureCase::Uniserial { series } => Some(Diagram::uniserial(series)),
            StructureCase::Biserial { diagram } => Some(diagram.clone()),
            _ => None,
        }
    }

    /// The case with every weight scaled, as under a Frobenius twist.
    ///
    /// `None` when a component cannot be rewritten by weight scaling
    /// alone (a twisted tilting expression or a nested report).
    fn scaled(self, scale: u64) -> Option<StructureCase> {
        if scale == 1 {
            return Some(self);
        }
        Some(match self {
            StructureCase::SimpleResult { weight } => StructureCase::SimpleResult {
                weight: weight * scale,
            },
            StructureCase::Uniserial { series } => StructureCase::Uniserial {
                series: series.into_iter().map(|w| w * scale).collect(),
            },
            StructureCase::Biserial { diagram } => StructureCase::Biserial {
                diagram: diagram.scaled(scale),
            },
            StructureCase::SplitSum { components } => StructureCase::SplitSum {
                components: components
                    .into_iter()
                    .map(|c| match c {
                        Component::Simple { weight } => Some(Component::Simple {
                            weight: weight * scale,
                        }),
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()?,
            },
        })
    }
}

/// Structure of `L(r) ⊗ L(other)` for `other` in `{1, 2}`.
///
/// `residue`, `family_weights`, `shift_k` and `base_tilting` are present
/// when the governing case is anchored to a congruence family: writing the
/// anchor weight as `a·p^t - 1 + k·p^(t+1)`, the family weights are
/// `w_0 = anchor+1` and `w_i = anchor+1 - 2p^(i-1)`, the shift is `k`, and
/// the whole indecomposable module is `T(a·p^t) ⊗ L(k)` twisted `t+1`
/// times (so for `k = 0` it is the tilting module of highest weight
/// `w_0`). For the delegated product with `L(2)` the anchor is `r+1`
/// rather than `r`; it is always `family_weights[0] - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// The prime.
    pub p: Prime,
    /// Highest weight of the large tensor factor.
    pub r: Weight,
    /// Highest weight of the small tensor factor: 1 or 2.
    pub other: Weight,
    /// The shape of the product.
    pub case: StructureCase,
    /// Residue data of the anchor weight, when a congruence case applies.
    pub residue: Option<ResidueData>,
    /// The weights `w_0, w_1, ...` of the indecomposable pattern.
    pub family_weights: Option<Vec<Weight>>,
    /// The Frobenius shift multiplier `k`.
    pub shift_k: Option<Weight>,
    /// Highest weight of the underlying untwisted tilting module.
    pub base_tilting: Option<Weight>,
}

impl StructureReport {
    /// Formal character of the whole product.
    pub fn character(&self) -> FormalCharacter {
        self.case.character(self.p)
    }

    /// Composition factor multiset of the whole product.
    pub fn factors(&self) -> FactorMultiset {
        self.case.factors(self.p)
    }

    /// The diagram, for the two indecomposable cases.
    pub fn diagram(&self) -> Option<Diagram> {
        self.case.diagram()
    }

    /// Socle weight, when the product is indecomposable with known layers.
    pub fn socle(&self) -> Option<Weight> {
        match &self.case {
            StructureCase::SimpleResult { weight } => Some(*weight),
            StructureCase::Uniserial { series } => series.first().copied(),
            StructureCase::Biserial { diagram } => {
                let bottom = diagram.layers.first()?;
                if bottom.len() == 1 {
                    Some(bottom[0])
                } else {
                    None
                }
            }
            StructureCase::SplitSum { .. } => None,
        }
    }
}

/// The family weights `w_0 = anchor+1`, `w_i = anchor+1 - 2p^(i-1)` for
/// `i = 1..=top`.
fn family(anchor: Weight, p: Prime, top: u32) -> Vec<Weight> {
    let pv = p.get();
    let mut out = vec![anchor + 1];
    for i in 1..=top {
        let w = (anchor + 1)
            .checked_sub(2 * pv.pow(i - 1))
            .expect("family weights stay nonnegative");
        out.push(w);
    }
    out
}

/// Structure of `L(r) ⊗ L(1)`.
///
/// Three cases by the residue of `r` mod `p`: for `r ≡ 0` the product is
/// the simple `L(r+1)`; for `r` in neither extreme residue it splits as
/// `L(r+1) ⊕ L(r-1)`; and for `r ≡ -1` it is indecomposable with
/// composition factors along the family of `r`. With residue data
/// `(t, a, k)`, the factors are `w_0` once and `w_1, ..., w_t` twice when
/// `a = 1`, arranged in a uniserial tower `[w_1, ..., w_t, w_0, w_t, ...,
/// w_1]`; for `a > 1` the factor `w_(t+1)` joins `w_0` in the middle layer
/// of a diamond whose chains run through `w_t, ..., w_1` on both sides.
pub fn tensor_with_natural(r: Weight, p: Prime) -> StructureReport {
    let pv = p.get();
    let blank = StructureReport {
        p,
        r,
        other: 1,
        case: StructureCase::SimpleResult { weight: 0 },
        residue: None,
        family_weights: None,
        shift_k: None,
        base_tilting: None,
    };
    if r.is_multiple_of(pv) {
        return StructureReport {
            case: StructureCase::SimpleResult { weight: r + 1 },
            ..blank
        };
    }
    if !(r + 1).is_multiple_of(pv) {
        return StructureReport {
            case: StructureCase::SplitSum {
                components: vec![
                    Component::Simple { weight: r + 1 },
                    Component::Simple { weight: r - 1 },
                ],
            },
            ..blank
        };
    }

    let rd = residue_data(r, p).expect("r = -1 mod p was just checked");
    let t = rd.t;
    let case = if rd.a == 1 {
        let fam = family(r, p, t);
        let mut series: Vec<Weight> = fam[1..].to_vec();
        series.push(fam[0]);
        series.extend(fam[1..].iter().rev());
        StructureCase::Uniserial { series }
    } else {
        let fam = family(r, p, t + 1);
        let chain = &fam[1..=t as usize];
        let diagram = Diagram::diamond(chain, (fam[0], fam[t as usize + 1]));
        StructureCase::Biserial { diagram }
    };
    let top = if rd.a == 1 { t } else { t + 1 };
    StructureReport {
        case,
        residue: Some(rd),
        family_weights: Some(family(r, p, top)),
        shift_k: Some(rd.k),
        base_tilting: Some(rd.a * pv.pow(t)),
        ..blank
    }
}

/// Structure of `L(r) ⊗ L(2)` for odd primes.
///
/// At `p = 3` there are three cases by the residue of `r`: `r ≡ 0` gives
/// the simple `L(r+2)`; `r ≡ 1` gives a module isomorphic to
/// `L(r+1) ⊗ L(1)`, reported by delegation; `r ≡ -1` splits off `L(r)`
/// and leaves `T(a·3^t + 1) ⊗ L(k)` twisted `t+1` times, with `(t, a, k)`
/// the residue data of `r`.
///
/// For `p ≥ 5` five cases: `r ≡ 0` gives `L(r+2)`; `r ≡ 1` splits as
/// `L(r+2) ⊕ L(r)`; `r ≡ -1` splits as above; `r ≡ -2` splits off
/// `L(r-2)` and leaves a component isomorphic to `L(r+1) ⊗ L(1)`, carried
/// as a nested report; all other residues split into three simples
/// `L(r+2) ⊕ L(r) ⊕ L(r-2)`.
///
/// `p = 2` is rejected: there `L(2)` is the Frobenius twist of `L(1)` and
/// the product is governed by the digitwise decomposition instead.
#[allow(non_snake_case)]
pub fn tensor_with_L2(r: Weight, p: Prime) -> Result<StructureReport> {
    let pv = p.get();
    if pv == 2 {
        return Err(Error::Unsupported(
            "the L(2) structure cases apply to odd primes only".into(),
        ));
    }
    let blank = StructureReport {
        p,
        r,
        other: 2,
        case: StructureCase::SimpleResult { weight: 0 },
        residue: None,
        family_weights: None,
        shift_k: None,
        base_tilting: None,
    };
    let res = r % pv;
    if res == 0 {
        return Ok(StructureReport {
            case: StructureCase::SimpleResult { weight: r + 2 },
            ..blank
        });
    }
    if res == pv - 1 {
        let rd = residue_data(r, p).expect("r = -1 mod p");
        return Ok(StructureReport {
            case: StructureCase::SplitSum {
                components: vec![
                    Component::TwistedTilting {
                        base: rd.a * pv.pow(rd.t) + 1,
                        k: rd.k,
                        level: rd.t + 1,
                    },
                    Component::Simple { weight: r },
                ],
            },
            residue: Some(rd),
            ..blank
        });
    }
    if res == 1 && pv == 3 {
        let inner = tensor_with_natural(r + 1, p);
        return Ok(StructureReport {
            case: inner.case,
            residue: inner.residue,
            family_weights: inner.family_weights,
            shift_k: inner.shift_k,
            base_tilting: inner.base_tilting,
            ..blank
        });
    }
    if res == pv - 2 {
        let rd = residue_data(r + 1, p).expect("r+1 = -1 mod p");
        return Ok(StructureReport {
            case: StructureCase::SplitSum {
                components: vec![
                    Component::Nested(Box::new(tensor_with_natural(r + 1, p))),
                    Component::Simple { weight: r - 2 },
                ],
            },
            residue: Some(rd),
            ..blank
        });
    }
    let mut components = vec![Component::Simple { weight: r + 2 }];
    components.push(Component::Simple { weight: r });
    if res >= 2 {
        components.push(Component::Simple { weight: r - 2 });
    }
    Ok(StructureReport {
        case: StructureCase::SplitSum { components },
        ..blank
    })
}

/// Whether the Weyl module of highest weight `r` is simple, i.e. whether
/// `r + 1 = a·p^t` with `1 <= a <= p-1`.
pub fn is_simple_weyl_weight(r: Weight, p: Prime) -> bool {
    let pv = p.get();
    let mut v = r + 1;
    while v.is_multiple_of(pv) {
        v /= pv;
    }
    v < pv
}

/// Composition series, socle first, of the Weyl module of weight `w` for
/// `w` adjacent to a weight `r = a·p^t - 1`.
///
/// Three shapes: `w <= p-1` is simple; `w = a·p^t` (so `w = r+1`) has the
/// series `[w_0, w_t, w_(t-1), ..., w_1]`; and `w = a·p^t - 2` (so
/// `w = r-1`) has `[w_1, ..., w_t]` when `a = 1` and `[w_1, ..., w_t,
/// w_(t+1)]` otherwise, where `w_0 = r+1` and `w_i = r+1 - 2p^(i-1)`.
/// Any other weight is rejected.
pub fn weyl_series_in_family(w: Weight, p: Prime) -> Result<Vec<Weight>> {
    let pv = p.get();
    let split = |v: Weight| -> Option<(u64, u32)> {
        let mut v = v;
        let mut t = 0;
        while v.is_multiple_of(pv) {
            v /= pv;
            t += 1;
        }
        (v < pv).then_some((v, t))
    };

    let series = if w < pv {
        vec![w]
    } else if let Some((_, t)) = split(w) {
        let r = w - 1;
        let fam = family(r, p, t);
        let mut series = vec![fam[0]];
        series.extend(fam[1..].iter().rev());
        series
    } else if let Some((a, t)) = split(w + 2) {
        let r = w + 1;
        let top = if a == 1 { t } else { t + 1 };
        family(r, p, top)[1..].to_vec()
    } else {
        return Err(Error::Unsupported(format!(
            "no uniserial Weyl series is on record for weight {w} at p = {pv}"
        )));
    };

    debug_assert_eq!(
        {
            let mut m = FactorMultiset::new();
            for &x in &series {
                *m.entry(x).or_insert(0) += 1;
            }
            m
        },
        peel_into_simples(&crate::chars::weyl_character(w), p)
            .expect("Weyl characters are module characters"),
        "series for the Weyl module of weight {w} at p={pv} must match the character oracle"
    );
    Ok(series)
}

/// Undo the Frobenius shift of an indecomposable product structure.
///
/// Given a uniserial or biserial report with residue data `(t, a, k)`,
/// returns the report at the family base `a·p^t - 1` together with `k`
/// and the twist level `t+1`; every weight in the input is the matching
/// base weight plus `k·p^(t+1)`. A `k = 0` report is its own base.
pub fn shift_decomposition(report: &StructureReport) -> Result<(StructureReport, Weight, u32)> {
    if !matches!(
        report.case,
        StructureCase::Uniserial { .. } | StructureCase::Biserial { .. }
    ) {
        return Err(Error::Unsupported(
            "only an indecomposable (uniserial or biserial) structure has a shift".into(),
        ));
    }
    let rd = report
        .residue
        .expect("indecomposable structure reports carry residue data");
    let level = rd.t + 1;
    if rd.k == 0 {
        return Ok((report.clone(), 0, level));
    }
    let pv = report.p.get();
    let base = tensor_with_natural(rd.a * pv.pow(rd.t) - 1, report.p);
    debug_assert!(shifted_weights_match(&base, report, rd.k * pv.pow(level)));
    Ok((base, rd.k, level))
}

/// Every layer weight of `shifted` is the matching weight of `base` plus
/// `offset`, with identical layer shapes.
fn shifted_weights_match(base: &StructureReport, shifted: &StructureReport, offset: u64) -> bool {
    match (base.diagram(), shifted.diagram()) {
        (Some(b), Some(s)) => {
            b.edges == s.edges
                && b.layers.len() == s.layers.len()
                && b.layers.iter().zip(&s.layers).all(|(lb, ls)| {
                    lb.len() == ls.len() && lb.iter().zip(ls).all(|(&wb, &ws)| wb + offset == ws)
                })
        }
        _ => false,
    }
}

/// Structure of a single decomposition summand, where the product rules
/// reach it.
///
/// Leading zero digits are peeled off as Frobenius twists. After that,
/// three families of profiles are covered: all digits at most `p-1` is a
/// simple module; a leading digit of exactly `p` with small digits above
/// matches the indecomposable product `L(ρ) ⊗ L(1)` where
/// `ρ = (p-1) + p·(rest)`, whose tower or diamond is returned; and a
/// leading digit `p+1` with small digits above (odd primes) is the
/// non-simple component `T(a·p^t + 1) ⊗ L(k)` twisted `t+1` times of the
/// matching `L(ρ) ⊗ L(2)`. Everything else, and any twisted profile whose
/// structure cannot be rewritten by weight scaling, returns `None`.
pub fn summand_structure(profile: &SummandProfile) -> Option<StructureCase> {
    let p = profile.prime();
    let pv = p.get();
    let digits = profile.digits();

    let twist = digits.iter().take_while(|&&d| d == 0).count();
    if twist == digits.len() {
        return Some(StructureCase::SimpleResult { weight: 0 });
    }
    let scale = pv.pow(twist as u32);
    let digits = &digits[twist..];

    let small_rest = digits[1..].iter().all(|&d| d < pv);
    let case = if digits.iter().all(|&d| d < pv) {
        StructureCase::SimpleResult {
            weight: weight_from_digits(digits, p),
        }
    } else if digits[0] == pv && small_rest {
        let rho = (pv - 1) + pv * weight_from_digits(&digits[1..], p);
        tensor_with_natural(rho, p).case
    } else if digits[0] == pv + 1 && pv > 2 && small_rest {
        let rho = (pv - 1) + pv * weight_from_digits(&digits[1..], p);
        let rd = residue_data(rho, p).expect("rho = -1 mod p by construction");
        StructureCase::SplitSum {
            components: vec![Component::TwistedTilting {
                base: rd.a * pv.pow(rd.t) + 1,
                k: rd.k,
                level: rd.t + 1,
            }],
        }
    } else {
        return None;
    };

    let case = case.scaled(scale)?;
    debug_assert_eq!(
        case.factors(p),
        profile.factors(),
        "a recovered structure must carry exactly the summand's factors"
    );
    Some(case)
}

/// One structural unit inside a summand profile: a contiguous digit run
/// whose tensor factor has a known layer diagram.
struct LayerBlock {
    /// Socle layers of the block, already scaled by the Frobenius twist
    /// for its digit position.
    layers: Vec<Vec<Weight>>,
    /// Whether the block is a single chain digit in `[p, 2p-2]`.
    is_chain_digit: bool,
}

/// Layers of the tilting module whose admissible digit run is `run`,
/// placed at digit position `pos` (weights scaled by `p^pos`).
///
/// Covered run shapes: a single digit (simple or chain), and multi-digit
/// runs whose value is `a·p^t` (the tower or diamond of the matching
/// product with `L(1)`), `a·p + 1` with `a ≥ 2` (a chain of length three
/// carrying a split middle layer), or `p² + 1` (a tower of length five).
fn block_layers(run: &[u64], pos: u32, p: Prime) -> Option<LayerBlock> {
    let pv = p.get();
    let scale = pv.pow(pos);
    let rescale = |layers: Vec<Vec<Weight>>| {
        layers
            .into_iter()
            .map(|layer| layer.into_iter().map(|w| w * scale).collect())
            .collect::<Vec<Vec<Weight>>>()
    };

    if run.len() == 1 {
        let d = run[0];
        let layers = if d < pv {
            vec![vec![d]]
        } else {
            let x = 2 * pv - 2 - d;
            vec![vec![x], vec![d], vec![x]]
        };
        return Some(LayerBlock {
            layers: rescale(layers),
            is_chain_digit: run[0] >= pv,
        });
    }

    // A multi-digit run must look like an admissible expansion read off a
    // single tilting module: leading digit in [p, 2p-2], middle digits in
    // [p-1, 2p-2], final digit in [1, p-1].
    let (&last, body) = run.split_last().expect("multi-digit run");
    if run[0] < pv || run[0] > 2 * pv - 2 || last == 0 || last > pv - 1 {
        return None;
    }
    if body[1..].iter().any(|&d| d < pv - 1 || d > 2 * pv - 2) {
        return None;
    }
    let v = weight_from_digits(run, p);

    // v = a·p^t: the indecomposable product L(a·p^t - 1) ⊗ L(1).
    let t = padic_digits(v, p).iter().take_while(|&&d| d == 0).count() as u32;
    if t >= 1 && v == digit(v, p, t) * pv.pow(t) {
        let layers = match tensor_with_natural(v - 1, p).case {
            StructureCase::Uniserial { series } => series.into_iter().map(|w| vec![w]).collect(),
            StructureCase::Biserial { diagram } => diagram.layers,
            _ => unreachable!("a weight one below a·p^t never splits"),
        };
        return Some(LayerBlock {
            layers: rescale(layers),
            is_chain_digit: false,
        });
    }

    // Runs [p+1, d]: either v = a·p + 1 with a = d + 1 in [2, p-1], a
    // chain [x, v, x] whose middle slot splits as L(v) ⊕ L(v - 2p), or
    // d = p - 1 and v = p² + 1, a tower of length five.
    if run.len() == 2 && run[0] == pv + 1 {
        let layers = if run[1] <= pv - 2 {
            let a = run[1] + 1;
            vec![
                vec![a * pv - 3],
                vec![a * pv + 1, (a - 2) * pv + 1],
                vec![a * pv - 3],
            ]
        } else {
            debug_assert_eq!(v, pv * pv + 1);
            [v - 4, v - 2 * pv, v, v - 2 * pv, v - 4]
                .iter()
                .map(|&w| vec![w])
                .collect()
        };
        return Some(LayerBlock {
            layers: rescale(layers),
            is_chain_digit: false,
        });
    }

    None
}

/// Simple factors of `L(a) ⊗ L(b)`, provided the product is semisimple
/// (and, with `require_simple`, a single simple module).
fn semisimple_product(a: Weight, b: Weight, p: Prime, require_simple: bool) -> Option<Vec<Weight>> {
    let parts = crate::decompose::decompose(a, b, p);
    if require_simple && parts.summands().len() != 1 {
        return None;
    }
    let pv = p.get();
    parts
        .summands()
        .iter()
        .map(|s| {
            if s.digits().iter().all(|&d| d < pv) {
                Some(s.highest_weight())
            } else {
                None
            }
        })
        .collect()
}

/// Layer-by-layer product of two diagrams whose slot products decompose
/// into simples. Layer `d` of the result collects the factors of every
/// `L(w_i) ⊗ L(w_j)` with `i + j = d`.
fn convolve_layers(
    acc: &[Vec<Weight>],
    block: &[Vec<Weight>],
    p: Prime,
    require_simple_slots: bool,
) -> Option<Vec<Vec<Weight>>> {
    let mut out: Vec<Vec<Weight>> = vec![Vec::new(); acc.len() + block.len() - 1];
    for (i, la) in acc.iter().enumerate() {
        for (j, lb) in block.iter().enumerate() {
            for &wa in la {
                for &wb in lb {
                    let simples = semisimple_product(wa, wb, p, require_simple_slots)?;
                    out[i + j].extend(simples);
                }
            }
        }
    }
    for layer in &mut out {
        layer.sort_unstable_by(|x, y| y.cmp(x));
    }
    Some(out)
}

/// Socle layers of a decomposition summand, where the factorization rules
/// reach it.
///
/// The digit pattern is split into contiguous blocks with individually
/// known diagrams (single digits, and runs read as one tilting module);
/// blocks combine layer by layer when all pairwise factor products stay
/// simple. Two chain digits in adjacent positions are also combined, with
/// split slot products placed inside their diagonal layer. Patterns not
/// reachable this way return `None`.
///
/// Layers are listed socle first; weights inside a layer descend.
pub fn summand_layers(profile: &SummandProfile) -> Option<Vec<Vec<Weight>>> {
    let p = profile.prime();
    let digits = profile.digits();
    if digits.is_empty() {
        return Some(vec![vec![0]]);
    }

    let n = digits.len();
    let mut found: Option<Vec<Vec<Weight>>> = None;
    // Each bitmask places cuts between adjacent digit positions.
    for mask in 0u32..(1 << (n - 1)) {
        let mut groups: Vec<(usize, &[u64])> = Vec::new();
        let mut start = 0;
        for cut in 0..n {
            if cut + 1 == n || mask & (1 << cut) != 0 {
                groups.push((start, &digits[start..=cut]));
                start = cut + 1;
            }
        }

        let blocks: Option<Vec<LayerBlock>> = groups
            .iter()
            .map(|&(pos, run)| block_layers(run, pos as u32, p))
            .collect();
        let Some(blocks) = blocks else { continue };

        // Two adjacent chain digits interleave: their slot products may
        // split, with both halves sharing a layer. Everywhere else every
        // slot product must stay simple.
        let active: Vec<(usize, bool)> = groups
            .iter()
            .zip(&blocks)
            .filter(|((_, run), _)| run.iter().any(|&d| d != 0))
            .map(|(&(pos, _), block)| (pos, block.is_chain_digit))
            .collect();
        let relaxed = matches!(active.as_slice(), &[(i, true), (j, true)] if j == i + 1);

        let mut acc = vec![vec![0]];
        let mut ok = true;
        for block in &blocks {
            match convolve_layers(&acc, &block.layers, p, !relaxed) {
                Some(next) => acc = next,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }

        debug_assert_eq!(
            {
                let mut factors = FactorMultiset::new();
                for layer in &acc {
                    for &w in layer {
                        *factors.entry(w).or_insert(0) += 1;
                    }
                }
                factors
            },
            profile.factors(),
            "layer content must match the summand's composition factors"
        );
        debug_assert_eq!(acc.first(), Some(&vec![profile.socle_weight()]));
        debug_assert!(
            acc.iter().rev().cloned().collect::<Vec<_>>() == acc,
            "summand layers are palindromic"
        );
        match &found {
            None => found = Some(acc),
            Some(prev) => debug_assert_eq!(
                prev, &acc,
                "independent digit groupings must agree on the layers"
            ),
        }
        #[cfg(not(debug_assertions))]
        if found.is_some() {
            break;
        }
    }
    found
}
