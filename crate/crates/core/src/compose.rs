//! Composition operations on `F^E` and the flats they produce.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fmatroid::{for_each_vector, FMatroid};
use crate::num::Rat;
use crate::tract::{inflation_property, Tract};
use crate::vector::{is_subset, FVector, Mask};
use crate::verdict::{PropertyVerdict, Witness};

/// The composition operations implemented here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionOp {
    /// First nonzero entry, on tracts with the Inflation Property.
    Inflation,
    /// Larger magnitude, `X` winning ties.
    MaxMagnitude,
    /// `X`, with its zeros filled by a small multiple of `Y`.
    Epsilon,
}

impl CompositionOp {
    pub const ALL: [CompositionOp; 3] = [
        CompositionOp::Inflation,
        CompositionOp::MaxMagnitude,
        CompositionOp::Epsilon,
    ];

    pub fn applies_to(self, t: Tract) -> bool {
        match self {
            CompositionOp::Inflation => inflation_property(t).is_proven(),
            CompositionOp::MaxMagnitude => matches!(
                t,
                Tract::Triangle | Tract::TropPhase | Tract::TropReal | Tract::TropComplex | Tract::UltraTriangle
            ),
            CompositionOp::Epsilon => {
                matches!(
                    t,
                    Tract::Triangle | Tract::TropReal | Tract::TropComplex | Tract::UltraTriangle
                )
            }
        }
    }

    /// Preferred single-valued operation for a tract, if any.
    pub fn for_tract(t: Tract) -> Option<CompositionOp> {
        [CompositionOp::Inflation, CompositionOp::MaxMagnitude]
            .into_iter()
            .find(|op| op.applies_to(t))
    }

    fn check(self, t: Tract) -> Result<()> {
        if self.applies_to(t) {
            Ok(())
        } else {
            Err(Error::UnsupportedTract {
                tract: t,
                reason: format!("no {self} composition"),
            })
        }
    }
}

impl fmt::Display for CompositionOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompositionOp::Inflation => "inflation",
            CompositionOp::MaxMagnitude => "max",
            CompositionOp::Epsilon => "epsilon",
        })
    }
}

impl FromStr for CompositionOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inflation" => Ok(CompositionOp::Inflation),
            "max" => Ok(CompositionOp::MaxMagnitude),
            "epsilon" => Ok(CompositionOp::Epsilon),
            _ => Err(Error::Parse(format!(
                "unknown composition `{s}` (inflation, max, epsilon)"
            ))),
        }
    }
}

/// `(X ∘ Y)(e) = X(e)` if nonzero, else `Y(e)`.
pub fn compose_inflation(x: &FVector, y: &FVector) -> Result<FVector> {
    x.check_compatible(y)?;
    CompositionOp::Inflation.check(x.tract())?;
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| if a.is_zero() { b.clone() } else { a.clone() })
        .collect();
    FVector::new(x.tract(), x.ground().clone(), entries)
}

/// `(X ∘ Y)(e) = X(e)` if `|X(e)| ≥ |Y(e)|`, else `Y(e)`.
pub fn compose_max(x: &FVector, y: &FVector) -> Result<FVector> {
    x.check_compatible(y)?;
    CompositionOp::MaxMagnitude.check(x.tract())?;
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| {
            if a.magnitude() >= b.magnitude() {
                a.clone()
            } else {
                b.clone()
            }
        })
        .collect();
    FVector::new(x.tract(), x.ground().clone(), entries)
}

/// Result of [`compose_epsilon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonComposition {
    /// The bound below which every `η` works; `None` if unconstrained.
    pub epsilon: Option<Rat>,
    /// Sample elements `(η, Z)` of `X ∘_ε Y`.
    pub witnesses: Vec<(Rat, FVector)>,
}

/// `X` with each zero entry `e` replaced by `η·Y(e)`.
pub fn epsilon_element(x: &FVector, y: &FVector, eta: &Rat) -> Result<FVector> {
    x.check_compatible(y)?;
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| {
            if a.is_zero() {
                b.scale_positive(eta)
            } else {
                Ok(a.clone())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FVector::new(x.tract(), x.ground().clone(), entries)
}

/// Bound on `η` so that `X ∘_η Y` stays orthogonal to every circuit.
///
/// For each circuit `Z` meeting `supp X`, with `d = max |X(e)||Z(e)|`, the new
/// terms `η|Y(f)||Z(f)|` on `f ∈ supp Z − supp X` must stay below `d`.
pub fn epsilon_bound(x: &FVector, y: &FVector, circuits: &[FVector]) -> Result<Option<Rat>> {
    x.check_compatible(y)?;
    CompositionOp::Epsilon.check(x.tract())?;
    let mag = |s: &crate::tract::Scalar| s.magnitude().expect("tract has magnitudes");
    let sx = x.support_mask();
    let mut eps: Option<Rat> = None;
    for z in circuits {
        x.check_compatible(z)?;
        if z.support_mask() & sx == 0 {
            continue;
        }
        let d = (0..x.len())
            .map(|e| mag(x.get(e)) * mag(z.get(e)))
            .max()
            .unwrap_or_else(Rat::zero);
        for f in 0..x.len() {
            if sx >> f & 1 == 1 || z.get(f).is_zero() || y.get(f).is_zero() {
                continue;
            }
            let bound = &d / (mag(y.get(f)) * mag(z.get(f)));
            if eps.as_ref().is_none_or(|e| &bound < e) {
                eps = Some(bound);
            }
        }
    }
    Ok(eps)
}

/// Computes the bound and returns witnesses at `η = ε/2, ε/4`, or at
/// `η = 1, 1/2` when no bound is needed.
pub fn compose_epsilon(x: &FVector, y: &FVector, circuits: &[FVector]) -> Result<EpsilonComposition> {
    let epsilon = epsilon_bound(x, y, circuits)?;
    let etas: Vec<Rat> = match &epsilon {
        Some(e) => vec![e / Rat::from_integer(2.into()), e / Rat::from_integer(4.into())],
        None => vec![Rat::one(), Rat::new(1.into(), 2.into())],
    };
    let mut witnesses = Vec::new();
    for eta in etas {
        let z = epsilon_element(x, y, &eta)?;
        witnesses.push((eta, z));
    }
    Ok(EpsilonComposition { epsilon, witnesses })
}

/// Applies a single-valued operation.
pub fn compose(op: CompositionOp, x: &FVector, y: &FVector) -> Result<FVector> {
    match op {
        CompositionOp::Inflation => compose_inflation(x, y),
        CompositionOp::MaxMagnitude => compose_max(x, y),
        CompositionOp::Epsilon => Err(Error::Precondition(
            "epsilon composition is set-valued; use compose_epsilon".into(),
        )),
    }
}

/// Checks both composition axioms on sample triples `(X_1, X_2, Z)`: the
/// support of every composite is the union of supports, and orthogonality to
/// `Z` is inherited.
pub fn check_composition_axioms<F>(op: F, samples: &[(FVector, FVector, FVector)]) -> Result<PropertyVerdict>
where
    F: Fn(&FVector, &FVector) -> Result<Vec<FVector>>,
{
    for (x1, x2, z) in samples {
        if let Some(w) = axiom_failure(&op, x1, x2, z)? {
            return Ok(PropertyVerdict::refuted(w, format!("{} sample triples", samples.len())));
        }
    }
    Ok(PropertyVerdict::proven(format!("{} sample triples", samples.len())))
}

/// As [`check_composition_axioms`], over every triple in `F^n` of a finite tract.
pub fn check_composition_axioms_exhaustive<F>(op: F, t: Tract, n: usize, max_enum: u128) -> Result<PropertyVerdict>
where
    F: Fn(&FVector, &FVector) -> Result<Vec<FVector>>,
{
    let ground = crate::vector::GroundSet::numbered(n)?;
    let mut all = Vec::new();
    for_each_vector(t, &ground, max_enum, |v| {
        all.push(v);
        Ok(())
    })?;
    let triples = (all.len() as u128).pow(3);
    if triples > max_enum {
        return Err(Error::EnumerationLimit {
            requested: triples,
            limit: max_enum,
        });
    }
    for z in &all {
        for x1 in &all {
            for x2 in &all {
                if let Some(w) = axiom_failure(&op, x1, x2, z)? {
                    return Ok(PropertyVerdict::refuted(w, format!("exhaustive over {t}^{n}")));
                }
            }
        }
    }
    Ok(PropertyVerdict::proven(format!("exhaustive over {t}^{n}")))
}

fn axiom_failure<F>(op: &F, x1: &FVector, x2: &FVector, z: &FVector) -> Result<Option<Witness>>
where
    F: Fn(&FVector, &FVector) -> Result<Vec<FVector>>,
{
    let union = x1.support_mask() | x2.support_mask();
    let hyp = x1.is_orthogonal(z)? && x2.is_orthogonal(z)?;
    for y in op(x1, x2)? {
        if y.support_mask() != union {
            return Ok(Some(Witness::with_vectors(
                "support of the composite is not the union of supports",
                vec![x1.clone(), x2.clone(), y],
            )));
        }
        if hyp && !y.is_orthogonal(z)? {
            return Ok(Some(Witness::with_vectors(
                "X_1 and X_2 are orthogonal to Z but the composite is not",
                vec![x1.clone(), x2.clone(), z.clone()],
            )));
        }
    }
    Ok(None)
}

/// All compositions of finitely many members of `gens`, in any order.
pub fn composition_closure(op: CompositionOp, gens: &[FVector]) -> Result<BTreeSet<FVector>> {
    let mut out: BTreeSet<FVector> = gens.iter().cloned().collect();
    let mut frontier: Vec<FVector> = out.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(op, &x, g)?;
            if out.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(out)
}

/// The zero sets of covectors built by composing cocircuits whose supports
/// avoid each flat, for tracts with a single-valued composition.
pub fn flats_via_composition(m: &FMatroid) -> Result<BTreeSet<Mask>> {
    let op = CompositionOp::for_tract(m.tract()).ok_or_else(|| Error::UnsupportedTract {
        tract: m.tract(),
        reason: "no known composition operation".into(),
    })?;
    let full = m.ground().full_mask();
    let mut out = BTreeSet::new();
    for flat in m.underlying().flats() {
        let comp = full & !flat;
        let parts: Vec<&FVector> = m
            .cocircuits()
            .iter()
            .filter(|c| is_subset(c.support_mask(), comp))
            .collect();
        let mut acc = FVector::zero(m.tract(), m.ground().clone());
        for c in parts {
            acc = compose(op, &acc, c)?;
        }
        if m.is_covector(&acc)? {
            out.insert(acc.zero_set_mask());
        }
    }
    Ok(out)
}

/// Zero sets of covectors: by enumeration for finite tracts, otherwise by
/// composition.
pub fn flats_from_covectors(m: &FMatroid, max_enum: u128) -> Result<BTreeSet<Mask>> {
    if m.tract().is_finite() {
        Ok(m.enumerate_covectors(max_enum)?
            .iter()
            .map(FVector::zero_set_mask)
            .collect())
    } else {
        flats_via_composition(m)
    }
}

/// Looks for a vector and a covector that are not orthogonal, which shows the
/// covectors are not exactly the orthogonal complement of the vectors.
pub fn perfection_probe(m: &FMatroid, vectors: &[FVector], covectors: &[FVector]) -> Result<PropertyVerdict> {
    for x in vectors {
        if !m.is_vector(x)? {
            return Err(Error::Precondition(format!("{x} is not a vector")));
        }
    }
    for y in covectors {
        if !m.is_covector(y)? {
            return Err(Error::Precondition(format!("{y} is not a covector")));
        }
    }
    let bound = format!("{} vectors against {} covectors", vectors.len(), covectors.len());
    for x in vectors {
        for y in covectors {
            if !x.is_orthogonal(y)? {
                return Ok(PropertyVerdict::refuted(
                    Witness::with_vectors(
                        "a vector and a covector that are not orthogonal",
                        vec![x.clone(), y.clone()],
                    ),
                    bound,
                ));
            }
        }
    }
    Ok(PropertyVerdict::unknown(bound))
}
