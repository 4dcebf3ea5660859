//! Checking the circuit axioms of an F-matroid.
//!
//! Elimination is decided exactly for every tract. Given a modular family
//! `{X_1, …, X_k, X}` and a coordinate `f` in the support of `X` but of no
//! `X_j`, any eliminating circuit `Z` must have `Z(f) ∈ X(f) ⊞ 0 = {X(f)}`.
//! That pins down the scalar multiple of each candidate circuit, so only
//! finitely many `Z` need testing.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matroid::SupportLattice;
use crate::vector::{is_subset, mask_iter, orbit_reps, FVector, Mask};
use crate::verdict::{PropertyVerdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomMode {
    /// Modular families of every size.
    Strong,
    /// Modular families of size 2 only.
    Weak,
}

/// Checks nontriviality, incomparability and modular elimination for a set
/// of circuits (any multiples; duplicates within an orbit are merged).
pub fn check_circuit_axioms(reps: &[FVector], mode: AxiomMode) -> Result<PropertyVerdict> {
    let Some(first) = reps.first() else {
        return Ok(PropertyVerdict::proven("empty circuit set"));
    };
    let ground = first.ground().clone();
    for x in reps {
        first.check_compatible(x)?;
    }
    if let Some(z) = reps.iter().find(|x| x.is_zero()) {
        return Ok(PropertyVerdict::refuted(
            Witness::with_vectors("nontriviality: the zero vector is a circuit", vec![z.clone()]),
            "direct",
        ));
    }
    let reps = orbit_reps(reps);
    for a in &reps {
        for b in &reps {
            let (sa, sb) = (a.support_mask(), b.support_mask());
            if a != b && is_subset(sa, sb) {
                return Ok(PropertyVerdict::refuted(
                    Witness::with_vectors(
                        "incomparability: support of one circuit lies inside another's",
                        vec![a.clone(), b.clone()],
                    ),
                    "direct",
                ));
            }
        }
    }
    let supports: Vec<Mask> = reps.iter().map(FVector::support_mask).collect();
    let lattice = SupportLattice::new(&supports);
    let max_size = match mode {
        AxiomMode::Strong => lattice.top_height(),
        AxiomMode::Weak => 2.min(lattice.top_height()),
    };
    let mut families = 0usize;
    let mut eliminations = 0usize;
    let mut chosen = Vec::new();
    let mut found: Option<Witness> = None;
    search_families(&reps, &lattice, max_size, 0, &mut chosen, &mut |family| {
        families += 1;
        for &xi in family {
            let others: Vec<usize> = family.iter().copied().filter(|&i| i != xi).collect();
            match eliminate(&reps, xi, &others, &ground, &mut eliminations)? {
                None => {}
                Some(w) => {
                    found = Some(w);
                    return Ok(true);
                }
            }
        }
        Ok(false)
    })?;
    let bound = format!("exhaustive: {families} modular families of size 2..={max_size}, {eliminations} eliminations");
    Ok(match found {
        Some(w) => PropertyVerdict::refuted(w, bound),
        None => PropertyVerdict::proven(bound),
    })
}

/// Visits every modular family of size `2..=max_size` (indices into `reps`,
/// increasing). The visitor returns `true` to stop.
fn search_families(
    reps: &[FVector],
    lattice: &SupportLattice,
    max_size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    for i in start..reps.len() {
        chosen.push(i);
        let union = chosen.iter().fold(0, |m, &k| m | reps[k].support_mask());
        if chosen.len() >= 2 && lattice.height(union) == Some(chosen.len()) && visit(chosen)? {
            return Ok(true);
        }
        if chosen.len() < max_size && search_families(reps, lattice, max_size, i + 1, chosen, visit)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Tries every admissible choice of `e_j` for the family with distinguished
/// member `reps[xi]`. Returns a witness when some choice has no `Z`.
fn eliminate(
    reps: &[FVector],
    xi: usize,
    others: &[usize],
    ground: &std::sync::Arc<crate::vector::GroundSet>,
    count: &mut usize,
) -> Result<Option<Witness>> {
    let x = &reps[xi];
    let sx = x.support_mask();
    let union_others = others.iter().fold(0, |m, &k| m | reps[k].support_mask());
    let Some(f) = mask_iter(sx & !union_others).next() else {
        return Ok(None);
    };
    // admissible e_j for each X_j
    let choices: Vec<Vec<usize>> = others
        .iter()
        .map(|&j| {
            let rest = others
                .iter()
                .filter(|&&l| l != j)
                .fold(0, |m, &l| m | reps[l].support_mask());
            mask_iter(sx & reps[j].support_mask() & !rest).collect()
        })
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let total = sx | union_others;
    let mut idx = vec![0usize; others.len()];
    loop {
        *count += 1;
        let es: Vec<usize> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let emask = es.iter().fold(0, |m, &e| m | 1 << e);
        let scaled: Vec<FVector> = others
            .iter()
            .zip(&es)
            .map(|(&j, &e)| {
                let xj = &reps[j];
                xj.scalar_mul(&x.get(e).neg().mul(&xj.get(e).inv()?))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut terms = vec![x.clone()];
        terms.extend(scaled.iter().cloned());
        let mut ok = false;
        for z in reps {
            let sz = z.support_mask();
            if sz >> f & 1 == 0 || sz & emask != 0 || !is_subset(sz, total) {
                continue;
            }
            let zz = z.scalar_mul(&x.get(f).mul(&z.get(f).inv()?))?;
            if zz.in_vec_hypersum(&terms)? {
                ok = true;
                break;
            }
        }
        if !ok {
            let labels: Vec<String> = es.iter().map(|&e| ground.label(e).to_string()).collect();
            let sum: Vec<String> = std::iter::once("X".to_string())
                .chain((1..=others.len()).map(|j| format!("X_{j}")))
                .collect();
            let desc = format!(
                "modular elimination fails: no circuit Z with Z({}) = 0 in {} (vectors in that order)",
                labels.join(")=Z("),
                sum.join(" ⊞ ")
            );
            return Ok(Some(Witness::with_vectors(desc, terms)));
        }
        // next choice
        let mut p = idx.len();
        loop {
            if p == 0 {
                return Ok(None);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < choices[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Enumerates all modular families of a circuit set, as sorted support lists.
pub fn modular_families(reps: &[FVector], max_size: usize) -> Result<Vec<Vec<Mask>>> {
    let reps = orbit_reps(reps);
    let supports: Vec<Mask> = reps.iter().map(FVector::support_mask).collect();
    let distinct: BTreeSet<Mask> = supports.iter().copied().collect();
    if distinct.len() != supports.len() {
        return Err(Error::Axiom("two circuit orbits share a support".into()));
    }
    let lattice = SupportLattice::new(&supports);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search_families(&reps, &lattice, max_size, 0, &mut chosen, &mut |fam| {
        out.push(fam.iter().map(|&i| supports[i]).collect());
        Ok(false)
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::Tract;
    use crate::vector::GroundSet;

    fn vs(t: Tract, n: usize, rows: &[&[&str]]) -> Vec<FVector> {
        let g = GroundSet::numbered(n).unwrap();
        rows.iter().map(|r| FVector::parse(t, g.clone(), r).unwrap()).collect()
    }

    #[test]
    fn oriented_u24() {
        // signed circuits of the columns (1,0),(0,1),(1,1),(1,2)
        let good = vs(
            Tract::Sign,
            4,
            &[
                &["+", "+", "-", "0"],
                &["+", "+", "0", "-"],
                &["+", "0", "-", "+"],
                &["0", "+", "+", "-"],
            ],
        );
        let v = check_circuit_axioms(&good, AxiomMode::Strong).unwrap();
        assert!(v.is_proven(), "{v}");
        let mut bad = good.clone();
        bad[3] = FVector::parse(Tract::Sign, good[0].ground().clone(), &["0", "+", "-", "-"]).unwrap();
        let v = check_circuit_axioms(&bad, AxiomMode::Strong).unwrap();
        let w = v.witness().expect("refuted");
        assert_eq!(w.vectors.len(), 2);
    }

    #[test]
    fn trivial_sets() {
        let one = vs(Tract::Sign, 3, &[&["+", "-", "0"]]);
        assert!(check_circuit_axioms(&one, AxiomMode::Strong).unwrap().is_proven());
        let nested = vs(Tract::Sign, 3, &[&["+", "-", "0"], &["+", "-", "+"]]);
        assert!(check_circuit_axioms(&nested, AxiomMode::Weak).unwrap().is_refuted());
        let zero = vs(Tract::Sign, 2, &[&["0", "0"]]);
        assert!(check_circuit_axioms(&zero, AxiomMode::Weak).unwrap().is_refuted());
    }

    #[test]
    fn krasner_uniform() {
        let g = GroundSet::numbered(4).unwrap();
        let reps: Vec<FVector> = (0..16u32)
            .filter(|s| s.count_ones() == 3)
            .map(|s| FVector::indicator(Tract::Krasner, g.clone(), s))
            .collect();
        assert!(check_circuit_axioms(&reps, AxiomMode::Strong).unwrap().is_proven());
        assert_eq!(modular_families(&reps, 3).unwrap().len(), 6);
    }
}
