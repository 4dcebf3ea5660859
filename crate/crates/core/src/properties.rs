//! Closure properties of covector sets and linear dependence.

use crate::error::{Error, Result};
use crate::fmatroid::FMatroid;
use crate::tract::{in_hypersum, pair_sum, Scalar, Tract};
use crate::vector::{vec_in_hypersum, FVector};
use crate::verdict::{PropertyVerdict, Witness};

/// Which sum property to test for a pair of covectors `X, Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumProperty {
    /// Some element of `X ⊞ Y` is a covector.
    WeakClosure,
    /// Given `X(e) = -Y(e)`, some covector `Z ∈ X ⊞ Y` has `Z(e) = 0`.
    Elimination { e: usize },
    /// Given `α ∈ X(e) ⊞ Y(e)`, some covector `Z ∈ X ⊞ Y` has `Z(e) = α`.
    AdditiveClosure { e: usize, alpha: Scalar },
}

/// Per-coordinate candidates for `X ⊞ Y` and whether they are complete.
fn sum_grid(x: &FVector, y: &FVector) -> Result<(Vec<Vec<Scalar>>, bool)> {
    x.check_compatible(y)?;
    let mut exhaustive = true;
    let mut grid = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let s = pair_sum(x.get(i), y.get(i))?;
        exhaustive &= s.exhaustive;
        grid.push(s.elements);
    }
    Ok((grid, exhaustive))
}

fn grid_size(grid: &[Vec<Scalar>]) -> u128 {
    grid.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
}

/// Visits the product of per-coordinate candidate lists; stops when `f`
/// returns `true`.
pub(crate) fn for_each_in_grid(
    m: &FMatroid,
    grid: &[Vec<Scalar>],
    mut f: impl FnMut(FVector) -> Result<bool>,
) -> Result<bool> {
    if grid.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    let n = grid.len();
    let mut idx = vec![0usize; n];
    loop {
        let entries = idx.iter().zip(grid).map(|(&i, c)| c[i].clone()).collect();
        if f(FVector::new(m.tract(), m.ground().clone(), entries)?)? {
            return Ok(true);
        }
        let mut p = n;
        loop {
            if p == 0 {
                return Ok(false);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < grid[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Searches `X ⊞ Y` for a covector with the required property.
///
/// When every coordinate's pairwise sum is finite the search is exhaustive
/// and the answer exact; otherwise a failed search is `Unknown`.
pub fn property_check(
    m: &FMatroid,
    which: &SumProperty,
    x: &FVector,
    y: &FVector,
    max_enum: u128,
) -> Result<PropertyVerdict> {
    for v in [x, y] {
        if !m.is_covector(v)? {
            return Err(Error::Precondition(format!("{v} is not a covector")));
        }
    }
    let (mut grid, exhaustive) = sum_grid(x, y)?;
    match which {
        SumProperty::WeakClosure => {}
        SumProperty::Elimination { e } => {
            if x.get(*e) != &y.get(*e).neg() {
                return Err(Error::Precondition("elimination needs X(e) = -Y(e)".into()));
            }
            grid[*e].retain(Scalar::is_zero);
        }
        SumProperty::AdditiveClosure { e, alpha } => {
            if !in_hypersum(alpha, &[x.get(*e).clone(), y.get(*e).clone()])? {
                return Err(Error::Precondition(format!("{alpha} is not in X(e) ⊞ Y(e)")));
            }
            grid[*e] = vec![alpha.clone()];
        }
    }
    let size = grid_size(&grid);
    if size > max_enum {
        return Err(Error::EnumerationLimit {
            requested: size,
            limit: max_enum,
        });
    }
    let mut witness = None;
    for_each_in_grid(m, &grid, |z| {
        if m.is_covector(&z)? {
            witness = Some(z);
            return Ok(true);
        }
        Ok(false)
    })?;
    let bound = format!(
        "{} {size} candidates in X ⊞ Y",
        if exhaustive { "all" } else { "grid of" }
    );
    Ok(match witness {
        Some(z) => PropertyVerdict::proven(format!("witness {z} among {bound}")),
        None if exhaustive => PropertyVerdict::refuted(
            Witness::with_vectors("no covector in X ⊞ Y meets the requirement", vec![x.clone(), y.clone()]),
            bound,
        ),
        None => PropertyVerdict::unknown(bound),
    })
}

/// Checks that every grid element of `X_1 ⊞ X_2` is a covector, for tropical
/// tracts and covectors that agree in phase wherever their magnitudes tie,
/// with at most one exception.
pub fn tropical_closure_check(m: &FMatroid, x1: &FVector, x2: &FVector, max_enum: u128) -> Result<PropertyVerdict> {
    if !matches!(m.tract(), Tract::TropReal | Tract::TropComplex | Tract::UltraTriangle) {
        return Err(Error::UnsupportedTract {
            tract: m.tract(),
            reason: "tropical closure applies to tr, tc and ttriangle".into(),
        });
    }
    for v in [x1, x2] {
        if !m.is_covector(v)? {
            return Err(Error::Precondition(format!("{v} is not a covector")));
        }
    }
    let ties = (0..x1.len())
        .filter(|&i| {
            let (a, b) = (x1.get(i), x2.get(i));
            !a.is_zero() && a.magnitude() == b.magnitude() && a != b
        })
        .count();
    if ties > 1 {
        return Err(Error::Precondition(format!(
            "{ties} coordinates have equal magnitudes but different values"
        )));
    }
    let (grid, exhaustive) = sum_grid(x1, x2)?;
    let size = grid_size(&grid);
    if size > max_enum {
        return Err(Error::EnumerationLimit {
            requested: size,
            limit: max_enum,
        });
    }
    let mut bad = None;
    for_each_in_grid(m, &grid, |z| {
        if !m.is_covector(&z)? {
            bad = Some(z);
            return Ok(true);
        }
        Ok(false)
    })?;
    let bound = format!(
        "{} {size} elements of X_1 ⊞ X_2",
        if exhaustive { "all" } else { "grid of" }
    );
    Ok(match bad {
        Some(z) => PropertyVerdict::refuted(
            Witness::with_vectors("element of X_1 ⊞ X_2 that is not a covector", vec![z]),
            bound,
        ),
        None => PropertyVerdict::proven(bound),
    })
}

/// `0 ∈ ⊞ c_j X_j` with some `c_j ≠ 0`.
pub fn verify_dependence_witness(coeffs: &[Scalar], xs: &[FVector]) -> Result<bool> {
    if coeffs.len() != xs.len() || xs.is_empty() {
        return Err(Error::Precondition("one coefficient per vector".into()));
    }
    if coeffs.iter().all(Scalar::is_zero) {
        return Ok(false);
    }
    let scaled = xs
        .iter()
        .zip(coeffs)
        .map(|(x, c)| x.scalar_mul(c))
        .collect::<Result<Vec<_>>>()?;
    let zero = FVector::zero(xs[0].tract(), xs[0].ground().clone());
    vec_in_hypersum(&zero, &scaled)
}

/// Looks for coefficients witnessing linear dependence.
///
/// Finite tracts: every coefficient tuple with first nonzero entry 1, so a
/// failed search proves independence. Other tracts: coefficients drawn from
/// `{0, 1}` and the ratios `-X_a(e)·X_b(e)^{-1}`; a failed search is `Unknown`.
pub fn search_dependence(xs: &[FVector], max_enum: u128) -> Result<PropertyVerdict> {
    let Some(first) = xs.first() else {
        return Err(Error::Precondition("empty family".into()));
    };
    let t = first.tract();
    for x in xs {
        first.check_compatible(x)?;
    }
    let (cands, exhaustive) = match t.elements() {
        Some(all) => (all, true),
        None => {
            let mut c = vec![Scalar::zero(t), Scalar::one(t)];
            for a in xs {
                for b in xs {
                    for e in 0..first.len() {
                        if !a.get(e).is_zero() && !b.get(e).is_zero() {
                            c.push(a.get(e).neg().mul(&b.get(e).inv()?));
                        }
                    }
                }
            }
            c.sort();
            c.dedup();
            (c, false)
        }
    };
    let k = xs.len();
    let size = (cands.len() as u128)
        .saturating_pow(k as u32 - 1)
        .saturating_mul(k as u128);
    if size > max_enum {
        return Err(Error::EnumerationLimit {
            requested: size,
            limit: max_enum,
        });
    }
    // lead = position of the first nonzero coefficient, which is scaled to 1
    for lead in 0..k {
        let mut idx = vec![0usize; k - lead - 1];
        loop {
            let mut coeffs = vec![Scalar::zero(t); lead];
            coeffs.push(Scalar::one(t));
            coeffs.extend(idx.iter().map(|&i| cands[i].clone()));
            if verify_dependence_witness(&coeffs, xs)? {
                let shown: Vec<String> = coeffs.iter().map(Scalar::to_string).collect();
                return Ok(PropertyVerdict::proven(format!(
                    "dependent with coefficients ({})",
                    shown.join(", ")
                )));
            }
            let mut p = idx.len();
            let done = loop {
                if p == 0 {
                    break true;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < cands.len() {
                    break false;
                }
                idx[p] = 0;
            };
            if done {
                break;
            }
        }
    }
    let bound = format!("{} coefficient candidates per vector", cands.len());
    Ok(if exhaustive {
        PropertyVerdict::refuted(Witness::with_vectors("linearly independent", xs.to_vec()), bound)
    } else {
        PropertyVerdict::unknown(bound)
    })
}
