//! Membership in the null set, hypersums, and finite samples of pairwise sums.

use num_traits::Signed;

use super::{Scalar, Sgn, Tract, Value};
use crate::error::Result;
use crate::num::{closed_halfplane_exists, open_halfplane_exists, Dir, Rat};
use crate::verdict::{PropertyVerdict, Witness};

fn check_tract(t: Tract, terms: &[Scalar]) -> Result<()> {
    terms.iter().try_for_each(|x| x.expect_tract(t))
}

fn nonzero(terms: &[Scalar]) -> impl Iterator<Item = &Scalar> {
    terms.iter().filter(|x| !x.is_zero())
}

/// Terms of maximal magnitude among the nonzero ones.
fn top_terms(terms: &[Scalar]) -> Vec<&Scalar> {
    let Some(m) = nonzero(terms).filter_map(Scalar::magnitude).max() else {
        return Vec::new();
    };
    nonzero(terms).filter(|x| x.magnitude().as_ref() == Some(&m)).collect()
}

/// Decides whether the formal sum of `terms` lies in the null set of `t`.
pub fn zero_in_hypersum(t: Tract, terms: &[Scalar]) -> Result<bool> {
    check_tract(t, terms)?;
    let nz: Vec<&Scalar> = nonzero(terms).collect();
    Ok(match t {
        Tract::FieldQ | Tract::FieldQi | Tract::FieldFp(_) => {
            let mut acc = Scalar::zero(t);
            for x in &nz {
                acc = acc.field_add(x)?;
            }
            acc.is_zero()
        }
        Tract::Krasner => nz.len() != 1,
        Tract::Sign => {
            let has = |s| nz.iter().any(|x| x.value == Value::Sign(s));
            nz.is_empty() || (has(Sgn::Plus) && has(Sgn::Minus))
        }
        Tract::Phase => {
            let mut dirs: Vec<Dir> = nz.iter().filter_map(|x| x.direction().cloned()).collect();
            dirs.sort();
            dirs.dedup();
            match dirs.len() {
                0 => true,
                1 => false,
                2 => dirs[0].is_antipodal(&dirs[1]),
                _ => !closed_halfplane_exists(&dirs)?,
            }
        }
        Tract::Triangle => {
            let mags: Vec<Rat> = nz.iter().filter_map(|x| x.magnitude()).collect();
            match mags.iter().max() {
                None => true,
                Some(m) => {
                    let total: Rat = mags.iter().sum();
                    m <= &(total - m)
                }
            }
        }
        Tract::TropReal => {
            let top = top_terms(terms);
            let has = |pos: bool| {
                top.iter()
                    .any(|x| matches!(&x.value, Value::Rat(r) if r.is_positive() == pos))
            };
            top.is_empty() || (has(true) && has(false))
        }
        Tract::TropComplex | Tract::TropPhase => {
            let dirs: Vec<Dir> = top_terms(terms)
                .into_iter()
                .filter_map(|x| x.direction().cloned())
                .collect();
            dirs.is_empty() || !open_halfplane_exists(&dirs)?
        }
        Tract::UltraTriangle => {
            let top = top_terms(terms);
            top.is_empty() || top.len() >= 2
        }
    })
}

/// Is `b` in the hypersum of `terms`?
pub fn in_hypersum(b: &Scalar, terms: &[Scalar]) -> Result<bool> {
    let mut all = Vec::with_capacity(terms.len() + 1);
    all.push(b.neg());
    all.extend_from_slice(terms);
    zero_in_hypersum(b.tract, &all)
}

/// A finite sample of `a ⊞ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSum {
    /// Sorted, distinct elements of `a ⊞ b`.
    pub elements: Vec<Scalar>,
    /// True when `elements` is the whole hypersum.
    pub exhaustive: bool,
}

impl PairSum {
    fn exact(v: Vec<Scalar>) -> Self {
        Self::build(v, true)
    }

    fn sample(v: Vec<Scalar>) -> Self {
        Self::build(v, false)
    }

    fn build(mut v: Vec<Scalar>, exhaustive: bool) -> Self {
        v.sort();
        v.dedup();
        PairSum {
            elements: v,
            exhaustive,
        }
    }
}

/// Finite witnesses for `a ⊞ b`: the whole set when it is finite, otherwise
/// zero (when present), every attained endpoint and a few interior points.
pub fn pair_sum(a: &Scalar, b: &Scalar) -> Result<PairSum> {
    b.expect_tract(a.tract)?;
    let t = a.tract;
    if a.is_zero() {
        return Ok(PairSum::exact(vec![b.clone()]));
    }
    if b.is_zero() {
        return Ok(PairSum::exact(vec![a.clone()]));
    }
    let zero = Scalar::zero(t);
    Ok(match t {
        Tract::FieldQ | Tract::FieldQi | Tract::FieldFp(_) => PairSum::exact(vec![a.field_add(b)?]),
        Tract::Krasner => PairSum::exact(vec![zero, a.clone()]),
        Tract::Sign => {
            if a == b {
                PairSum::exact(vec![a.clone()])
            } else {
                PairSum::exact(vec![zero, Scalar::plus(), Scalar::minus()])
            }
        }
        Tract::Phase => {
            let (da, db) = (a.direction().unwrap(), b.direction().unwrap());
            if a == b {
                PairSum::exact(vec![a.clone()])
            } else if da.is_antipodal(db) {
                PairSum::exact(vec![zero, a.clone(), b.clone()])
            } else {
                // open arc: only interior points
                let mid = da.sum_dir(db).expect("not antipodal");
                let near_a = da.sum_dir(&mid).expect("same half-plane");
                let near_b = db.sum_dir(&mid).expect("same half-plane");
                PairSum::sample([mid, near_a, near_b].into_iter().map(Scalar::ph).collect())
            }
        }
        Tract::Triangle => {
            let (x, y) = (a.magnitude().unwrap(), b.magnitude().unwrap());
            let lo = (&x - &y).abs();
            let hi = &x + &y;
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            PairSum::sample(vec![Scalar::tri(lo)?, Scalar::tri(mid)?, Scalar::tri(hi)?])
        }
        Tract::TropReal | Tract::UltraTriangle | Tract::TropComplex | Tract::TropPhase => {
            let (x, y) = (a.magnitude().unwrap(), b.magnitude().unwrap());
            if x > y {
                return Ok(PairSum::exact(vec![a.clone()]));
            }
            if x < y || (a == b && t != Tract::UltraTriangle) {
                return Ok(PairSum::exact(vec![b.clone()]));
            }
            tropical_tie(a, b)?
        }
    })
}

/// `a ⊞ b` for distinct elements of equal magnitude in a tropical tract.
fn tropical_tie(a: &Scalar, b: &Scalar) -> Result<PairSum> {
    let t = a.tract;
    let half = Rat::new(1.into(), 2.into());
    let zero = Scalar::zero(t);
    Ok(match t {
        Tract::UltraTriangle => {
            // both equal to x: the whole interval [0, x]
            PairSum::sample(vec![zero, a.scale_positive(&half)?, a.clone()])
        }
        Tract::TropReal => {
            // a = -b: the interval [-|a|, |a|]
            let a_half = a.scale_positive(&half)?;
            PairSum::sample(vec![zero, a.clone(), a.neg(), a_half.neg(), a_half])
        }
        Tract::TropPhase | Tract::TropComplex => {
            let (da, db) = (a.direction().unwrap(), b.direction().unwrap());
            let i = with_dir(&Scalar::one(t), Dir::of(0, 1));
            if da.is_antipodal(db) {
                // a full disc (or circle with zero for the phase version)
                let mut v = vec![zero, a.clone(), b.clone(), a.mul(&i), a.mul(&i).neg()];
                if t == Tract::TropComplex {
                    v.push(a.scale_positive(&half)?);
                }
                PairSum::sample(v)
            } else {
                let mid = da.sum_dir(db).expect("not antipodal");
                PairSum::sample(vec![a.clone(), b.clone(), with_dir(a, mid)])
            }
        }
        _ => unreachable!("not a tropical tract"),
    })
}

fn with_dir(x: &Scalar, d: Dir) -> Scalar {
    let value = match &x.value {
        Value::MagDir(m, _) => Value::MagDir(m.clone(), d),
        Value::Dir(_) => Value::Dir(d),
        _ => unreachable!("not a phase-like value"),
    };
    Scalar { tract: x.tract, value }
}

/// Does the tract satisfy `1 ⊞ -1 = F`?
pub fn inflation_property(t: Tract) -> PropertyVerdict {
    let one = Scalar::one(t);
    if let Some(all) = t.elements() {
        let missing = all
            .iter()
            .find(|x| !in_hypersum(x, &[one.clone(), one.neg()]).expect("same tract"));
        return match missing {
            None => PropertyVerdict::proven(format!("exhaustive over {} elements", all.len())),
            Some(x) => PropertyVerdict::refuted(Witness::new(format!("{x} is not in 1 ⊞ -1")), "exhaustive"),
        };
    }
    // Infinite tracts: exhibit an element outside 1 ⊞ -1, or argue from the
    // closed form that there is none.
    let probe: Option<Scalar> = match t {
        Tract::FieldQ | Tract::FieldQi => Some(one.clone()),
        Tract::Phase => Some(Scalar::ph_of(0, 1)),
        Tract::Triangle => Scalar::tri(Rat::from_integer(3.into())).ok(),
        Tract::TropReal => Some(Scalar::tr(Rat::from_integer(2.into()))),
        Tract::TropComplex => Scalar::tc(Rat::from_integer(2.into()), Dir::one()).ok(),
        Tract::UltraTriangle => Scalar::ttri(Rat::from_integer(2.into())).ok(),
        // every phase is in 1 ⊞ -1: the top directions {1, -1, -x} never fit
        // in an open half-plane
        Tract::TropPhase => None,
        _ => unreachable!("finite tracts handled above"),
    };
    match probe {
        None => PropertyVerdict::proven("closed form: 1 ⊞ -1 is all of F"),
        Some(x) => {
            debug_assert!(!in_hypersum(&x, &[one.clone(), one.neg()]).unwrap());
            PropertyVerdict::refuted(Witness::new(format!("{x} is not in 1 ⊞ -1")), "closed form")
        }
    }
}

impl Scalar {
    /// Convenience: the `Rat` payload if there is one.
    pub fn as_rat(&self) -> Option<&Rat> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }
}
