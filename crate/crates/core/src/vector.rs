//! Vectors in `F^E`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tract::{in_hypersum, zero_in_hypersum, Morphism, Scalar, Tract};

/// Largest ground set handled. Subsets are stored as `u32` bitmasks and
/// several algorithms walk all `2^|E|` subsets.
pub const MAX_GROUND: usize = 12;

/// A subset of a ground set, bit `i` standing for the `i`-th label.
pub type Mask = u32;

pub fn mask_len(m: Mask) -> usize {
    m.count_ones() as usize
}

pub fn mask_iter(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Finite ordered set of distinct labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::Precondition(format!(
                "ground sets are limited to {MAX_GROUND} elements, got {}",
                labels.len()
            )));
        }
        for (k, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::Parse("empty label".into()));
            }
            if labels[..k].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(GroundSet { labels }))
    }

    /// Labels `1..=n`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        Self::new((1..=n).map(|k| k.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full_mask(&self) -> Mask {
        if self.len() == 32 {
            u32::MAX
        } else {
            (1 << self.len()) - 1
        }
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels
            .iter()
            .try_fold(0, |m, l| Ok(m | 1 << self.index_of(l.as_ref())?))
    }

    pub fn labels_of(&self, m: Mask) -> Vec<String> {
        mask_iter(m).map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` rendering of a subset.
    pub fn format_mask(&self, m: Mask) -> String {
        format!("{{{}}}", self.labels_of(m).join(","))
    }

    /// The sub-ground-set on the elements of `keep`, in the original order.
    pub fn restrict(&self, keep: Mask) -> Arc<GroundSet> {
        Arc::new(GroundSet {
            labels: self.labels_of(keep),
        })
    }
}

/// An element of `F^E`: one scalar per ground element.
#[derive(Clone, Debug)]
pub struct FVector {
    tract: Tract,
    ground: Arc<GroundSet>,
    entries: Vec<Scalar>,
}

impl PartialEq for FVector {
    fn eq(&self, o: &Self) -> bool {
        self.tract == o.tract && self.entries == o.entries && same_ground(&self.ground, &o.ground)
    }
}

impl Eq for FVector {}

impl std::hash::Hash for FVector {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.tract.hash(h);
        self.entries.hash(h);
    }
}

impl PartialOrd for FVector {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// Orders by support (as a bitmask), then entrywise.
impl Ord for FVector {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.support_mask()
            .cmp(&o.support_mask())
            .then_with(|| self.entries.cmp(&o.entries))
    }
}

fn same_ground(a: &Arc<GroundSet>, b: &Arc<GroundSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FVector {
    pub fn new(tract: Tract, ground: Arc<GroundSet>, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != ground.len() {
            return Err(Error::GroundMismatch);
        }
        for x in &entries {
            x.expect_tract(tract)?;
        }
        Ok(FVector { tract, ground, entries })
    }

    pub fn zero(tract: Tract, ground: Arc<GroundSet>) -> Self {
        let entries = vec![Scalar::zero(tract); ground.len()];
        FVector { tract, ground, entries }
    }

    /// Parses scalar literals aligned with the ground order.
    pub fn parse<S: AsRef<str>>(tract: Tract, ground: Arc<GroundSet>, lits: &[S]) -> Result<Self> {
        let entries = lits
            .iter()
            .map(|s| Scalar::parse(tract, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tract, ground, entries)
    }

    /// Parses a JSON array of literals, e.g. `["1", "ph(1,1)", "0"]`.
    pub fn parse_json(tract: Tract, ground: Arc<GroundSet>, json: &str) -> Result<Self> {
        let lits: Vec<String> = serde_json::from_str(json)?;
        Self::parse(tract, ground, &lits)
    }

    /// Indicator vector of `m` in the Krasner hyperfield (or any tract, using 1).
    pub fn indicator(tract: Tract, ground: Arc<GroundSet>, m: Mask) -> Self {
        let entries = (0..ground.len())
            .map(|i| {
                if m >> i & 1 == 1 {
                    Scalar::one(tract)
                } else {
                    Scalar::zero(tract)
                }
            })
            .collect();
        FVector { tract, ground, entries }
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn at(&self, label: &str) -> Result<&Scalar> {
        Ok(&self.entries[self.ground.index_of(label)?])
    }

    pub fn with_entry(&self, i: usize, x: Scalar) -> Result<Self> {
        x.expect_tract(self.tract)?;
        let mut v = self.clone();
        v.entries[i] = x;
        Ok(v)
    }

    pub fn support_mask(&self) -> Mask {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn support(&self) -> Vec<String> {
        self.ground.labels_of(self.support_mask())
    }

    pub fn zero_set_mask(&self) -> Mask {
        self.ground.full_mask() & !self.support_mask()
    }

    pub fn zero_set(&self) -> Vec<String> {
        self.ground.labels_of(self.zero_set_mask())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub(crate) fn check_compatible(&self, o: &FVector) -> Result<()> {
        if self.tract != o.tract {
            return Err(Error::TractMismatch {
                expected: self.tract,
                found: o.tract,
            });
        }
        if !same_ground(&self.ground, &o.ground) {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    pub fn scalar_mul(&self, a: &Scalar) -> Result<Self> {
        a.expect_tract(self.tract)?;
        Ok(self.map_entries(|x| a.mul(x)))
    }

    fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        FVector {
            tract: self.tract,
            ground: self.ground.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map_entries(Scalar::neg)
    }

    pub fn conj(&self) -> Self {
        self.map_entries(Scalar::conj)
    }

    /// Rescales so the first nonzero entry (in ground order) is 1. The zero
    /// vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.entries.iter().find(|x| !x.is_zero()) {
            None => self.clone(),
            Some(x) => {
                let inv = x.inv().expect("nonzero");
                self.map_entries(|y| inv.mul(y))
            }
        }
    }

    /// The same vector viewed on the sub-ground-set `keep`.
    pub fn restrict(&self, keep: Mask) -> Self {
        FVector {
            tract: self.tract,
            ground: self.ground.restrict(keep),
            entries: mask_iter(keep).map(|i| self.entries[i].clone()).collect(),
        }
    }

    /// Restriction onto an already-built sub-ground-set, which must list a
    /// subset of this vector's labels.
    pub fn restrict_onto(&self, ground: &Arc<GroundSet>) -> Result<Self> {
        let entries = ground
            .labels()
            .iter()
            .map(|l| self.at(l).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(FVector {
            tract: self.tract,
            ground: ground.clone(),
            entries,
        })
    }

    /// Drops the coordinates in `a`.
    pub fn delete_coords(&self, a: Mask) -> Self {
        self.restrict(self.ground.full_mask() & !a)
    }

    /// Inserts a new coordinate `label` with value `alpha`, placed last.
    pub fn extend(&self, label: &str, alpha: Scalar) -> Result<Self> {
        alpha.expect_tract(self.tract)?;
        let labels = self.ground.labels().iter().cloned().chain([label.to_string()]);
        let ground = GroundSet::new(labels)?;
        let mut entries = self.entries.clone();
        entries.push(alpha);
        Ok(FVector {
            tract: self.tract,
            ground,
            entries,
        })
    }

    /// Inserts a coordinate so the result lives on `ground`, which must be
    /// this vector's ground set plus `label`.
    pub fn extend_onto(&self, ground: &Arc<GroundSet>, label: &str, alpha: Scalar) -> Result<Self> {
        alpha.expect_tract(self.tract)?;
        let entries = ground
            .labels()
            .iter()
            .map(|l| {
                if l == label {
                    Ok(alpha.clone())
                } else {
                    self.at(l).cloned()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.tract, ground.clone(), entries)
    }

    /// Entrywise image under a tract morphism.
    pub fn map(&self, m: Morphism) -> Result<Self> {
        let entries = self.entries.iter().map(|x| m.apply(x)).collect::<Result<Vec<_>>>()?;
        Ok(FVector {
            tract: m.target(),
            ground: self.ground.clone(),
            entries,
        })
    }

    /// Terms `X(e)·Y(e)^c` of the inner product.
    pub fn inner_terms(&self, o: &FVector) -> Result<Vec<Scalar>> {
        self.check_compatible(o)?;
        Ok(self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(x, y)| x.mul(&y.conj()))
            .collect())
    }

    /// `X ⊥ Y`: the inner product lies in the null set.
    pub fn is_orthogonal(&self, o: &FVector) -> Result<bool> {
        zero_in_hypersum(self.tract, &self.inner_terms(o)?)
    }

    /// Orthogonal to every member of `set`.
    pub fn in_perp(&self, set: &[FVector]) -> Result<bool> {
        for y in set {
            if !self.is_orthogonal(y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First member of `set` this vector is not orthogonal to.
    pub fn first_non_orthogonal<'a>(&self, set: &'a [FVector]) -> Result<Option<&'a FVector>> {
        for y in set {
            if !self.is_orthogonal(y)? {
                return Ok(Some(y));
            }
        }
        Ok(None)
    }

    /// `Z ∈ X_1 ⊞ … ⊞ X_k`, coordinatewise.
    pub fn in_vec_hypersum(&self, xs: &[FVector]) -> Result<bool> {
        for x in xs {
            self.check_compatible(x)?;
        }
        for i in 0..self.len() {
            let terms: Vec<Scalar> = xs.iter().map(|x| x.entries[i].clone()).collect();
            if !in_hypersum(&self.entries[i], &terms)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// JSON array of literals.
    pub fn to_json(&self) -> String {
        let lits: Vec<String> = self.entries.iter().map(Scalar::to_string).collect();
        serde_json::to_string(&lits).expect("strings serialize")
    }
}

/// `Z ∈ ⊞ X_j`, coordinatewise.
pub fn vec_in_hypersum(z: &FVector, xs: &[FVector]) -> Result<bool> {
    z.in_vec_hypersum(xs)
}

/// Elements of `set − {0}` whose support is minimal.
pub fn minsupp(set: &[FVector]) -> Vec<FVector> {
    let nz: Vec<&FVector> = set.iter().filter(|x| !x.is_zero()).collect();
    let mut out: Vec<FVector> = nz
        .iter()
        .filter(|x| {
            let s = x.support_mask();
            !nz.iter().any(|y| {
                let t = y.support_mask();
                t != s && is_subset(t, s)
            })
        })
        .map(|x| (*x).clone())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// One normalized representative per `G`-orbit, sorted.
pub fn orbit_reps(set: &[FVector]) -> Vec<FVector> {
    let mut out: Vec<FVector> = set.iter().filter(|x| !x.is_zero()).map(FVector::normalized).collect();
    out.sort();
    out.dedup();
    out
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(Scalar::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(t: Tract, g: &Arc<GroundSet>, lits: &[&str]) -> FVector {
        FVector::parse(t, g.clone(), lits).unwrap()
    }

    #[test]
    fn supports_and_scaling() {
        let g = GroundSet::new(["e1", "e2", "e3"]).unwrap();
        let x = v(Tract::Sign, &g, &["+", "0", "-"]);
        assert_eq!(x.support(), vec!["e1", "e3"]);
        assert_eq!(x.zero_set(), vec!["e2"]);
        assert_eq!(
            x.scalar_mul(&Scalar::minus()).unwrap(),
            v(Tract::Sign, &g, &["-", "0", "+"])
        );
        let r = x.restrict(g.mask_of(&["e2"]).unwrap());
        assert_eq!(r.ground().labels(), &["e2".to_string()]);
        let d = x.delete_coords(g.mask_of(&["e2"]).unwrap());
        assert_eq!(d.ground().labels(), &["e1".to_string(), "e3".to_string()]);
        let e = d.extend("e2", Scalar::plus()).unwrap();
        assert_eq!(e.to_string(), "(+, -, +)");
        assert!(d.extend("e1", Scalar::plus()).is_err());
    }

    #[test]
    fn orthogonality() {
        let g = GroundSet::numbered(4).unwrap();
        let x = v(Tract::Phase, &g, &["1", "1", "-1", "-1"]);
        let y = v(Tract::Phase, &g, &["1", "1", "1", "1"]);
        assert!(x.is_orthogonal(&y).unwrap());
        let g3 = GroundSet::numbered(3).unwrap();
        let a = v(Tract::Phase, &g3, &["1", "1", "i"]);
        let b = v(Tract::Phase, &g3, &["1", "1", "1"]);
        assert!(!a.is_orthogonal(&b).unwrap());
        let p = v(Tract::FieldQi, &g, &["-1+i", "-1-i", "1", "0"]);
        let q = v(Tract::FieldQi, &g, &["1", "0", "1+i", "1-i"]);
        assert!(p.is_orthogonal(&q).unwrap());
        let g2 = GroundSet::numbered(2).unwrap();
        let s = v(Tract::Sign, &g2, &["+", "+"]);
        assert!(s.in_perp(&[]).unwrap());
        assert!(s.in_perp(&[v(Tract::Sign, &g2, &["+", "-"])]).unwrap());
    }

    #[test]
    fn minsupp_examples() {
        let g = GroundSet::numbered(2).unwrap();
        let a = v(Tract::FieldQ, &g, &["1", "0"]);
        let b = v(Tract::FieldQ, &g, &["1", "1"]);
        let c = v(Tract::FieldQ, &g, &["0", "1"]);
        assert_eq!(minsupp(&[a.clone(), b.clone()]), vec![a.clone()]);
        assert_eq!(minsupp(&[a.clone(), c.clone()]).len(), 2);
        assert!(minsupp(&[FVector::zero(Tract::FieldQ, g.clone())]).is_empty());
        let once = minsupp(&[a.clone(), b, c]);
        assert_eq!(minsupp(&once), once);
    }

    #[test]
    fn componentwise_hypersums() {
        let g = GroundSet::numbered(2).unwrap();
        let z = v(Tract::Sign, &g, &["+", "-"]);
        let xs = [v(Tract::Sign, &g, &["+", "+"]), v(Tract::Sign, &g, &["0", "-"])];
        assert!(vec_in_hypersum(&z, &xs).unwrap());
        let k = v(Tract::Krasner, &g, &["1", "1"]);
        let ks = [v(Tract::Krasner, &g, &["1", "0"]), v(Tract::Krasner, &g, &["0", "1"])];
        assert!(vec_in_hypersum(&k, &ks).unwrap());
    }

    #[test]
    fn mismatches() {
        let g = GroundSet::numbered(2).unwrap();
        let h = GroundSet::new(["a", "b"]).unwrap();
        let x = v(Tract::Sign, &g, &["+", "+"]);
        let y = v(Tract::Sign, &h, &["+", "+"]);
        assert_eq!(x.is_orthogonal(&y).unwrap_err(), Error::GroundMismatch);
        assert!(FVector::parse(Tract::Sign, g.clone(), &["+"]).is_err());
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(g.index_of("9").is_err());
    }

    #[test]
    fn normalization() {
        let g = GroundSet::numbered(3).unwrap();
        let x = v(Tract::Phase, &g, &["0", "i", "-1"]);
        assert_eq!(x.normalized(), v(Tract::Phase, &g, &["0", "1", "i"]));
    }
}
