//! Matroids over a tract, stored by one normalized circuit per `G`-orbit.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matroid::Matroid;
use crate::tract::{in_hypersum, Morphism, Scalar, Tract};
use crate::vector::{is_subset, mask_iter, orbit_reps, FVector, GroundSet, Mask};

/// Default cap on the number of candidates any exhaustive scan may visit.
pub const DEFAULT_MAX_ENUM: u128 = 1_000_000;

/// Reduced row-echelon form of the cocircuits with respect to a basis: one row
/// `R_j` per basis element `j`, with `R_j(k) = δ_jk` on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub basis: Mask,
    /// `(j, R_j)` in ground order of `j`.
    pub rows: Vec<(usize, FVector)>,
}

impl Rref {
    pub fn row(&self, j: usize) -> Option<&FVector> {
        self.rows.iter().find(|(k, _)| *k == j).map(|(_, r)| r)
    }
}

#[derive(Clone, Debug)]
pub struct FMatroid {
    tract: Tract,
    ground: Arc<GroundSet>,
    circuits: Vec<FVector>,
    cocircuits: Vec<FVector>,
    underlying: Matroid,
    rrefs: BTreeMap<Mask, Rref>,
}

impl PartialEq for FMatroid {
    fn eq(&self, o: &Self) -> bool {
        self.tract == o.tract && self.ground == o.ground && self.circuits == o.circuits
    }
}

impl Eq for FMatroid {}

/// Normalizes, sorts and deduplicates; two distinct orbits on one support
/// are an error.
fn canonical_reps(tract: Tract, ground: &Arc<GroundSet>, reps: &[FVector], what: &str) -> Result<Vec<FVector>> {
    for x in reps {
        if x.tract() != tract {
            return Err(Error::TractMismatch {
                expected: tract,
                found: x.tract(),
            });
        }
        if x.ground().as_ref() != ground.as_ref() {
            return Err(Error::GroundMismatch);
        }
        if x.is_zero() {
            return Err(Error::Axiom(format!("the zero vector is not a {what}")));
        }
    }
    let reps: Vec<FVector> = orbit_reps(reps)
        .into_iter()
        .map(|x| x.restrict_onto(ground).expect("same labels"))
        .collect();
    for w in reps.windows(2) {
        if w[0].support_mask() == w[1].support_mask() {
            return Err(Error::Axiom(format!(
                "{what}s {} and {} share a support but are not proportional",
                w[0], w[1]
            )));
        }
    }
    Ok(reps)
}

impl FMatroid {
    /// Builds an F-matroid from circuits (any nonzero multiples, one or more
    /// per orbit). Supports must form the circuits of a matroid; the
    /// cocircuits are then derived basis by basis from the fundamental
    /// circuits. The tract-level circuit axioms are not checked here; see
    /// [`check_circuit_axioms`](crate::axioms::check_circuit_axioms).
    pub fn from_circuits(tract: Tract, ground: Arc<GroundSet>, reps: &[FVector]) -> Result<Self> {
        let circuits = canonical_reps(tract, &ground, reps, "circuit")?;
        let supports: Vec<Mask> = circuits.iter().map(FVector::support_mask).collect();
        let underlying = Matroid::from_circuits(ground.clone(), &supports)?;
        let mut m = FMatroid {
            tract,
            ground,
            circuits,
            cocircuits: Vec::new(),
            underlying,
            rrefs: BTreeMap::new(),
        };
        let mut rows = Vec::new();
        for &b in m.underlying.bases() {
            let r = m.rref_from_circuits(b)?;
            rows.extend(r.rows.iter().map(|(_, x)| x.clone()));
            m.rrefs.insert(b, r);
        }
        m.cocircuits = canonical_reps(tract, &m.ground, &rows, "cocircuit")?;
        let mut want = m.underlying.cocircuits();
        want.sort_unstable();
        let mut got: Vec<Mask> = m.cocircuits.iter().map(FVector::support_mask).collect();
        got.sort_unstable();
        if want != got {
            return Err(Error::Axiom(
                "derived cocircuits do not match the underlying matroid".into(),
            ));
        }
        Ok(m)
    }

    /// Parses circuits given as rows of literals.
    pub fn parse_circuits<S: AsRef<str>>(tract: Tract, ground: Arc<GroundSet>, rows: &[Vec<S>]) -> Result<Self> {
        let reps = rows
            .iter()
            .map(|r| FVector::parse(tract, ground.clone(), r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_circuits(tract, ground, &reps)
    }

    /// The F-matroid of the row space of a full-rank matrix over a field.
    ///
    /// Covectors are the row space; circuits are minimal-support solutions of
    /// `Σ X(e)·R(e)^c = 0` over the rows `R`. Cocircuits are computed twice,
    /// from `B⁻¹M` and from the circuits, and must agree.
    pub fn from_subspace(ground: Arc<GroundSet>, matrix: &Matrix) -> Result<Self> {
        let t = matrix.tract();
        if matrix.ncols() != ground.len() {
            return Err(Error::GroundMismatch);
        }
        let r = matrix.nrows();
        if matrix.rank() != r {
            return Err(Error::Precondition("generator matrix must have full row rank".into()));
        }
        let n = ground.len();
        let bases: Vec<Mask> = (0..1u32 << n)
            .filter(|&s| s.count_ones() as usize == r)
            .filter(|&s| matrix.columns(&mask_iter(s).collect::<Vec<_>>()).rank() == r)
            .collect();
        let conj = matrix.conj();
        let mut circuits = Vec::new();
        let mut linear_cocircuits = Vec::new();
        for &b in &bases {
            let cols: Vec<usize> = mask_iter(b).collect();
            let block = conj.columns(&cols);
            for e in (0..n).filter(|e| b >> e & 1 == 0) {
                let rhs: Vec<Scalar> = conj.column(e).iter().map(Scalar::neg).collect();
                let x = block.solve(&rhs)?;
                let mut entries = vec![Scalar::zero(t); n];
                entries[e] = Scalar::one(t);
                for (k, &j) in cols.iter().enumerate() {
                    entries[j] = x[k].clone();
                }
                circuits.push(FVector::new(t, ground.clone(), entries)?);
            }
            let red = matrix.reduce_on(&cols)?;
            for row in red.rows() {
                linear_cocircuits.push(FVector::new(t, ground.clone(), row.clone())?);
            }
        }
        if bases.is_empty() {
            return Err(Error::Precondition("matrix has no basis".into()));
        }
        let m = Self::from_circuits(t, ground.clone(), &circuits)?;
        let linear = canonical_reps(t, &ground, &crate::vector::minsupp(&linear_cocircuits), "cocircuit")?;
        if linear != m.cocircuits {
            return Err(Error::Axiom(
                "cocircuits from elimination disagree with cocircuits derived from circuits".into(),
            ));
        }
        Ok(m)
    }

    /// Rank-1 F-matroid with cocircuit orbit `Gφ`.
    ///
    /// For `φ(e)φ(f) ≠ 0` the circuit on `{e, f}` has `X(e)^c = φ(e)^{-1}` and
    /// `X(f)^c = -φ(f)^{-1}`, so that `X·φ = 1 - 1`. Each zero of `φ` is a loop.
    pub fn rank1_from_phi(phi: &FVector) -> Result<Self> {
        if phi.is_zero() {
            return Err(Error::Precondition("φ must be nonzero".into()));
        }
        let t = phi.tract();
        let g = phi.ground().clone();
        let n = g.len();
        let mut reps = Vec::new();
        for e in 0..n {
            if phi.get(e).is_zero() {
                let mut x = FVector::zero(t, g.clone());
                x = x.with_entry(e, Scalar::one(t))?;
                reps.push(x);
                continue;
            }
            for f in (e + 1..n).filter(|&f| !phi.get(f).is_zero()) {
                let x = FVector::zero(t, g.clone())
                    .with_entry(e, phi.get(e).inv()?.conj())?
                    .with_entry(f, phi.get(f).inv()?.neg().conj())?;
                reps.push(x);
            }
        }
        Self::from_circuits(t, g, &reps)
    }

    /// The rank-1 circuit with the roles of `e` and `f` exchanged relative to
    /// [`FMatroid::rank1_from_phi`]. It is not orthogonal to `phi` in
    /// general; kept for comparison only.
    pub fn rank1_literal_circuit(phi: &FVector, e: usize, f: usize) -> Result<FVector> {
        let t = phi.tract();
        FVector::zero(t, phi.ground().clone())
            .with_entry(e, phi.get(f).inv()?.conj())?
            .with_entry(f, phi.get(e).inv()?.neg().conj())
    }

    /// `R_j(e) = -(Y(j)·Y(e)^{-1})^c` with `Y = FC(e, B)`.
    fn rref_from_circuits(&self, b: Mask) -> Result<Rref> {
        let t = self.tract;
        let n = self.ground.len();
        let mut rows: Vec<(usize, Vec<Scalar>)> = mask_iter(b)
            .map(|j| {
                let mut v = vec![Scalar::zero(t); n];
                v[j] = Scalar::one(t);
                (j, v)
            })
            .collect();
        for e in (0..n).filter(|e| b >> e & 1 == 0) {
            let y = self.fundamental_circuit_idx(e, b)?;
            for (j, row) in rows.iter_mut() {
                if !y.get(*j).is_zero() {
                    row[e] = y.get(*j).mul(&y.get(e).inv()?).conj().neg();
                }
            }
        }
        let rows = rows
            .into_iter()
            .map(|(j, v)| Ok((j, FVector::new(t, self.ground.clone(), v)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rref { basis: b, rows })
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Normalized circuit representatives, sorted.
    pub fn circuits(&self) -> &[FVector] {
        &self.circuits
    }

    /// Normalized cocircuit representatives, sorted.
    pub fn cocircuits(&self) -> &[FVector] {
        &self.cocircuits
    }

    pub fn underlying(&self) -> &Matroid {
        &self.underlying
    }

    pub fn rank(&self) -> usize {
        self.underlying.rank()
    }

    pub fn mask(&self, labels: &[impl AsRef<str>]) -> Result<Mask> {
        self.ground.mask_of(labels)
    }

    /// Parses a vector on this ground set.
    pub fn vector<S: AsRef<str>>(&self, lits: &[S]) -> Result<FVector> {
        FVector::parse(self.tract, self.ground.clone(), lits)
    }

    fn fundamental_circuit_idx(&self, e: usize, b: Mask) -> Result<FVector> {
        let s = self.underlying.fundamental_circuit(e, b)?;
        let x = self
            .circuits
            .iter()
            .find(|x| x.support_mask() == s)
            .expect("supports are the circuits of the underlying matroid");
        x.scalar_mul(&x.get(e).inv()?)
    }

    /// `FC(e, B)`: the circuit in `B ∪ {e}` with value 1 at `e`.
    pub fn fundamental_circuit(&self, e: &str, basis: &[impl AsRef<str>]) -> Result<FVector> {
        let b = self.ground.mask_of(basis)?;
        self.fundamental_circuit_idx(self.ground.index_of(e)?, b)
    }

    /// The RREF of the cocircuits with respect to `basis`.
    pub fn cocircuit_rref(&self, basis: Mask) -> Result<&Rref> {
        self.rrefs
            .get(&basis)
            .ok_or_else(|| Error::NotABasis(self.ground.format_mask(basis)))
    }

    pub fn rrefs(&self) -> impl Iterator<Item = &Rref> {
        self.rrefs.values()
    }

    /// Swaps circuits and cocircuits.
    pub fn dual(&self) -> Result<FMatroid> {
        FMatroid::from_circuits(self.tract, self.ground.clone(), &self.cocircuits)
    }

    fn check_vector(&self, x: &FVector) -> Result<()> {
        if x.tract() != self.tract {
            return Err(Error::TractMismatch {
                expected: self.tract,
                found: x.tract(),
            });
        }
        if x.ground().as_ref() != self.ground.as_ref() {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// Covector test: orthogonal to every circuit.
    pub fn is_covector(&self, x: &FVector) -> Result<bool> {
        self.check_vector(x)?;
        x.in_perp(&self.circuits)
    }

    /// The first circuit a non-covector fails against.
    pub fn covector_obstruction(&self, x: &FVector) -> Result<Option<&FVector>> {
        self.check_vector(x)?;
        x.first_non_orthogonal(&self.circuits)
    }

    /// Covector test through the row-echelon forms: for every basis `B` and
    /// `e ∉ B`, `X(e) ∈ ⊞_{j ∈ B} X(j)·R_j(e)`.
    pub fn is_covector_via_rref(&self, x: &FVector) -> Result<bool> {
        self.check_vector(x)?;
        let n = self.ground.len();
        for r in self.rrefs.values() {
            for e in (0..n).filter(|e| r.basis >> e & 1 == 0) {
                let terms: Vec<Scalar> = r
                    .rows
                    .iter()
                    .filter(|(j, _)| !x.get(*j).is_zero())
                    .map(|(j, row)| x.get(*j).mul(row.get(e)))
                    .collect();
                if !in_hypersum(x.get(e), &terms)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Vector test: orthogonal to every cocircuit.
    pub fn is_vector(&self, x: &FVector) -> Result<bool> {
        self.check_vector(x)?;
        x.in_perp(&self.cocircuits)
    }

    pub fn vector_obstruction(&self, x: &FVector) -> Result<Option<&FVector>> {
        self.check_vector(x)?;
        x.first_non_orthogonal(&self.cocircuits)
    }

    /// Every covector, for finite tracts.
    pub fn enumerate_covectors(&self, max_enum: u128) -> Result<Vec<FVector>> {
        let mut out = Vec::new();
        for_each_vector(self.tract, &self.ground, max_enum, |x| {
            if self.is_covector(&x)? {
                out.push(x);
            }
            Ok(())
        })?;
        Ok(out)
    }

    /// Every vector, for finite tracts.
    pub fn enumerate_vectors(&self, max_enum: u128) -> Result<Vec<FVector>> {
        let mut out = Vec::new();
        for_each_vector(self.tract, &self.ground, max_enum, |x| {
            if self.is_vector(&x)? {
                out.push(x);
            }
            Ok(())
        })?;
        Ok(out)
    }

    /// `M \ A`: circuits avoiding `A`, restricted to `E - A`.
    pub fn delete(&self, a: Mask) -> Result<FMatroid> {
        let keep = self.check_minor_set(a)?;
        let g = self.ground.restrict(keep);
        let reps = self
            .circuits
            .iter()
            .filter(|x| x.support_mask() & a == 0)
            .map(|x| x.restrict_onto(&g))
            .collect::<Result<Vec<_>>>()?;
        FMatroid::from_circuits(self.tract, g, &reps)
    }

    /// `M / A`: minimal nonzero restrictions of circuits to `E - A`.
    pub fn contract(&self, a: Mask) -> Result<FMatroid> {
        let keep = self.check_minor_set(a)?;
        let g = self.ground.restrict(keep);
        let restricted = self
            .circuits
            .iter()
            .map(|x| x.restrict_onto(&g))
            .collect::<Result<Vec<_>>>()?;
        FMatroid::from_circuits(self.tract, g, &crate::vector::minsupp(&restricted))
    }

    fn check_minor_set(&self, a: Mask) -> Result<Mask> {
        let full = self.ground.full_mask();
        if !is_subset(a, full) {
            return Err(Error::Precondition("set is not inside the ground set".into()));
        }
        if a == full {
            return Err(Error::Precondition("cannot remove the whole ground set".into()));
        }
        Ok(full & !a)
    }

    pub fn delete_labels(&self, labels: &[impl AsRef<str>]) -> Result<FMatroid> {
        self.delete(self.ground.mask_of(labels)?)
    }

    pub fn contract_labels(&self, labels: &[impl AsRef<str>]) -> Result<FMatroid> {
        self.contract(self.ground.mask_of(labels)?)
    }

    /// `f_*(M)`: apply `f` to every circuit.
    pub fn pushforward(&self, f: Morphism) -> Result<FMatroid> {
        if f.source() != self.tract {
            return Err(Error::TractMismatch {
                expected: f.source(),
                found: self.tract,
            });
        }
        let reps = self.circuits.iter().map(|x| x.map(f)).collect::<Result<Vec<_>>>()?;
        FMatroid::from_circuits(f.target(), self.ground.clone(), &reps)
    }

    pub fn is_loop(&self, label: &str) -> Result<bool> {
        let e = self.ground.index_of(label)?;
        Ok(self.underlying.loops() >> e & 1 == 1)
    }

    pub fn is_coloop(&self, label: &str) -> Result<bool> {
        let e = self.ground.index_of(label)?;
        Ok(self.underlying.coloops() >> e & 1 == 1)
    }

    pub fn max_enum_size(&self) -> Option<u128> {
        enumeration_size(self.tract, self.ground.len())
    }
}

/// `|F|^n`, or `None` for infinite tracts.
pub fn enumeration_size(t: Tract, n: usize) -> Option<u128> {
    t.size().map(|s| s.saturating_pow(n as u32))
}

/// Calls `f` on every vector of `F^E` for a finite tract, in lexicographic
/// order of element indices.
pub fn for_each_vector(
    t: Tract,
    ground: &Arc<GroundSet>,
    max_enum: u128,
    mut f: impl FnMut(FVector) -> Result<()>,
) -> Result<()> {
    let elems = t.elements().ok_or(Error::InfiniteTract(t))?;
    let n = ground.len();
    let total = enumeration_size(t, n).expect("finite");
    if total > max_enum {
        return Err(Error::EnumerationLimit {
            requested: total,
            limit: max_enum,
        });
    }
    let k = elems.len();
    let mut idx = vec![0usize; n];
    loop {
        let entries = idx.iter().map(|&i| elems[i].clone()).collect();
        f(FVector::new(t, ground.clone(), entries)?)?;
        let mut p = n;
        loop {
            if p == 0 {
                return Ok(());
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < k {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// All of `F^E` for a finite tract.
pub fn all_vectors(t: Tract, ground: &Arc<GroundSet>, max_enum: u128) -> Result<Vec<FVector>> {
    let mut out = Vec::new();
    for_each_vector(t, ground, max_enum, |x| {
        out.push(x);
        Ok(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(rows: &[&[&str]]) -> FMatroid {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        let m = Matrix::parse(Tract::FieldQi, &rows).unwrap();
        FMatroid::from_subspace(GroundSet::numbered(m.ncols()).unwrap(), &m).unwrap()
    }

    #[test]
    fn subspace_circuits() {
        let m = qi(&[&["1", "0", "1+i", "1-i"], &["0", "1", "1-i", "1+i"]]);
        assert_eq!(m.underlying().bases().len(), 6);
        let fc = m.fundamental_circuit("3", &["1", "2"]).unwrap();
        assert_eq!(fc, m.vector(&["-1+i", "-1-i", "1", "0"]).unwrap());
        let r = m.cocircuit_rref(0b0011).unwrap();
        assert_eq!(r.row(0).unwrap(), &m.vector(&["1", "0", "1+i", "1-i"]).unwrap());
        assert_eq!(m.dual().unwrap().dual().unwrap(), m);
    }

    #[test]
    fn small_subspaces() {
        let m = Matrix::parse(Tract::FieldQ, &[vec!["1", "1"]]).unwrap();
        let f = FMatroid::from_subspace(GroundSet::numbered(2).unwrap(), &m).unwrap();
        assert_eq!(f.circuits(), &[f.vector(&["1", "-1"]).unwrap()]);
        let bad = Matrix::parse(Tract::FieldQ, &[vec!["1", "1"], vec!["2", "2"]]).unwrap();
        assert!(FMatroid::from_subspace(GroundSet::numbered(2).unwrap(), &bad).is_err());
    }

    #[test]
    fn f3_covectors_are_the_row_space() {
        let m = Matrix::parse(Tract::FieldFp(3), &[vec!["1", "0", "1"], vec!["0", "1", "2"]]).unwrap();
        let f = FMatroid::from_subspace(GroundSet::numbered(3).unwrap(), &m).unwrap();
        let cov = f.enumerate_covectors(DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(cov.len(), 9);
        for x in &cov {
            assert!(f.is_covector_via_rref(x).unwrap());
        }
    }

    #[test]
    fn rank_one() {
        let g = GroundSet::numbered(2).unwrap();
        let phi = FVector::parse(Tract::Sign, g.clone(), &["+", "+"]).unwrap();
        let m = FMatroid::rank1_from_phi(&phi).unwrap();
        assert_eq!(m.circuits(), &[m.vector(&["+", "-"]).unwrap()]);
        assert_eq!(m.cocircuits(), std::slice::from_ref(&phi));
        let phi = FVector::parse(Tract::Phase, g.clone(), &["1", "i"]).unwrap();
        let m = FMatroid::rank1_from_phi(&phi).unwrap();
        assert_eq!(m.circuits(), &[m.vector(&["1", "-i"]).unwrap()]);
        assert_eq!(m.cocircuits(), std::slice::from_ref(&phi));
        let literal = FMatroid::rank1_literal_circuit(&phi, 0, 1).unwrap();
        assert!(!literal.is_orthogonal(&phi).unwrap());
        let phi = FVector::parse(Tract::Sign, g, &["+", "0"]).unwrap();
        let m = FMatroid::rank1_from_phi(&phi).unwrap();
        assert_eq!(m.circuits(), &[m.vector(&["0", "+"]).unwrap()]);
        assert!(m.is_loop("2").unwrap());
        assert!(m.is_coloop("1").unwrap());
    }

    #[test]
    fn enumeration_guard() {
        let m = qi(&[&["1", "1"]]);
        assert_eq!(
            m.enumerate_covectors(10).unwrap_err(),
            Error::InfiniteTract(Tract::FieldQi)
        );
        let g = GroundSet::numbered(12).unwrap();
        let e = all_vectors(Tract::Sign, &g, 1000).unwrap_err();
        assert!(matches!(e, Error::EnumerationLimit { .. }));
    }

    #[test]
    fn minors_of_u24() {
        let m = qi(&[&["1", "0", "1+i", "1-i"], &["0", "1", "1-i", "1+i"]]);
        let d = m.delete(0b1000).unwrap();
        assert_eq!(d.ground().len(), 3);
        assert_eq!(d.circuits().len(), 1);
        let c = m.contract(0b1000).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.dual().unwrap(), m.dual().unwrap().delete(0b1000).unwrap());
        assert!(m.delete(0b1111).is_err());
    }
}
