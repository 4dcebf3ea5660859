//! Ordinary matroids on at most [`MAX_GROUND`] elements, by brute force over
//! subsets.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::vector::{is_subset, mask_iter, mask_len, FVector, GroundSet, Mask, MAX_GROUND};

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: Arc<GroundSet>,
    circuits: Vec<Mask>,
    bases: Vec<Mask>,
    rank_table: Vec<u8>,
    lattice: OnceLock<SupportLattice>,
}

impl PartialEq for Matroid {
    fn eq(&self, o: &Self) -> bool {
        self.ground == o.ground && self.circuits == o.circuits
    }
}

impl Eq for Matroid {}

fn check_size(g: &GroundSet) -> Result<()> {
    if g.len() > MAX_GROUND {
        return Err(Error::Precondition(format!("at most {MAX_GROUND} elements supported")));
    }
    Ok(())
}

impl Matroid {
    /// Builds a matroid from its circuits, checking the circuit axioms.
    pub fn from_circuits(ground: Arc<GroundSet>, circuits: &[Mask]) -> Result<Self> {
        Self::from_circuits_opt(ground, circuits, true)
    }

    /// As [`Matroid::from_circuits`], optionally skipping the elimination check.
    pub fn from_circuits_opt(ground: Arc<GroundSet>, circuits: &[Mask], validate: bool) -> Result<Self> {
        check_size(&ground)?;
        let full = ground.full_mask();
        let mut cs: Vec<Mask> = circuits.to_vec();
        cs.sort_unstable();
        cs.dedup();
        for &c in &cs {
            if c == 0 {
                return Err(Error::Axiom("the empty set is not a circuit".into()));
            }
            if !is_subset(c, full) {
                return Err(Error::Precondition("circuit outside the ground set".into()));
            }
        }
        for &a in &cs {
            for &b in &cs {
                if a != b && is_subset(a, b) {
                    return Err(Error::Axiom(format!(
                        "circuits {} and {} are nested",
                        ground.format_mask(a),
                        ground.format_mask(b)
                    )));
                }
            }
        }
        if validate {
            for (k, &a) in cs.iter().enumerate() {
                for &b in &cs[k + 1..] {
                    for e in mask_iter(a & b) {
                        let u = (a | b) & !(1 << e);
                        if !cs.iter().any(|&c| is_subset(c, u)) {
                            return Err(Error::Axiom(format!(
                                "no circuit in ({} ∪ {}) - {}",
                                ground.format_mask(a),
                                ground.format_mask(b),
                                ground.label(e)
                            )));
                        }
                    }
                }
            }
        }
        let n = ground.len();
        let indep: Vec<bool> = (0..1u32 << n).map(|s| !cs.iter().any(|&c| is_subset(c, s))).collect();
        Ok(Self::assemble(ground, cs, &indep))
    }

    /// Builds a matroid from its bases (assumed to satisfy basis exchange).
    pub fn from_bases(ground: Arc<GroundSet>, bases: &[Mask]) -> Result<Self> {
        check_size(&ground)?;
        if bases.is_empty() {
            return Err(Error::Axiom("a matroid has at least one basis".into()));
        }
        let n = ground.len();
        let indep: Vec<bool> = (0..1u32 << n).map(|s| bases.iter().any(|&b| is_subset(s, b))).collect();
        let circuits: Vec<Mask> = (0..1u32 << n)
            .filter(|&s| !indep[s as usize] && mask_iter(s).all(|e| indep[(s & !(1 << e)) as usize]))
            .collect();
        Ok(Self::assemble(ground, circuits, &indep))
    }

    fn assemble(ground: Arc<GroundSet>, circuits: Vec<Mask>, indep: &[bool]) -> Self {
        let n = ground.len();
        let mut rank_table = vec![0u8; 1 << n];
        for s in 1..(1u32 << n) {
            rank_table[s as usize] = if indep[s as usize] {
                mask_len(s) as u8
            } else {
                mask_iter(s)
                    .map(|e| rank_table[(s & !(1 << e)) as usize])
                    .max()
                    .unwrap_or(0)
            };
        }
        let r = rank_table[ground.full_mask() as usize];
        let bases = (0..1u32 << n)
            .filter(|&s| indep[s as usize] && mask_len(s) == r as usize)
            .collect();
        Matroid {
            ground,
            circuits,
            bases,
            rank_table,
            lattice: OnceLock::new(),
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Circuits, sorted as bitmasks.
    pub fn circuits(&self) -> &[Mask] {
        &self.circuits
    }

    /// Bases, sorted as bitmasks.
    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground.full_mask())
    }

    pub fn rank_of(&self, s: Mask) -> usize {
        self.rank_table[s as usize] as usize
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rank_of(s) == mask_len(s)
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn closure(&self, s: Mask) -> Mask {
        let r = self.rank_of(s);
        (0..self.ground.len())
            .filter(|&e| self.rank_of(s | 1 << e) == r)
            .fold(s, |m, e| m | 1 << e)
    }

    /// The unique circuit inside `B ∪ {e}`.
    pub fn fundamental_circuit(&self, e: usize, basis: Mask) -> Result<Mask> {
        if !self.is_basis(basis) {
            return Err(Error::NotABasis(self.ground.format_mask(basis)));
        }
        if basis >> e & 1 == 1 {
            return Err(Error::Precondition(format!(
                "{} lies in the basis",
                self.ground.label(e)
            )));
        }
        let u = basis | 1 << e;
        Ok(*self
            .circuits
            .iter()
            .find(|&&c| is_subset(c, u))
            .expect("adding an element to a basis creates a circuit"))
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground.full_mask();
        let bases: Vec<Mask> = self.bases.iter().map(|b| full & !b).collect();
        Matroid::from_bases(self.ground.clone(), &bases).expect("complements of bases")
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> Vec<Mask> {
        self.dual().circuits
    }

    /// Complements of cocircuits.
    pub fn hyperplanes(&self) -> Vec<Mask> {
        let full = self.ground.full_mask();
        let mut h: Vec<Mask> = self.cocircuits().iter().map(|c| full & !c).collect();
        h.sort_unstable();
        h
    }

    /// All closed sets, sorted as bitmasks.
    pub fn flats(&self) -> Vec<Mask> {
        (0..=self.ground.full_mask())
            .filter(|&s| self.closure(s) == s)
            .collect()
    }

    pub fn loops(&self) -> Mask {
        self.circuits
            .iter()
            .filter(|c| mask_len(**c) == 1)
            .fold(0, |m, c| m | c)
    }

    pub fn coloops(&self) -> Mask {
        self.bases.iter().fold(self.ground.full_mask(), |m, b| m & b)
    }

    pub fn support_lattice(&self) -> &SupportLattice {
        self.lattice.get_or_init(|| SupportLattice::new(&self.circuits))
    }

    /// Is the set of circuit supports `family` a modular family?
    pub fn is_modular_family(&self, family: &[Mask]) -> Result<bool> {
        for s in family {
            if self.circuits.binary_search(s).is_err() {
                return Err(Error::Precondition(format!(
                    "{} is not a circuit",
                    self.ground.format_mask(*s)
                )));
            }
        }
        let distinct: BTreeSet<Mask> = family.iter().copied().collect();
        let union = distinct.iter().fold(0, |m, s| m | s);
        Ok(self.support_lattice().height(union) == Some(distinct.len()))
    }
}

/// Unions of circuit supports ordered by inclusion, with heights.
#[derive(Clone, Debug)]
pub struct SupportLattice {
    heights: BTreeMap<Mask, usize>,
}

impl SupportLattice {
    pub fn new(supports: &[Mask]) -> Self {
        let mut elems: BTreeSet<Mask> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(s) = frontier.pop() {
            for &c in supports {
                if elems.insert(s | c) {
                    frontier.push(s | c);
                }
            }
        }
        let mut order: Vec<Mask> = elems.into_iter().collect();
        order.sort_by_key(|&s| (mask_len(s), s));
        let mut heights = BTreeMap::new();
        for &s in &order {
            let h = heights
                .iter()
                .filter(|(&t, _)| t != s && is_subset(t, s))
                .map(|(_, &h)| h + 1)
                .max()
                .unwrap_or(0);
            heights.insert(s, h);
        }
        SupportLattice { heights }
    }

    pub fn elements(&self) -> impl Iterator<Item = Mask> + '_ {
        self.heights.keys().copied()
    }

    pub fn contains(&self, s: Mask) -> bool {
        self.heights.contains_key(&s)
    }

    /// Length of the longest chain from the empty set up to `s`.
    pub fn height(&self, s: Mask) -> Option<usize> {
        self.heights.get(&s).copied()
    }

    pub fn top_height(&self) -> usize {
        self.heights.values().copied().max().unwrap_or(0)
    }
}

/// Minimal sets meeting every set in `sets`.
pub fn minimal_transversals(sets: &[Mask], n: usize) -> Vec<Mask> {
    let hits = |t: Mask| sets.iter().all(|&s| s & t != 0);
    (0..1u32 << n)
        .filter(|&t| hits(t) && mask_iter(t).all(|e| !hits(t & !(1 << e))))
        .collect()
}

/// Support bases of a vector set: minimal sets meeting every nonzero support.
pub fn support_bases(w: &[FVector]) -> Result<Vec<Mask>> {
    let Some(first) = w.first() else {
        return Ok(vec![0]);
    };
    let n = first.len();
    let supports: Vec<Mask> = w.iter().map(FVector::support_mask).filter(|&s| s != 0).collect();
    Ok(minimal_transversals(&supports, n))
}
