//! A catalog of worked examples, each with machine-checked facts.
//!
//! Every fact records the value it is expected to have. Where a commonly
//! quoted form of a statement is false, the fact says so and expects `false`;
//! a corrected companion fact expects `true`.

use std::fmt;

use crate::axioms::{check_circuit_axioms, AxiomMode};
use crate::compose::{composition_closure, flats_from_covectors, CompositionOp};
use crate::diagram::PhaseDiagram;
use crate::error::{Error, Result};
use crate::fmatroid::{all_vectors, FMatroid, DEFAULT_MAX_ENUM};
use crate::linalg::Matrix;
use crate::num::{Dir, GRat};
use crate::properties::{property_check, search_dependence, SumProperty};
use crate::tract::{Morphism, Scalar, Tract};
use crate::vector::{orbit_reps, FVector, GroundSet};

/// One checked assertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub name: String,
    pub expected: bool,
    pub observed: bool,
}

impl Fact {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub id: String,
    pub description: String,
    pub facts: Vec<Fact>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.facts.iter().all(Fact::passed)
    }

    pub fn fact(&self, name: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]: {}",
            self.id,
            if self.passed() { "ok" } else { "FAILED" },
            self.description
        )?;
        for x in &self.facts {
            writeln!(
                f,
                "  {} {} (expected {}, observed {})",
                if x.passed() { "pass" } else { "FAIL" },
                x.name,
                x.expected,
                x.observed
            )?;
        }
        Ok(())
    }
}

struct Facts(Vec<Fact>);

impl Facts {
    fn holds(&mut self, name: &str, observed: bool) {
        self.check(name, true, observed);
    }

    fn check(&mut self, name: &str, expected: bool, observed: bool) {
        self.0.push(Fact {
            name: name.to_string(),
            expected,
            observed,
        });
    }
}

/// Identifiers accepted by [`run_fixture`], in run order.
pub const FIXTURE_IDS: &[&str] = &[
    "topclosure-541",
    "lindep-542",
    "duality-544",
    "deletion-545",
    "contraction-546",
    "morph-ex44",
    "flats-f3",
    "rank1-phase",
    "rank1-sign",
    "om-u24",
    "om-u24-flipped",
];

pub fn describe(id: &str) -> Result<&'static str> {
    Ok(match id {
        "topclosure-541" => "phase covectors need not form a closed set",
        "lindep-542" => "maximal independent sets of phase covectors of different sizes",
        "duality-544" => "phase covectors differ from the orthogonal complement of the vectors",
        "deletion-545" => "a covector of a deletion that does not extend",
        "contraction-546" => "a covector of a contraction that does not lift",
        "morph-ex44" => "two complex matroids with the same phase pushforward",
        "flats-f3" => "a flat of a ternary matroid that is no covector's zero set",
        "rank1-phase" => "rank-one phase matroid from phi = (1, i)",
        "rank1-sign" => "rank-one sign matroid from phi = (+, -, 0)",
        "om-u24" => "signed circuits of four vectors in the plane",
        "om-u24-flipped" => "the same circuits with one sign flipped",
        _ => return Err(Error::UnknownFixture(id.to_string())),
    })
}

/// Builds and checks one fixture.
pub fn run_fixture(id: &str) -> Result<Report> {
    let description = describe(id)?.to_string();
    let facts = match id {
        "topclosure-541" => topclosure()?,
        "lindep-542" => lindep()?,
        "duality-544" => duality()?,
        "deletion-545" => deletion()?,
        "contraction-546" => contraction()?,
        "morph-ex44" => morph()?,
        "flats-f3" => flats_f3()?,
        "rank1-phase" => rank1_phase()?,
        "rank1-sign" => rank1_sign()?,
        "om-u24" => om_u24(false)?,
        "om-u24-flipped" => om_u24(true)?,
        _ => unreachable!("describe rejects unknown ids"),
    };
    Ok(Report {
        id: id.to_string(),
        description,
        facts: facts.0,
    })
}

/// Runs every fixture in order.
pub fn run_all() -> Result<Vec<Report>> {
    FIXTURE_IDS.iter().map(|id| run_fixture(id)).collect()
}

/// The F-matroid whose covectors are the row space of `rows` over `t`.
pub fn row_space(t: Tract, rows: &[&[&str]]) -> Result<FMatroid> {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    let m = Matrix::parse(t, &rows)?;
    FMatroid::from_subspace(GroundSet::numbered(m.ncols())?, &m)
}

/// Phase pushforward of a Gaussian-rational row space.
pub fn phase_row_space(rows: &[&[&str]]) -> Result<FMatroid> {
    row_space(Tract::FieldQi, rows)?.pushforward(Morphism::PhaseMap)
}

pub const TOPCLOSURE: &[&[&str]] = &[&["1", "0", "i"], &["0", "1", "1"]];
pub const EX44_M1: &[&[&str]] = &[&["1", "1+i", "1", "0"], &["1+i", "3i", "0", "1"]];
pub const EX44_M2: &[&[&str]] = &[&["1", "1+i", "1", "0"], &["1+i", "4i", "0", "1"]];
pub const DUALITY: &[&[&str]] = &[&["1", "0", "1+i", "1-i"], &["0", "1", "1-i", "1+i"]];
pub const DUALITY_ALT: &[&[&str]] = &[&["1-i", "1+i", "1", "0"], &["1+i", "1-i", "0", "1"]];
pub const DELETION: &[&[&str]] = &[
    &["0", "-1", "0", "0", "i", "1-i", "1"],
    &["-1", "0", "-1", "0", "-i", "3+i", "2"],
    &["0", "-i", "0", "2i", "-i", "-2i", "-i"],
    &["0", "0", "-i", "i+1", "0", "-2", "-1"],
];
pub const DELETION_CIRCUITS: &[&[&str]] = &[
    &["-1+i", "-i", "1", "1/2-1/2i", "1", "0"],
    &["2-i", "1+i", "1", "3/2+1/2i", "0", "1"],
    &["5-5i", "1+3i", "-2-2i", "0", "-3-i", "1-i"],
    &["3-2i", "1+2i", "0", "1+i", "-1", "1"],
    &["3+4i", "0", "5", "7/2+1/2i", "3-i", "2+i"],
    &["0", "7-4i", "13", "25/2-5/2i", "8+i", "5-i"],
];
pub const CONTRACTION: &[&[&str]] = &[
    &["3", "0", "0", "1", "1", "-3"],
    &["0", "3", "0", "1", "1", "3+3i"],
    &["0", "0", "3", "1", "1", "3-3i"],
];
pub const CONTRACTION_CIRCUITS: &[&[&str]] = &[
    &["1", "-1+i", "-1-i", "0", "0", "1"],
    &["2+i", "2i", "0", "-3-3i", "0", "1"],
    &["2-i", "0", "-2i", "-3+3i", "0", "1"],
    &["0", "2-i", "2+i", "-3", "0", "-1"],
    &["2+i", "2i", "0", "0", "-3-3i", "1"],
    &["2-i", "0", "-2i", "0", "-3+3i", "1"],
    &["0", "2-i", "2+i", "0", "-3", "-1"],
    &["1", "1", "1", "0", "-3", "0"],
    &["1", "1", "1", "-3", "0", "0"],
    &["0", "0", "0", "1", "-1", "0"],
];
pub const FLATS_F3: &[&[&str]] = &[&["1", "0", "1", "1"], &["0", "1", "1", "2"]];

/// Circuits with their (unique) ground set, as literals over `t`.
fn literal_reps(t: Tract, ground: &std::sync::Arc<GroundSet>, rows: &[&[&str]]) -> Result<Vec<FVector>> {
    rows.iter().map(|r| FVector::parse(t, ground.clone(), r)).collect()
}

fn same_orbits(a: &[FVector], b: &[FVector]) -> bool {
    orbit_reps(a) == orbit_reps(b)
}

fn topclosure() -> Result<Facts> {
    let m = phase_row_space(TOPCLOSURE)?;
    let mut f = Facts(Vec::new());
    f.holds(
        "(1,1,ph(1,10)) is a covector",
        m.is_covector(&m.vector(&["1", "1", "ph(1,10)"])?)?,
    );
    f.holds(
        "(1,1,ph(1,1000)) is a covector",
        m.is_covector(&m.vector(&["1", "1", "ph(1,1000)"])?)?,
    );
    f.holds(
        "(1,1,i) is not a covector",
        !m.is_covector(&m.vector(&["1", "1", "i"])?)?,
    );
    // covectors are exactly {γ ∈ iα ⊞ β}, on the 12-direction grid with zero
    let mut grid = vec![Scalar::zero(Tract::Phase)];
    for k in 0..12 {
        grid.push(Scalar::ph(twelve(k)));
    }
    let i = Scalar::ph(Dir::of(0, 1));
    let mut agree = true;
    for a in &grid {
        for b in &grid {
            for c in &grid {
                let x = FVector::new(Tract::Phase, m.ground().clone(), vec![a.clone(), b.clone(), c.clone()])?;
                let want = crate::tract::in_hypersum(c, &[i.mul(a), b.clone()])?;
                agree &= m.is_covector(&x)? == want;
            }
        }
    }
    f.holds("covectors are {γ ∈ iα ⊞ β} on a 12-direction grid", agree);
    Ok(f)
}

/// Twelve rays, three per quadrant: an axis and the rays (2,1), (1,2),
/// rotated by quarter turns.
pub fn twelve(k: usize) -> Dir {
    const BASE: [(i64, i64); 3] = [(1, 0), (2, 1), (1, 2)];
    let (x, y) = BASE[k % 3];
    let mut d = Dir::of(x, y);
    for _ in 0..k / 3 {
        d = d.rot90();
    }
    d
}

fn lindep() -> Result<Facts> {
    let m = phase_row_space(EX44_M1)?;
    let x1 = m.vector(&["2+i", "1+4i", "1", "1"])?;
    let x2 = m.vector(&["2+i", "1+5i", "1", "1"])?;
    let p = m.vector(&["1", "1+i", "1", "0"])?;
    let target = m.vector(&["1+i", "3i", "0", "1"])?;
    let mut f = Facts(Vec::new());
    for (name, v) in [
        ("X1", &x1),
        ("X2", &x2),
        ("ph(1,1+i,1,0)", &p),
        ("ph(1+i,3i,0,1)", &target),
    ] {
        f.holds(&format!("{name} is a covector"), m.is_covector(v)?);
    }
    let one = Scalar::one(Tract::Phase);
    let zero = Scalar::zero(Tract::Phase);
    let minus = one.neg();
    let comb = |c: [&Scalar; 3]| -> Result<bool> {
        let terms = vec![x1.scalar_mul(c[0])?, x2.scalar_mul(c[1])?, p.scalar_mul(c[2])?];
        target.in_vec_hypersum(&terms)
    };
    f.check("target in (-1)X1 + 0X2 + P", false, comb([&minus, &zero, &one])?);
    f.check("target in 0X1 + (-1)X2 + P", false, comb([&zero, &minus, &one])?);
    f.holds("target in X1 + 0X2 + (-1)P", comb([&one, &zero, &minus])?);
    f.holds("target in 0X1 + X2 + (-1)P", comb([&zero, &one, &minus])?);
    let v = search_dependence(&[x1, x2, p], DEFAULT_MAX_ENUM)?;
    f.holds(
        "no dependence among {X1, X2, P} in the candidate search",
        !v.is_proven(),
    );
    Ok(f)
}

fn duality() -> Result<Facts> {
    let v = row_space(Tract::FieldQi, DUALITY)?;
    let m = v.pushforward(Morphism::PhaseMap)?;
    let mut f = Facts(Vec::new());
    let alt = row_space(Tract::FieldQi, DUALITY_ALT)?;
    f.check(
        "second displayed matrix spans the same space over Q(i)",
        false,
        alt == v,
    );
    let phases_agree = alt.pushforward(Morphism::PhaseMap)? == m;
    f.holds("second displayed matrix has the same phase pushforward", phases_agree);
    let ones = m.vector(&["1", "1", "1", "1"])?;
    f.holds(
        "(1,1,2,2) is in the complex row space",
        v.is_covector(&v.vector(&["1", "1", "2", "2"])?)?,
    );
    f.holds("(1,1,1,1) is a covector", m.is_covector(&ones)?);
    for (name, d) in [("ph(-100,-1)", "ph(-100,-1)"), ("ph(-1000,-1)", "ph(-1000,-1)")] {
        let x = m.vector(&["1", "1", d, d])?;
        f.holds(&format!("(1,1,{name},{name}) is a vector"), m.is_vector(&x)?);
        f.holds(
            &format!("(1,1,{name},{name}) is not orthogonal to (1,1,1,1)"),
            !x.is_orthogonal(&ones)?,
        );
    }
    f.holds("ph(-100,-1) is strictly below the negative real axis", {
        let d = Dir::of(-100, -1);
        d.x() < &0.into() && d.y() < &0.into()
    });
    // the reference drawing: four circles as (direction, label) lists
    let drawing: [&[(i64, i64, &str)]; 4] = [
        &[(1, 0, "1"), (1, 1, "3"), (1, -1, "4")],
        &[(1, 0, "2"), (1, 1, "4"), (1, -1, "3")],
        &[(1, 0, "3"), (1, 1, "2"), (1, -1, "1")],
        &[(1, 0, "4"), (1, 1, "1"), (1, -1, "2")],
    ];
    let g = m.ground().clone();
    let mut drawn = Vec::new();
    for circle in drawing {
        let mut x = FVector::zero(Tract::Phase, g.clone());
        for &(a, b, l) in circle {
            x = x.with_entry(g.index_of(l)?, Scalar::ph(Dir::of(a, b)))?;
        }
        drawn.push(x);
    }
    f.holds(
        "the drawing shows one cocircuit per orbit",
        same_orbits(&drawn, m.cocircuits()),
    );
    let diagram = PhaseDiagram::from_vectors(&drawn)?;
    let labels_ok = diagram.circles.iter().zip(drawing).all(|(c, fig)| {
        c.points.len() == fig.len()
            && fig
                .iter()
                .all(|&(a, b, l)| c.points.iter().any(|p| p.dir == Dir::of(a, b) && p.labels == [l]))
    });
    f.holds("diagram points and labels match the drawing", labels_ok);
    Ok(f)
}

/// `Z(7)` candidates: zero, the eight rays through ±1, ±i, ±α, ±conj(α) for
/// `α = ph(100,1)`, and one ray inside each of the eight open sectors
/// between them.
pub fn deletion_candidates() -> Vec<Scalar> {
    let rays = [
        (1, 0),
        (200, 1),
        (100, 1),
        (1, 1),
        (0, 1),
        (-1, 1),
        (-100, 1),
        (-200, 1),
    ];
    let mut out = vec![Scalar::zero(Tract::Phase)];
    for (x, y) in rays {
        out.push(Scalar::ph(Dir::of(x, y)));
        out.push(Scalar::ph(Dir::of(-x, -y)));
    }
    out
}

fn deletion() -> Result<Facts> {
    let v = row_space(Tract::FieldQi, DELETION)?;
    let dv = v.delete_labels(&["7"])?;
    let mut f = Facts(Vec::new());
    let listed = literal_reps(Tract::FieldQi, dv.ground(), DELETION_CIRCUITS)?;
    f.holds(
        "six listed circuits match the computed deletion",
        same_orbits(&listed, dv.circuits()),
    );
    let m = v.pushforward(Morphism::PhaseMap)?;
    let md = m.delete_labels(&["7"])?;
    for a in ["ph(100,1)", "ph(1000,1)"] {
        let z1 = md.vector(&[a, "1", "-1", "1", a, "-1"])?;
        f.holds(
            &format!("Z1 with alpha = {a} is a covector of the deletion"),
            md.is_covector(&z1)?,
        );
    }
    let y1 = m.vector(&["1", "1", "1", "1", "0", "0", "1"])?;
    let y2 = m.vector(&["0", "0", "1", "1", "1", "1", "-1"])?;
    f.holds(
        "Y1 and Y2 are circuits",
        m.circuits().contains(&y1) && m.circuits().contains(&y2.normalized()),
    );
    let cands = deletion_candidates();
    f.holds("17 distinct candidates for Z(7)", {
        let mut c = cands.clone();
        c.sort();
        c.dedup();
        c.len() == 17
    });
    let mut none_extend = true;
    let mut dichotomy = true;
    for c in &cands {
        let z = m
            .vector(&["ph(100,1)", "1", "-1", "1", "ph(100,1)", "-1", "0"])?
            .with_entry(6, c.clone())?;
        none_extend &= !m.is_covector(&z)?;
        let lower = c.direction().is_some_and(|d| d.y() < &0.into());
        let upper = c.direction().is_some_and(|d| d.y() > &0.into());
        dichotomy &= z.is_orthogonal(&y1)? == lower && z.is_orthogonal(&y2)? == upper;
    }
    f.holds("no candidate extends Z1 to a covector", none_extend);
    f.holds(
        "Z is orthogonal to Y1 iff Z(7) is in the lower open half, to Y2 iff upper",
        dichotomy,
    );
    Ok(f)
}

fn contraction() -> Result<Facts> {
    let w = row_space(Tract::FieldQi, CONTRACTION)?;
    let mut f = Facts(Vec::new());
    let listed = literal_reps(Tract::FieldQi, w.ground(), CONTRACTION_CIRCUITS)?;
    f.holds(
        "ten listed circuits match the computed circuits",
        same_orbits(&listed, w.circuits()),
    );
    let m = w.pushforward(Morphism::PhaseMap)?;
    let mc = m.contract_labels(&["6"])?;
    let seven: Vec<FVector> = listed[..7]
        .iter()
        .map(|x| x.map(Morphism::PhaseMap)?.restrict_onto(mc.ground()))
        .collect::<Result<_>>()?;
    f.holds(
        "the first seven, with coordinate 6 removed, are circuits of the contraction",
        seven.iter().all(|x| mc.circuits().contains(&x.normalized())),
    );
    f.check(
        "the first seven are all the circuits of the contraction",
        false,
        same_orbits(&seven, mc.circuits()),
    );
    let extra = mc.vector(&["0", "0", "0", "1", "-1"])?;
    f.holds(
        "(0,0,0,1,-1) is a circuit of the contraction",
        mc.circuits().contains(&extra),
    );
    let b = "ph(100,1)";
    let stated = mc.vector(&["1", "1", "1", "1", b])?;
    f.check(
        "(1,1,1,1,beta) is a covector of the contraction",
        false,
        mc.is_covector(&stated)?,
    );
    let lifted = m.vector(&["1", "1", "1", "1", b, "0"])?;
    f.holds("(1,1,1,1,beta,0) is not a covector", !m.is_covector(&lifted)?);
    f.holds(
        "(1,1,1,1,beta,0) is not orthogonal to (0,0,0,1,-1,0)",
        !lifted.is_orthogonal(&m.vector(&["0", "0", "0", "1", "-1", "0"])?)?,
    );
    for beta in [b, "ph(1000,1)"] {
        let good = mc.vector(&["1", "1", "1", beta, beta])?;
        f.holds(
            &format!("(1,1,1,b,b) is a covector of the contraction for b = {beta}"),
            mc.is_covector(&good)?,
        );
        let good_lift = m.vector(&["1", "1", "1", beta, beta, "0"])?;
        f.holds(
            &format!("(1,1,1,b,b,0) is not a covector for b = {beta}"),
            !m.is_covector(&good_lift)?,
        );
    }
    Ok(f)
}

/// For a rank-2 row space whose rows are the identity on coordinates 3 and
/// 4, the unique ratio `t = a/b > 0` with `ph(a r1(1) + b r2(1)) = ph(x)`,
/// if any.
fn ratio_matching_phase(r1: &GRat, r2: &GRat, x: &GRat) -> Option<crate::num::Rat> {
    use num_traits::{Signed, Zero};
    // Im((t r1 + r2) conj x) = 0 and Re(...) > 0
    let c = x.conj();
    let a = (r1 * &c).im;
    let b = (r2 * &c).im;
    if a.is_zero() {
        return None;
    }
    let t = -b / a;
    let z = &(&GRat::from_re(t.clone()) * r1) + r2;
    let re = (&z * &c).re;
    (t.is_positive() && re.is_positive()).then_some(t)
}

fn morph() -> Result<Facts> {
    let c1 = row_space(Tract::FieldQi, EX44_M1)?;
    let c2 = row_space(Tract::FieldQi, EX44_M2)?;
    let p1 = c1.pushforward(Morphism::PhaseMap)?;
    let p2 = c2.pushforward(Morphism::PhaseMap)?;
    let mut f = Facts(Vec::new());
    f.holds("phase circuit orbits agree", p1.circuits() == p2.circuits());
    let coc1: Vec<FVector> = c1
        .cocircuits()
        .iter()
        .map(|x| x.map(Morphism::PhaseMap))
        .collect::<Result<_>>()?;
    let coc2: Vec<FVector> = c2
        .cocircuits()
        .iter()
        .map(|x| x.map(Morphism::PhaseMap))
        .collect::<Result<_>>()?;
    f.holds("phases of the cocircuits agree", same_orbits(&coc1, &coc2));
    let x1 = c1.vector(&["2+i", "1+4i", "1", "1"])?;
    let x2 = c2.vector(&["2+i", "1+5i", "1", "1"])?;
    f.holds("(2+i,1+4i,1,1) is in the first row space", c1.is_covector(&x1)?);
    f.holds("(2+i,1+5i,1,1) is in the second row space", c2.is_covector(&x2)?);
    f.holds(
        "ph(2+i,1+4i,1,1) is a covector of the pushforward",
        p1.is_covector(&x1.map(Morphism::PhaseMap)?)?,
    );
    f.holds(
        "ph(2+i,1+5i,1,1) is a covector of the pushforward",
        p1.is_covector(&x2.map(Morphism::PhaseMap)?)?,
    );
    // an element of the second row space with phases 1 at coordinates 3, 4
    // is a·r1 + b·r2 with a, b > 0; the first coordinate fixes a/b
    let g = |s: &str| s.parse::<GRat>();
    let (r1a, r1b, r2a, r2b) = (g("1")?, g("1+i")?, g("1+i")?, g("4i")?);
    let t = ratio_matching_phase(&r1a, &r2a, &g("2+i")?);
    let escapes = match t {
        None => true,
        Some(t) => {
            let second = &(&GRat::from_re(t) * &r1b) + &r2b;
            Dir::of_grat(&second)? != Dir::of_grat(&g("1+4i")?)?
        }
    };
    f.holds(
        "ph(2+i,1+4i,1,1) is not the phase of any element of the second row space",
        escapes,
    );
    Ok(f)
}

fn flats_f3() -> Result<Facts> {
    let m = row_space(Tract::FieldFp(3), FLATS_F3)?;
    let mut f = Facts(Vec::new());
    let flats = m.underlying().flats();
    f.holds("the empty set is a flat", flats.contains(&0));
    let all = all_vectors(Tract::FieldFp(3), m.ground(), DEFAULT_MAX_ENUM)?;
    f.holds("81 vectors scanned", all.len() == 81);
    let mut covectors = 0;
    let mut all_have_zero = true;
    for x in &all {
        if m.is_covector(x)? {
            covectors += 1;
            all_have_zero &= x.zero_set_mask() != 0;
        }
    }
    f.holds("9 covectors", covectors == 9);
    f.holds("every covector has a zero coordinate", all_have_zero);
    let zero_sets = flats_from_covectors(&m, DEFAULT_MAX_ENUM)?;
    f.holds(
        "every covector zero set is a flat",
        zero_sets.iter().all(|z| flats.contains(z)),
    );
    f.check(
        "covector zero sets are all the flats",
        false,
        zero_sets.len() == flats.len(),
    );
    Ok(f)
}

fn rank1_phase() -> Result<Facts> {
    let g = GroundSet::numbered(2)?;
    let phi = FVector::parse(Tract::Phase, g.clone(), &["1", "i"])?;
    let m = FMatroid::rank1_from_phi(&phi)?;
    let mut f = Facts(Vec::new());
    let want = FVector::parse(Tract::Phase, g.clone(), &["1", "-i"])?;
    f.holds("the circuit is (1,-i)", m.circuits() == [want.clone()]);
    f.holds("the circuit is orthogonal to phi", want.is_orthogonal(&phi)?);
    f.holds("cocircuits are the orbit of phi", m.cocircuits() == [phi.normalized()]);
    let literal = FMatroid::rank1_literal_circuit(&phi, 0, 1)?;
    f.check(
        "the formula with e and f swapped gives a circuit orthogonal to phi",
        false,
        literal.is_orthogonal(&phi)?,
    );
    f.holds(
        "strong circuit axioms hold",
        check_circuit_axioms(m.circuits(), AxiomMode::Strong)?.is_proven(),
    );
    Ok(f)
}

fn rank1_sign() -> Result<Facts> {
    let g = GroundSet::numbered(3)?;
    let phi = FVector::parse(Tract::Sign, g.clone(), &["+", "-", "0"])?;
    let m = FMatroid::rank1_from_phi(&phi)?;
    let mut f = Facts(Vec::new());
    let want = vec![
        FVector::parse(Tract::Sign, g.clone(), &["0", "0", "+"])?,
        FVector::parse(Tract::Sign, g.clone(), &["+", "+", "0"])?,
    ];
    f.holds(
        "circuits are (+,+,0) and the loop at 3",
        same_orbits(m.circuits(), &want),
    );
    f.holds("3 is a loop", m.is_loop("3")?);
    let cov = m.enumerate_covectors(DEFAULT_MAX_ENUM)?;
    f.holds(
        "covectors are 0, phi and -phi",
        cov.len() == 3 && cov.contains(&phi) && cov.contains(&phi.neg()),
    );
    Ok(f)
}

/// Signed circuits of the vectors (1,0), (0,1), (1,1), (1,2).
pub const OM_U24: &[&[&str]] = &[
    &["+", "+", "-", "0"],
    &["+", "+", "0", "-"],
    &["+", "0", "-", "+"],
    &["0", "+", "+", "-"],
];

fn om_u24(flipped: bool) -> Result<Facts> {
    let g = GroundSet::numbered(4)?;
    let mut reps = literal_reps(Tract::Sign, &g, OM_U24)?;
    let mut f = Facts(Vec::new());
    if flipped {
        reps[3] = FVector::parse(Tract::Sign, g, &["0", "+", "-", "-"])?;
        let v = check_circuit_axioms(&reps, AxiomMode::Strong)?;
        f.holds("strong circuit axioms are refuted", v.is_refuted());
        f.holds(
            "the witness names a modular family",
            v.witness().is_some_and(|w| w.vectors.len() >= 2),
        );
        return Ok(f);
    }
    let q =
        row_space(Tract::FieldQ, &[&["1", "0", "1", "1"], &["0", "1", "1", "2"]])?.pushforward(Morphism::SignMap)?;
    f.holds(
        "circuits are the signs of the real circuits",
        same_orbits(&reps, q.circuits()),
    );
    f.holds(
        "strong circuit axioms hold",
        check_circuit_axioms(&reps, AxiomMode::Strong)?.is_proven(),
    );
    let m = FMatroid::from_circuits(Tract::Sign, reps[0].ground().clone(), &reps)?;
    let cov = m.enumerate_covectors(DEFAULT_MAX_ENUM)?;
    let mut gens: Vec<FVector> = m.cocircuits().to_vec();
    gens.extend(m.cocircuits().iter().map(FVector::neg));
    let mut closure = composition_closure(CompositionOp::Inflation, &gens)?;
    closure.insert(FVector::zero(Tract::Sign, m.ground().clone()));
    f.holds(
        "covectors are the compositions of signed cocircuits",
        closure.into_iter().collect::<Vec<_>>() == {
            let mut c = cov.clone();
            c.sort();
            c
        },
    );
    let mut elim = true;
    for x in &cov {
        for y in &cov {
            for e in 0..4 {
                if !x.get(e).is_zero() && x.get(e) == &y.get(e).neg() {
                    elim &= property_check(&m, &SumProperty::Elimination { e }, x, y, DEFAULT_MAX_ENUM)?.is_proven();
                }
            }
        }
    }
    f.holds("covectors satisfy elimination", elim);
    Ok(f)
}
