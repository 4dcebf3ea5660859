//! Tracts and their elements.
//!
//! A tract is a multiplicative group `G` with a null set `N_G` of formal
//! sums; its elements are `G ∪ {0}`. Every tract shipped here comes from a
//! hyperfield (or a field), so the null set is decided by closed-form
//! predicates in [`hypersum`].

pub mod hypersum;
pub mod morphism;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{format_rat, parse_rat, Dir, GRat, Rat};

pub use hypersum::{in_hypersum, inflation_property, pair_sum, zero_in_hypersum, PairSum};
pub use morphism::Morphism;

/// The tracts this crate knows how to compute with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tract {
    /// The rationals, standing in for ℝ.
    FieldQ,
    /// The Gaussian rationals, standing in for ℂ.
    FieldQi,
    /// The prime field with `p` elements.
    FieldFp(u32),
    Krasner,
    Sign,
    Phase,
    Triangle,
    TropReal,
    TropComplex,
    TropPhase,
    UltraTriangle,
}

impl Tract {
    pub const ALL_FIXED: [Tract; 10] = [
        Tract::FieldQ,
        Tract::FieldQi,
        Tract::Krasner,
        Tract::Sign,
        Tract::Phase,
        Tract::Triangle,
        Tract::TropReal,
        Tract::TropComplex,
        Tract::TropPhase,
        Tract::UltraTriangle,
    ];

    pub fn is_field(self) -> bool {
        matches!(self, Tract::FieldQ | Tract::FieldQi | Tract::FieldFp(_))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Tract::FieldFp(_) | Tract::Krasner | Tract::Sign)
    }

    /// True when conjugation is not the identity.
    pub fn has_conjugation(self) -> bool {
        matches!(
            self,
            Tract::FieldQi | Tract::Phase | Tract::TropComplex | Tract::TropPhase
        )
    }

    /// Tracts whose nonzero elements carry an absolute value.
    pub fn has_magnitude(self) -> bool {
        matches!(
            self,
            Tract::Triangle | Tract::TropReal | Tract::TropComplex | Tract::TropPhase | Tract::UltraTriangle
        )
    }

    /// All elements of a finite tract, zero first.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Tract::Krasner => Some(vec![Scalar::zero(self), Scalar::one(self)]),
            Tract::Sign => Some(vec![Scalar::zero(self), Scalar::plus(), Scalar::minus()]),
            Tract::FieldFp(p) => Some(
                std::iter::once(Scalar::zero(self))
                    .chain((1..p).map(|r| Scalar {
                        tract: self,
                        value: Value::Residue(r),
                    }))
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn size(self) -> Option<u128> {
        match self {
            Tract::Krasner => Some(2),
            Tract::Sign => Some(3),
            Tract::FieldFp(p) => Some(p as u128),
            _ => None,
        }
    }
}

impl fmt::Display for Tract {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tract::FieldQ => f.write_str("q"),
            Tract::FieldQi => f.write_str("qi"),
            Tract::FieldFp(p) => write!(f, "fp:{p}"),
            Tract::Krasner => f.write_str("krasner"),
            Tract::Sign => f.write_str("sign"),
            Tract::Phase => f.write_str("phase"),
            Tract::Triangle => f.write_str("triangle"),
            Tract::TropReal => f.write_str("tr"),
            Tract::TropComplex => f.write_str("tc"),
            Tract::TropPhase => f.write_str("tp"),
            Tract::UltraTriangle => f.write_str("ttriangle"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FromStr for Tract {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "q" => Tract::FieldQ,
            "qi" => Tract::FieldQi,
            "krasner" => Tract::Krasner,
            "sign" => Tract::Sign,
            "phase" => Tract::Phase,
            "triangle" => Tract::Triangle,
            "tr" => Tract::TropReal,
            "tc" => Tract::TropComplex,
            "tp" => Tract::TropPhase,
            "ttriangle" => Tract::UltraTriangle,
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown tract `{other}`")))?;
                // keep p² inside u64 arithmetic
                if !is_prime(p) || p > 65_521 {
                    return Err(Error::Parse(format!("fp:{p} needs a prime below 65536")));
                }
                Tract::FieldFp(p)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sgn {
    Plus,
    Minus,
}

impl Sgn {
    fn flip(self) -> Sgn {
        match self {
            Sgn::Plus => Sgn::Minus,
            Sgn::Minus => Sgn::Plus,
        }
    }
}

/// Payload of a [`Scalar`]. Which variants are legal depends on the tract.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Zero,
    /// `FieldQ`, `TropReal` (nonzero); `Triangle`, `UltraTriangle` (positive).
    Rat(Rat),
    /// `FieldQi`, nonzero.
    Gauss(GRat),
    /// `FieldFp`, in `1..p`.
    Residue(u32),
    /// The unit of the Krasner hyperfield.
    One,
    Sign(Sgn),
    /// `Phase` and `TropPhase`.
    Dir(Dir),
    /// `TropComplex`: positive magnitude and a direction.
    MagDir(Rat, Dir),
}

/// An element of a tract.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    tract: Tract,
    value: Value,
}

impl Scalar {
    /// Validating constructor. Zero-valued payloads collapse to `Value::Zero`.
    pub fn new(tract: Tract, value: Value) -> Result<Self> {
        let bad = || Err(Error::Domain(format!("{value:?} is not an element of {tract}")));
        let value = match (tract, value.clone()) {
            (_, Value::Zero) => Value::Zero,
            (Tract::FieldQ | Tract::TropReal, Value::Rat(r)) => {
                if r.is_zero() {
                    Value::Zero
                } else {
                    Value::Rat(r)
                }
            }
            (Tract::Triangle | Tract::UltraTriangle, Value::Rat(r)) => {
                if r.is_negative() {
                    return bad();
                } else if r.is_zero() {
                    Value::Zero
                } else {
                    Value::Rat(r)
                }
            }
            (Tract::FieldQi, Value::Gauss(z)) => {
                if z.is_zero() {
                    Value::Zero
                } else {
                    Value::Gauss(z)
                }
            }
            (Tract::FieldFp(p), Value::Residue(r)) => match r % p {
                0 => Value::Zero,
                r => Value::Residue(r),
            },
            (Tract::Krasner, Value::One) => Value::One,
            (Tract::Sign, Value::Sign(s)) => Value::Sign(s),
            (Tract::Phase | Tract::TropPhase, Value::Dir(d)) => Value::Dir(d),
            (Tract::TropComplex, Value::MagDir(m, d)) => {
                if m.is_negative() {
                    return bad();
                } else if m.is_zero() {
                    Value::Zero
                } else {
                    Value::MagDir(m, d)
                }
            }
            _ => return bad(),
        };
        Ok(Scalar { tract, value })
    }

    pub fn zero(tract: Tract) -> Self {
        Scalar {
            tract,
            value: Value::Zero,
        }
    }

    pub fn one(tract: Tract) -> Self {
        let value = match tract {
            Tract::FieldQ | Tract::TropReal | Tract::Triangle | Tract::UltraTriangle => Value::Rat(Rat::one()),
            Tract::FieldQi => Value::Gauss(GRat::one()),
            Tract::FieldFp(_) => Value::Residue(1),
            Tract::Krasner => Value::One,
            Tract::Sign => Value::Sign(Sgn::Plus),
            Tract::Phase | Tract::TropPhase => Value::Dir(Dir::one()),
            Tract::TropComplex => Value::MagDir(Rat::one(), Dir::one()),
        };
        Scalar { tract, value }
    }

    pub fn q(r: Rat) -> Self {
        Self::new(Tract::FieldQ, Value::Rat(r)).expect("every rational is in q")
    }

    pub fn qi(z: GRat) -> Self {
        Self::new(Tract::FieldQi, Value::Gauss(z)).expect("every gaussian rational is in qi")
    }

    pub fn fp(p: u32, r: i64) -> Self {
        let r = r.rem_euclid(p as i64) as u32;
        Self::new(Tract::FieldFp(p), Value::Residue(r)).expect("residue is reduced")
    }

    pub fn krasner_one() -> Self {
        Scalar::one(Tract::Krasner)
    }

    pub fn plus() -> Self {
        Scalar {
            tract: Tract::Sign,
            value: Value::Sign(Sgn::Plus),
        }
    }

    pub fn minus() -> Self {
        Scalar {
            tract: Tract::Sign,
            value: Value::Sign(Sgn::Minus),
        }
    }

    pub fn ph(d: Dir) -> Self {
        Scalar {
            tract: Tract::Phase,
            value: Value::Dir(d),
        }
    }

    /// Phase element from small integer coordinates.
    pub fn ph_of(x: i64, y: i64) -> Self {
        Scalar::ph(Dir::of(x, y))
    }

    pub fn tp(d: Dir) -> Self {
        Scalar {
            tract: Tract::TropPhase,
            value: Value::Dir(d),
        }
    }

    pub fn tri(r: Rat) -> Result<Self> {
        Self::new(Tract::Triangle, Value::Rat(r))
    }

    pub fn tr(r: Rat) -> Self {
        Self::new(Tract::TropReal, Value::Rat(r)).expect("every rational is in tr")
    }

    pub fn tc(m: Rat, d: Dir) -> Result<Self> {
        Self::new(Tract::TropComplex, Value::MagDir(m, d))
    }

    pub fn ttri(r: Rat) -> Result<Self> {
        Self::new(Tract::UltraTriangle, Value::Rat(r))
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == Value::Zero
    }

    pub(crate) fn expect_tract(&self, t: Tract) -> Result<()> {
        if self.tract == t {
            Ok(())
        } else {
            Err(Error::TractMismatch {
                expected: t,
                found: self.tract,
            })
        }
    }

    /// Product; errors on a tract mismatch.
    pub fn checked_mul(&self, o: &Scalar) -> Result<Scalar> {
        o.expect_tract(self.tract)?;
        Ok(self.mul(o))
    }

    /// Product. Panics on a tract mismatch; use [`Scalar::checked_mul`] at
    /// API boundaries.
    pub fn mul(&self, o: &Scalar) -> Scalar {
        assert_eq!(self.tract, o.tract, "tract mismatch in multiplication");
        use Value::*;
        let value = match (&self.value, &o.value) {
            (Zero, _) | (_, Zero) => Zero,
            (Rat(a), Rat(b)) => Rat(a * b),
            (Gauss(a), Gauss(b)) => Gauss(a * b),
            (Residue(a), Residue(b)) => {
                let Tract::FieldFp(p) = self.tract else { unreachable!() };
                Residue(((*a as u64 * *b as u64) % p as u64) as u32)
            }
            (One, One) => One,
            (Sign(a), Sign(b)) => Sign(if a == b { Sgn::Plus } else { Sgn::Minus }),
            (Dir(a), Dir(b)) => Dir(a.mul(b)),
            (MagDir(m, a), MagDir(n, b)) => MagDir(m * n, a.mul(b)),
            _ => unreachable!("payload does not match tract"),
        };
        Scalar {
            tract: self.tract,
            value,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        use Value::*;
        let value = match &self.value {
            Zero => return Err(Error::Domain("inverse of zero".into())),
            Rat(a) => Rat(a.recip()),
            Gauss(z) => Gauss(z.inv()?),
            Residue(r) => {
                let Tract::FieldFp(p) = self.tract else { unreachable!() };
                Residue(pow_mod(*r as u64, p as u64 - 2, p as u64) as u32)
            }
            One => One,
            Sign(s) => Sign(*s),
            Dir(d) => Dir(d.inv()),
            MagDir(m, d) => MagDir(m.recip(), d.inv()),
        };
        Ok(Scalar {
            tract: self.tract,
            value,
        })
    }

    /// `η·x`, written `-x`.
    pub fn neg(&self) -> Scalar {
        use Value::*;
        let value = match &self.value {
            Zero => Zero,
            Rat(a) => match self.tract {
                // η = 1 in both triangle hyperfields
                Tract::Triangle | Tract::UltraTriangle => Rat(a.clone()),
                _ => Rat(-a.clone()),
            },
            Gauss(z) => Gauss(-z),
            Residue(r) => {
                let Tract::FieldFp(p) = self.tract else { unreachable!() };
                Residue(p - r)
            }
            One => One,
            Sign(s) => Sign(s.flip()),
            Dir(d) => Dir(d.neg()),
            MagDir(m, d) => MagDir(m.clone(), d.neg()),
        };
        Scalar {
            tract: self.tract,
            value,
        }
    }

    /// The tract's conjugation involution.
    pub fn conj(&self) -> Scalar {
        use Value::*;
        let value = match &self.value {
            Gauss(z) => Gauss(z.conj()),
            Dir(d) => Dir(d.conj()),
            MagDir(m, d) => MagDir(m.clone(), d.conj()),
            other => other.clone(),
        };
        Scalar {
            tract: self.tract,
            value,
        }
    }

    /// Absolute value for tracts that have one; `None` elsewhere.
    pub fn magnitude(&self) -> Option<Rat> {
        if !self.tract.has_magnitude() {
            return None;
        }
        Some(match &self.value {
            Value::Zero => Rat::zero(),
            Value::Rat(r) => r.abs(),
            Value::MagDir(m, _) => m.clone(),
            Value::Dir(_) => Rat::one(),
            _ => unreachable!(),
        })
    }

    /// Direction of a nonzero element of a phase-like tract.
    pub fn direction(&self) -> Option<&Dir> {
        match &self.value {
            Value::Dir(d) | Value::MagDir(_, d) => Some(d),
            _ => None,
        }
    }

    /// Multiply by a positive rational, for tracts carried by ℝ or ℂ with
    /// magnitudes (`Triangle`, `TropReal`, `TropComplex`, `UltraTriangle`).
    pub fn scale_positive(&self, eta: &Rat) -> Result<Scalar> {
        if !eta.is_positive() {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        let value = match (&self.value, self.tract) {
            (Value::Zero, _) => Value::Zero,
            (Value::Rat(r), Tract::Triangle | Tract::TropReal | Tract::UltraTriangle) => Value::Rat(r * eta),
            (Value::MagDir(m, d), Tract::TropComplex) => Value::MagDir(m * eta, d.clone()),
            _ => {
                return Err(Error::UnsupportedTract {
                    tract: self.tract,
                    reason: "no positive real scaling".into(),
                })
            }
        };
        Ok(Scalar {
            tract: self.tract,
            value,
        })
    }

    /// Field addition, for `FieldQ`, `FieldQi` and `FieldFp`.
    pub fn field_add(&self, o: &Scalar) -> Result<Scalar> {
        o.expect_tract(self.tract)?;
        use Value::*;
        let value = match (&self.value, &o.value) {
            (Zero, v) | (v, Zero) if self.tract.is_field() => v.clone(),
            (Rat(a), Rat(b)) if self.tract == Tract::FieldQ => Rat(a + b),
            (Gauss(a), Gauss(b)) => Gauss(a + b),
            (Residue(a), Residue(b)) => {
                let Tract::FieldFp(p) = self.tract else { unreachable!() };
                Residue((a + b) % p)
            }
            _ => {
                return Err(Error::UnsupportedTract {
                    tract: self.tract,
                    reason: "not a field".into(),
                })
            }
        };
        Scalar::new(self.tract, value)
    }

    pub fn field_sub(&self, o: &Scalar) -> Result<Scalar> {
        self.field_add(&o.neg())
    }

    /// Parses a literal in the given tract.
    ///
    /// `0` is zero everywhere. Otherwise: rationals for `q`, `tr`, `triangle`,
    /// `ttriangle`; `a+bi` for `qi`; integers for `fp:p`; `1` for `krasner`;
    /// `+`/`-` for `sign`; `ph(x,y)` (or a Gaussian literal) for `phase` and
    /// `tp`; `tc(m;x,y)` for `tc`.
    pub fn parse(tract: Tract, s: &str) -> Result<Scalar> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("`{s}` is not an element of {tract}"));
        if t == "0" {
            return Ok(Scalar::zero(tract));
        }
        match tract {
            Tract::FieldQ => Ok(Scalar::q(parse_rat(&t)?)),
            Tract::TropReal => Ok(Scalar::tr(parse_rat(&t)?)),
            Tract::Triangle | Tract::UltraTriangle => Scalar::new(tract, Value::Rat(parse_rat(&t)?)).map_err(|_| bad()),
            Tract::FieldQi => Ok(Scalar::qi(t.parse()?)),
            Tract::FieldFp(p) => {
                let n: i64 = t.parse().map_err(|_| bad())?;
                Ok(Scalar::fp(p, n))
            }
            Tract::Krasner => match t.as_str() {
                "1" => Ok(Scalar::krasner_one()),
                _ => Err(bad()),
            },
            Tract::Sign => match t.as_str() {
                "+" | "1" | "+1" => Ok(Scalar::plus()),
                "-" | "-1" => Ok(Scalar::minus()),
                _ => Err(bad()),
            },
            Tract::Phase | Tract::TropPhase => {
                let d = if let Some(body) = t.strip_prefix("ph(").and_then(|r| r.strip_suffix(')')) {
                    let (x, y) = crate::num::parse_pair(body)?;
                    Dir::from_big(x, y)?
                } else if t.starts_with("dir(") {
                    t.parse()?
                } else {
                    let z: GRat = t.parse().map_err(|_| bad())?;
                    Dir::of_grat(&z)?
                };
                Scalar::new(tract, Value::Dir(d))
            }
            Tract::TropComplex => {
                let body = t
                    .strip_prefix("tc(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let (m, xy) = body.split_once(';').ok_or_else(bad)?;
                let (x, y) = crate::num::parse_pair(xy)?;
                Scalar::tc(parse_rat(m)?, Dir::from_big(x, y)?)
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Zero => f.write_str("0"),
            Value::Rat(r) => f.write_str(&format_rat(r)),
            Value::Gauss(z) => write!(f, "{z}"),
            Value::Residue(r) => write!(f, "{r}"),
            Value::One => f.write_str("1"),
            Value::Sign(Sgn::Plus) => f.write_str("+"),
            Value::Sign(Sgn::Minus) => f.write_str("-"),
            Value::Dir(d) => write!(f, "ph({},{})", d.x(), d.y()),
            Value::MagDir(m, d) => write!(f, "tc({};{},{})", format_rat(m), d.x(), d.y()),
        }
    }
}

/// Orders scalars of one tract deterministically (for sorting vector sets).
impl Ord for Scalar {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        fn rank(v: &Value) -> u8 {
            match v {
                Value::Zero => 0,
                Value::One => 1,
                Value::Sign(Sgn::Plus) => 1,
                Value::Sign(Sgn::Minus) => 2,
                Value::Residue(_) => 3,
                Value::Rat(_) => 4,
                Value::Gauss(_) => 5,
                Value::Dir(_) => 6,
                Value::MagDir(..) => 7,
            }
        }
        self.tract
            .cmp(&o.tract)
            .then_with(|| rank(&self.value).cmp(&rank(&o.value)))
            .then_with(|| match (&self.value, &o.value) {
                (Value::Residue(a), Value::Residue(b)) => a.cmp(b),
                (Value::Rat(a), Value::Rat(b)) => a.cmp(b),
                (Value::Gauss(a), Value::Gauss(b)) => a.cmp(b),
                (Value::Dir(a), Value::Dir(b)) => a.cmp(b),
                (Value::MagDir(m, a), Value::MagDir(n, b)) => m.cmp(n).then_with(|| a.cmp(b)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// Integer square root of a perfect-square rational, if it is one.
pub(crate) fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}
