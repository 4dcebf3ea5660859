//! Tract morphisms used for pushforwards.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::{rational_sqrt, Scalar, Tract, Value};
use crate::error::{Error, Result};
use crate::num::Dir;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Morphism {
    /// Every nonzero element goes to 1 in the Krasner hyperfield.
    Kappa(Tract),
    /// Sign of a rational.
    SignMap,
    /// Phase of a Gaussian rational.
    PhaseMap,
    /// Modulus of a Gaussian rational, into the triangle hyperfield.
    AbsTriangle,
    /// Sign in the tropical reals.
    SignTR,
    /// Phase part of a tropical complex number.
    PhaseTC,
    /// Magnitude part of a tropical complex number.
    AbsTC,
    /// Inclusion of the rationals into the Gaussian rationals.
    IncludeRC,
}

impl Morphism {
    pub fn source(self) -> Tract {
        match self {
            Morphism::Kappa(t) => t,
            Morphism::SignMap | Morphism::IncludeRC => Tract::FieldQ,
            Morphism::PhaseMap | Morphism::AbsTriangle => Tract::FieldQi,
            Morphism::SignTR => Tract::TropReal,
            Morphism::PhaseTC | Morphism::AbsTC => Tract::TropComplex,
        }
    }

    pub fn target(self) -> Tract {
        match self {
            Morphism::Kappa(_) => Tract::Krasner,
            Morphism::SignMap | Morphism::SignTR => Tract::Sign,
            Morphism::PhaseMap => Tract::Phase,
            Morphism::AbsTriangle => Tract::Triangle,
            Morphism::PhaseTC => Tract::TropPhase,
            Morphism::AbsTC => Tract::UltraTriangle,
            Morphism::IncludeRC => Tract::FieldQi,
        }
    }

    /// Parses a CLI name; `kappa` needs the source tract to be known.
    pub fn parse(name: &str, source: Tract) -> Result<Morphism> {
        let m = match name {
            "kappa" => Morphism::Kappa(source),
            "sign" => Morphism::SignMap,
            "ph" => Morphism::PhaseMap,
            "abs" => Morphism::AbsTriangle,
            "sign-tr" => Morphism::SignTR,
            "ph-tc" => Morphism::PhaseTC,
            "abs-tc" => Morphism::AbsTC,
            "incl" => Morphism::IncludeRC,
            other => return Err(Error::Parse(format!("unknown morphism `{other}`"))),
        };
        if m.source() != source {
            return Err(Error::TractMismatch {
                expected: m.source(),
                found: source,
            });
        }
        Ok(m)
    }

    pub fn apply(self, a: &Scalar) -> Result<Scalar> {
        a.expect_tract(self.source())?;
        let t = self.target();
        if a.is_zero() {
            return Ok(Scalar::zero(t));
        }
        Ok(match (self, a.value()) {
            (Morphism::Kappa(_), _) => Scalar::one(t),
            (Morphism::SignMap | Morphism::SignTR, Value::Rat(r)) => {
                if r.is_positive() {
                    Scalar::plus()
                } else {
                    Scalar::minus()
                }
            }
            (Morphism::PhaseMap, Value::Gauss(z)) => Scalar::ph(Dir::of_grat(z)?),
            (Morphism::AbsTriangle, Value::Gauss(z)) => {
                let m = rational_sqrt(&z.norm_sqr())
                    .ok_or_else(|| Error::Domain(format!("|{z}| is irrational and has no exact representation")))?;
                Scalar::tri(m)?
            }
            (Morphism::PhaseTC, Value::MagDir(_, d)) => Scalar::tp(d.clone()),
            (Morphism::AbsTC, Value::MagDir(m, _)) => Scalar::ttri(m.clone())?,
            (Morphism::IncludeRC, Value::Rat(r)) => Scalar::qi(crate::num::GRat::from_re(r.clone())),
            _ => unreachable!("source tract checked above"),
        })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Morphism::Kappa(_) => "kappa",
            Morphism::SignMap => "sign",
            Morphism::PhaseMap => "ph",
            Morphism::AbsTriangle => "abs",
            Morphism::SignTR => "sign-tr",
            Morphism::PhaseTC => "ph-tc",
            Morphism::AbsTC => "abs-tc",
            Morphism::IncludeRC => "incl",
        })
    }
}

impl FromStr for Morphism {
    type Err = Error;

    /// Parses names whose source tract is fixed (everything but `kappa`).
    fn from_str(s: &str) -> Result<Self> {
        let source = match s {
            "sign" | "incl" => Tract::FieldQ,
            "ph" | "abs" => Tract::FieldQi,
            "sign-tr" => Tract::TropReal,
            "ph-tc" | "abs-tc" => Tract::TropComplex,
            "kappa" => {
                return Err(Error::Parse("`kappa` needs a source tract".into()));
            }
            other => return Err(Error::Parse(format!("unknown morphism `{other}`"))),
        };
        Morphism::parse(s, source)
    }
}
