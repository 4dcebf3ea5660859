use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{format_rat, parse_rat, Rat};
use crate::error::{Error, Result};

/// A Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GRat {
    pub re: Rat,
    pub im: Rat,
}

impl GRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GRat { re, im }
    }

    pub fn from_re(re: Rat) -> Self {
        GRat { re, im: Rat::zero() }
    }

    pub fn zero() -> Self {
        GRat::from_re(Rat::zero())
    }

    pub fn one() -> Self {
        GRat::from_re(Rat::one())
    }

    pub fn i() -> Self {
        GRat::new(Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GRat::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re² + im²`.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let n = self.norm_sqr();
        Ok(GRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GRat::new(&self.re * r, &self.im * r)
    }
}

impl Add for &GRat {
    type Output = GRat;
    fn add(self, o: &GRat) -> GRat {
        GRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GRat {
    type Output = GRat;
    fn sub(self, o: &GRat) -> GRat {
        GRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GRat {
    type Output = GRat;
    fn mul(self, o: &GRat) -> GRat {
        GRat::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for &GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GRat {
    /// `a`, `bi`, `a+bi` or `a-bi`; unit imaginary coefficients print as `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &Rat| -> String {
            let a = im.abs();
            if a.is_one() {
                "i".to_string()
            } else {
                format!("{}i", format_rat(&a))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rat(&self.re)),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", im_part(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{sign}{}", format_rat(&self.re), im_part(&self.im))
            }
        }
    }
}

impl FromStr for GRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty complex literal".into()));
        }
        // sum of signed terms, each real or ending in `i`
        let mut starts: Vec<usize> = t
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .collect();
        starts.insert(0, 0);
        starts.push(t.len());
        let (mut re, mut im) = (Rat::zero(), Rat::zero());
        for w in starts.windows(2) {
            let term = &t[w[0]..w[1]];
            match term.strip_suffix('i') {
                Some(coef) => {
                    im += match coef {
                        "" | "+" => Rat::one(),
                        "-" => -Rat::one(),
                        c => parse_rat(c.strip_prefix('+').unwrap_or(c))?,
                    }
                }
                None => re += parse_rat(term.strip_prefix('+').unwrap_or(term))?,
            }
        }
        Ok(GRat::new(re, im))
    }
}
