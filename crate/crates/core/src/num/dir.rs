use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::GRat;
use crate::error::{Error, Result};

/// A direction in the plane: the open ray `{t·(x, y) : t > 0}`.
///
/// The representative is gcd-reduced, so two `Dir`s are equal exactly when
/// they describe the same ray. All predicates on directions are integer sign
/// computations; no angle is ever approximated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dir {
    x: BigInt,
    y: BigInt,
}

impl Dir {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        Self::from_big(x.into(), y.into())
    }

    pub fn from_big(x: BigInt, y: BigInt) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::Domain("direction of the zero vector".into()));
        }
        let g = x.gcd(&y);
        Ok(Dir { x: x / &g, y: y / g })
    }

    /// Shorthand for small literals; panics on `(0, 0)`.
    pub fn of(x: i64, y: i64) -> Self {
        Self::new(x, y).expect("nonzero direction")
    }

    /// The positive real axis.
    pub fn one() -> Self {
        Dir::of(1, 0)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// Phase of a nonzero Gaussian rational.
    pub fn of_grat(z: &GRat) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::Domain("phase of zero".into()));
        }
        let l = z.re.denom().lcm(z.im.denom());
        let x = z.re.numer() * (&l / z.re.denom());
        let y = z.im.numer() * (&l / z.im.denom());
        Self::from_big(x, y)
    }

    pub fn mul(&self, o: &Dir) -> Dir {
        let x = &self.x * &o.x - &self.y * &o.y;
        let y = &self.x * &o.y + &self.y * &o.x;
        Dir::from_big(x, y).expect("product of nonzero directions is nonzero")
    }

    pub fn conj(&self) -> Dir {
        Dir {
            x: self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn neg(&self) -> Dir {
        Dir {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Multiplicative inverse on the unit circle, which is the conjugate.
    pub fn inv(&self) -> Dir {
        self.conj()
    }

    /// Rotation by +90°.
    pub fn rot90(&self) -> Dir {
        Dir {
            x: -self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn is_antipodal(&self, o: &Dir) -> bool {
        *self == o.neg()
    }

    pub fn dot(&self, o: &Dir) -> BigInt {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the cross product; positive when `o` is counterclockwise
    /// from `self` by less than a half turn.
    pub fn cross(&self, o: &Dir) -> BigInt {
        &self.x * &o.y - &self.y * &o.x
    }

    /// Direction of the vector sum of the two representatives, if nonzero.
    /// For non-antipodal inputs this lies strictly inside the short arc.
    pub fn sum_dir(&self, o: &Dir) -> Option<Dir> {
        Dir::from_big(&self.x + &o.x, &self.y + &o.y).ok()
    }

    fn upper(&self) -> bool {
        self.y.is_positive() || (self.y.is_zero() && self.x.is_positive())
    }

    /// Counterclockwise angular order starting at the positive real axis.
    pub fn angle_cmp(&self, o: &Dir) -> Ordering {
        match (self.upper(), o.upper()) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => match self.cross(o).sign() {
                Sign::Plus => Ordering::Less,
                Sign::Minus => Ordering::Greater,
                Sign::NoSign => Ordering::Equal,
            },
        }
    }

    /// Floating-point angle in `[0, 2π)`. Only for rendering.
    pub fn angle_f64(&self) -> f64 {
        let x = big_to_f64(&self.x);
        let y = big_to_f64(&self.y);
        let a = y.atan2(x);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }
}

fn big_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

impl PartialOrd for Dir {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dir {
    fn cmp(&self, other: &Self) -> Ordering {
        self.angle_cmp(other)
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dir({},{})", self.x, self.y)
    }
}

/// Parses the coordinate pair inside `name(x,y)`.
pub(crate) fn parse_pair(body: &str) -> Result<(BigInt, BigInt)> {
    let (a, b) = body
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected `x,y`, got `{body}`")))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{a}`")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{b}`")))?;
    Ok((a, b))
}

impl FromStr for Dir {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = t
            .strip_prefix("dir(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `dir(x,y)`, got `{s}`")))?;
        let (x, y) = parse_pair(body)?;
        Dir::from_big(x, y)
    }
}

fn distinct_sorted(dirs: &[Dir]) -> Vec<Dir> {
    let mut v = dirs.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Does some closed half-plane through the origin contain every direction?
///
/// If one does, it can be rotated until a direction lies on its boundary, so
/// the only normals that need testing are the given directions rotated by ±90°.
pub fn closed_halfplane_exists(dirs: &[Dir]) -> Result<bool> {
    if dirs.is_empty() {
        return Err(Error::Domain("half-plane test on an empty set".into()));
    }
    let set = distinct_sorted(dirs);
    let fits = |u: &Dir| set.iter().all(|d| !d.dot(u).is_negative());
    Ok(set.iter().any(|d| {
        let u = d.rot90();
        fits(&u) || fits(&u.neg())
    }))
}

/// Does some open half-plane through the origin contain every direction?
///
/// Sorted by angle, the set fits in an open half-plane exactly when some
/// cyclic gap between consecutive directions exceeds a half turn.
pub fn open_halfplane_exists(dirs: &[Dir]) -> Result<bool> {
    if dirs.is_empty() {
        return Err(Error::Domain("half-plane test on an empty set".into()));
    }
    let set = distinct_sorted(dirs);
    if set.len() == 1 {
        return Ok(true);
    }
    let n = set.len();
    Ok((0..n).any(|k| set[k].cross(&set[(k + 1) % n]).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    #[test]
    fn reduction_and_phase() {
        assert_eq!(Dir::of_grat(&"1+i".parse().unwrap()).unwrap(), Dir::of(1, 1));
        assert_eq!(Dir::of_grat(&"2+4i".parse().unwrap()).unwrap(), Dir::of(1, 2));
        assert_eq!(Dir::of_grat(&GRat::from_re(int(-3))).unwrap(), Dir::of(-1, 0));
        assert_eq!(Dir::of_grat(&"1/2+1/3i".parse().unwrap()).unwrap(), Dir::of(3, 2));
        assert!(Dir::of_grat(&GRat::zero()).is_err());
        assert!(Dir::new(0, 0).is_err());
        assert_eq!(Dir::of(-4, -2), Dir::of(-2, -1));
        assert_ne!(Dir::of(-4, -2), Dir::of(2, 1));
    }

    #[test]
    fn products() {
        assert_eq!(Dir::of(0, 1).mul(&Dir::of(0, 1)), Dir::of(-1, 0));
        assert_eq!(Dir::of(1, 1).mul(&Dir::of(1, -1)), Dir::of(1, 0));
        let d = Dir::of(3, -7);
        assert_eq!(Dir::one().mul(&d), d);
    }

    #[test]
    fn conj_neg_antipodal() {
        assert_eq!(Dir::of(1, 1).conj(), Dir::of(1, -1));
        assert_eq!(Dir::of(1, 0).neg(), Dir::of(-1, 0));
        assert!(Dir::of(2, 1).is_antipodal(&Dir::of(-2, -1)));
        assert!(!Dir::of(2, 1).is_antipodal(&Dir::of(-2, 1)));
    }

    #[test]
    fn angular_order() {
        let mut v = vec![
            Dir::of(0, -1),
            Dir::of(-1, 0),
            Dir::of(1, 1),
            Dir::of(1, 0),
            Dir::of(1, -1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Dir::of(1, 0),
                Dir::of(1, 1),
                Dir::of(-1, 0),
                Dir::of(0, -1),
                Dir::of(1, -1)
            ]
        );
    }

    #[test]
    fn halfplanes() {
        let four = [Dir::of(1, 0), Dir::of(0, 1), Dir::of(-1, 0), Dir::of(0, -1)];
        assert!(!closed_halfplane_exists(&four).unwrap());
        let three = [Dir::of(1, 0), Dir::of(0, 1), Dir::of(-1, 0)];
        assert!(closed_halfplane_exists(&three).unwrap());
        assert!(!open_halfplane_exists(&three).unwrap());
        assert!(open_halfplane_exists(&[Dir::of(1, 0)]).unwrap());
        assert!(closed_halfplane_exists(&[Dir::of(1, 0)]).unwrap());
        let pair = [Dir::of(1, 0), Dir::of(-1, 0)];
        assert!(closed_halfplane_exists(&pair).unwrap());
        assert!(!open_halfplane_exists(&pair).unwrap());
        assert!(closed_halfplane_exists(&[]).is_err());
        assert!(open_halfplane_exists(&[]).is_err());
    }

    #[test]
    fn parse_display() {
        let d: Dir = "dir(4, -2)".parse().unwrap();
        assert_eq!(d, Dir::of(2, -1));
        assert_eq!(d.to_string(), "dir(2,-1)");
        assert!("dir(0,0)".parse::<Dir>().is_err());
        assert!("(1,2)".parse::<Dir>().is_err());
    }
}
