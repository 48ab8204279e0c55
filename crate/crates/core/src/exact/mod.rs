//! Exact rational linear algebra and the geometric predicates built on it.
//!
//! Nothing in this module touches floating point. Coordinates are
//! [`Scalar`]s (arbitrary-precision rationals kept in lowest terms) and every
//! predicate returns the exact answer.

mod flat;
mod hull;
pub mod linalg;
mod predicates;
mod wedge;

pub use flat::{flat_meets_hull, quotient_project, AffineFlat, FlatTester, Quotient, Segment};
pub use hull::{in_hull, in_hull_caratheodory, in_hull_fourier_motzkin};
pub(crate) use predicates::orientation_unchecked;
pub use predicates::{general_position, orientation, radon_partition};
pub use wedge::{line_through_point_meets_segments, SolutionSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{KneserError, Result};

/// Exact rational coordinate.
pub type Scalar = BigRational;

/// A point or vector in R^d.
pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn int_vec(coords: &[i64]) -> Vector {
    coords.iter().map(|&c| int(c)).collect()
}

/// Parses `"p"` or `"p/q"` with decimal integers and an optional leading `-`
/// on the numerator. The result is reduced; a zero or signed denominator is
/// rejected.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = || KneserError::invalid(format!("malformed rational {s:?}"));
    let digits = |t: &str, allow_minus: bool| {
        let body = if allow_minus { t.strip_prefix('-').unwrap_or(t) } else { t };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => {
            if !digits(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(KneserError::invalid(format!("zero denominator in {s:?}")));
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn cross(a: &[Scalar], b: &[Scalar]) -> Vector {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Rescales a nonzero vector to the primitive integer vector on the same
/// line through the origin whose first nonzero coordinate is positive.
pub fn primitive_direction(v: &[Scalar]) -> Vector {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let q = x / &g;
            Scalar::from_integer(if lead_negative { -q } else { q })
        })
        .collect()
}
