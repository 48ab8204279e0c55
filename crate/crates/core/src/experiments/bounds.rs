use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{KneserError, Result};
use crate::exact::{format_scalar, Scalar};

/// Optional inputs to [`bounds`].
#[derive(Debug, Clone, Default)]
pub struct BoundsOptions {
    /// Number of points for the k-set bound on τ.
    pub n: Option<usize>,
    /// Constant standing in for the O(1) term of the asymptotic λ = 2 lower
    /// bound; its value is not known, 0 by default.
    pub c: Option<Scalar>,
}

/// Known bounds on m(k, d, λ), the largest n such that every n points of
/// R^d have a (d − λ)-flat meeting the hull of every k of them.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub k: usize,
    pub d: usize,
    pub lambda: usize,
    pub lower_eq1: i64,
    pub upper_eq1_strict: i64,
    pub upper_thm31_strict: Option<i64>,
    /// The smaller of the strict upper bounds.
    pub upper_strict: i64,
    pub exact_value: Option<i64>,
    pub mstar_upper: i64,
    pub eq3_lower: Option<i64>,
    pub eq3_constant: Option<String>,
    pub kmin_upper: Option<i64>,
    pub notes: Vec<String>,
}

fn floor(x: &BigRational) -> i64 {
    x.floor().to_integer().to_i64().expect("bound fits in i64")
}

fn ceil(x: &BigRational) -> i64 {
    x.ceil().to_integer().to_i64().expect("bound fits in i64")
}

fn q(p: i64, r: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(r))
}

pub fn bounds(k: usize, d: usize, lambda: usize, options: &BoundsOptions) -> Result<BoundsReport> {
    if k < 1 || d < 1 || lambda < 1 {
        return Err(KneserError::invalid("k, d and lambda must be at least 1"));
    }
    if d < lambda {
        return Err(KneserError::invalid(format!("need d >= lambda, got d={d}, lambda={lambda}")));
    }
    let (ki, di, li) = (k as i64, d as i64, lambda as i64);
    let lower = di - li + ki + k.div_ceil(lambda) as i64 - 1;
    let upper_eq1 = di + 2 * (ki - li) + 1;
    let thm31 = ((lambda == 2 || lambda == 3) && ki - li >= 2 && 2 * (li - 1) <= di && di <= 2 * (ki - 2))
        .then_some(di + 2 * (ki - li));
    let upper = thm31.map_or(upper_eq1, |t| t.min(upper_eq1));

    let mut notes = Vec::new();
    let closed_case = lambda == 1 || d == lambda || ki - li <= 1 || k <= 3;
    let exact_value = if closed_case || lower == upper - 1 { Some(lower) } else { None };
    if closed_case {
        notes.push("exact by the closed-form cases (lambda = 1, d = lambda, k - lambda <= 1 or k <= 3)".into());
    } else if exact_value.is_some() {
        notes.push("exact because the lower bound meets the strict upper bound".into());
    }

    let half_d = q(d.div_ceil(2) as i64, 1);
    let factor = q(2, 1) - q(li - 1, 1) / half_d;
    let mstar_upper = (di - li + 1) + floor(&(factor * q(ki - 1, 1)));

    let c = options.c.clone().unwrap_or_else(|| q(0, 1));
    let (eq3_lower, eq3_constant) = if lambda == 2 {
        let v = q(4 * di - 2, 2 * di) * (q(ki, 1) - q(2 * di, 1) * &c);
        notes.push("asymptotic lambda = 2 lower bound; its additive constant is unspecified and taken as c".into());
        (Some(ceil(&v)), Some(format_scalar(&c)))
    } else {
        (None, None)
    };

    let kmin_upper = options.n.map(|n| {
        let v = q(li * (n as i64 - di + li), li + 1);
        floor(&v) + 1
    });

    if (k, d, lambda) == (4, 3, 2) {
        notes.push("the value 6 is also quoted with the arguments written in the order (3, 2, 4)".into());
    }

    Ok(BoundsReport {
        k,
        d,
        lambda,
        lower_eq1: lower,
        upper_eq1_strict: upper_eq1,
        upper_thm31_strict: thm31,
        upper_strict: upper,
        exact_value,
        mstar_upper,
        eq3_lower,
        eq3_constant,
        kmin_upper,
        notes,
    })
}
