//! Exact rational scalars. Everything in this crate computes over `Q`;
//! floating point appears only in the decimal rendering helpers.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qu(n: u32) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse "p" or "p/q" with optional sign into a canonical rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::ParseError(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    let (num_s, den_s) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = den_s.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero("rational from string"));
    }
    Ok(BigRational::new(num, den))
}

/// Render as "p" for integers, "p/q" otherwise (canonical form, q > 0).
pub fn fmt_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Decimal rendering with six significant digits, display only.
pub fn dec6(v: &Q) -> String {
    if v.is_zero() {
        return "0.00000".to_string();
    }
    let f = v.numer().to_f64().unwrap_or(f64::NAN) / v.denom().to_f64().unwrap_or(f64::NAN);
    if !f.is_finite() {
        // fall back through string-length scaling for extreme magnitudes
        let approx = big_to_f64_scaled(v);
        return format!("{approx:.5e}");
    }
    let mag = f.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{f:.decimals$}")
}

fn big_to_f64_scaled(v: &Q) -> f64 {
    let n = v.numer().abs().to_string();
    let d = v.denom().to_string();
    let shift = n.len() as i32 - d.len() as i32;
    let n_lead: f64 = n[..n.len().min(15)].parse().unwrap_or(f64::NAN);
    let d_lead: f64 = d[..d.len().min(15)].parse().unwrap_or(f64::NAN);
    let scale = 10f64.powi(shift - (n.len().min(15) as i32 - d.len().min(15) as i32));
    let sign = if v.is_negative() { -1.0 } else { 1.0 };
    sign * (n_lead / d_lead) * scale
}
