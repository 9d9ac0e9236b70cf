//! Exact arithmetic in cyclotomic fields Q(ζ_N) and exact linear algebra
//! over them.

mod field;
mod matrix;
mod number;
pub(crate) mod poly;

pub use field::{cyclotomic_polynomial, CycField};
pub use matrix::{CycMatrix, Kernel};
pub use number::CycNum;

use num::{BigRational, One};
use std::str::FromStr;

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (zero denominators rejected).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        None => num::BigInt::from_str(s).ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = num::BigInt::from_str(p).ok()?;
            let q = num::BigInt::from_str(q).ok()?;
            (q != num::BigInt::from(0)).then(|| BigRational::new(p, q))
        }
    }
}
