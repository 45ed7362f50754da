//! Small helpers around `BigRational`: construction from machine integers,
//! parsing of "p/q" strings, and fixed-precision decimal rendering for
//! plot output.

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or a bare integer "p".
pub fn parse(s: &str) -> Result<BigRational> {
    let s = s.trim();
    s.parse::<BigRational>()
        .map_err(|_| Error::InvalidParams(format!("malformed rational '{s}'")))
}

/// Decimal rendering with a fixed number of fractional digits, truncated
/// toward zero. Deterministic, for plot-friendly CSV output.
pub fn decimal(r: &BigRational, digits: u32) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let whole = &scaled / &scale;
    let frac_part = &scaled % &scale;
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!(
        "{sign}{whole}.{:0>width$}",
        frac_part.to_string(),
        width = digits as usize
    )
}

pub fn is_zero(r: &BigRational) -> bool {
    r.is_zero()
}
