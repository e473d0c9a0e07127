//! Small helpers for complex arithmetic shared across the crate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Relative distance |x - y| / max(1, |x|, |y|).
pub fn rel_dist(x: Complex64, y: Complex64) -> f64 {
    let scale = x.norm().max(y.norm()).max(1.0);
    (x - y).norm() / scale
}

/// Relative magnitude of `x` against `scale`, used for singular-locus guards.
pub fn rel_mag(x: Complex64, scale: f64) -> f64 {
    x.norm() / scale.max(1.0)
}

pub fn is_finite_nonzero(x: Complex64) -> bool {
    x.re.is_finite() && x.im.is_finite() && x.norm() > 0.0
}

/// Serialization mirror of a complex number as `[re, im]`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CPair(pub f64, pub f64);

impl From<Complex64> for CPair {
    fn from(z: Complex64) -> Self {
        CPair(z.re, z.im)
    }
}

impl From<CPair> for Complex64 {
    fn from(p: CPair) -> Self {
        Complex64::new(p.0, p.1)
    }
}

/// Parse a complex number written as `1.5`, `2i`, `1+2i`, `1.5-0.25i`, or `[re, im]`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if s.starts_with('[') {
        let inner = s.strip_prefix('[')?.strip_suffix(']')?;
        let mut parts = inner.split(',');
        let re: f64 = parts.next()?.trim().parse().ok()?;
        let im: f64 = parts.next()?.trim().parse().ok()?;
        if parts.next().is_some() {
            return None;
        }
        return Some(Complex64::new(re, im));
    }
    if let Ok(re) = s.parse::<f64>() {
        return Some(Complex64::new(re, 0.0));
    }
    // Split into real and imaginary summands at the last +/- that is not an
    // exponent sign and not the leading sign.
    let bytes = s.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && bytes[i - 1] != b'e' && bytes[i - 1] != b'E' {
            split = Some(i);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(i) => (&s[..i], &s[i..]),
        None => ("0", s),
    };
    let im_str = im_str.strip_suffix('i')?;
    let im: f64 = match im_str {
        "+" | "" => 1.0,
        "-" => -1.0,
        t => t.parse().ok()?,
    };
    let re: f64 = re_str.trim().parse().ok()?;
    Some(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_complex("2").unwrap(), c(2.0, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1.5-0.25i").unwrap(), c(1.5, -0.25));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("[1.5, -2]").unwrap(), c(1.5, -2.0));
        assert_eq!(parse_complex("1e-3+2e-4i").unwrap(), c(1e-3, 2e-4));
        assert!(parse_complex("abc").is_none());
    }

    #[test]
    fn rel_dist_scales() {
        assert!(rel_dist(c(1e8, 0.0), c(1e8 + 1.0, 0.0)) < 1e-7);
        assert!(rel_dist(c(0.0, 0.0), c(1.0, 0.0)) == 1.0);
    }
}
