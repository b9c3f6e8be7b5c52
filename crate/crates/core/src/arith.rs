//! Small exact number theory on `Z_v`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m` by extended Euclid.
pub fn mod_inverse(a: usize, m: usize) -> Result<usize> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NoInverse { value: a, modulus: m });
    }
    Ok(t0.rem_euclid(m as i128) as usize)
}

/// `min(g, v - g)` for `1 <= g <= v - 1`.
pub fn reduced_form(g: usize, v: usize) -> Result<usize> {
    if g == 0 || g >= v {
        return Err(Error::Precondition(format!("residue {g} is outside [1, {})", v)));
    }
    Ok(g.min(v - g))
}

/// Reduced form of `g mod v`, or `None` when `g ≡ 0`.
pub(crate) fn reduce(g: usize, v: usize) -> Option<usize> {
    let g = g % v;
    (g != 0).then(|| g.min(v - g))
}

/// An exact non-negative rational, kept unnormalized.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Ratio {
    pub num: i128,
    pub den: i128,
}

impl Ratio {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den > 0, "denominator must be positive");
        Self { num, den }
    }

    pub fn int(n: i128) -> Self {
        Self { num: n, den: 1 }
    }

    /// True when `n` is strictly greater than this value.
    pub fn below(&self, n: i128) -> bool {
        n * self.den > self.num
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.num * other.den == other.num * self.den
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl std::ops::Add for Ratio {
    type Output = Ratio;
    fn add(self, o: Ratio) -> Ratio {
        Ratio::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num % self.den == 0 {
            write!(f, "{}", self.num / self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(7, 97).unwrap() * 7 % 97, 1);
        assert_eq!(mod_inverse(18, 59).unwrap(), 23);
        assert_eq!(mod_inverse(6, 9), Err(Error::NoInverse { value: 6, modulus: 9 }));
    }

    #[test]
    fn reduced_forms() {
        assert_eq!(reduced_form(85, 97).unwrap(), 12);
        assert_eq!(reduced_form(48, 97).unwrap(), 48);
        assert_eq!(reduced_form(96, 97).unwrap(), 1);
        assert!(reduced_form(0, 97).is_err());
        assert!(reduced_form(97, 97).is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert!(Ratio::new(83, 1).below(84));
        assert!(!Ratio::new(83, 1).below(83));
        assert_eq!((Ratio::int(1) + Ratio::new(1, 2)).to_string(), "3/2");
    }
}
