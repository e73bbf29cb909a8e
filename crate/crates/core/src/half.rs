use std::fmt;
use std::str::FromStr;

use crate::exact::{int, rat, BiPoly, Rational};

/// A nonnegative half-integer spin `j`, stored as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(u32);

impl HalfInt {
    pub const fn from_twice(two_j: u32) -> Self {
        Self(two_j)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    /// `2j + 1`.
    pub const fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// Integer part `[j]`, e.g. 3 for `j = 7/2`.
    pub const fn floor(self) -> u32 {
        self.0 / 2
    }

    pub fn as_rational(self) -> Rational {
        rat(self.0 as i64, 2)
    }

    /// Classical Casimir value `j(j+1)`.
    pub fn casimir(self) -> BiPoly {
        let j = self.as_rational();
        BiPoly::constant(&j * (&j + int(1)))
    }

    /// All spins `0, 1/2, …, self`.
    pub fn up_to(self) -> impl Iterator<Item = HalfInt> {
        (0..=self.0).map(HalfInt)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected a nonnegative integer or odd/2, got {0:?}")]
pub struct ParseHalfIntError(String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `"3"` or `"7/2"`; decimals and even numerators over 2 are
    /// rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        match s.split_once('/') {
            None if digits(s) => s.parse::<u32>().ok().and_then(|n| n.checked_mul(2)).map(HalfInt).ok_or_else(err),
            Some((n, "2")) if digits(n) => match n.parse::<u32>() {
                Ok(n) if n % 2 == 1 => Ok(HalfInt(n)),
                _ => Err(err()),
            },
            _ => Err(err()),
        }
    }
}
