use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symbol of the marked alphabet: a nonzero value, possibly primed.
///
/// Letters of equal value order the primed one first, so
/// `1' < 1 < 2' < 2` and `-2' < -2 < -1' < -1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawLetter", into = "RawLetter")]
pub struct Letter {
    value: i32,
    primed: bool,
}

#[derive(Serialize, Deserialize)]
struct RawLetter {
    value: i32,
    primed: bool,
}

impl TryFrom<RawLetter> for Letter {
    type Error = Error;
    fn try_from(raw: RawLetter) -> Result<Self> {
        Letter::try_new(raw.value, raw.primed)
    }
}

impl From<Letter> for RawLetter {
    fn from(l: Letter) -> Self {
        RawLetter { value: l.value, primed: l.primed }
    }
}

impl Letter {
    /// Panics on value 0; use [`Letter::try_new`] for untrusted input.
    pub fn new(value: i32, primed: bool) -> Letter {
        Self::try_new(value, primed).expect("letter value must be nonzero")
    }

    pub fn try_new(value: i32, primed: bool) -> Result<Letter> {
        if value == 0 {
            return Err(Error::ZeroLetter);
        }
        Ok(Letter { value, primed })
    }

    pub fn plain(value: i32) -> Letter {
        Letter::new(value, false)
    }

    pub fn primed(value: i32) -> Letter {
        Letter::new(value, true)
    }

    pub fn value(self) -> i32 {
        self.value
    }

    pub fn is_primed(self) -> bool {
        self.primed
    }

    pub fn unprime(self) -> Letter {
        Letter { primed: false, ..self }
    }

    pub fn with_prime(self, primed: bool) -> Letter {
        Letter { primed, ..self }
    }

    pub fn toggle_prime(self) -> Letter {
        Letter { primed: !self.primed, ..self }
    }

    /// `a -> -a'` and `a' -> -a`. An order-reversing involution.
    pub fn star(self) -> Letter {
        Letter { value: -self.value, primed: !self.primed }
    }

    fn key(self) -> (i32, bool) {
        (self.value, !self.primed)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let value: i32 = digits.parse().map_err(|_| Error::BadLetter(s.to_string()))?;
        Letter::try_new(value, primed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_comes_first() {
        let seq = ["1'", "1", "2'", "2", "3'"];
        let letters: Vec<Letter> = seq.iter().map(|s| s.parse().unwrap()).collect();
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn negative_alphabet_order() {
        let seq = ["-2'", "-2", "-1'", "-1", "1'", "1"];
        let letters: Vec<Letter> = seq.iter().map(|s| s.parse().unwrap()).collect();
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(Letter::try_new(0, false), Err(Error::ZeroLetter));
        assert!("0'".parse::<Letter>().is_err());
        assert!("x".parse::<Letter>().is_err());
    }

    #[test]
    fn star_reverses_order() {
        let a = Letter::plain(2);
        assert_eq!(a.star(), Letter::primed(-2));
        assert_eq!(Letter::primed(3).star(), Letter::plain(-3));
        assert_eq!(a.star().star(), a);
        assert!(Letter::primed(2).star() > Letter::plain(2).star());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1", "2'", "-3'", "-1"] {
            assert_eq!(s.parse::<Letter>().unwrap().to_string(), s);
        }
    }
}
