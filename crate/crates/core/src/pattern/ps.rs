use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

use super::Pattern;

const LETTERS: [(char, (usize, usize)); 4] = [('a', (1, 2)), ('b', (2, 3)), ('c', (3, 4)), ('d', (1, 4))];

/// A subset of the pairs `a = (1,2)`, `b = (2,3)`, `c = (3,4)`, `d = (1,4)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PsSubset(u8);

impl PsSubset {
    pub const EMPTY: Self = Self(0);
    pub const FULL: Self = Self(0b1111);

    /// All 16 subsets, by bitmask.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..16).map(Self)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// The non-edge pairs, 1-based.
    pub fn pairs(self) -> impl Iterator<Item = (usize, usize)> {
        LETTERS.into_iter().enumerate().filter(move |(i, _)| self.0 >> i & 1 == 1).map(|(_, (_, p))| p)
    }

    /// `C_ab`, `C_empty`, ...
    pub fn class_name(self) -> String {
        format!("C_{self}")
    }
}

impl fmt::Display for PsSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("empty");
        }
        for (i, (c, _)) in LETTERS.iter().enumerate() {
            if self.0 >> i & 1 == 1 {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PsSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PsSubset({self})")
    }
}

impl FromStr for PsSubset {
    type Err = Error;

    /// Accepts `ab`, `P_ab`, `C_ab`, and `empty` / `P_empty` for the empty set.
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.strip_prefix("P_").or_else(|| s.strip_prefix("C_")).unwrap_or(s);
        if body == "empty" {
            return Ok(Self::EMPTY);
        }
        if body.is_empty() {
            return Err(Error::UnknownClass(s.to_string()));
        }
        let mut bits = 0u8;
        for ch in body.chars() {
            let i = LETTERS.iter().position(|(c, _)| *c == ch).ok_or_else(|| Error::UnknownClass(s.to_string()))?;
            if bits >> i & 1 == 1 {
                return Err(Error::UnknownClass(s.to_string()));
            }
            bits |= 1 << i;
        }
        Ok(Self(bits))
    }
}

impl TryFrom<String> for PsSubset {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<PsSubset> for String {
    fn from(s: PsSubset) -> String {
        s.to_string()
    }
}

/// `P_S`: four positions, edges `(1,3)` and `(2,4)`, non-edges `S`.
pub fn make_ps(s: PsSubset) -> Pattern {
    Pattern::new(4, [(1, 3), (2, 4)], s.pairs()).expect("P_S is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Label;

    #[test]
    fn parse_and_display() {
        for s in PsSubset::all() {
            assert_eq!(s.to_string().parse::<PsSubset>().unwrap(), s);
        }
        assert_eq!("ba".parse::<PsSubset>().unwrap().to_string(), "ab");
        assert_eq!("P_abcd".parse::<PsSubset>().unwrap(), PsSubset::FULL);
        assert!("ae".parse::<PsSubset>().is_err());
        assert!("aa".parse::<PsSubset>().is_err());
        assert!("".parse::<PsSubset>().is_err());
    }

    #[test]
    fn pb_labels() {
        let p = make_ps("b".parse().unwrap());
        assert_eq!(p.edges(), vec![(1, 3), (2, 4)]);
        assert_eq!(p.nonedges(), vec![(2, 3)]);
        assert_eq!(p.label(1, 4), Label::Undecided);

        let full = make_ps(PsSubset::FULL);
        assert_eq!(full.nonedges(), vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert!(make_ps(PsSubset::EMPTY).nonedges().is_empty());
    }
}
