//! Uniserial modules and formal direct sums of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// The indecomposable module `M(top, len)`: the uniserial module with top
/// `S_top` and composition length `len`. Its composition factors read
/// `S_top, S_{top-1}, ..., S_{socle}` from top to socle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Uniserial {
    pub top: usize,
    pub len: usize,
}

impl Uniserial {
    pub const fn new(top: usize, len: usize) -> Self {
        Uniserial { top, len }
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

impl FromStr for Uniserial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `M(i,l)`, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix("M(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (top, len) = inner.split_once(',').ok_or_else(bad)?;
        let top: usize = top.trim().parse().map_err(|_| bad())?;
        let len: usize = len.trim().parse().map_err(|_| bad())?;
        if top == 0 || len == 0 {
            return Err(bad());
        }
        Ok(Uniserial { top, len })
    }
}

impl Serialize for Uniserial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Uniserial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite direct sum of uniserial modules, kept sorted by `(top, len)`.
/// The empty sum is the zero module.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ModuleSum {
    summands: Vec<Uniserial>,
}

impl ModuleSum {
    pub fn zero() -> Self {
        ModuleSum::default()
    }

    pub fn new(summands: impl IntoIterator<Item = Uniserial>) -> Self {
        let mut summands: Vec<_> = summands.into_iter().collect();
        summands.sort();
        ModuleSum { summands }
    }

    pub fn summands(&self) -> &[Uniserial] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Uniserial> {
        self.summands.iter()
    }

    pub fn contains(&self, u: &Uniserial) -> bool {
        self.summands.binary_search(u).is_ok()
    }

    /// Multiplicity-free.
    pub fn is_basic(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] != w[1])
    }

    pub fn ensure_basic(&self) -> Result<()> {
        match self.summands.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(Error::NotBasic(w[0])),
            None => Ok(()),
        }
    }

    /// The basic module with the same indecomposable summands.
    pub fn basic_part(&self) -> ModuleSum {
        let set: BTreeSet<_> = self.summands.iter().copied().collect();
        ModuleSum { summands: set.into_iter().collect() }
    }

    pub fn push(&mut self, u: Uniserial) {
        let at = self.summands.partition_point(|v| *v <= u);
        self.summands.insert(at, u);
    }

    /// `self ⊕ other`.
    pub fn plus(&self, other: &ModuleSum) -> ModuleSum {
        ModuleSum::new(self.iter().chain(other.iter()).copied())
    }

    /// True when every summand of `self` occurs in `other` (as sets).
    pub fn is_summand_of(&self, other: &ModuleSum) -> bool {
        self.iter().all(|u| other.contains(u))
    }
}

impl FromIterator<Uniserial> for ModuleSum {
    fn from_iter<I: IntoIterator<Item = Uniserial>>(iter: I) -> Self {
        ModuleSum::new(iter)
    }
}

impl<'a> IntoIterator for &'a ModuleSum {
    type Item = &'a Uniserial;
    type IntoIter = std::slice::Iter<'a, Uniserial>;

    fn into_iter(self) -> Self::IntoIter {
        self.summands.iter()
    }
}

impl fmt::Display for ModuleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, u) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

impl Serialize for ModuleSum {
    /// A JSON array of `M(i,l)` strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.summands.iter())
    }
}

impl<'de> Deserialize<'de> for ModuleSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(ModuleSum::new(Vec::<Uniserial>::deserialize(deserializer)?))
    }
}

impl FromStr for ModuleSum {
    type Err = Error;

    /// Accepts `0` or summands joined by `+` (spaces ignored).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(ModuleSum::zero());
        }
        s.split('+').map(|part| part.parse::<Uniserial>()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let u: Uniserial = "M(4, 2)".parse().unwrap();
        assert_eq!(u, Uniserial::new(4, 2));
        assert_eq!(u.to_string(), "M(4,2)");
        assert!("M(0,1)".parse::<Uniserial>().is_err());
        assert!("M(1)".parse::<Uniserial>().is_err());
        assert!("P(1,1)".parse::<Uniserial>().is_err());
    }

    #[test]
    fn sums_are_sorted_and_zero_prints_as_0() {
        let m: ModuleSum = "M(4,2)+M(1,3) + M(4,1)".parse().unwrap();
        assert_eq!(m.to_string(), "M(1,3)+M(4,1)+M(4,2)");
        assert_eq!(ModuleSum::zero().to_string(), "0");
        assert!("0".parse::<ModuleSum>().unwrap().is_zero());
    }

    #[test]
    fn basic_detection() {
        let m: ModuleSum = "M(1,1)+M(1,1)".parse().unwrap();
        assert!(!m.is_basic());
        assert_eq!(m.ensure_basic(), Err(Error::NotBasic(Uniserial::new(1, 1))));
        assert_eq!(m.basic_part().len(), 1);
    }
}
