use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A natural number or infinity. Every homological dimension lives here.
///
/// The derived order puts every `Finite(_)` below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(usize),
    Infinite,
}

pub use ExtendedNat::{Finite, Infinite};

impl ExtendedNat {
    pub const ZERO: ExtendedNat = Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }

    /// Adds a natural number; infinity absorbs.
    pub fn plus(self, k: usize) -> ExtendedNat {
        match self {
            Finite(v) => Finite(v + k),
            Infinite => Infinite,
        }
    }
}

impl From<usize> for ExtendedNat {
    fn from(v: usize) -> Self {
        Finite(v)
    }
}

impl PartialEq<usize> for ExtendedNat {
    fn eq(&self, other: &usize) -> bool {
        *self == Finite(*other)
    }
}

impl PartialOrd<usize> for ExtendedNat {
    fn partial_cmp(&self, other: &usize) -> Option<std::cmp::Ordering> {
        self.partial_cmp(&Finite(*other))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Infinite);
        }
        s.parse::<usize>()
            .map(Finite)
            .map_err(|_| Error::Parse(format!("expected a natural number or `inf`, got `{s}`")))
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => serializer.serialize_u64(*v as u64),
            Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => Ok(Finite(v as usize)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
