//! Nakayama algebras presented by their admissible sequence, and the
//! uniserial-module calculus over them.
//!
//! Vertices are numbered `1..=n`. Arrows run `i+1 -> i` (and `1 -> n` in
//! the cyclic case), so the projective `P_i = M(i, c_i)` has composition
//! factors `S_i, S_{i-1}, ...` and socle `S_{i-c_i+1}` (indices mod `n`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::module::Uniserial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cyclic,
    Linear,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Cyclic => "cyclic",
            Kind::Linear => "linear",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cyclic" => Ok(Kind::Cyclic),
            "linear" => Ok(Kind::Linear),
            other => Err(Error::Parse(format!("unknown kind `{other}` (expected cyclic or linear)"))),
        }
    }
}

/// A validated admissible sequence `(c_1, ..., c_n)`; it determines the
/// Nakayama algebra up to isomorphism, so it doubles as the algebra handle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSequence {
    kind: Kind,
    c: Vec<usize>,
}

impl AdmissibleSequence {
    /// Validates the Kupisch inequalities, reporting the first violation.
    pub fn new(kind: Kind, c: Vec<usize>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::Kupisch("the sequence is empty".into()));
        }
        let n = c.len();
        match kind {
            Kind::Cyclic => {
                for i in 1..=n {
                    let ci = c[i - 1];
                    if ci < 2 {
                        return Err(Error::Kupisch(format!("at i={i}: c_{i}={ci} < 2")));
                    }
                    let prev = if i == 1 { n } else { i - 1 };
                    let cp = c[prev - 1];
                    if ci > cp + 1 {
                        return Err(Error::Kupisch(format!(
                            "at i={i}: c_{i}={ci} > c_{prev}+1={}",
                            cp + 1
                        )));
                    }
                }
            }
            Kind::Linear => {
                if c[0] != 1 {
                    return Err(Error::Kupisch(format!("at i=1: c_1={} != 1", c[0])));
                }
                for i in 2..=n {
                    let ci = c[i - 1];
                    if ci < 2 {
                        return Err(Error::Kupisch(format!("at i={i}: c_{i}={ci} < 2")));
                    }
                    let cp = c[i - 2];
                    if ci > cp + 1 {
                        return Err(Error::Kupisch(format!(
                            "at i={i}: c_{i}={ci} > c_{}+1={}",
                            i - 1,
                            cp + 1
                        )));
                    }
                }
            }
        }
        Ok(AdmissibleSequence { kind, c })
    }

    pub fn cyclic(c: &[usize]) -> Result<Self> {
        Self::new(Kind::Cyclic, c.to_vec())
    }

    pub fn linear(c: &[usize]) -> Result<Self> {
        Self::new(Kind::Linear, c.to_vec())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cyclic(&self) -> bool {
        self.kind == Kind::Cyclic
    }

    /// Number of simple modules.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.c
    }

    /// `c_i`, the length of `P_i`; `i` is 1-based.
    pub fn c(&self, i: usize) -> usize {
        self.c[i - 1]
    }

    /// Total dimension `Σ c_i`.
    pub fn dimension(&self) -> usize {
        self.c.iter().sum()
    }

    pub fn max_length(&self) -> usize {
        self.c.iter().copied().max().unwrap_or(0)
    }

    /// Maps an integer vertex label into `1..=n`: modulo `n` for cyclic
    /// algebras, `None` outside the range for linear ones.
    pub fn wrap(&self, i: i64) -> Option<usize> {
        let n = self.n() as i64;
        match self.kind {
            Kind::Cyclic => Some((i - 1).rem_euclid(n) as usize + 1),
            Kind::Linear => (1..=n).contains(&i).then_some(i as usize),
        }
    }

    /// `wrap` for call sites where the label is known to be in range.
    pub(crate) fn vertex(&self, i: i64) -> usize {
        self.wrap(i).unwrap_or_else(|| panic!("vertex {i} out of range for {self}"))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n()
    }

    pub fn contains(&self, u: Uniserial) -> bool {
        if u.top < 1 || u.top > self.n() || u.len < 1 || u.len > self.c(u.top) {
            return false;
        }
        match self.kind {
            Kind::Cyclic => true,
            Kind::Linear => u.top >= u.len,
        }
    }

    pub fn check(&self, u: Uniserial) -> Result<Uniserial> {
        if self.contains(u) {
            Ok(u)
        } else {
            Err(Error::InvalidModule(u))
        }
    }

    pub fn socle(&self, u: Uniserial) -> usize {
        self.vertex(u.top as i64 - u.len as i64 + 1)
    }

    /// All indecomposable modules, ordered by top then length.
    pub fn indecomposables(&self) -> Vec<Uniserial> {
        self.vertices()
            .flat_map(|i| (1..=self.c(i)).map(move |l| Uniserial::new(i, l)))
            .filter(|u| self.contains(*u))
            .collect()
    }

    pub fn simple(&self, i: usize) -> Uniserial {
        Uniserial::new(i, 1)
    }

    pub fn projective(&self, i: usize) -> Uniserial {
        Uniserial::new(i, self.c(i))
    }

    /// The injective envelope of `S_j`: the longest uniserial with socle `j`.
    pub fn injective(&self, j: usize) -> Uniserial {
        let mut best = None;
        for l in (1..=self.max_length()).rev() {
            let Some(top) = self.wrap(j as i64 + l as i64 - 1) else {
                continue;
            };
            if l <= self.c(top) {
                best = Some(Uniserial::new(top, l));
                break;
            }
        }
        best.expect("S_j itself is always a candidate")
    }

    pub fn is_projective(&self, u: Uniserial) -> bool {
        u.len == self.c(u.top)
    }

    pub fn is_injective(&self, u: Uniserial) -> bool {
        self.injective(self.socle(u)) == u
    }

    pub fn is_projective_injective(&self, u: Uniserial) -> bool {
        self.is_projective(u) && self.is_injective(u)
    }

    /// Auslander-Reiten translate `M(i,l) -> M(i-1,l)`.
    pub fn tau(&self, u: Uniserial) -> Result<Uniserial> {
        self.check(u)?;
        if self.is_projective(u) {
            return Err(Error::ProjectiveHasNoTau(u));
        }
        let v = Uniserial::new(self.vertex(u.top as i64 - 1), u.len);
        debug_assert!(self.contains(v));
        Ok(v)
    }

    /// Inverse translate `M(i,l) -> M(i+1,l)`.
    pub fn tau_inv(&self, u: Uniserial) -> Result<Uniserial> {
        self.check(u)?;
        if self.is_injective(u) {
            return Err(Error::InjectiveHasNoTauInverse(u));
        }
        let v = Uniserial::new(self.vertex(u.top as i64 + 1), u.len);
        debug_assert!(self.contains(v));
        Ok(v)
    }

    /// The opposite algebra together with the vertex relabelling
    /// `relabel[i-1] = i*`. Projectives of the opposite algebra are the
    /// duals of the injectives here: `c*_{i*} = l(I_i)`.
    pub fn opposite(&self) -> (AdmissibleSequence, Vec<usize>) {
        let n = self.n();
        let relabel: Vec<usize> = self
            .vertices()
            .map(|i| match self.kind {
                Kind::Cyclic => self.vertex(1 - i as i64),
                Kind::Linear => n + 1 - i,
            })
            .collect();
        let mut c = vec![0; n];
        for i in self.vertices() {
            c[relabel[i - 1] - 1] = self.injective(i).len;
        }
        let op = AdmissibleSequence::new(self.kind, c)
            .unwrap_or_else(|e| panic!("opposite of {self} is not admissible: {e}"));
        (op, relabel)
    }

    /// Cyclic shift by `k`: the new `c_1` is the old `c_{k+1}`.
    pub fn rotate(&self, k: usize) -> AdmissibleSequence {
        let n = self.n();
        let c = (0..n).map(|i| self.c[(i + k) % n]).collect();
        AdmissibleSequence { kind: self.kind, c }
    }

    /// Lexicographically minimal rotation (identity for linear algebras).
    pub fn canonical_rotation(&self) -> AdmissibleSequence {
        match self.kind {
            Kind::Linear => self.clone(),
            Kind::Cyclic => (0..self.n()).map(|k| self.rotate(k)).min().expect("n >= 1"),
        }
    }

    pub fn is_rotation_of(&self, other: &AdmissibleSequence) -> bool {
        self.kind == other.kind && self.canonical_rotation() == other.canonical_rotation()
    }

    /// The representative of the difference class with the smallest entries:
    /// subtract `n` from every entry while the result stays admissible.
    pub fn difference_class_representative(&self) -> AdmissibleSequence {
        if self.kind == Kind::Linear {
            return self.clone();
        }
        let n = self.n();
        let mut c = self.c.clone();
        while c.iter().all(|&x| x >= n + 2) {
            c.iter_mut().for_each(|x| *x -= n);
        }
        AdmissibleSequence { kind: self.kind, c }
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind)?;
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of positive integers.
pub fn parse_lengths(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{}` is not a natural number", t.trim())))
        })
        .collect()
}

impl FromStr for AdmissibleSequence {
    type Err = Error;

    /// `cyclic:3,2,3,4,3` or `linear:1,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `kind:c1,...,cn`, got `{s}`")))?;
        AdmissibleSequence::new(kind.parse()?, parse_lengths(rest)?)
    }
}

impl Serialize for AdmissibleSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AdmissibleSequence {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
