//! Enumeration and random generation of admissible sequences, and
//! filtered classification sweeps over them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::algebra::{AdmissibleSequence, Kind};
use crate::dim::ExtendedNat;
use crate::tilting::{classify, ClassificationReport};
use crate::{Error, Result};

/// Every admissible sequence of the given kind and length with all
/// entries at most `max_c`, in lexicographic order.
pub fn all_sequences(kind: Kind, n: usize, max_c: usize) -> Vec<AdmissibleSequence> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut c = Vec::with_capacity(n);
    extend(kind, n, max_c, &mut c, &mut out);
    out
}

fn extend(kind: Kind, n: usize, max_c: usize, c: &mut Vec<usize>, out: &mut Vec<AdmissibleSequence>) {
    if c.len() == n {
        let closes = kind == Kind::Linear || c[0] <= c[n - 1] + 1;
        if closes {
            out.push(AdmissibleSequence::new(kind, c.clone()).expect("built within the inequalities"));
        }
        return;
    }
    let (lo, hi) = match (kind, c.last()) {
        (Kind::Linear, None) => (1, 1),
        (Kind::Cyclic, None) => (2, max_c),
        (_, Some(&prev)) => (2, max_c.min(prev + 1)),
    };
    for v in lo..=hi {
        c.push(v);
        extend(kind, n, max_c, c, out);
        c.pop();
    }
}

/// All sequences of both kinds with `1 <= n <= n_max` and entries at most
/// `max_c`.
pub fn grid(n_max: usize, max_c: usize) -> Vec<AdmissibleSequence> {
    let mut out = Vec::new();
    for kind in [Kind::Cyclic, Kind::Linear] {
        for n in 1..=n_max {
            out.extend(all_sequences(kind, n, max_c));
        }
    }
    out
}

/// A random admissible sequence: `n` uniform in `[1, n_max]`, then each
/// entry uniform in its allowed range, redrawing cyclic sequences whose
/// last entry is too small for the wrap-around inequality.
pub fn random_sequence<R: Rng>(rng: &mut R, kind: Kind, n_max: usize, c_max: usize) -> AdmissibleSequence {
    assert!(n_max >= 1 && c_max >= 2);
    let n = rng.gen_range(1..=n_max);
    loop {
        let mut c = Vec::with_capacity(n);
        match kind {
            Kind::Linear => c.push(1),
            Kind::Cyclic => c.push(rng.gen_range(2..=c_max)),
        }
        while c.len() < n {
            let prev = *c.last().expect("non-empty");
            c.push(rng.gen_range(2..=c_max.min(prev + 1)));
        }
        if let Ok(alg) = AdmissibleSequence::new(kind, c) {
            return alg;
        }
    }
}

/// A random sequence of a uniformly chosen kind.
pub fn random_algebra<R: Rng>(rng: &mut R, n_max: usize, c_max: usize) -> AdmissibleSequence {
    let kind = if rng.gen_bool(0.5) { Kind::Cyclic } else { Kind::Linear };
    random_sequence(rng, kind, n_max, c_max)
}

/// `min c_i <= n + 1`.
pub fn is_elementary(alg: &AdmissibleSequence) -> bool {
    alg.lengths().iter().min().is_some_and(|&m| m <= alg.n() + 1)
}

/// `min c_i = 2`.
pub fn is_absolutely_elementary(alg: &AdmissibleSequence) -> bool {
    alg.lengths().iter().min() == Some(&2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Ge,
    Le,
    Eq,
}

/// A row predicate on a [`ClassificationReport`]: a boolean key, its
/// negation `!key`, or a comparison `key>=N`, `key<=N`, `key=N` on a
/// dimension key (`N` a natural number or `inf`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    Flag { key: String, value: bool },
    Compare { key: String, cmp: Cmp, value: ExtendedNat },
}

const FLAG_KEYS: &[&str] = &[
    "selfinjective",
    "auslander",
    "one_aus_gorenstein",
    "one_AG",
    "dtr_selfinjective",
    "tilting_exists",
    "tilting_cotilting",
    "m_auslander",
];
const DIM_KEYS: &[&str] = &["gldim", "domdim", "id_left", "id_right", "gdim", "n", "m_auslander"];

impl Filter {
    pub fn accepts(&self, r: &ClassificationReport) -> bool {
        match self {
            Filter::Flag { key, value } => r.flag(key) == Some(*value),
            Filter::Compare { key, cmp, value } => match r.dimension(key) {
                None => false,
                Some(d) => match cmp {
                    Cmp::Ge => d >= *value,
                    Cmp::Le => d <= *value,
                    Cmp::Eq => d == *value,
                },
            },
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (op, cmp) in [(">=", Cmp::Ge), ("<=", Cmp::Le), ("=", Cmp::Eq)] {
            if let Some((key, value)) = s.split_once(op) {
                let key = key.trim();
                if !DIM_KEYS.contains(&key) {
                    return Err(Error::Parse(format!("unknown dimension key `{key}` in filter `{s}`")));
                }
                let value: ExtendedNat = value.trim().parse()?;
                return Ok(Filter::Compare { key: key.into(), cmp, value });
            }
        }
        let (key, value) = match s.strip_prefix('!') {
            Some(k) => (k.trim(), false),
            None => (s, true),
        };
        if !FLAG_KEYS.contains(&key) {
            return Err(Error::Parse(format!("unknown filter `{s}`")));
        }
        Ok(Filter::Flag { key: key.into(), value })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Flag { key, value: true } => write!(f, "{key}"),
            Filter::Flag { key, value: false } => write!(f, "!{key}"),
            Filter::Compare { key, cmp, value } => {
                let op = match cmp {
                    Cmp::Ge => ">=",
                    Cmp::Le => "<=",
                    Cmp::Eq => "=",
                };
                write!(f, "{key}{op}{value}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub kind: Kind,
    pub n: usize,
    pub max_c: usize,
    pub filters: Vec<Filter>,
    pub elementary: bool,
    pub absolutely_elementary: bool,
    pub up_to_rotation: bool,
    pub up_to_difference_class: bool,
    /// Maximum number of rows emitted.
    pub row_cap: usize,
}

impl SweepSpec {
    pub fn new(kind: Kind, n: usize, max_c: usize) -> Self {
        SweepSpec {
            kind,
            n,
            max_c,
            filters: Vec::new(),
            elementary: false,
            absolutely_elementary: false,
            up_to_rotation: false,
            up_to_difference_class: false,
            row_cap: 100_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let min_c = match self.kind {
            Kind::Cyclic => 2,
            Kind::Linear => 1,
        };
        if self.n == 0 {
            return Err(Error::Precondition("sweep needs n >= 1".into()));
        }
        if self.max_c < min_c {
            return Err(Error::Precondition(format!("max_c must be at least {min_c} for {} algebras", self.kind)));
        }
        if self.row_cap == 0 {
            return Err(Error::Precondition("row cap must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<ClassificationReport>,
    /// Rows that passed every filter, before the row cap.
    pub matched: usize,
    pub truncated: bool,
}

/// Generates, filters, canonicalizes and classifies. Filters see the
/// generated sequence; the emitted row is the report of its class
/// representative. Rows are sorted by `(kind, c)`.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let candidates: Vec<AdmissibleSequence> = all_sequences(spec.kind, spec.n, spec.max_c)
        .into_iter()
        .filter(|a| !spec.elementary || is_elementary(a))
        .filter(|a| !spec.absolutely_elementary || is_absolutely_elementary(a))
        .collect();
    let survivors: Vec<AdmissibleSequence> = candidates
        .into_par_iter()
        .filter(|a| {
            if spec.filters.is_empty() {
                return true;
            }
            let r = classify(a);
            spec.filters.iter().all(|f| f.accepts(&r))
        })
        .collect();
    let reps: BTreeSet<AdmissibleSequence> = survivors
        .into_iter()
        .map(|mut a| {
            if spec.up_to_difference_class {
                a = a.difference_class_representative();
            }
            if spec.up_to_rotation {
                a = a.canonical_rotation();
            }
            a
        })
        .collect();
    let matched = reps.len();
    let truncated = matched > spec.row_cap;
    let reps: Vec<AdmissibleSequence> = reps.into_iter().take(spec.row_cap).collect();
    let rows = reps.par_iter().map(classify).collect();
    Ok(SweepResult { rows, matched, truncated })
}
