use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::AdmissibleSequence;
use crate::dim::Finite;
use crate::hom_ext::{pd, syzygy, syzygy_power};
use crate::module::{ModuleSum, Uniserial};
use crate::{Error, Result};

/// An element of the free abelian group on non-projective indecomposables,
/// with projectives identified with zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct K0Vector {
    coefficients: BTreeMap<Uniserial, i64>,
}

impl K0Vector {
    /// `[M]`: summand multiplicities, projective summands dropped.
    pub fn of(alg: &AdmissibleSequence, m: &ModuleSum) -> K0Vector {
        let mut v = K0Vector::default();
        for &u in m {
            v.add(alg, u, 1);
        }
        v
    }

    fn add(&mut self, alg: &AdmissibleSequence, u: Uniserial, coeff: i64) {
        if alg.is_projective(u) || coeff == 0 {
            return;
        }
        let e = self.coefficients.entry(u).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coefficients.remove(&u);
        }
    }

    pub fn coefficient(&self, u: Uniserial) -> i64 {
        self.coefficients.get(&u).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = Uniserial> + '_ {
        self.coefficients.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// The linear map `L[X] = [ΩX]`.
    pub fn syzygy(&self, alg: &AdmissibleSequence) -> K0Vector {
        let mut out = K0Vector::default();
        for (&u, &c) in &self.coefficients {
            if let Some(w) = syzygy(alg, u) {
                out.add(alg, w, c);
            }
        }
        out
    }
}

/// The Igusa-Todorov functions `(φ(M), ψ(M))`.
///
/// `L^m⟨add M⟩` is free on the distinct non-projective modules among
/// `Ω^m` of the summands, so its rank is that count. The count never
/// increases; `φ` is the first `m` where it reaches its eventual value,
/// found by running the orbit of class sets until it repeats.
pub fn it_phi_psi(alg: &AdmissibleSequence, m: &ModuleSum) -> Result<(usize, usize)> {
    if m.is_zero() {
        return Err(Error::Precondition("IT functions need a nonzero module".into()));
    }
    for &u in m {
        alg.check(u)?;
    }
    let classes = |set: &BTreeSet<Uniserial>| -> BTreeSet<Uniserial> {
        set.iter().filter_map(|&u| syzygy(alg, u)).filter(|&u| !alg.is_projective(u)).collect()
    };
    let mut orbit: Vec<BTreeSet<Uniserial>> =
        vec![m.iter().copied().filter(|&u| !alg.is_projective(u)).collect()];
    loop {
        let next = classes(orbit.last().expect("non-empty"));
        if orbit.contains(&next) {
            break;
        }
        orbit.push(next);
    }
    let stable = orbit.last().expect("non-empty").len();
    let ranks: Vec<usize> = orbit.iter().map(BTreeSet::len).collect();
    debug_assert!(ranks.windows(2).all(|w| w[0] >= w[1]));
    let phi = ranks.iter().position(|&r| r == stable).expect("last rank is stable");
    let tail = m
        .iter()
        .filter_map(|&u| syzygy_power(alg, u, phi))
        .filter_map(|w| pd(alg, w).finite())
        .max()
        .unwrap_or(0);
    let psi = phi + tail;
    if let Some(Finite(p)) = m.iter().map(|&u| pd(alg, u)).max() {
        debug_assert_eq!((phi, psi), (p, p), "IT functions of a finite-pd module over {alg}");
    }
    Ok((phi, psi))
}
