//! Syzygies, cosyzygies and the dimension invariants built from them.

use std::collections::HashSet;

use super::hom::hom_dim;
use crate::algebra::AdmissibleSequence;
use crate::dim::{ExtendedNat, Finite, Infinite};
use crate::module::{ModuleSum, Uniserial};

/// Kernel of the projective cover: `M(i,l) -> M(i-l, c_i-l)`, zero when
/// `l = c_i`.
pub fn syzygy(alg: &AdmissibleSequence, u: Uniserial) -> Option<Uniserial> {
    let c = alg.c(u.top);
    (u.len < c).then(|| Uniserial::new(alg.vertex(u.top as i64 - u.len as i64), c - u.len))
}

/// Cokernel of the injective envelope, zero when `u` is injective.
pub fn cosyzygy(alg: &AdmissibleSequence, u: Uniserial) -> Option<Uniserial> {
    let env = alg.injective(alg.socle(u));
    (env.len > u.len).then(|| Uniserial::new(env.top, env.len - u.len))
}

pub fn projective_cover(alg: &AdmissibleSequence, u: Uniserial) -> Uniserial {
    alg.projective(u.top)
}

pub fn injective_envelope(alg: &AdmissibleSequence, u: Uniserial) -> Uniserial {
    alg.injective(alg.socle(u))
}

/// `Ω^k u`, `None` once the orbit reaches zero.
pub fn syzygy_power(alg: &AdmissibleSequence, u: Uniserial, k: usize) -> Option<Uniserial> {
    (0..k).try_fold(u, |m, _| syzygy(alg, m))
}

pub fn cosyzygy_power(alg: &AdmissibleSequence, u: Uniserial, k: usize) -> Option<Uniserial> {
    (0..k).try_fold(u, |m, _| cosyzygy(alg, m))
}

/// Number of steps of `step` until zero; infinite when the orbit revisits
/// a module first. Orbits live in the finite set of indecomposables.
fn steps_to_zero(u: Uniserial, step: impl Fn(Uniserial) -> Option<Uniserial>) -> ExtendedNat {
    let mut seen = HashSet::new();
    let mut cur = u;
    let mut k = 0;
    loop {
        if !seen.insert(cur) {
            return Infinite;
        }
        match step(cur) {
            None => return Finite(k),
            Some(next) => {
                cur = next;
                k += 1;
            }
        }
    }
}

pub fn pd(alg: &AdmissibleSequence, u: Uniserial) -> ExtendedNat {
    steps_to_zero(u, |m| syzygy(alg, m))
}

pub fn id(alg: &AdmissibleSequence, u: Uniserial) -> ExtendedNat {
    steps_to_zero(u, |m| cosyzygy(alg, m))
}

/// Projective dimension of a direct sum; `None` for the zero module.
pub fn pd_sum(alg: &AdmissibleSequence, m: &ModuleSum) -> Option<ExtendedNat> {
    m.iter().map(|&u| pd(alg, u)).max()
}

pub fn id_sum(alg: &AdmissibleSequence, m: &ModuleSum) -> Option<ExtendedNat> {
    m.iter().map(|&u| id(alg, u)).max()
}

pub fn gldim(alg: &AdmissibleSequence) -> ExtendedNat {
    let g = alg.vertices().map(|i| pd(alg, alg.simple(i))).max().expect("n >= 1");
    debug_assert_eq!(
        g,
        alg.indecomposables().into_iter().map(|u| pd(alg, u)).max().unwrap()
    );
    g
}

/// Number of leading projective terms in the minimal injective
/// coresolution of `u`; infinite when every term is projective (the
/// coresolution stops or cycles).
pub fn domdim_module(alg: &AdmissibleSequence, u: Uniserial) -> ExtendedNat {
    let mut seen = HashSet::new();
    let mut cur = u;
    let mut k = 0;
    loop {
        if !alg.is_projective(injective_envelope(alg, cur)) {
            return Finite(k);
        }
        if !seen.insert(cur) {
            return Infinite;
        }
        k += 1;
        match cosyzygy(alg, cur) {
            None => return Infinite,
            Some(next) => cur = next,
        }
    }
}

pub fn domdim(alg: &AdmissibleSequence) -> ExtendedNat {
    alg.vertices()
        .map(|i| domdim_module(alg, alg.projective(i)))
        .min()
        .expect("n >= 1")
}

/// `id` of the regular module.
pub fn id_regular(alg: &AdmissibleSequence) -> ExtendedNat {
    alg.vertices().map(|i| id(alg, alg.projective(i))).max().expect("n >= 1")
}

/// Injective dimensions of the regular module on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GorensteinDims {
    pub id_left: ExtendedNat,
    pub id_right: ExtendedNat,
    /// The common value when both sides are finite; `None` otherwise
    /// (the algebra is not Iwanaga-Gorenstein).
    pub gdim: Option<usize>,
}

pub fn gorenstein_dim(alg: &AdmissibleSequence) -> GorensteinDims {
    let id_left = id_regular(alg);
    let id_right = id_regular(&alg.opposite().0);
    let gdim = match (id_left, id_right) {
        (Finite(l), Finite(r)) => {
            assert_eq!(l, r, "one-sided injective dimensions of {alg} differ");
            Some(l)
        }
        _ => None,
    };
    GorensteinDims { id_left, id_right, gdim }
}

/// `dim Ext^k(u, v)` by dimension shifting along syzygies.
pub fn ext_dim(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial, k: usize) -> usize {
    match k {
        0 => hom_dim(alg, u, v),
        1 => {
            let Some(omega) = syzygy(alg, u) else {
                return 0;
            };
            let lhs = hom_dim(alg, omega, v) + hom_dim(alg, u, v);
            let cover = hom_dim(alg, projective_cover(alg, u), v);
            assert!(lhs >= cover, "negative Ext^1({u},{v}) over {alg}");
            lhs - cover
        }
        _ => match syzygy_power(alg, u, k - 1) {
            Some(w) => ext_dim(alg, w, v, 1),
            None => 0,
        },
    }
}
