//! The subcategory of modules generated and cogenerated by the
//! projective-injectives, its tilting and cotilting modules, and the
//! numerical criterion deciding when they exist.

mod it;
mod report;

use serde::Serialize;

pub use it::{it_phi_psi, K0Vector};
pub use report::{classify, ClassificationReport};

use crate::algebra::{AdmissibleSequence, Kind};
use crate::dim::{ExtendedNat, Finite};
use crate::hom_ext::{cosyzygy, cosyzygy_power, domdim, ext_dim, gldim, id, pd, syzygy};
use crate::module::{ModuleSum, Uniserial};
use crate::{Error, Result};

/// `Q_c` (vertices whose projective is injective) and its complement `P_c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSplit {
    pub qc: Vec<usize>,
    pub pc: Vec<usize>,
}

impl VertexSplit {
    pub fn in_qc(&self, i: usize) -> bool {
        self.qc.binary_search(&i).is_ok()
    }
}

/// `Q_c = {i : c_{i+1} <= c_i}`; linear algebras use `c_{n+1} = 0`.
pub fn qc_pc_sets(alg: &AdmissibleSequence) -> VertexSplit {
    let n = alg.n();
    let next = |i: usize| match alg.kind() {
        Kind::Cyclic => alg.c(i % n + 1),
        Kind::Linear if i == n => 0,
        Kind::Linear => alg.c(i + 1),
    };
    let (qc, pc): (Vec<usize>, Vec<usize>) = alg.vertices().partition(|&i| next(i) <= alg.c(i));
    for i in alg.vertices() {
        debug_assert_eq!(
            qc.binary_search(&i).is_ok(),
            alg.is_injective(alg.projective(i)),
            "Q_c disagrees with injectivity of P_{i} over {alg}"
        );
    }
    VertexSplit { qc, pc }
}

/// The basic projective-injective module.
pub fn q_tilde(alg: &AdmissibleSequence) -> ModuleSum {
    qc_pc_sets(alg).qc.into_iter().map(|i| alg.projective(i)).collect()
}

/// Membership in the subcategory: projective cover injective and
/// injective envelope projective.
pub fn in_c(alg: &AdmissibleSequence, u: Uniserial) -> bool {
    alg.is_injective(alg.projective(u.top)) && alg.is_projective(alg.injective(alg.socle(u)))
}

pub fn in_c_sum(alg: &AdmissibleSequence, m: &ModuleSum) -> bool {
    m.iter().all(|&u| in_c(alg, u))
}

/// The modules of projective dimension one inside the subcategory and
/// the syzygy map from them to the projective non-injectives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaMap {
    pub x: Vec<Uniserial>,
    /// `(X_i, ΩX_i)` pairs.
    pub images: Vec<(Uniserial, Uniserial)>,
    pub is_bijection: bool,
}

pub fn x_set_and_omega(alg: &AdmissibleSequence) -> OmegaMap {
    let x: Vec<Uniserial> = alg
        .indecomposables()
        .into_iter()
        .filter(|&u| in_c(alg, u) && pd(alg, u) == Finite(1))
        .collect();
    let images: Vec<_> = x
        .iter()
        .map(|&u| {
            let p = syzygy(alg, u).expect("pd 1 modules are not projective");
            assert!(
                alg.is_projective(p) && !alg.is_injective(p),
                "syzygy of {u} is not projective non-injective over {alg}"
            );
            (u, p)
        })
        .collect();
    let mut targets: Vec<_> = images.iter().map(|(_, p)| *p).collect();
    targets.sort();
    targets.dedup();
    assert_eq!(targets.len(), images.len(), "syzygy map is not injective over {alg}");
    let split = qc_pc_sets(alg);
    let is_bijection = split.pc.iter().all(|&i| targets.contains(&alg.projective(i)));
    OmegaMap { x, images, is_bijection }
}

/// `P_c ⊆ {j - c_j : j ∈ Q_c}` (mod `n` for cyclic algebras).
pub fn criterion(alg: &AdmissibleSequence) -> bool {
    let split = qc_pc_sets(alg);
    let hits: Vec<i64> = split
        .qc
        .iter()
        .map(|&j| {
            let v = j as i64 - alg.c(j) as i64;
            match alg.kind() {
                Kind::Cyclic => alg.vertex(v) as i64,
                Kind::Linear => v,
            }
        })
        .collect();
    let holds = split.pc.iter().all(|&i| hits.contains(&(i as i64)));
    debug_assert_eq!(holds, domdim(alg) >= 2, "criterion vs domdim over {alg}");
    debug_assert_eq!(holds, x_set_and_omega(alg).is_bijection, "criterion vs bijection over {alg}");
    holds
}

/// `δ(i) = min{k >= 1 : i + k ∈ Q_c}` for `i ∈ P_c`.
pub fn delta(alg: &AdmissibleSequence, split: &VertexSplit, i: usize) -> Option<usize> {
    (1..=alg.n()).find(|&k| alg.wrap((i + k) as i64).is_some_and(|v| split.in_qc(v)))
}

/// `Q̃ ⊕ X` without consulting the criterion; it is tilting exactly when
/// the criterion holds.
pub fn tilting_candidate(alg: &AdmissibleSequence) -> ModuleSum {
    q_tilde(alg).plus(&x_set_and_omega(alg).x.into_iter().collect())
}

/// The tilting module in the subcategory, if there is one.
pub fn build_tc(alg: &AdmissibleSequence) -> Option<ModuleSum> {
    if !criterion(alg) {
        return None;
    }
    let split = qc_pc_sets(alg);
    let mut by_delta = q_tilde(alg);
    let mut by_cosyzygy = q_tilde(alg);
    for &i in &split.pc {
        let d = delta(alg, &split, i).expect("Q_c is non-empty when the criterion holds");
        by_delta.push(Uniserial::new(alg.vertex((i + d) as i64), d));
        by_cosyzygy.push(cosyzygy(alg, alg.projective(i)).expect("P_i is not injective"));
    }
    assert_eq!(by_delta, by_cosyzygy, "δ-description of T_C disagrees over {alg}");
    assert_eq!(by_delta.len(), alg.n());
    Some(by_delta)
}

/// The cotilting module in the subcategory: `Q̃` plus the syzygies of the
/// non-projective injectives.
pub fn build_cc(alg: &AdmissibleSequence) -> Option<ModuleSum> {
    if !criterion(alg) {
        return None;
    }
    let mut cc = q_tilde(alg);
    for j in alg.vertices() {
        let inj = alg.injective(j);
        if !alg.is_projective(inj) {
            cc.push(syzygy(alg, inj).expect("non-projective"));
        }
    }
    assert_eq!(cc.len(), alg.n());
    Some(cc)
}

fn ext1_self_orthogonal(alg: &AdmissibleSequence, m: &ModuleSum) -> bool {
    m.iter().all(|&u| m.iter().all(|&v| ext_dim(alg, u, v, 1) == 0))
}

/// `pd <= 1`, `Ext^1(M, M) = 0` and `n` summands.
pub fn verify_tilting(alg: &AdmissibleSequence, m: &ModuleSum) -> Result<bool> {
    m.ensure_basic()?;
    for &u in m {
        alg.check(u)?;
    }
    Ok(m.len() == alg.n()
        && m.iter().all(|&u| pd(alg, u) <= Finite(1))
        && ext1_self_orthogonal(alg, m))
}

/// `id <= 1`, `Ext^1(M, M) = 0` and `n` summands.
pub fn verify_cotilting(alg: &AdmissibleSequence, m: &ModuleSum) -> Result<bool> {
    m.ensure_basic()?;
    for &u in m {
        alg.check(u)?;
    }
    Ok(m.len() == alg.n()
        && m.iter().all(|&u| id(alg, u) <= Finite(1))
        && ext1_self_orthogonal(alg, m))
}

/// `τ` of the non-projective summands of `T_C`.
pub fn tau_tc(alg: &AdmissibleSequence) -> Result<ModuleSum> {
    let tc = build_tc(alg).ok_or_else(|| Error::Precondition(format!("{alg} has no tilting module T_C")))?;
    tc.iter()
        .filter(|&&u| !alg.is_projective(u))
        .map(|&u| alg.tau(u))
        .collect()
}

pub fn pd_tau_tc(alg: &AdmissibleSequence) -> Result<ExtendedNat> {
    Ok(tau_tc(alg)?.iter().map(|&u| pd(alg, u)).max().unwrap_or(Finite(0)))
}

/// Four conditions that hold or fail together when `gldim = d < ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DropConditions {
    /// `pd τT_C < d`
    pub pd_tau_below_gldim: bool,
    /// `Ext^d(τT_C, S) = 0` for every simple `S` with `id S = d`
    pub ext_top_vanishes: bool,
    /// `τ^{-1}Σ^{d-1}S` has projective-injective cover for those `S`
    pub tau_inv_cosyzygy_in_gen: bool,
    /// `ν^{-1}I_d(S)` is injective for those `S`
    pub nu_inverse_injective: bool,
}

impl DropConditions {
    pub fn agree(&self) -> bool {
        let v = self.pd_tau_below_gldim;
        self.ext_top_vanishes == v && self.tau_inv_cosyzygy_in_gen == v && self.nu_inverse_injective == v
    }
}

pub fn drop_side_conditions(alg: &AdmissibleSequence) -> Result<DropConditions> {
    let Finite(d) = gldim(alg) else {
        return Err(Error::Precondition(format!("{alg} has infinite global dimension")));
    };
    let tau_t = tau_tc(alg)?;
    if d == 0 {
        return Ok(DropConditions {
            pd_tau_below_gldim: true,
            ext_top_vanishes: true,
            tau_inv_cosyzygy_in_gen: true,
            nu_inverse_injective: true,
        });
    }
    let extremal: Vec<Uniserial> = alg
        .vertices()
        .map(|i| alg.simple(i))
        .filter(|&s| id(alg, s) == Finite(d))
        .collect();
    let pd_tau_below_gldim = pd_tau_tc(alg)? < Finite(d);
    let ext_top_vanishes = extremal
        .iter()
        .all(|&s| tau_t.iter().all(|&t| ext_dim(alg, t, s, d) == 0));
    let tau_inv_cosyzygy_in_gen = extremal.iter().all(|&s| {
        let sigma = cosyzygy_power(alg, s, d - 1).expect("id S = d");
        let m = alg.tau_inv(sigma).expect("id Σ^{d-1}S = 1, so it is not injective");
        alg.is_injective(alg.projective(m.top))
    });
    let nu_inverse_injective = extremal.iter().all(|&s| {
        let last = cosyzygy_power(alg, s, d).expect("id S = d");
        debug_assert!(alg.is_injective(last));
        alg.is_injective(alg.projective(alg.socle(last)))
    });
    Ok(DropConditions { pd_tau_below_gldim, ext_top_vanishes, tau_inv_cosyzygy_in_gen, nu_inverse_injective })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(top: usize, len: usize) -> Uniserial {
        Uniserial::new(top, len)
    }

    fn sharp() -> AdmissibleSequence {
        AdmissibleSequence::cyclic(&[3, 2, 3, 4, 3]).unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(qc_pc_sets(&sharp()), VertexSplit { qc: vec![1, 4, 5], pc: vec![2, 3] });
        let a = AdmissibleSequence::cyclic(&[2, 2, 2]).unwrap();
        assert_eq!(qc_pc_sets(&a), VertexSplit { qc: vec![1, 2, 3], pc: vec![] });
        let l = AdmissibleSequence::linear(&[1, 2, 2, 2, 2]).unwrap();
        assert_eq!(qc_pc_sets(&l), VertexSplit { qc: vec![2, 3, 4, 5], pc: vec![1] });
    }

    #[test]
    fn membership_examples() {
        let a = sharp();
        assert!(in_c(&a, m(4, 2)));
        // P_1 is injective and I_1 = P_4 is projective.
        assert!(in_c(&a, a.simple(1)));
        assert!(!in_c(&a, a.simple(2)));
        assert!(!in_c(&a, a.simple(3)));
        for q in q_tilde(&a).iter() {
            assert!(in_c(&a, *q));
        }
        let b = AdmissibleSequence::cyclic(&[2, 2, 3]).unwrap();
        assert!(in_c(&b, m(1, 2)));
    }

    #[test]
    fn omega_examples() {
        let a = sharp();
        let om = x_set_and_omega(&a);
        assert_eq!(om.x, vec![m(4, 1), m(4, 2)]);
        assert_eq!(om.images, vec![(m(4, 1), a.projective(3)), (m(4, 2), a.projective(2))]);
        assert!(om.is_bijection);
        let b = AdmissibleSequence::cyclic(&[2, 2]).unwrap();
        let om = x_set_and_omega(&b);
        assert!(om.x.is_empty() && om.is_bijection);
        let c = AdmissibleSequence::cyclic(&[2, 3, 3]).unwrap();
        assert!(!x_set_and_omega(&c).is_bijection);
    }

    #[test]
    fn criterion_examples() {
        assert!(criterion(&sharp()));
        assert!(!criterion(&AdmissibleSequence::cyclic(&[2, 3, 3]).unwrap()));
        assert!(criterion(&AdmissibleSequence::linear(&[1, 2, 2, 2, 2]).unwrap()));
        assert!(criterion(&AdmissibleSequence::linear(&[1]).unwrap()));
    }

    #[test]
    fn build_examples() {
        let a = sharp();
        let tc = build_tc(&a).unwrap();
        let expect = ModuleSum::new([a.projective(1), a.projective(4), a.projective(5), m(4, 2), m(4, 1)]);
        assert_eq!(tc, expect);

        let b = AdmissibleSequence::cyclic(&[3, 2, 2, 3, 3]).unwrap();
        let tc = build_tc(&b).unwrap();
        let expect = ModuleSum::new([b.projective(1), b.projective(2), b.projective(4), b.projective(5), b.simple(4)]);
        assert_eq!(tc, expect);
        assert_eq!(build_cc(&b).unwrap(), tc);

        let c = AdmissibleSequence::cyclic(&[2, 2, 2]).unwrap();
        let lambda: ModuleSum = c.vertices().map(|i| c.projective(i)).collect();
        assert_eq!(build_tc(&c).unwrap(), lambda);
        assert_eq!(build_cc(&c).unwrap(), lambda);

        assert_eq!(build_tc(&AdmissibleSequence::cyclic(&[2, 3, 3]).unwrap()), None);
    }

    #[test]
    fn verify_examples() {
        let a = sharp();
        let tc = build_tc(&a).unwrap();
        assert!(verify_tilting(&a, &tc).unwrap());
        assert!(!verify_cotilting(&a, &tc).unwrap());
        assert_eq!(id(&a, m(4, 2)), Finite(3));
        let lambda: ModuleSum = a.vertices().map(|i| a.projective(i)).collect();
        assert!(verify_tilting(&a, &lambda).unwrap());
        let doubled = tc.plus(&ModuleSum::new([m(4, 2)]));
        assert!(matches!(verify_tilting(&a, &doubled), Err(Error::NotBasic(_))));
    }

    #[test]
    fn pd_tau_examples() {
        let a = sharp();
        assert_eq!(pd_tau_tc(&a).unwrap(), Finite(4));
        assert_eq!(pd(&a, m(3, 2)), Finite(4));
        assert_eq!(pd_tau_tc(&AdmissibleSequence::linear(&[1, 2, 2, 2, 2]).unwrap()).unwrap(), Finite(0));
        assert_eq!(pd_tau_tc(&AdmissibleSequence::cyclic(&[2, 2, 2]).unwrap()).unwrap(), Finite(0));
        assert!(pd_tau_tc(&AdmissibleSequence::cyclic(&[2, 3, 3]).unwrap()).is_err());
    }

    #[test]
    fn drop_conditions_examples() {
        let l = AdmissibleSequence::linear(&[1, 2, 2, 2, 2]).unwrap();
        let d = drop_side_conditions(&l).unwrap();
        assert!(d.pd_tau_below_gldim && d.agree());
        let d = drop_side_conditions(&sharp()).unwrap();
        assert!(!d.pd_tau_below_gldim && d.agree());
        let s = drop_side_conditions(&AdmissibleSequence::linear(&[1]).unwrap()).unwrap();
        assert!(s.pd_tau_below_gldim && s.agree());
        assert!(drop_side_conditions(&AdmissibleSequence::cyclic(&[2, 2]).unwrap()).is_err());
    }
}
