use serde::{Deserialize, Serialize};

use super::{build_cc, build_tc, criterion, verify_cotilting};
use crate::algebra::{AdmissibleSequence, Kind};
use crate::dim::{ExtendedNat, Finite, Infinite};
use crate::hom_ext::{domdim, gldim, gorenstein_dim};
use crate::module::ModuleSum;

/// Every invariant and classification flag of one algebra.
///
/// `gdim` is `inf` when the algebra is not Iwanaga-Gorenstein.
/// `m_auslander` is the largest `m >= 1` with `gldim <= m+1 <= domdim`,
/// `inf` when every `m` works (semisimple) and absent when none does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub kind: Kind,
    pub c: Vec<usize>,
    pub gldim: ExtendedNat,
    pub domdim: ExtendedNat,
    pub id_left: ExtendedNat,
    pub id_right: ExtendedNat,
    pub gdim: ExtendedNat,
    pub selfinjective: bool,
    pub auslander: bool,
    pub m_auslander: Option<ExtendedNat>,
    pub one_aus_gorenstein: bool,
    pub dtr_selfinjective: bool,
    pub tilting_exists: bool,
    pub t_c: Option<ModuleSum>,
    pub c_c: Option<ModuleSum>,
    pub tilting_cotilting: bool,
}

impl ClassificationReport {
    pub fn is_gorenstein(&self) -> bool {
        self.gdim.is_finite()
    }

    /// Looks up a boolean flag by its JSON key.
    pub fn flag(&self, key: &str) -> Option<bool> {
        Some(match key {
            "selfinjective" => self.selfinjective,
            "auslander" => self.auslander,
            "one_aus_gorenstein" | "one_AG" => self.one_aus_gorenstein,
            "dtr_selfinjective" => self.dtr_selfinjective,
            "tilting_exists" => self.tilting_exists,
            "tilting_cotilting" => self.tilting_cotilting,
            "m_auslander" => self.m_auslander.is_some(),
            _ => return None,
        })
    }

    /// Looks up a dimension by its JSON key.
    pub fn dimension(&self, key: &str) -> Option<ExtendedNat> {
        Some(match key {
            "gldim" => self.gldim,
            "domdim" => self.domdim,
            "id_left" => self.id_left,
            "id_right" => self.id_right,
            "gdim" => self.gdim,
            "n" => Finite(self.c.len()),
            "m_auslander" => self.m_auslander?,
            _ => return None,
        })
    }
}

pub fn classify(alg: &AdmissibleSequence) -> ClassificationReport {
    let gl = gldim(alg);
    let dd = domdim(alg);
    let g = gorenstein_dim(alg);
    let two = Finite(2);
    let selfinjective = alg.vertices().all(|i| alg.is_injective(alg.projective(i)));
    let m_auslander = match (gl, dd) {
        (Finite(_), Infinite) => Some(Infinite),
        (Finite(d), Finite(m1)) if d <= m1 && m1 >= 2 => Some(Finite(m1 - 1)),
        _ => None,
    };
    let one_aus_gorenstein = g.id_left <= two && two <= dd;
    let tilting_exists = criterion(alg);
    let t_c = build_tc(alg);
    let c_c = build_cc(alg);
    let tilting_cotilting = match &t_c {
        Some(t) => verify_cotilting(alg, t).expect("T_C is basic"),
        None => false,
    };
    assert_eq!(
        tilting_cotilting, one_aus_gorenstein,
        "tilting-cotilting existence disagrees with 1-Auslander-Gorenstein over {alg}"
    );
    if tilting_cotilting {
        assert_eq!(t_c, c_c, "T_C and C_C differ for a tilting-cotilting T_C over {alg}");
    }
    assert_eq!(tilting_exists, dd >= two);
    ClassificationReport {
        kind: alg.kind(),
        c: alg.lengths().to_vec(),
        gldim: gl,
        domdim: dd,
        id_left: g.id_left,
        id_right: g.id_right,
        gdim: g.gdim.map_or(Infinite, Finite),
        selfinjective,
        auslander: gl <= two && two <= dd,
        m_auslander,
        one_aus_gorenstein,
        dtr_selfinjective: g.id_left == two && dd == two,
        tilting_exists,
        t_c,
        c_c,
        tilting_cotilting,
    }
}
