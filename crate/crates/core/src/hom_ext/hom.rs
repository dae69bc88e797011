use serde::{Deserialize, Serialize};

use crate::algebra::{AdmissibleSequence, Kind};
use crate::module::Uniserial;
use crate::{Error, Result};

/// The canonical map `source ->> M(top(source), k) >-> target`: quotient
/// of the source onto its top `k` factors, followed by the inclusion of
/// the bottom `k` factors of the target.
///
/// On the standard bases (`e_0` the top vector, `e_j` spanning the `j`-th
/// radical layer) it sends `e_j` to `e_{len(target)-k+j}` for `j < k` and
/// kills the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HomMap {
    pub source: Uniserial,
    pub target: Uniserial,
    pub k: usize,
}

impl HomMap {
    pub fn identity(u: Uniserial) -> HomMap {
        HomMap { source: u, target: u, k: u.len }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.k == self.source.len
    }

    /// True iff the map is onto its target.
    pub fn is_epi(&self) -> bool {
        self.k == self.target.len
    }

    pub fn is_mono(&self) -> bool {
        self.k == self.source.len
    }
}

/// The image lengths `k` of the canonical basis of `Hom(u, v)`, ascending.
fn image_lengths(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial) -> impl Iterator<Item = usize> {
    let shift = u.top as i64 - v.top as i64 + v.len as i64;
    let n = alg.n() as i64;
    let kind = alg.kind();
    (1..=u.len.min(v.len)).filter(move |&k| match kind {
        Kind::Cyclic => (k as i64 - shift).rem_euclid(n) == 0,
        Kind::Linear => k as i64 == shift,
    })
}

/// `dim Hom(u, v)`.
pub fn hom_dim(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial) -> usize {
    image_lengths(alg, u, v).count()
}

pub fn hom_basis(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial) -> Vec<HomMap> {
    image_lengths(alg, u, v)
        .map(|k| HomMap { source: u, target: v, k })
        .collect()
}

/// `g ∘ f`, or `None` for the zero map. Composites of canonical maps are
/// canonical, so all structure constants are 0 or 1.
pub fn compose(f: HomMap, g: HomMap) -> Result<Option<HomMap>> {
    if f.target != g.source {
        return Err(Error::NotComposable(f.target, g.source));
    }
    let k = (f.k + g.k).saturating_sub(f.target.len);
    Ok((k > 0).then_some(HomMap { source: f.source, target: g.target, k }))
}
