//! Endomorphism algebras `End(X)^op` as exact structure-constant algebras,
//! their modules, projective resolutions over them, and the checks that
//! compare homological data over `End(X)^op` with data over the base
//! Nakayama algebra.
//!
//! Convention: the product in `End(X)^op` is `f·g = g∘f`. Left modules are
//! then exactly the functor images `Hom(X, M)` with `g·φ = φ∘g`, and the
//! indecomposable projective at summand `b` is `Hom(X, X_b)`, spanned by
//! the basis maps with target `X_b`.

mod checks;
mod modules;
mod resolve;

use std::collections::HashMap;

use serde::Serialize;

pub use checks::{
    drop_check, lemma_br_check, mueller_domdim, projdim_key_check, xt_dimension_check, BrCheck, DropCheck,
    XtRow,
};
pub use modules::{hom_module, AlgebraModule};
pub use resolve::{
    gldim_over, module_endomorphisms, pd_over, projective_cover, radical_and_simples, resolution_dims,
    CappedDim, ProjectiveCover, Radical, DEFAULT_CAP,
};

use crate::algebra::AdmissibleSequence;
use crate::hom_ext::{compose, hom_basis, HomMap};
use crate::module::{ModuleSum, Uniserial};
use crate::{Error, Result};

/// A basis map `X_source -> X_target` of image length `k`, with summands
/// referred to by position in `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisLabel {
    pub source: usize,
    pub target: usize,
    pub k: usize,
}

/// A finite-dimensional algebra given by a basis, orthogonal idempotents
/// summing to 1, and a multiplication table whose structure constants
/// are all 0 or 1 (`table[i][j] = Some(t)` means `b_i b_j = b_t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantAlgebra {
    summands: Vec<Uniserial>,
    basis: Vec<BasisLabel>,
    idempotents: Vec<usize>,
    table: Vec<Vec<Option<usize>>>,
}

impl StructureConstantAlgebra {
    /// Builds and validates an algebra from raw data. `idempotents[a]` is
    /// the basis index of the identity of summand `a`.
    pub fn from_parts(
        summands: Vec<Uniserial>,
        basis: Vec<BasisLabel>,
        idempotents: Vec<usize>,
        table: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let a = StructureConstantAlgebra { summands, basis, idempotents, table };
        a.validate()?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn summands(&self) -> &[Uniserial] {
        &self.summands
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.idempotents.contains(&i)
    }

    /// Basis indices spanning the projective `A·e_b`.
    pub fn projective_basis(&self, b: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target == b).collect()
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let bad = |msg: String| Err(Error::Structure(msg));
        if self.table.len() != d || self.table.iter().any(|r| r.len() != d) {
            return bad(format!("table is not {d}x{d}"));
        }
        if self.table.iter().flatten().flatten().any(|&t| t >= d) {
            return bad("table entry out of range".into());
        }
        for (a, &ea) in self.idempotents.iter().enumerate() {
            for (b, &eb) in self.idempotents.iter().enumerate() {
                let expect = (a == b).then_some(ea);
                if self.table[ea][eb] != expect {
                    return bad(format!("idempotents {a} and {b} are not orthogonal"));
                }
            }
        }
        // The idempotents sum to 1: each basis element is fixed by exactly
        // one of them on each side and killed by the rest.
        for x in 0..d {
            let left = self.idempotents.iter().filter(|&&e| self.table[e][x] == Some(x)).count();
            let right = self.idempotents.iter().filter(|&&e| self.table[x][e] == Some(x)).count();
            let left_zero = self.idempotents.iter().filter(|&&e| self.table[e][x].is_none()).count();
            let right_zero = self.idempotents.iter().filter(|&&e| self.table[x][e].is_none()).count();
            let m = self.idempotents.len();
            if left != 1 || right != 1 || left_zero != m - 1 || right_zero != m - 1 {
                return bad(format!("idempotents do not sum to the unit on basis element {x}"));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.table[i][j];
                for k in 0..d {
                    let lhs = ij.and_then(|t| self.table[t][k]);
                    let rhs = self.table[j][k].and_then(|t| self.table[i][t]);
                    if lhs != rhs {
                        return bad(format!("associativity fails on ({i}, {j}, {k})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let table: Vec<(usize, usize, usize, i64)> = self
            .table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter_map(move |(j, t)| t.map(|t| (i, j, t, 1))))
            .collect();
        let basis: Vec<(usize, usize, usize)> = self.basis.iter().map(|b| (b.source, b.target, b.k)).collect();
        serde_json::json!({
            "dim": self.dim(),
            "idempotents": self.idempotents,
            "basis": basis,
            "table": table,
        })
    }
}

/// `End(X)^op` on the canonical Hom bases of the summands of a basic `X`.
pub fn end_algebra(alg: &AdmissibleSequence, x: &ModuleSum) -> Result<StructureConstantAlgebra> {
    if x.is_zero() {
        return Err(Error::Precondition("endomorphism algebra of the zero module".into()));
    }
    x.ensure_basic()?;
    for &u in x {
        alg.check(u)?;
    }
    let summands: Vec<Uniserial> = x.iter().copied().collect();
    let mut basis = Vec::new();
    let mut maps = Vec::new();
    let mut index = HashMap::new();
    for (a, &xa) in summands.iter().enumerate() {
        for (b, &xb) in summands.iter().enumerate() {
            for f in hom_basis(alg, xa, xb) {
                index.insert((a, b, f.k), basis.len());
                basis.push(BasisLabel { source: a, target: b, k: f.k });
                maps.push(f);
            }
        }
    }
    let idempotents: Vec<usize> = summands
        .iter()
        .enumerate()
        .map(|(a, &u)| index[&(a, a, u.len)])
        .collect();
    let d = basis.len();
    let mut table = vec![vec![None; d]; d];
    for i in 0..d {
        for j in 0..d {
            if basis[i].target != basis[j].source {
                continue;
            }
            // b_i · b_j = b_j ∘ b_i
            let composite: Option<HomMap> = compose(maps[i], maps[j])?;
            table[i][j] = composite.map(|h| {
                *index
                    .get(&(basis[i].source, basis[j].target, h.k))
                    .expect("composites of canonical maps are canonical")
            });
        }
    }
    StructureConstantAlgebra::from_parts(summands, basis, idempotents, table)
}
