use std::collections::HashMap;

use num_traits::{One, Zero};

use super::StructureConstantAlgebra;
use crate::algebra::AdmissibleSequence;
use crate::hom_ext::{compose, hom_basis, HomMap};
use crate::linalg::{Matrix, Q};
use crate::module::ModuleSum;
use crate::{Error, Result};

/// A finite-dimensional left module: one square action matrix per basis
/// element of the algebra, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraModule {
    dim: usize,
    action: Vec<Matrix>,
}

impl AlgebraModule {
    /// Wraps action matrices without validation.
    pub(crate) fn from_action_unchecked(dim: usize, action: Vec<Matrix>) -> Self {
        AlgebraModule { dim, action }
    }

    /// Builds a module and checks it against the multiplication table.
    pub fn new(a: &StructureConstantAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = AlgebraModule { dim, action };
        m.validate(a)?;
        Ok(m)
    }

    pub fn zero(a: &StructureConstantAlgebra) -> Self {
        AlgebraModule { dim: 0, action: vec![Matrix::zeros(0, 0); a.dim()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }

    /// `ρ(x)ρ(y) = ρ(xy)` for all basis pairs and `Σ ρ(e_a) = 1`.
    pub fn validate(&self, a: &StructureConstantAlgebra) -> Result<()> {
        let bad = |msg: String| Err(Error::Structure(msg));
        if self.action.len() != a.dim() {
            return bad(format!("{} action matrices for a {}-dimensional algebra", self.action.len(), a.dim()));
        }
        if self.action.iter().any(|m| m.rows() != self.dim || m.cols() != self.dim) {
            return bad("action matrix has the wrong size".into());
        }
        let unit = a
            .idempotents()
            .iter()
            .fold(Matrix::zeros(self.dim, self.dim), |acc, &e| acc.add(&self.action[e]));
        if unit != Matrix::identity(self.dim) {
            return bad("idempotents do not act as a unit".into());
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let lhs = self.action[x].mul(&self.action[y]);
                let ok = match a.product(x, y) {
                    Some(t) => lhs == self.action[t],
                    None => lhs.is_zero(),
                };
                if !ok {
                    return bad(format!("action does not respect the product of basis elements {x} and {y}"));
                }
            }
        }
        Ok(())
    }

    /// The regular left module `A`, acting by `L_x(h) = x·h`.
    pub fn regular(a: &StructureConstantAlgebra) -> Self {
        Self::on_basis_subset(a, &(0..a.dim()).collect::<Vec<_>>())
    }

    /// The indecomposable projective `A·e_b`.
    pub fn projective(a: &StructureConstantAlgebra, b: usize) -> Self {
        Self::on_basis_subset(a, &a.projective_basis(b))
    }

    /// Left multiplication restricted to a left ideal spanned by basis
    /// elements.
    fn on_basis_subset(a: &StructureConstantAlgebra, subset: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = subset.iter().enumerate().map(|(p, &h)| (h, p)).collect();
        let d = subset.len();
        let action = (0..a.dim())
            .map(|x| {
                let mut m = Matrix::zeros(d, d);
                for (col, &h) in subset.iter().enumerate() {
                    if let Some(t) = a.product(x, h) {
                        let row = *pos.get(&t).expect("subset is a left ideal");
                        m[(row, col)] = Q::one();
                    }
                }
                m
            })
            .collect();
        AlgebraModule { dim: d, action }
    }

    /// The simple top of `A·e_b`: one dimension on which only `e_b` acts.
    pub fn simple(a: &StructureConstantAlgebra, b: usize) -> Self {
        let e = a.idempotents()[b];
        let action = (0..a.dim())
            .map(|x| {
                let mut m = Matrix::zeros(1, 1);
                if x == e {
                    m[(0, 0)] = Q::one();
                }
                m
            })
            .collect();
        AlgebraModule { dim: 1, action }
    }

    /// Basis coordinates fixed by `ρ(e_a)`, when every idempotent acts as
    /// a coordinate projection.
    pub(crate) fn idempotent_blocks(&self, a: &StructureConstantAlgebra) -> Option<Vec<Vec<usize>>> {
        let mut blocks = Vec::new();
        for &e in a.idempotents() {
            let m = &self.action[e];
            let mut block = Vec::new();
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let x = m[(i, j)];
                    if i != j && !x.is_zero() {
                        return None;
                    }
                    if i == j {
                        if x.is_one() {
                            block.push(i);
                        } else if !x.is_zero() {
                            return None;
                        }
                    }
                }
            }
            blocks.push(block);
        }
        Some(blocks)
    }
}

/// `Hom(X, M)` as a left `End(X)^op`-module, on the canonical bases of the
/// `Hom(X_a, M_m)`. The basis map `g: X_a -> X_b` sends `φ ∈ Hom(X_b, M_m)`
/// to `φ∘g`.
pub fn hom_module(
    alg: &AdmissibleSequence,
    a: &StructureConstantAlgebra,
    m: &ModuleSum,
) -> Result<AlgebraModule> {
    for &u in m {
        alg.check(u)?;
    }
    let mut basis: Vec<(usize, usize, HomMap)> = Vec::new();
    for (s, &xs) in a.summands().iter().enumerate() {
        for (t, &mt) in m.iter().enumerate() {
            for f in hom_basis(alg, xs, mt) {
                basis.push((s, t, f));
            }
        }
    }
    let index: HashMap<(usize, usize, usize), usize> =
        basis.iter().enumerate().map(|(p, &(s, t, f))| ((s, t, f.k), p)).collect();
    let d = basis.len();
    let summands = a.summands();
    let action = a
        .basis()
        .iter()
        .map(|g| {
            let gmap = HomMap { source: summands[g.source], target: summands[g.target], k: g.k };
            let mut mat = Matrix::zeros(d, d);
            for (col, &(s, t, phi)) in basis.iter().enumerate() {
                if s != g.target {
                    continue;
                }
                if let Some(h) = compose(gmap, phi).expect("composable by construction") {
                    mat[(index[&(g.source, t, h.k)], col)] = Q::one();
                }
            }
            mat
        })
        .collect();
    let module = AlgebraModule { dim: d, action };
    debug_assert!(module.validate(a).is_ok());
    Ok(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::end_algebra;

    #[test]
    fn hom_into_summand_is_projective() {
        let alg = AdmissibleSequence::cyclic(&[3, 2, 3, 4, 3]).unwrap();
        let tc = crate::tilting::build_tc(&alg).unwrap();
        let b = end_algebra(&alg, &tc).unwrap();
        for (idx, &t) in tc.iter().enumerate() {
            let h = hom_module(&alg, &b, &ModuleSum::new([t])).unwrap();
            let p = AlgebraModule::projective(&b, idx);
            assert_eq!(h.dim(), p.dim());
            assert_eq!(h, p, "Hom(T, {t}) differs from the projective column");
        }
    }

    #[test]
    fn regular_and_simple_modules_validate() {
        let alg = AdmissibleSequence::cyclic(&[2, 2, 3]).unwrap();
        let tc = crate::tilting::build_tc(&alg).unwrap();
        let b = end_algebra(&alg, &tc).unwrap();
        AlgebraModule::regular(&b).validate(&b).unwrap();
        for i in 0..tc.len() {
            AlgebraModule::simple(&b, i).validate(&b).unwrap();
            AlgebraModule::projective(&b, i).validate(&b).unwrap();
        }
        assert_eq!(hom_module(&alg, &b, &ModuleSum::zero()).unwrap().dim(), 0);
    }

    #[test]
    fn broken_action_is_rejected() {
        let alg = AdmissibleSequence::linear(&[1, 2]).unwrap();
        let x = ModuleSum::new([alg.simple(1), alg.projective(2), alg.simple(2)]);
        let b = end_algebra(&alg, &x).unwrap();
        let mut action: Vec<Matrix> = (0..b.dim()).map(|i| AlgebraModule::regular(&b).action(i).clone()).collect();
        let f = (0..b.dim()).find(|&i| !b.is_idempotent(i)).unwrap();
        action[f] = Matrix::identity(b.dim());
        assert!(AlgebraModule::new(&b, b.dim(), action).is_err());
    }
}
