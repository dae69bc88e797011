//! Matrix-representation oracle for `Hom` and `Ext^1`.
//!
//! Modules become quiver representations (one vector space per vertex,
//! one matrix per arrow). `Hom(U, V)` is the solution space of the
//! intertwiner equations `B_a f_s = f_t A_a`; `Ext^1(U, V)` is the
//! cokernel of `Hom(P, V) -> Hom(K, V)` for the projective presentation
//! `0 -> K -> P -> U -> 0`, with `K` computed as an honest kernel of
//! representations. Nothing here uses the combinatorial formulas of the
//! parent module.

use num_traits::{One, Zero};

use super::hom::HomMap;
use crate::algebra::AdmissibleSequence;
use crate::linalg::{rank_fraction_free, Matrix, Span, Q};
use crate::module::Uniserial;

/// A representation of the Nakayama quiver. Vertex `v` is stored at
/// index `v - 1`.
#[derive(Debug, Clone)]
pub struct Representation {
    pub dims: Vec<usize>,
    /// `(source, target, matrix)` with the matrix of shape
    /// `dims[target] x dims[source]`.
    pub arrows: Vec<(usize, usize, Matrix)>,
}

/// Arrows `v -> v-1` of the quiver, as 0-based `(source, target)`.
pub fn quiver_arrows(alg: &AdmissibleSequence) -> Vec<(usize, usize)> {
    alg.vertices()
        .filter_map(|v| alg.wrap(v as i64 - 1).map(|t| (v - 1, t - 1)))
        .collect()
}

/// Layout of the standard basis `e_0, ..., e_{l-1}` of `M(top, l)`:
/// `e_k` sits at vertex `top - k` with a local index inside that vertex.
fn layout(alg: &AdmissibleSequence, u: Uniserial) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut dims = vec![0; alg.n()];
    let mut pos = Vec::with_capacity(u.len);
    for k in 0..u.len {
        let v = alg.vertex(u.top as i64 - k as i64) - 1;
        pos.push((v, dims[v]));
        dims[v] += 1;
    }
    (dims, pos)
}

pub fn uniserial_rep(alg: &AdmissibleSequence, u: Uniserial) -> Representation {
    let (dims, pos) = layout(alg, u);
    let arrows = quiver_arrows(alg)
        .into_iter()
        .map(|(s, t)| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            for k in 0..u.len.saturating_sub(1) {
                let (vk, ik) = pos[k];
                if vk == s {
                    let (vn, jn) = pos[k + 1];
                    debug_assert_eq!(vn, t);
                    m[(jn, ik)] = Q::one();
                }
            }
            (s, t, m)
        })
        .collect();
    Representation { dims, arrows }
}

/// Checks the defining relations: every path of length `c_v` starting at
/// `v` acts as zero.
pub fn satisfies_relations(alg: &AdmissibleSequence, rep: &Representation) -> bool {
    let arrow_from = |v: usize| rep.arrows.iter().find(|(s, _, _)| *s == v);
    alg.vertices().all(|v| {
        let mut cur = v - 1;
        let mut acc = Matrix::identity(rep.dims[cur]);
        for _ in 0..alg.c(v) {
            match arrow_from(cur) {
                Some((_, t, m)) => {
                    acc = m.mul(&acc);
                    cur = *t;
                }
                None => return true,
            }
        }
        acc.is_zero()
    })
}

/// Offsets of the per-vertex blocks `f_v` (`dims_v[v] x dims_u[v]`,
/// row-major) in the flattened unknown vector.
fn hom_layout(u: &Representation, v: &Representation) -> (Vec<usize>, usize) {
    let mut offsets = Vec::with_capacity(u.dims.len());
    let mut total = 0;
    for (du, dv) in u.dims.iter().zip(&v.dims) {
        offsets.push(total);
        total += du * dv;
    }
    (offsets, total)
}

/// The intertwiner equations as integer rows.
fn hom_equations(u: &Representation, v: &Representation) -> (Vec<Vec<i64>>, usize) {
    let (off, total) = hom_layout(u, v);
    let mut rows = Vec::new();
    for ((s, t, a), (_, _, b)) in u.arrows.iter().zip(&v.arrows) {
        let (s, t) = (*s, *t);
        // (B f_s - f_t A)[i][j] = 0 for i < dv[t], j < du[s]
        for i in 0..v.dims[t] {
            for j in 0..u.dims[s] {
                let mut row = vec![0i64; total];
                for k in 0..v.dims[s] {
                    let coef = b[(i, k)];
                    if !coef.is_zero() {
                        row[off[s] + k * u.dims[s] + j] += to_int(coef);
                    }
                }
                for k in 0..u.dims[t] {
                    let coef = a[(k, j)];
                    if !coef.is_zero() {
                        row[off[t] + i * u.dims[t] + k] -= to_int(coef);
                    }
                }
                if row.iter().any(|x| *x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    (rows, total)
}

fn to_int(q: Q) -> i64 {
    assert!(q.is_integer(), "oracle matrices must be integral");
    i64::try_from(q.to_integer()).expect("entry fits in i64")
}

pub fn rep_hom_dim(u: &Representation, v: &Representation) -> usize {
    let (rows, total) = hom_equations(u, v);
    total - rank_fraction_free(&rows)
}

/// A basis of `Hom(U, V)` as flattened unknown vectors.
fn rep_hom_basis(u: &Representation, v: &Representation) -> Vec<Vec<Q>> {
    let (rows, total) = hom_equations(u, v);
    let rows: Vec<Vec<Q>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| Q::from_integer(x as i128)).collect())
        .collect();
    Matrix::from_rows(rows, total).kernel().basis
}

/// The kernel of a morphism `f: U -> V` given per vertex, together with
/// the inclusion into `U`.
fn rep_kernel(u: &Representation, f: &[Matrix]) -> (Representation, Vec<Matrix>) {
    let kernels: Vec<_> = f.iter().map(Matrix::kernel).collect();
    let dims: Vec<usize> = kernels.iter().map(|k| k.dim()).collect();
    let incl: Vec<Matrix> = kernels
        .iter()
        .zip(&u.dims)
        .map(|(k, &d)| Matrix::from_columns(&k.basis, d))
        .collect();
    let arrows = u
        .arrows
        .iter()
        .map(|(s, t, a)| {
            let mut m = Matrix::zeros(dims[*t], dims[*s]);
            for (j, col) in kernels[*s].basis.iter().enumerate() {
                let image = a.apply(col);
                for (i, x) in kernels[*t].coordinates(&image).into_iter().enumerate() {
                    m[(i, j)] = x;
                }
            }
            (*s, *t, m)
        })
        .collect();
    (Representation { dims, arrows }, incl)
}

/// Per-vertex matrices of the canonical map `f`.
pub fn hom_map_matrices(alg: &AdmissibleSequence, f: HomMap) -> Vec<Matrix> {
    let (du, pu) = layout(alg, f.source);
    let (dv, pv) = layout(alg, f.target);
    let mut mats: Vec<Matrix> = du.iter().zip(&dv).map(|(&a, &b)| Matrix::zeros(b, a)).collect();
    for j in 0..f.k {
        let (vs, is) = pu[j];
        let (vt, it) = pv[f.target.len - f.k + j];
        assert_eq!(vs, vt, "canonical map does not respect vertices");
        mats[vs][(it, is)] = Q::one();
    }
    mats
}

/// True iff the per-vertex matrices intertwine the two representations.
pub fn is_morphism(u: &Representation, v: &Representation, f: &[Matrix]) -> bool {
    u.arrows.iter().zip(&v.arrows).all(|((s, t, a), (_, _, b))| b.mul(&f[*s]) == f[*t].mul(a))
}

pub fn oracle_hom_dim(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial) -> usize {
    rep_hom_dim(&uniserial_rep(alg, u), &uniserial_rep(alg, v))
}

pub fn oracle_ext1_dim(alg: &AdmissibleSequence, u: Uniserial, v: Uniserial) -> usize {
    let p = alg.projective(u.top);
    let (rp, ru, rv) = (uniserial_rep(alg, p), uniserial_rep(alg, u), uniserial_rep(alg, v));
    // The cover P -> U sends e_k to e_k.
    let (dp, pp) = layout(alg, p);
    let (du, pu) = layout(alg, u);
    let mut cover: Vec<Matrix> = dp.iter().zip(&du).map(|(&a, &b)| Matrix::zeros(b, a)).collect();
    for k in 0..u.len {
        let (vp, ip) = pp[k];
        let (vu, iu) = pu[k];
        debug_assert_eq!(vp, vu);
        cover[vp][(iu, ip)] = Q::one();
    }
    debug_assert!(is_morphism(&rp, &ru, &cover));

    let (k, incl) = rep_kernel(&rp, &cover);
    if k.dims.iter().all(|&d| d == 0) {
        return 0;
    }
    let hom_kv = rep_hom_dim(&k, &rv);
    let (off_p, _) = hom_layout(&rp, &rv);
    let (_, total_k) = hom_layout(&k, &rv);
    let mut image = Span::new();
    for phi in rep_hom_basis(&rp, &rv) {
        let mut restricted = Vec::with_capacity(total_k);
        for x in 0..rp.dims.len() {
            let block = Matrix::from_rows(
                (0..rv.dims[x])
                    .map(|i| phi[off_p[x] + i * rp.dims[x]..off_p[x] + (i + 1) * rp.dims[x]].to_vec())
                    .collect(),
                rp.dims[x],
            );
            let r = block.mul(&incl[x]);
            for i in 0..r.rows() {
                restricted.extend_from_slice(r.row(i));
            }
        }
        image.insert(&restricted);
    }
    hom_kv - image.dim()
}
