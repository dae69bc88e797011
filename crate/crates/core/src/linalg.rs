//! Exact linear algebra over the rationals.
//!
//! Integer matrices get their rank from fraction-free elimination with
//! row-content reduction; subspace work (kernels, coordinates, spans) uses
//! reduced row echelon form over `Ratio<i128>`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i128>;

/// Rank of an integer matrix by fraction-free elimination. Rows are
/// divided by their content after every step so entries stay small.
pub fn rank_fraction_free(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|x| *x != 0))
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len())
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col];
        for row in tail.iter_mut() {
            let x = row[col];
            if x == 0 {
                continue;
            }
            let g = pivot.gcd(&x);
            let (a, b) = (pivot / g, x / g);
            for (dst, src) in row.iter_mut().zip(pivot_row) {
                *dst = dst
                    .checked_mul(a)
                    .and_then(|v| v.checked_sub(src.checked_mul(b)?))
                    .expect("fraction-free elimination overflowed i128");
            }
            let content = row.iter().fold(0i128, |acc, v| acc.gcd(v));
            if content > 1 {
                row.iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
    }
    rank
}

/// A dense rational matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<Q> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols);
        Matrix { rows: r, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Q>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Q>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref(&mut rows, self.cols).len()
    }

    /// Kernel basis in the standard form: vector `t` has a 1 in free
    /// column `free[t]` and 0 in every other free column.
    pub fn kernel(&self) -> Kernel {
        let mut rows: Vec<Vec<Q>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rows[r][f];
                }
                v
            })
            .collect();
        Kernel { basis, free }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;

    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// A kernel basis whose restriction to the `free` coordinates is the
/// identity, so coordinates of a kernel vector are read off directly.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub basis: Vec<Vec<Q>>,
    pub free: Vec<usize>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` (assumed to lie in the kernel) in `basis`.
    pub fn coordinates(&self, v: &[Q]) -> Vec<Q> {
        self.free.iter().map(|&f| v[f]).collect()
    }
}

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in
/// place, drops zero rows and returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        rows[r].iter_mut().for_each(|x| *x *= inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// An incrementally grown subspace kept in reduced echelon form.
#[derive(Debug, Clone, Default)]
pub struct Span {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let f = w[*p];
            if f.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        w.iter_mut().for_each(|x| *x *= inv);
        for (_, row) in self.rows.iter_mut() {
            let f = row[p];
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= f * y;
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i128) -> Q {
        Q::from_integer(x)
    }

    #[test]
    fn fraction_free_rank() {
        assert_eq!(rank_fraction_free(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_fraction_free(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_fraction_free(&[vec![2, 3, 5], vec![7, 11, 13], vec![9, 14, 18]]), 2);
        assert_eq!(rank_fraction_free(&[]), 0);
    }

    #[test]
    fn kernel_has_identity_on_free_columns() {
        let m = Matrix::from_rows(vec![vec![q(1), q(1), q(0)], vec![q(0), q(0), q(1)]], 3);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.free, vec![1]);
        assert_eq!(k.basis[0], vec![q(-1), q(1), q(0)]);
        assert!(m.apply(&k.basis[0]).iter().all(Zero::is_zero));
        assert_eq!(k.coordinates(&[q(-3), q(3), q(0)]), vec![q(3)]);
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new();
        assert!(s.insert(&[q(1), q(2), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert!(!s.insert(&[q(1), q(3), q(1)]));
        assert!(s.contains(&[q(2), q(5), q(1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn product_and_trace() {
        let a = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]], 2);
        let i = Matrix::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(a.trace(), q(5));
        assert_eq!(a.rank(), 2);
    }
}
