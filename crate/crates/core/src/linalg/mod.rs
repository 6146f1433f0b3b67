//! Exact linear algebra over the rationals.
//!
//! Every kernel, image, rank, adjoint and orthogonal projection in the crate goes through
//! this module. Matrices are stored sparsely; elimination runs on sparse rows, so the
//! very sparse differential matrices never get densified.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{dot, gram_inner, is_zero_vec, unit_vec, vec_add, vec_scale, vec_sub, zero_vec, Matrix, SparseRow};
pub use rational::{q, qi, ParseRationalError, Rational};
pub use subspace::Subspace;

use matrix::axpy_row;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row echelon form; same shape as the input, zero rows last.
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form of `m`.
pub fn rref(m: &Matrix) -> Rref {
    let ncols = m.ncols();
    let nrows = m.nrows();
    let mut remaining: Vec<SparseRow> = m.clone().into_rows();
    remaining.retain(|r| !r.is_empty());
    let mut pivot_rows: Vec<SparseRow> = Vec::new();
    let mut pivots = Vec::new();

    // Invariant: every row in `remaining` is zero on all processed columns.
    for col in 0..ncols {
        let candidate = remaining
            .iter()
            .enumerate()
            .filter(|(_, r)| r.first().map(|e| e.0) == Some(col))
            .min_by_key(|(idx, r)| (r.len(), *idx))
            .map(|(idx, _)| idx);
        let Some(idx) = candidate else { continue };
        let mut prow = remaining.swap_remove(idx);
        let inv = prow[0].1.recip().expect("nonzero pivot");
        for (_, v) in prow.iter_mut() {
            *v *= &inv;
        }
        for r in remaining.iter_mut().chain(pivot_rows.iter_mut()) {
            if let Ok(pos) = r.binary_search_by_key(&col, |e| e.0) {
                let factor = -r[pos].1.clone();
                *r = axpy_row(r, &factor, &prow);
            }
        }
        remaining.retain(|r| !r.is_empty());
        pivot_rows.push(prow);
        pivots.push(col);
    }
    let rank = pivots.len();
    let mut rows = pivot_rows;
    rows.resize(nrows, Vec::new());
    Rref { matrix: Matrix::from_sparse_rows(ncols, rows), pivots, rank }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Basis of `{v : m v = 0}`, one vector per free column, in column order.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let ncols = m.ncols();
    let r = rref(m);
    let mut is_pivot = vec![false; ncols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let basis = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vec(ncols);
            v[f] = Rational::one();
            for (row, &p) in r.pivots.iter().enumerate() {
                let e = r.matrix.get(row, f);
                if !e.is_zero() {
                    v[p] = -e;
                }
            }
            v
        })
        .collect();
    Subspace::from_independent_unchecked(ncols, basis)
}

/// Column space of `m`, spanned by the pivot columns of the original matrix.
pub fn image_basis(m: &Matrix) -> Subspace {
    let r = rref(m);
    let cols = r.pivots.iter().map(|&p| m.column(p)).collect();
    Subspace::from_independent_unchecked(m.nrows(), cols)
}

/// One exact solution of `m x = rhs` (pivot variables solved, free variables zero),
/// or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(rhs.len(), m.nrows(), "rhs length must equal row count");
    let aug = m.hstack(&Matrix::from_columns(m.nrows(), &[rhs.to_vec()]));
    let r = rref(&aug);
    if r.pivots.last() == Some(&m.ncols()) {
        return None;
    }
    let mut x = zero_vec(m.ncols());
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix.get(row, m.ncols());
    }
    Some(x)
}

/// Exact inverse. Block-diagonal inputs stay cheap because elimination is sparse.
pub fn inverse(m: &Matrix) -> Result<Matrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    let n = m.nrows();
    let r = rref(&m.hstack(&Matrix::identity(n)));
    if r.rank < n || r.pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
        return Err(LinalgError::Singular);
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (n..2 * n).collect();
    Ok(r.matrix.select(&rows, &cols))
}

/// Decides positive definiteness by exact symmetric (LDLᵀ) elimination.
pub fn is_positive_definite(g: &Matrix) -> Result<bool, LinalgError> {
    if !g.is_symmetric() {
        return Err(LinalgError::NonSymmetric);
    }
    Ok(ldl_pivots(g).is_some())
}

/// Diagonal of D in g = L D Lᵀ, or `None` as soon as a pivot is not strictly positive.
fn ldl_pivots(g: &Matrix) -> Option<Vec<Rational>> {
    let n = g.nrows();
    let mut a = g.to_dense();
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        if !pivot.is_positive() {
            return None;
        }
        let inv = pivot.recip().expect("positive pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] * &inv;
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
        d.push(pivot);
    }
    Some(d)
}

/// Validates a Gram matrix: symmetric and positive definite.
pub fn validate_gram(gram: &Matrix) -> Result<(), LinalgError> {
    if is_positive_definite(gram)? {
        Ok(())
    } else {
        Err(LinalgError::NotPositiveDefinite)
    }
}

/// Gram-orthogonal projection of `v` onto `s` via the normal equations.
pub fn orthogonal_projection(v: &[Rational], s: &Subspace, gram: &Matrix) -> Result<Vec<Rational>, LinalgError> {
    validate_gram(gram)?;
    if v.len() != s.ambient_dim() || gram.nrows() != s.ambient_dim() {
        return Err(LinalgError::DimensionMismatch { expected: s.ambient_dim(), found: v.len() });
    }
    Ok(projection_matrix_unchecked(s, gram).mul_vec(v))
}

/// Matrix of the Gram-orthogonal projector onto `s`: `B (Bᵀ G B)⁻¹ Bᵀ G`.
pub fn projection_matrix(s: &Subspace, gram: &Matrix) -> Result<Matrix, LinalgError> {
    validate_gram(gram)?;
    Ok(projection_matrix_unchecked(s, gram))
}

/// As [`projection_matrix`] for a Gram already known to be positive definite.
pub fn projection_matrix_unchecked(s: &Subspace, gram: &Matrix) -> Matrix {
    let n = s.ambient_dim();
    if s.dim() == 0 {
        return Matrix::zeros(n, n);
    }
    let b = s.to_matrix();
    let bt_g = b.transpose().mul(gram);
    let normal = bt_g.mul(&b);
    let normal_inv = inverse(&normal).expect("Gram restricted to a subspace is invertible");
    b.mul(&normal_inv).mul(&bt_g)
}

/// Metric adjoint of `a: V → W` given Grams on both sides: `G_V⁻¹ aᵀ G_W`.
pub fn metric_adjoint(a: &Matrix, gram_domain: &Matrix, gram_codomain: &Matrix) -> Matrix {
    let inv = inverse(gram_domain).expect("Gram matrices are invertible");
    inv.mul(&a.transpose()).mul(gram_codomain)
}

/// Determinant by rational elimination (used for small pairing determinants).
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        let inv = pivot.recip().expect("nonzero pivot");
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] * &inv;
            for j in k..n {
                if !a[k][j].is_zero() {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_identity_zero_and_rank_one() {
        let id = Matrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Matrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        let r = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_needs_row_reordering() {
        let r = rref(&m(&[&[0, 1, 2], &[3, 0, 3], &[0, 2, 4]]));
        assert_eq!(r.matrix, m(&[&[1, 0, 1], &[0, 1, 2], &[0, 0, 0]]));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        let k = kernel_basis(&Matrix::zeros(2, 3));
        assert_eq!(k.dim(), 3);
        assert!(k.same_span(&Subspace::full(3)));
        let k = kernel_basis(&m(&[&[1, 2]]));
        assert_eq!(k.basis(), &[vec![qi(-2), qi(1)]]);
    }

    #[test]
    fn image_examples() {
        assert!(image_basis(&Matrix::identity(3)).same_span(&Subspace::full(3)));
        assert_eq!(image_basis(&Matrix::zeros(2, 2)).dim(), 0);
        let im = image_basis(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(im.basis(), &[vec![qi(1), qi(2)]]);
    }

    #[test]
    fn solve_examples() {
        let rhs = vec![q(1, 3), qi(-4)];
        assert_eq!(solve(&Matrix::identity(2), &rhs), Some(rhs.clone()));
        assert_eq!(solve(&m(&[&[1, 1]]), &[qi(3)]), Some(vec![qi(3), qi(0)]));
        assert_eq!(solve(&m(&[&[1], &[1]]), &[qi(1), qi(2)]), None);
    }

    #[test]
    fn positive_definite_examples() {
        assert_eq!(is_positive_definite(&Matrix::identity(3)), Ok(true));
        assert_eq!(is_positive_definite(&m(&[&[1, 0], &[0, -1]])), Ok(false));
        assert_eq!(is_positive_definite(&m(&[&[2, 1], &[1, 2]])), Ok(true));
        assert_eq!(is_positive_definite(&m(&[&[0, 0], &[0, 1]])), Ok(false));
        assert_eq!(is_positive_definite(&m(&[&[1, 2], &[0, 1]])), Err(LinalgError::NonSymmetric));
    }

    #[test]
    fn projection_examples() {
        let s = Subspace::new(2, vec![vec![qi(1), qi(1)]]).unwrap();
        let id = Matrix::identity(2);
        assert_eq!(orthogonal_projection(&[qi(1), qi(0)], &s, &id).unwrap(), vec![q(1, 2), q(1, 2)]);
        assert_eq!(orthogonal_projection(&[qi(3), qi(3)], &s, &id).unwrap(), vec![qi(3), qi(3)]);
        assert_eq!(orthogonal_projection(&[qi(1), qi(-1)], &s, &id).unwrap(), vec![qi(0), qi(0)]);
        let bad = m(&[&[1, 0], &[0, -1]]);
        assert_eq!(orthogonal_projection(&[qi(1), qi(0)], &s, &bad), Err(LinalgError::NotPositiveDefinite));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 0], &[0, 0, 5]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(LinalgError::Singular));
    }

    #[test]
    fn determinant_small() {
        let d = m(&[&[0, 2], &[3, 1]]).to_dense();
        assert_eq!(determinant(&d), qi(-6));
    }
}
