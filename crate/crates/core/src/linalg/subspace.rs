use super::{image_basis, kernel_basis, rank, zero_vec, LinalgError, Matrix, Rational};

/// A linear subspace of `Q^n` given by an independent spanning list.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

impl Subspace {
    /// Checked constructor: every vector has the ambient length and the list is independent.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        if let Some(v) = basis.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
        let s = Subspace { ambient_dim, basis };
        if rank(&s.to_matrix()) != s.basis.len() {
            return Err(LinalgError::Singular);
        }
        Ok(s)
    }

    pub(crate) fn from_independent_unchecked(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary vectors; keeps the first independent subset, in order.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        image_basis(&Matrix::from_columns(ambient_dim, vectors))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| super::unit_vec(ambient_dim, i)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        self.basis
    }

    /// The basis vectors as matrix columns (`ambient_dim × dim`).
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        if v.iter().all(Rational::is_zero) {
            return true;
        }
        let mut cols = self.basis.clone();
        cols.push(v.to_vec());
        rank(&Matrix::from_columns(self.ambient_dim, &cols)) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if other.dim() == 0 {
            return true;
        }
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        rank(&Matrix::from_columns(self.ambient_dim, &cols)) == self.dim()
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &cols)
    }

    /// `self ∩ other`, via the kernel of `[A | -B]`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let a = self.to_matrix();
        let b = other.to_matrix();
        let k = kernel_basis(&a.hstack(&b.neg()));
        let vectors: Vec<Vec<Rational>> = k.basis().iter().map(|c| a.mul_vec(&c[..self.dim()])).collect();
        Subspace::span(self.ambient_dim, &vectors)
    }

    /// Image of the subspace under a linear map (columns of `m` index the ambient space).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.ncols(), self.ambient_dim);
        let vectors: Vec<Vec<Rational>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.nrows(), &vectors)
    }

    /// Whether every basis pair of `self` and `other` is Gram-orthogonal.
    pub fn is_orthogonal_to(&self, other: &Subspace, gram: &Matrix) -> bool {
        let gv: Vec<Vec<Rational>> = other.basis.iter().map(|v| gram.mul_vec(v)).collect();
        self.basis.iter().all(|u| gv.iter().all(|w| super::dot(u, w).is_zero()))
    }

    /// Coordinate-orthogonal complement `{x : bᵀx = 0 for all basis b}`.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient_dim);
        }
        kernel_basis(&self.to_matrix().transpose())
    }

    pub fn zero_vector(&self) -> Vec<Rational> {
        zero_vec(self.ambient_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn new_rejects_dependent_lists() {
        let v = vec![qi(1), qi(2)];
        let w = vec![qi(2), qi(4)];
        assert!(Subspace::new(2, vec![v.clone(), w]).is_err());
        assert!(Subspace::new(3, vec![v]).is_err());
    }

    #[test]
    fn intersection_of_planes_is_a_line() {
        let a = Subspace::new(3, vec![vec![qi(1), qi(0), qi(0)], vec![qi(0), qi(1), qi(0)]]).unwrap();
        let b = Subspace::new(3, vec![vec![qi(0), qi(1), qi(0)], vec![qi(0), qi(0), qi(1)]]).unwrap();
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[qi(0), qi(5), qi(0)]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn complement_dimension() {
        let a = Subspace::new(4, vec![vec![qi(1), qi(1), qi(0), qi(0)]]).unwrap();
        let c = a.orthogonal_complement();
        assert_eq!(c.dim(), 3);
        assert!(a.is_orthogonal_to(&c, &Matrix::identity(4)));
    }
}
