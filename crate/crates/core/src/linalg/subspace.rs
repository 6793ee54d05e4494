use crate::scalar::Scalar;

use super::matrix::{axpy, is_zero_vec, Matrix};
use super::LinalgError;

/// A linear subspace of `F^n` stored by its reduced row-echelon basis.
///
/// The representation is canonical: two subspaces are equal exactly when
/// their basis matrices are equal, so `==` is subspace equality.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: std::fmt::Debug> std::fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.pivots.len(), self.ambient_dim, self.basis)
    }
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let rows: Vec<Vec<F>> = (0..k).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows).expect("rows of equal length"),
            pivots,
        }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[F]>>(ambient_dim: usize, vectors: &[V]) -> Self {
        let rows: Vec<Vec<F>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.as_ref().len(), ambient_dim, "vector length != ambient dimension");
                v.as_ref().to_vec()
            })
            .collect();
        Self::row_space(&Matrix::from_rows(ambient_dim, &rows).expect("checked lengths"))
    }

    pub fn standard_vector(ambient_dim: usize, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); ambient_dim];
        v[i] = F::one();
        v
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<F>> =
            indices.iter().map(|&i| Self::standard_vector(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots of the echelon basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|j| !self.pivots.contains(j)).collect()
    }

    /// Subtracts from `v` the unique combination of basis rows that clears
    /// every pivot coordinate. The result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                axpy(&mut out, &c, self.basis.row(row));
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient_dim && is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is not in the
    /// subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient_dim];
        for (row, c) in coords.iter().enumerate() {
            axpy(&mut out, c, self.basis.row(row));
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `U ∩ V` as the kernel of the stacked annihilator equations of both.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>, LinalgError> {
        self.check_ambient(other)?;
        let u_perp = kernel(&self.basis);
        let v_perp = kernel(&other.basis);
        let stacked = u_perp.basis.vstack(&v_perp.basis)?;
        Ok(kernel(&stacked))
    }

    /// A complement `W` of `self` inside `within`: `self ⊕ W = within`.
    ///
    /// `W` is spanned by the reductions of `within`'s basis modulo `self`,
    /// which vanish on the pivot coordinates of `self`. When `within` is the
    /// whole space this is the span of the non-pivot standard vectors.
    pub fn complement_in(&self, within: &Subspace<F>) -> Result<Subspace<F>, LinalgError> {
        self.check_ambient(within)?;
        if !self.is_subspace_of(within) {
            return Err(LinalgError::NotContained);
        }
        let reduced: Vec<Vec<F>> =
            within.basis_vectors().iter().map(|v| self.reduce(v)).collect();
        Ok(Self::span(self.ambient_dim, &reduced))
    }

    /// Image of the subspace under the linear map `x ↦ m·x`.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Subspace<F>, LinalgError> {
        let vs: Result<Vec<Vec<F>>, _> =
            self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Ok(Self::span(m.rows(), &vs?))
    }
}

/// Null space `{x : a·x = 0}` in canonical form.
pub fn kernel<F: Scalar>(a: &Matrix<F>) -> Subspace<F> {
    let n = a.cols();
    let (r, pivots) = a.rref_with_pivots();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let vectors: Vec<Vec<F>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}
