use std::ops::Range;

use crate::linalg::{axpy, is_zero_vec, Matrix, Subspace};
use crate::scalar::Scalar;

use super::{AlgebraError, Element, Sidedness};

pub const DEFAULT_LABEL: &str = "K1";

/// A finite-dimensional associative algebra given by structure constants.
///
/// Coordinate `i` carries the label of the base field it is scalared by.
/// Coordinates sharing a label are contiguous, and products of basis
/// elements with different labels vanish. Both conditions and
/// associativity are validated on construction.
#[derive(Clone, PartialEq)]
pub struct Algebra<F> {
    name: String,
    dim: usize,
    labels: Vec<String>,
    /// `constants[i * dim + j]` is `e_i·e_j` in the basis.
    constants: Vec<Vec<F>>,
    basis_names: Option<Vec<String>>,
}

impl<F> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl<F: Scalar> Algebra<F> {
    /// Validating constructor. `constants` holds `dim²` vectors of length
    /// `dim`, row-major in `(i, j)`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Vec<F>>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if constants.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim * dim,
                found: constants.len(),
            });
        }
        if let Some(v) = constants.iter().find(|v| v.len() != dim) {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: v.len() });
        }
        let alg = Algebra { name: name.into(), dim, labels, constants, basis_names: None };
        alg.check_labels()?;
        alg.check_associativity()?;
        Ok(alg)
    }

    /// Builds from sparse triples `(i, j, k, c)`: `e_i·e_j` has coefficient
    /// `c` on `e_k`. Repeated triples add up.
    pub fn from_sparse(
        name: impl Into<String>,
        labels: Vec<String>,
        triples: &[(usize, usize, usize, F)],
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        let mut constants = vec![vec![F::zero(); dim]; dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(AlgebraError::IndexOutOfRange { index: *i.max(j).max(k), dim });
            }
            let slot = &mut constants[i * dim + j][*k];
            *slot = slot.clone() + c.clone();
        }
        Self::new(name, labels, constants)
    }

    /// Single-label convenience for [`Algebra::from_sparse`].
    pub fn from_sparse_unlabeled(
        name: impl Into<String>,
        dim: usize,
        triples: &[(usize, usize, usize, F)],
    ) -> Result<Self, AlgebraError> {
        Self::from_sparse(name, vec![DEFAULT_LABEL.to_string(); dim], triples)
    }

    /// The zero-dimensional algebra.
    pub fn zero_algebra(name: impl Into<String>) -> Self {
        Algebra { name: name.into(), dim: 0, labels: vec![], constants: vec![], basis_names: None }
    }

    /// Skips validation. Callers guarantee the invariants hold, e.g. because
    /// the constants were induced from a validated algebra.
    pub(crate) fn new_unchecked(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Vec<F>>,
    ) -> Self {
        let dim = labels.len();
        debug_assert_eq!(constants.len(), dim * dim);
        Algebra { name: name.into(), dim, labels, constants, basis_names: None }
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, found: names.len() });
        }
        self.basis_names = Some(names);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_of(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    /// Name of basis element `i`, falling back to `e{i+1}`.
    pub fn basis_name(&self, i: usize) -> String {
        match &self.basis_names {
            Some(n) => n[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    /// `e_i·e_j` as a coordinate vector.
    pub fn constant(&self, i: usize, j: usize) -> &[F] {
        &self.constants[i * self.dim + j]
    }

    /// Distinct labels in order of first appearance.
    pub fn distinct_labels(&self) -> Vec<String> {
        self.label_blocks().into_iter().map(|(l, _)| l).collect()
    }

    /// Maximal runs of equally labelled coordinates.
    pub fn label_blocks(&self) -> Vec<(String, Range<usize>)> {
        let mut out: Vec<(String, Range<usize>)> = Vec::new();
        for (i, l) in self.labels.iter().enumerate() {
            match out.last_mut() {
                Some((last, r)) if last == l => r.end = i + 1,
                _ => out.push((l.clone(), i..i + 1)),
            }
        }
        out
    }

    fn check_labels(&self) -> Result<(), AlgebraError> {
        let blocks = self.label_blocks();
        for (idx, (l, _)) in blocks.iter().enumerate() {
            if blocks[..idx].iter().any(|(m, _)| m == l) {
                return Err(AlgebraError::NonContiguousLabel { label: l.clone() });
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.labels[i] != self.labels[j] && !is_zero_vec(self.constant(i, j)) {
                    return Err(AlgebraError::CrossLabelProduct { i, j });
                }
                for k in 0..self.dim {
                    if !self.constant(i, j)[k].is_zero() && self.labels[k] != self.labels[i] {
                        return Err(AlgebraError::CrossLabelProduct { i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` for every triple, reporting the
    /// first failure in lexicographic order.
    pub fn check_associativity(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.constant(i, j);
                for k in 0..self.dim {
                    let left = self.mul_vec_basis(ij, k);
                    let right = self.mul_basis_vec(i, self.constant(j, k));
                    if left != right {
                        return Err(AlgebraError::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `x·e_k`.
    fn mul_vec_basis(&self, x: &[F], k: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (l, c) in x.iter().enumerate() {
            axpy(&mut out, c, self.constant(l, k));
        }
        out
    }

    /// `e_i·y`.
    fn mul_basis_vec(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (l, c) in y.iter().enumerate() {
            axpy(&mut out, c, self.constant(i, l));
        }
        out
    }

    /// Product of coordinate vectors. Panics on length mismatch.
    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        assert!(x.len() == self.dim && y.len() == self.dim, "coordinate length != dim");
        let mut out = vec![F::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi.clone() * yj.clone()), self.constant(i, j));
            }
        }
        out
    }

    pub fn multiply(&self, x: &Element<F>, y: &Element<F>) -> Result<Element<F>, AlgebraError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(AlgebraError::MismatchedAlgebras { dim: self.dim, found: v.len() });
            }
        }
        Ok(Element::new(self.mul(x.coords(), y.coords())))
    }

    pub fn zero(&self) -> Element<F> {
        Element::new(vec![F::zero(); self.dim])
    }

    pub fn basis_element(&self, i: usize) -> Element<F> {
        Element::new(Subspace::standard_vector(self.dim, i))
    }

    pub fn basis(&self) -> Vec<Element<F>> {
        (0..self.dim).map(|i| self.basis_element(i)).collect()
    }

    /// Element from integer coordinates.
    pub fn element_from_ints(&self, coords: &[i64]) -> Element<F> {
        assert_eq!(coords.len(), self.dim);
        Element::new(coords.iter().map(|&c| F::from_int(c)).collect())
    }

    /// `a^k` for `k ≥ 1`.
    pub fn pow(&self, a: &[F], k: usize) -> Vec<F> {
        assert!(k >= 1);
        let mut p = a.to_vec();
        for _ in 1..k {
            p = self.mul(&p, a);
        }
        p
    }

    /// Matrix of `x ↦ a·x`; column `j` holds `a·e_j`.
    pub fn left_mul_matrix(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|j| {
                let mut out = vec![F::zero(); self.dim];
                for (i, ai) in a.iter().enumerate() {
                    axpy(&mut out, ai, self.constant(i, j));
                }
                out
            })
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrix of `x ↦ x·a`; column `i` holds `e_i·a`.
    pub fn right_mul_matrix(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|i| self.mul_basis_vec(i, a)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.constant(i, j) == self.constant(j, i)))
    }

    pub fn is_null(&self) -> bool {
        self.constants.iter().all(|v| is_zero_vec(v))
    }

    /// `span{x·y : x ∈ U, y ∈ V}` over basis vectors.
    pub fn product_span(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let ub = u.basis_vectors();
        let vb = v.basis_vectors();
        let prods: Vec<Vec<F>> =
            ub.iter().flat_map(|x| vb.iter().map(move |y| self.mul(x, y))).collect();
        Subspace::span(self.dim, &prods)
    }

    pub fn is_closed_under_mul(&self, s: &Subspace<F>) -> bool {
        let b = s.basis_vectors();
        b.iter().all(|x| b.iter().all(|y| s.contains(&self.mul(x, y))))
    }

    /// Whether `s` satisfies the closure condition of `side`.
    pub fn has_sidedness(&self, s: &Subspace<F>, side: Sidedness) -> bool {
        let b = s.basis_vectors();
        let left = || (0..self.dim).all(|i| b.iter().all(|x| s.contains(&self.mul_basis_vec(i, x))));
        let right = || (0..self.dim).all(|k| b.iter().all(|x| s.contains(&self.mul_vec_basis(x, k))));
        match side {
            Sidedness::Left => left(),
            Sidedness::Right => right(),
            Sidedness::TwoSided => left() && right(),
            Sidedness::SubringOnly => self.is_closed_under_mul(s),
        }
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> bool {
        self.has_sidedness(s, Sidedness::TwoSided)
    }

    /// Presentation of a multiplication-closed subspace in its echelon basis.
    pub fn subalgebra(&self, s: &Subspace<F>) -> Result<Subalgebra<F>, AlgebraError> {
        if s.ambient_dim() != self.dim {
            return Err(AlgebraError::MismatchedAlgebras { dim: self.dim, found: s.ambient_dim() });
        }
        if !self.is_closed_under_mul(s) {
            return Err(AlgebraError::NotClosed);
        }
        let b = s.basis_vectors();
        let mut constants = Vec::with_capacity(b.len() * b.len());
        for x in &b {
            for y in &b {
                constants.push(s.coordinates(&self.mul(x, y)).expect("closed"));
            }
        }
        let labels = self.labels_for(&b);
        let algebra = Algebra::new_unchecked(format!("{}|sub", self.name), labels, constants);
        Ok(Subalgebra { algebra, basis: s.clone() })
    }

    /// Labels for a family of echelon vectors: each vector's own label when
    /// every vector is supported on a single label, otherwise one shared
    /// label so that the orthogonality invariant is not asserted.
    fn labels_for(&self, vs: &[Vec<F>]) -> Vec<String> {
        let pure: Option<Vec<String>> = vs
            .iter()
            .map(|v| {
                let mut ls = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, _)| &self.labels[i]);
                let first = ls.next()?;
                ls.all(|l| l == first).then(|| first.clone())
            })
            .collect();
        match pure {
            Some(ls) => ls,
            None => vec![self.labels[0].clone(); vs.len()],
        }
    }

    /// `A/I` on the non-pivot coordinates of `I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>, AlgebraError> {
        if ideal.ambient_dim() != self.dim {
            return Err(AlgebraError::MismatchedAlgebras {
                dim: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(AlgebraError::NotTwoSided);
        }
        let kept = ideal.non_pivots();
        let project = |v: &[F]| -> Vec<F> {
            let r = ideal.reduce(v);
            kept.iter().map(|&k| r[k].clone()).collect()
        };
        let mut constants = Vec::with_capacity(kept.len() * kept.len());
        for &i in &kept {
            for &j in &kept {
                constants.push(project(self.constant(i, j)));
            }
        }
        let labels = kept.iter().map(|&k| self.labels[k].clone()).collect();
        let mut algebra = Algebra::new_unchecked(format!("{}/I", self.name), labels, constants);
        if let Some(names) = &self.basis_names {
            algebra.basis_names = Some(kept.iter().map(|&k| names[k].clone()).collect());
        }
        Ok(Quotient { algebra, ideal: ideal.clone(), kept })
    }

    /// Restriction to a union of coordinate indices that spans an ideal,
    /// e.g. one label block.
    pub fn coordinate_subalgebra(&self, coords: Range<usize>) -> Algebra<F> {
        let idx: Vec<usize> = coords.clone().collect();
        let mut constants = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                constants.push(idx.iter().map(|&k| self.constant(i, j)[k].clone()).collect());
            }
        }
        let labels = idx.iter().map(|&k| self.labels[k].clone()).collect();
        let mut a = Algebra::new_unchecked(self.name.clone(), labels, constants);
        if let Some(names) = &self.basis_names {
            a.basis_names = Some(idx.iter().map(|&k| names[k].clone()).collect());
        }
        a
    }

    /// The same constants with every coordinate carrying `label`.
    pub fn relabeled(&self, label: &str) -> Algebra<F> {
        let mut a = self.clone();
        a.labels = vec![label.to_string(); self.dim];
        a
    }

    /// Reorders the basis: new coordinate `t` is old coordinate `perm[t]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Algebra<F>, AlgebraError> {
        let n = self.dim;
        let mut inv = vec![usize::MAX; n];
        for (t, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(AlgebraError::IndexOutOfRange { index: p, dim: n });
            }
            inv[p] = t;
        }
        if perm.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: perm.len() });
        }
        let mut constants = Vec::with_capacity(n * n);
        for &i in perm {
            for &j in perm {
                let v = self.constant(i, j);
                constants.push(perm.iter().map(|&k| v[k].clone()).collect());
            }
        }
        let labels: Vec<String> = perm.iter().map(|&k| self.labels[k].clone()).collect();
        let mut a = Algebra { name: self.name.clone(), dim: n, labels, constants, basis_names: None };
        if let Some(names) = &self.basis_names {
            a.basis_names = Some(perm.iter().map(|&k| names[k].clone()).collect());
        }
        a.check_labels()?;
        Ok(a)
    }

    /// Direct product `A × B` with componentwise multiplication. The basis
    /// is regrouped so that equal labels stay contiguous.
    pub fn direct_sum(&self, other: &Algebra<F>) -> Result<Algebra<F>, AlgebraError> {
        let n = self.dim;
        let m = other.dim;
        let d = n + m;
        let mut constants = vec![vec![F::zero(); d]; d * d];
        for i in 0..n {
            for j in 0..n {
                constants[i * d + j][..n].clone_from_slice(self.constant(i, j));
            }
        }
        for i in 0..m {
            for j in 0..m {
                constants[(n + i) * d + n + j][n..].clone_from_slice(other.constant(i, j));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let names = match (&self.basis_names, &other.basis_names) {
            (None, None) => None,
            _ => Some(
                (0..n)
                    .map(|i| self.basis_name(i))
                    .chain((0..m).map(|i| format!("{}'", other.basis_name(i))))
                    .collect(),
            ),
        };
        let joined = Algebra {
            name: format!("{} x {}", self.name, other.name),
            dim: d,
            labels,
            constants,
            basis_names: names,
        };
        let mut order: Vec<String> = Vec::new();
        for l in &joined.labels {
            if !order.contains(l) {
                order.push(l.clone());
            }
        }
        let mut perm: Vec<usize> = (0..d).collect();
        perm.sort_by_key(|&k| order.iter().position(|l| *l == joined.labels[k]).unwrap());
        joined.permuted(&perm)
    }
}

/// A subalgebra together with the echelon basis its coordinates refer to.
#[derive(Clone, Debug)]
pub struct Subalgebra<F> {
    pub algebra: Algebra<F>,
    pub basis: Subspace<F>,
}

impl<F: Scalar> Subalgebra<F> {
    /// Ambient coordinates of a subalgebra element.
    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        self.basis.combine(coords)
    }

    /// Subalgebra coordinates of an ambient vector, if it lies inside.
    pub fn restrict(&self, v: &[F]) -> Option<Vec<F>> {
        self.basis.coordinates(v)
    }
}

/// `A/I` presented on the coordinates of `A` that are not pivots of `I`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: Algebra<F>,
    pub ideal: Subspace<F>,
    /// Ambient coordinate index of each quotient basis element.
    pub kept: Vec<usize>,
}

impl<F: Scalar> Quotient<F> {
    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.ideal.reduce(v);
        self.kept.iter().map(|&k| r[k].clone()).collect()
    }

    /// The canonical preimage supported on the kept coordinates.
    pub fn lift(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ideal.ambient_dim()];
        for (c, &k) in coords.iter().zip(&self.kept) {
            v[k] = c.clone();
        }
        v
    }

    /// Matrix of the projection, `dim(A/I) × dim(A)`.
    pub fn projection_matrix(&self) -> Matrix<F> {
        let n = self.ideal.ambient_dim();
        let cols: Vec<Vec<F>> =
            (0..n).map(|j| self.project(&Subspace::standard_vector(n, j))).collect();
        Matrix::from_columns(self.kept.len(), &cols).expect("consistent")
    }

    /// Preimage of a quotient subspace.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        let lifted: Vec<Vec<F>> = s.basis_vectors().iter().map(|v| self.lift(v)).collect();
        Subspace::span(self.ideal.ambient_dim(), &lifted)
            .sum(&self.ideal)
            .expect("same ambient")
    }
}
