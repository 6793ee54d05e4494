//! Nilpotency, the nilpotent ideal flag, the Jacobson radical and the
//! radical complement.

use thiserror::Error;

use crate::algebra::{
    annihilators, find_unity, Algebra, AlgebraError, Element, IdealSpace, Quotient,
    Sidedness,
};
use crate::linalg::{kernel, solve, Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadicalError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("radical complement equations have no solution at depth {depth}")]
    NoComplement { depth: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum NilpotencyCertificate<F> {
    /// Least `k` with `P_k = 0`.
    Index(usize),
    /// A nonzero element of `P_{n+1}`.
    Witness(Element<F>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Nilpotency<F> {
    pub nilpotent: bool,
    pub certificate: NilpotencyCertificate<F>,
}

/// Decides `P_{n+1} = 0`. The witness for a non-nilpotent algebra is the
/// unity when there is one, else the first echelon vector of `P_{n+1}`.
pub fn is_nilpotent<F: Scalar>(alg: &Algebra<F>) -> Nilpotency<F> {
    let n = alg.dim();
    let mut p = Subspace::full(n);
    for k in 1..=n + 1 {
        if p.is_zero() {
            return Nilpotency { nilpotent: true, certificate: NilpotencyCertificate::Index(k) };
        }
        if k <= n {
            p = crate::algebra::next_power(alg, &p);
        }
    }
    let witness = find_unity(alg).unwrap_or_else(|| Element::new(p.basis().row(0).to_vec()));
    Nilpotency { nilpotent: false, certificate: NilpotencyCertificate::Witness(witness) }
}

/// Least `k ≤ n + 1` with `a^k = 0`.
pub fn element_nilpotency<F: Scalar>(alg: &Algebra<F>, a: &Element<F>) -> Option<usize> {
    let mut p = a.coords().to_vec();
    for k in 1..=alg.dim() + 1 {
        if p.iter().all(|c| c.is_zero()) {
            return Some(k);
        }
        p = alg.mul(&p, a.coords());
    }
    None
}

/// A full chain of two-sided ideals `0 = I_0 ⊂ ⋯ ⊂ I_n = A` with
/// `A·I_{k+1} + I_{k+1}·A ⊆ I_k`.
#[derive(Debug, Clone)]
pub struct NilpotentFlag<F> {
    pub ideals: Vec<IdealSpace<F>>,
    /// The `k` with `I_k = Ann(A)`.
    pub annihilator_index: usize,
}

impl<F: Scalar> NilpotentFlag<F> {
    pub fn verify(&self, alg: &Algebra<F>) -> bool {
        let n = alg.dim();
        let full = Subspace::full(n);
        self.ideals.len() == n + 1
            && self.ideals.iter().enumerate().all(|(k, i)| i.dim() == k)
            && self.ideals.windows(2).all(|w| {
                let (lo, hi) = (&w[0].subspace, &w[1].subspace);
                lo.is_subspace_of(hi)
                    && alg.product_span(&full, hi).is_subspace_of(lo)
                    && alg.product_span(hi, &full).is_subspace_of(lo)
            })
            && self.ideals[self.annihilator_index].subspace
                == annihilators(alg, &alg.basis()).two_sided.subspace
    }
}

/// Builds the flag bottom-up. While `I_k ⊊ Ann(A)` the next vector comes
/// from `Ann(A)`, so that the flag passes through it; afterwards from the
/// preimage of `Ann(A/I_k)`. Each step takes the first vector of the
/// canonical complement of `I_k`.
pub fn nilpotent_flag<F: Scalar>(alg: &Algebra<F>) -> Result<NilpotentFlag<F>, RadicalError> {
    if !is_nilpotent(alg).nilpotent {
        return Err(RadicalError::NotNilpotent);
    }
    let n = alg.dim();
    let ann = annihilators(alg, &alg.basis()).two_sided.subspace;
    let mut current = Subspace::zero(n);
    let mut ideals = vec![IdealSpace::new(current.clone(), Sidedness::TwoSided)];
    while current.dim() < n {
        let target = if current.dim() < ann.dim() {
            ann.clone()
        } else {
            let q = alg.quotient(&current)?;
            let qa = annihilators(&q.algebra, &q.algebra.basis()).two_sided.subspace;
            q.preimage(&qa)
        };
        let comp = current.complement_in(&target).expect("I_k inside target");
        // a nilpotent quotient has nonzero annihilator, so comp ≠ 0
        let v = comp.basis().row(0).to_vec();
        current = current.sum(&Subspace::span(n, &[v])).expect("same ambient");
        ideals.push(IdealSpace::new(current.clone(), Sidedness::TwoSided));
    }
    Ok(NilpotentFlag { ideals, annihilator_index: ann.dim() })
}

/// `τ(e_k) = tr(L_{e_k})`, which is also the trace on the unitization.
fn trace_vector<F: Scalar>(alg: &Algebra<F>) -> Vec<F> {
    (0..alg.dim())
        .map(|k| (0..alg.dim()).fold(F::zero(), |acc, j| acc + alg.constant(k, j)[j].clone()))
        .collect()
}

/// Trace of left multiplication by `x`.
pub fn left_trace<F: Scalar>(alg: &Algebra<F>, x: &[F]) -> F {
    trace_vector(alg)
        .iter()
        .zip(x)
        .fold(F::zero(), |acc, (t, c)| acc + t.clone() * c.clone())
}

/// `J(A)` as the part of `A` in the radical of `t(x, y) = tr(L_{xy})` on
/// the unitization `K ⊕ A`: `x ∈ J` iff `τ(x) = 0` and `τ(x·e_j) = 0` for
/// every `j`.
pub fn jacobson_radical<F: Scalar>(alg: &Algebra<F>) -> IdealSpace<F> {
    let n = alg.dim();
    let tau = trace_vector(alg);
    let mut rows = vec![tau.clone()];
    for j in 0..n {
        rows.push(
            (0..n)
                .map(|k| {
                    alg.constant(k, j)
                        .iter()
                        .zip(&tau)
                        .fold(F::zero(), |acc, (c, t)| acc + c.clone() * t.clone())
                })
                .collect(),
        );
    }
    let m = Matrix::from_rows(n, &rows).expect("rows of length n");
    let j = kernel(&m);
    debug_assert!(alg.is_two_sided_ideal(&j));
    IdealSpace::new(j, Sidedness::TwoSided)
}

/// Checks the radical contracts: two-sided, nilpotent, semiprime quotient.
pub fn verify_radical<F: Scalar>(alg: &Algebra<F>, j: &IdealSpace<F>) -> bool {
    if !alg.is_two_sided_ideal(&j.subspace) {
        return false;
    }
    let Ok(sub) = alg.subalgebra(&j.subspace) else { return false };
    if !is_nilpotent(&sub.algebra).nilpotent {
        return false;
    }
    let Ok(q) = alg.quotient(&j.subspace) else { return false };
    jacobson_radical(&q.algebra).is_zero()
}

pub fn quotient_algebra<F: Scalar>(
    alg: &Algebra<F>,
    ideal: &IdealSpace<F>,
) -> Result<Quotient<F>, AlgebraError> {
    alg.quotient(&ideal.subspace)
}

/// `J^1 = J`, `J^{m+1} = J·J^m`, down to zero.
pub fn radical_powers<F: Scalar>(alg: &Algebra<F>, j: &Subspace<F>) -> Vec<Subspace<F>> {
    let mut out = vec![j.clone()];
    while !out.last().expect("nonempty").is_zero() {
        let next = alg.product_span(j, out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// A subalgebra `S` with `A = J ⊕ S` and `S ≅ A/J`.
#[derive(Debug, Clone)]
pub struct RadicalComplement<F> {
    pub radical: IdealSpace<F>,
    pub complement: IdealSpace<F>,
    pub quotient: Quotient<F>,
    /// `section[i]` is the element of `S` over the `i`-th quotient basis
    /// vector; in this basis `S` has the constants of `A/J`.
    pub section: Vec<Element<F>>,
}

impl<F: Scalar> RadicalComplement<F> {
    /// Recomputes the section from `S` alone and compares constants.
    pub fn verify(&self, alg: &Algebra<F>) -> bool {
        let n = alg.dim();
        let s = &self.complement.subspace;
        let j = &self.radical.subspace;
        if !alg.is_closed_under_mul(s)
            || !s.intersect(j).expect("same ambient").is_zero()
            || s.dim() + j.dim() != n
        {
            return false;
        }
        let q = &self.quotient;
        let m = q.kept.len();
        // σ_i: the unique element of S projecting to the i-th basis vector
        let proj = q.projection_matrix();
        let sb = s.basis_vectors();
        let images: Vec<Vec<F>> =
            sb.iter().map(|v| proj.mul_vec(v).expect("dims")).collect();
        let pm = Matrix::from_columns(m, &images).expect("dims");
        let mut sigma = Vec::with_capacity(m);
        for i in 0..m {
            let Ok(Some(c)) = solve(&pm, &Subspace::standard_vector(m, i)) else {
                return false;
            };
            sigma.push(s.combine(&c));
        }
        (0..m).all(|i| {
            (0..m).all(|k| {
                let prod = alg.mul(&sigma[i], &sigma[k]);
                let mut expect = vec![F::zero(); n];
                for (l, c) in q.algebra.constant(i, k).iter().enumerate() {
                    crate::linalg::axpy(&mut expect, c, &sigma[l]);
                }
                prod == expect
            })
        })
    }
}

/// Wedderburn–Malcev complement, computed block by block over the field
/// labels.
///
/// Starting from the canonical lift `σ_i = e_{kept_i}`, the error
/// `E_ik = σ_iσ_k − Σ_l c_ik^l σ_l` lies in `J^m`; a correction `σ ↦ σ + δ`
/// with `δ_i ∈ J^m` solving
/// `E_ik + σ_iδ_k + δ_iσ_k − Σ_l c_ik^l δ_l ≡ 0 (mod J^{m+1})` pushes it into
/// `J^{m+1}`. The system is solvable because semisimple algebras in
/// characteristic zero are separable; nilpotency of `J` ends the loop.
pub fn radical_complement<F: Scalar>(
    alg: &Algebra<F>,
) -> Result<RadicalComplement<F>, RadicalError> {
    let n = alg.dim();
    let radical = jacobson_radical(alg);
    let quotient = alg.quotient(&radical.subspace)?;
    let mut section: Vec<Vec<F>> = vec![Vec::new(); quotient.kept.len()];
    for (_, range) in alg.label_blocks() {
        let block = alg.coordinate_subalgebra(range.clone());
        let local = block_section(&block)?;
        // embed block coordinates and match against the global quotient basis
        for (kept_local, v) in local {
            let g = range.start + kept_local;
            let idx = quotient.kept.iter().position(|&k| k == g).expect("same kept coordinates");
            let mut w = vec![F::zero(); n];
            w[range.clone()].clone_from_slice(&v);
            section[idx] = w;
        }
    }
    let complement = IdealSpace::new(Subspace::span(n, &section), Sidedness::SubringOnly);
    Ok(RadicalComplement {
        radical,
        complement,
        quotient,
        section: section.into_iter().map(Element::new).collect(),
    })
}

/// Section of one label block, as (kept coordinate, lifted vector) pairs.
fn block_section<F: Scalar>(alg: &Algebra<F>) -> Result<Vec<(usize, Vec<F>)>, RadicalError> {
    let n = alg.dim();
    let j = jacobson_radical(alg).subspace;
    let q = alg.quotient(&j)?;
    let m = q.kept.len();
    let mut sigma: Vec<Vec<F>> = q.kept.iter().map(|&k| Subspace::standard_vector(n, k)).collect();
    let powers = radical_powers(alg, &j);
    for depth in 0..powers.len().saturating_sub(1) {
        let jm = &powers[depth];
        let next = &powers[depth + 1];
        let err = |sigma: &[Vec<F>], i: usize, k: usize| -> Vec<F> {
            let mut e = alg.mul(&sigma[i], &sigma[k]);
            for (l, c) in q.algebra.constant(i, k).iter().enumerate() {
                crate::linalg::axpy(&mut e, &-c.clone(), &sigma[l]);
            }
            e
        };
        if (0..m).all(|i| (0..m).all(|k| next.contains(&err(&sigma, i, k)))) {
            continue;
        }
        // unknowns: coefficients of δ_i on the basis of J^m
        let jb = jm.basis_vectors();
        let d = jb.len();
        let unknowns = m * d;
        let mut rows: Vec<Vec<F>> = Vec::new();
        let mut rhs: Vec<F> = Vec::new();
        for i in 0..m {
            for k in 0..m {
                // columns: effect of each unknown on the (i, k) equation
                let mut cols: Vec<Vec<F>> = vec![vec![F::zero(); n]; unknowns];
                for (t, b) in jb.iter().enumerate() {
                    // δ_k = b contributes σ_i·b
                    let v = alg.mul(&sigma[i], b);
                    crate::linalg::axpy(&mut cols[k * d + t], &F::one(), &v);
                    // δ_i = b contributes b·σ_k
                    let v = alg.mul(b, &sigma[k]);
                    crate::linalg::axpy(&mut cols[i * d + t], &F::one(), &v);
                    // δ_l = b contributes −c_ik^l b
                    for (l, c) in q.algebra.constant(i, k).iter().enumerate() {
                        crate::linalg::axpy(&mut cols[l * d + t], &-c.clone(), b);
                    }
                }
                let reduced: Vec<Vec<F>> = cols.iter().map(|c| next.reduce(c)).collect();
                let target = next.reduce(&err(&sigma, i, k));
                for r in 0..n {
                    rows.push(reduced.iter().map(|c| c[r].clone()).collect());
                    rhs.push(-target[r].clone());
                }
            }
        }
        let mat = Matrix::from_rows(unknowns, &rows).expect("consistent rows");
        let x = solve(&mat, &rhs)
            .expect("consistent shapes")
            .ok_or(RadicalError::NoComplement { depth: depth + 1 })?;
        for i in 0..m {
            for (t, b) in jb.iter().enumerate() {
                crate::linalg::axpy(&mut sigma[i], &x[i * d + t], b);
            }
        }
    }
    Ok(q.kept.iter().copied().zip(sigma).collect())
}

/// Iterates `e ↦ 3e² − 2e³` until `e² = e`. Returns `None` if `e² − e` is
/// not nilpotent within the iteration bound.
pub fn lift_idempotent<F: Scalar>(alg: &Algebra<F>, e: &Element<F>) -> Option<Element<F>> {
    let mut e = e.coords().to_vec();
    // each step squares the nilpotency index of e² − e
    let bound = usize::BITS as usize - (alg.dim() + 1).leading_zeros() as usize + 1;
    for _ in 0..=bound {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Some(Element::new(e));
        }
        let e3 = alg.mul(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(a, b)| F::from_int(3) * a.clone() - F::from_int(2) * b.clone())
            .collect();
    }
    None
}
