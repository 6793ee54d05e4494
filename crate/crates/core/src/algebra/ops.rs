use serde::Serialize;

use crate::linalg::{kernel, solve, Matrix, Subspace};
use crate::scalar::Scalar;

use super::{Algebra, Element, IdealSpace, Sidedness};

fn stack<F: Scalar>(n: usize, blocks: impl IntoIterator<Item = Matrix<F>>) -> Matrix<F> {
    blocks
        .into_iter()
        .fold(Matrix::zeros(0, n), |acc, b| acc.vstack(&b).expect("same width"))
}

#[derive(Clone, Debug)]
pub struct Annihilators<F> {
    /// `{a : a·x = 0 for all x ∈ X}`.
    pub left: IdealSpace<F>,
    /// `{a : x·a = 0 for all x ∈ X}`.
    pub right: IdealSpace<F>,
    pub two_sided: IdealSpace<F>,
}

pub fn annihilators<F: Scalar>(alg: &Algebra<F>, xs: &[Element<F>]) -> Annihilators<F> {
    let n = alg.dim();
    let left = kernel(&stack(n, xs.iter().map(|x| alg.right_mul_matrix(x.coords()))));
    let right = kernel(&stack(n, xs.iter().map(|x| alg.left_mul_matrix(x.coords()))));
    let both = left.intersect(&right).expect("same ambient");
    let spans_all = Subspace::span(n, &xs.iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>())
        .is_full();
    Annihilators {
        left: IdealSpace::new(left, Sidedness::Left),
        right: IdealSpace::new(right, Sidedness::Right),
        two_sided: IdealSpace::new(
            both,
            if spans_all { Sidedness::TwoSided } else { Sidedness::SubringOnly },
        ),
    }
}

pub fn center<F: Scalar>(alg: &Algebra<F>) -> IdealSpace<F> {
    let n = alg.dim();
    let commutators = (0..n).map(|i| {
        let e = Subspace::<F>::standard_vector(n, i);
        commutator_matrix(alg, &e)
    });
    IdealSpace::new(kernel(&stack(n, commutators)), Sidedness::SubringOnly)
}

pub fn centralizer<F: Scalar>(alg: &Algebra<F>, a: &Element<F>) -> IdealSpace<F> {
    IdealSpace::new(kernel(&commutator_matrix(alg, a.coords())), Sidedness::SubringOnly)
}

/// Matrix of `x ↦ x·a − a·x`.
fn commutator_matrix<F: Scalar>(alg: &Algebra<F>, a: &[F]) -> Matrix<F> {
    let r = alg.right_mul_matrix(a);
    let l = alg.left_mul_matrix(a);
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = r[(i, j)].clone() - l[(i, j)].clone();
        }
    }
    m
}

/// The smallest multiplication-closed subspace containing `xs`.
pub fn generated_subring<F: Scalar>(alg: &Algebra<F>, xs: &[Element<F>]) -> IdealSpace<F> {
    let vs: Vec<Vec<F>> = xs.iter().map(|x| x.coords().to_vec()).collect();
    IdealSpace::new(close_under_mul(alg, Subspace::span(alg.dim(), &vs)), Sidedness::SubringOnly)
}

pub(crate) fn close_under_mul<F: Scalar>(alg: &Algebra<F>, start: Subspace<F>) -> Subspace<F> {
    let mut s = start;
    loop {
        let next = s.sum(&alg.product_span(&s, &s)).expect("same ambient");
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

/// Generated subring of the label-block restrictions of `xs`: each base
/// field acts on its own block, so an element contributes one generator per
/// label it touches.
pub fn label_generated_subring<F: Scalar>(alg: &Algebra<F>, xs: &[Element<F>]) -> IdealSpace<F> {
    let mut parts = Vec::new();
    for x in xs {
        for (_, range) in alg.label_blocks() {
            let mut v = vec![F::zero(); alg.dim()];
            v[range.clone()].clone_from_slice(&x.coords()[range]);
            if v.iter().any(|c| !c.is_zero()) {
                parts.push(Element::new(v));
            }
        }
    }
    generated_subring(alg, &parts)
}

/// `P_1 = A`, `P_{k+1} = span{e_i·v, v·e_i : v ∈ P_k}`; the span of all
/// `k`-fold products. Panics if `k == 0`.
pub fn power_span<F: Scalar>(alg: &Algebra<F>, k: usize) -> Subspace<F> {
    assert!(k >= 1, "power_span needs k ≥ 1");
    let mut p = Subspace::full(alg.dim());
    for _ in 1..k {
        if p.is_zero() {
            break;
        }
        p = next_power(alg, &p);
    }
    p
}

pub(crate) fn next_power<F: Scalar>(alg: &Algebra<F>, p: &Subspace<F>) -> Subspace<F> {
    let full = Subspace::full(alg.dim());
    alg.product_span(&full, p).sum(&alg.product_span(p, &full)).expect("same ambient")
}

/// Solves `u·e_i = e_i = e_i·u` for all `i`.
pub fn find_unity<F: Scalar>(alg: &Algebra<F>) -> Option<Element<F>> {
    let n = alg.dim();
    let mut blocks = Vec::with_capacity(2 * n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        let e = Subspace::<F>::standard_vector(n, i);
        blocks.push(alg.right_mul_matrix(&e));
        rhs.extend(e.iter().cloned());
        blocks.push(alg.left_mul_matrix(&e));
        rhs.extend(e.iter().cloned());
    }
    let m = stack(n, blocks);
    solve(&m, &rhs).expect("consistent shapes").map(Element::new)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZeroDivisorSide {
    /// `a·w = 0`.
    Left,
    /// `w·a = 0`.
    Right,
    Both,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ElementKind<F> {
    Zero,
    Unit { inverse: Element<F> },
    ZeroDivisor { witness: Element<F>, side: ZeroDivisorSide },
}

/// Zero, unit (with its inverse) or zero-divisor (with a nonzero witness).
/// A two-sided witness is preferred when one exists.
pub fn classify_element<F: Scalar>(alg: &Algebra<F>, a: &Element<F>) -> ElementKind<F> {
    if a.is_zero() {
        return ElementKind::Zero;
    }
    let kl = kernel(&alg.left_mul_matrix(a.coords()));
    let kr = kernel(&alg.right_mul_matrix(a.coords()));
    if kl.is_zero() && kr.is_zero() {
        // Both multiplications bijective: a·e = a gives a left identity and
        // symmetrically a right one, so a unity exists.
        let one = find_unity(alg).expect("a non-zero-divisor forces a unity");
        let inv = solve(&alg.left_mul_matrix(a.coords()), one.coords())
            .expect("square")
            .expect("invertible");
        return ElementKind::Unit { inverse: Element::new(inv) };
    }
    let both = kl.intersect(&kr).expect("same ambient");
    let (space, side) = if !both.is_zero() {
        (both, ZeroDivisorSide::Both)
    } else if !kl.is_zero() {
        (kl, ZeroDivisorSide::Left)
    } else {
        (kr, ZeroDivisorSide::Right)
    };
    ElementKind::ZeroDivisor { witness: Element::new(space.basis().row(0).to_vec()), side }
}
