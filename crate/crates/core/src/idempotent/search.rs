use crate::algebra::{
    annihilators, find_unity, generated_subring, Algebra, Element, IdealSpace, Sidedness,
};
use crate::linalg::{kernel, solve, Matrix, Subspace};
use crate::radical::{jacobson_radical, lift_idempotent};
use crate::scalar::Scalar;

use super::{IdempotentError, Side};

/// `A·a` or `a·A`.
pub fn principal_ideal<F: Scalar>(alg: &Algebra<F>, a: &[F], side: Side) -> Subspace<F> {
    let m = match side {
        Side::Left => alg.right_mul_matrix(a),
        Side::Right => alg.left_mul_matrix(a),
    };
    Subspace::span(alg.dim(), &m.transpose().row_vectors())
}

fn is_zero<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn sub_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn add_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// A nonzero idempotent, or `None` when the algebra is nilpotent.
///
/// Runs [`find_idempotent_by_descent`]; should that report an internal
/// failure, the idempotent is obtained by lifting the unity of `A/J(A)`.
pub fn find_idempotent<F: Scalar>(alg: &Algebra<F>) -> Option<Element<F>> {
    match find_idempotent_by_descent(alg) {
        Ok(e) => e,
        Err(_) => find_idempotent_via_radical(alg),
    }
}

/// Lifts the unity of `A/J(A)` through the nilpotent radical.
pub fn find_idempotent_via_radical<F: Scalar>(alg: &Algebra<F>) -> Option<Element<F>> {
    let j = jacobson_radical(alg);
    if j.subspace.dim() == alg.dim() {
        return None;
    }
    let q = alg.quotient(&j.subspace).ok()?;
    let one = find_unity(&q.algebra)?;
    lift_idempotent(alg, &Element::new(q.lift(one.coords())))
}

/// The recursive search on dimension: pass to `A/Ann_1(A)` or
/// `A/Ann_2(A)` and correct the lift by squaring; otherwise take a principal
/// right ideal `aA` of least dimension and either extract an idempotent from
/// it (Brauer) or, when `(aA)² = 0`, recurse into `Ann_2(aA)`, `A/Ann_2(aA)`
/// and a generated subring (noncommutative case) or solve `b·e = b` for a
/// lift `b` of the unity of `A/aA` (commutative case).
///
/// Every branch strictly lowers the dimension, and the minimal-ideal steps
/// descend to a smaller principal ideal whenever the certificate they need
/// fails, so the search never relies on a guessed minimality.
pub fn find_idempotent_by_descent<F: Scalar>(
    alg: &Algebra<F>,
) -> Result<Option<Element<F>>, IdempotentError> {
    let e = descent(alg)?;
    if let Some(e) = &e {
        if is_zero(e) || alg.mul(e, e) != *e {
            return Err(IdempotentError::Undetermined("an idempotent by descent"));
        }
    }
    Ok(e.map(Element::new))
}

fn descent<F: Scalar>(alg: &Algebra<F>) -> Result<Option<Vec<F>>, IdempotentError> {
    let n = alg.dim();
    if n == 0 || alg.is_null() {
        return Ok(None);
    }
    let ann = annihilators(alg, &alg.basis());
    for side in [&ann.left, &ann.right] {
        if !side.is_zero() {
            // (x² − x)·x = 0 or x·(x² − x) = 0, so x² is idempotent
            let q = alg.quotient(&side.subspace)?;
            return Ok(descent(&q.algebra)?.map(|xb| {
                let x = q.lift(&xb);
                alg.mul(&x, &x)
            }));
        }
    }

    let mut a = smallest_principal(alg, Side::Right);
    loop {
        match brauer_step(alg, &principal_ideal(alg, &a, Side::Right), Side::Right) {
            Step::Found(e) => return Ok(Some(e)),
            Step::Smaller(y) => a = y,
            Step::NullSquare => break,
        }
    }

    if !alg.is_commutative() {
        let ar = principal_ideal(alg, &a, Side::Right);
        let i = annihilators(alg, &as_elements(&ar)).right.subspace;
        let sub = alg.subalgebra(&i)?;
        if let Some(e) = descent(&sub.algebra)? {
            return Ok(Some(sub.lift(&e)));
        }
        let q = alg.quotient(&i)?;
        let ub = descent(&q.algebra)?
            .ok_or(IdempotentError::Undetermined("an idempotent of A/Ann_2(aA)"))?;
        let u = q.lift(&ub);
        let s = generated_subring(alg, &[Element::new(u)]).subspace;
        if s.dim() == n {
            return Err(IdempotentError::Undetermined("a proper subring R(u)"));
        }
        let sub = alg.subalgebra(&s)?;
        let e = descent(&sub.algebra)?
            .ok_or(IdempotentError::Undetermined("an idempotent of R(u)"))?;
        return Ok(Some(sub.lift(&e)));
    }

    loop {
        let ar = principal_ideal(alg, &a, Side::Right);
        let q = alg.quotient(&ar)?;
        let ub = descent(&q.algebra)?
            .ok_or(IdempotentError::Undetermined("an idempotent of A/aA"))?;
        let gen = generated_subring(&q.algebra, &[Element::new(ub.clone())]).subspace;
        let pre = q.preimage(&gen);
        if pre.dim() < n {
            let sub = alg.subalgebra(&pre)?;
            let e = descent(&sub.algebra)?
                .ok_or(IdempotentError::Undetermined("an idempotent of aA + R(u)"))?;
            return Ok(Some(sub.lift(&e)));
        }
        // b spans the canonical complement of aA over ū
        let b = q.lift(&ub);
        let lb = alg.left_mul_matrix(&b);
        let annb = kernel(&lb);
        if annb.is_zero() {
            let e = solve(&lb, &b).expect("square").expect("invertible");
            return Ok(Some(e));
        }
        if annb.is_subspace_of(&ar) && annb != ar {
            // a smaller ideal inside aA
            a = annb.basis().row(0).to_vec();
            continue;
        }
        return Err(IdempotentError::Undetermined("Ann(b) = 0"));
    }
}

fn as_elements<F: Scalar>(s: &Subspace<F>) -> Vec<Element<F>> {
    s.basis_vectors().into_iter().map(Element::new).collect()
}

/// Basis vectors and their pairwise sums, in scan order.
fn candidates<F: Scalar>(n: usize) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = (0..n).map(|i| Subspace::standard_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(add_vec(&out[i], &out[j]));
        }
    }
    out
}

/// Generator of least positive dimension among [`candidates`]; the first
/// one wins ties.
fn smallest_principal<F: Scalar>(alg: &Algebra<F>, side: Side) -> Vec<F> {
    let mut best: Option<(usize, Vec<F>)> = None;
    for c in candidates(alg.dim()) {
        let d = principal_ideal(alg, &c, side).dim();
        if d > 0 && best.as_ref().is_none_or(|(bd, _)| d < *bd) {
            best = Some((d, c));
        }
    }
    best.expect("trivial one-sided annihilator").1
}

enum Step<F> {
    Found(Vec<F>),
    /// A nonzero element generating a strictly smaller principal ideal.
    Smaller(Vec<F>),
    NullSquare,
}

/// One Brauer step on a principal one-sided ideal `I`.
///
/// Right case: pick a basis vector `b` with `b·I ≠ 0` and solve `b·e = b`
/// inside `I`. An idempotent solution is returned. Otherwise either
/// `b·I ⊊ I` or `e² − e` is a nonzero element of the proper right ideal
/// `{x ∈ I : b·x = 0}`; in both cases a smaller principal ideal exists and
/// its generator is returned. The left case is the mirror image.
fn brauer_step<F: Scalar>(alg: &Algebra<F>, i: &Subspace<F>, side: Side) -> Step<F> {
    if alg.product_span(i, i).is_zero() {
        return Step::NullSquare;
    }
    let ib = i.basis_vectors();
    let act = |b: &[F], v: &[F]| match side {
        Side::Right => alg.mul(b, v),
        Side::Left => alg.mul(v, b),
    };
    let b = ib
        .iter()
        .find(|b| ib.iter().any(|v| !is_zero(&act(b, v))))
        .expect("I² ≠ 0 has a basis vector acting nontrivially")
        .clone();
    let images: Vec<Vec<F>> = ib.iter().map(|v| act(&b, v)).collect();
    let m = Matrix::from_columns(alg.dim(), &images).expect("consistent");
    match solve(&m, &b).expect("consistent shapes") {
        None => Step::Smaller(Subspace::span(alg.dim(), &images).basis().row(0).to_vec()),
        Some(c) => {
            let e = i.combine(&c);
            let e2 = alg.mul(&e, &e);
            if e2 == e {
                Step::Found(e)
            } else {
                Step::Smaller(sub_vec(&e2, &e))
            }
        }
    }
}

/// A principal one-sided ideal of least dimension among the generators
/// tried, refined by descent: elements of the current ideal (its basis,
/// pairwise sums and differences, and products of basis vectors) whose own
/// principal ideal is smaller replace the generator. On return, every probe
/// element generates the whole ideal; this is the minimality certificate.
pub fn minimal_one_sided_ideal<F: Scalar>(
    alg: &Algebra<F>,
    side: Side,
) -> Result<IdealSpace<F>, IdempotentError> {
    let ann = annihilators(alg, &alg.basis());
    let blocking = match side {
        Side::Left => &ann.right,
        Side::Right => &ann.left,
    };
    if alg.dim() == 0 || !blocking.is_zero() {
        return Err(IdempotentError::AnnihilatorNonzero);
    }
    let mut ideal = principal_ideal(alg, &smallest_principal(alg, side), side);
    'descent: loop {
        for p in probes(alg, &ideal) {
            let pi = principal_ideal(alg, &p, side);
            if pi.dim() < ideal.dim() {
                ideal = pi;
                continue 'descent;
            }
        }
        break;
    }
    let sidedness = match side {
        Side::Left => Sidedness::Left,
        Side::Right => Sidedness::Right,
    };
    Ok(IdealSpace::new(ideal, sidedness))
}

/// Nonzero probe elements of a subspace.
pub(crate) fn probes<F: Scalar>(alg: &Algebra<F>, s: &Subspace<F>) -> Vec<Vec<F>> {
    let b = s.basis_vectors();
    let mut out = b.clone();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            out.push(add_vec(&b[i], &b[j]));
            out.push(sub_vec(&b[i], &b[j]));
        }
    }
    for x in &b {
        for y in &b {
            let p = alg.mul(x, y);
            if s.contains(&p) {
                out.push(p);
            }
        }
    }
    out.retain(|v| !is_zero(v));
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum BrauerOutcome<F> {
    /// `I = A·e` (left ideals) or `I = e·A` (right ideals).
    Idempotent(Element<F>),
    NullSquare,
}

/// Brauer's lemma on a minimal one-sided ideal: either `I² = 0` or `I` is
/// generated by an idempotent. A two-sided ideal is treated as a left one.
pub fn brauer_idempotent<F: Scalar>(
    alg: &Algebra<F>,
    ideal: &IdealSpace<F>,
) -> Result<BrauerOutcome<F>, IdempotentError> {
    let side = match ideal.sidedness {
        Sidedness::Left | Sidedness::TwoSided => Side::Left,
        Sidedness::Right => Side::Right,
        Sidedness::SubringOnly => return Err(IdempotentError::NotOneSided),
    };
    let i = &ideal.subspace;
    if i.is_zero() {
        return Err(IdempotentError::NotMinimal);
    }
    match brauer_step(alg, i, side) {
        Step::NullSquare => Ok(BrauerOutcome::NullSquare),
        Step::Smaller(_) => Err(IdempotentError::NotMinimal),
        Step::Found(e) => {
            if principal_ideal(alg, &e, side) != *i {
                return Err(IdempotentError::NotMinimal);
            }
            Ok(BrauerOutcome::Idempotent(Element::new(e)))
        }
    }
}

/// The four corners of an idempotent, as images of linear maps so that no
/// unity is needed.
#[derive(Debug, Clone, PartialEq)]
pub struct Pierce<F> {
    /// `eAe`
    pub ee: Subspace<F>,
    /// `eA(1−e) = {ex − exe}`
    pub ef: Subspace<F>,
    /// `(1−e)Ae = {xe − exe}`
    pub fe: Subspace<F>,
    /// `(1−e)A(1−e) = {x − ex − xe + exe}`
    pub ff: Subspace<F>,
}

impl<F: Scalar> Pierce<F> {
    pub fn corners(&self) -> [&Subspace<F>; 4] {
        [&self.ee, &self.ef, &self.fe, &self.ff]
    }

    /// Pairwise trivial intersections, sum equal to `A`, and `eAe` a
    /// subalgebra with identity `e`.
    pub fn verify(&self, alg: &Algebra<F>, e: &Element<F>) -> bool {
        let c = self.corners();
        let n = alg.dim();
        let disjoint = (0..4).all(|i| {
            (i + 1..4).all(|j| c[i].intersect(c[j]).expect("same ambient").is_zero())
        });
        let total: usize = c.iter().map(|s| s.dim()).sum();
        let unit = self.ee.basis_vectors().iter().all(|x| {
            alg.mul(e.coords(), x) == *x && alg.mul(x, e.coords()) == *x
        });
        disjoint && total == n && alg.is_closed_under_mul(&self.ee) && unit
    }
}

pub fn pierce_decomposition<F: Scalar>(
    alg: &Algebra<F>,
    e: &Element<F>,
) -> Result<Pierce<F>, IdempotentError> {
    let e = e.coords();
    if alg.mul(e, e) != e {
        return Err(IdempotentError::NotIdempotent);
    }
    let n = alg.dim();
    let (mut ee, mut ef, mut fe, mut ff) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for x in alg.basis() {
        let x = x.coords();
        let ex = alg.mul(e, x);
        let xe = alg.mul(x, e);
        let exe = alg.mul(&ex, e);
        ef.push(sub_vec(&ex, &exe));
        fe.push(sub_vec(&xe, &exe));
        ff.push(add_vec(&sub_vec(&sub_vec(x, &ex), &xe), &exe));
        ee.push(exe);
    }
    Ok(Pierce {
        ee: Subspace::span(n, &ee),
        ef: Subspace::span(n, &ef),
        fe: Subspace::span(n, &fe),
        ff: Subspace::span(n, &ff),
    })
}
