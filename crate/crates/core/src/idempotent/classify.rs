use std::ops::Range;

use crate::algebra::{
    annihilators, find_unity, label_generated_subring, Algebra, Element, IdealSpace, Sidedness,
};
use crate::linalg::{axpy, solve, Matrix, Subspace};
use crate::radical::{is_nilpotent, jacobson_radical, radical_complement};
use crate::scalar::Scalar;

use super::semisimple::{semisimple_decompose, SimpleFactorReport};
use super::IdempotentError;

/// One label block split as `R_0 ∩ block` (annihilating) plus the
/// factor `R_ℓ` that carries every product in the block.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelPart<F> {
    pub label: String,
    pub range: Range<usize>,
    pub r0: Subspace<F>,
    pub rl: Subspace<F>,
}

fn block_space<F: Scalar>(n: usize, range: &Range<usize>) -> Subspace<F> {
    Subspace::coordinate(n, &range.clone().collect::<Vec<_>>())
}

/// `R_0` is the echelon complement of `Ann(A) ∩ A²` inside `Ann(A)`,
/// taken block by block; `R_ℓ` is `A² ∩ block` extended by the echelon
/// complement of `(A² ∩ block) + R_0` in the block.
pub fn label_parts<F: Scalar>(alg: &Algebra<F>) -> Vec<LabelPart<F>> {
    let n = alg.dim();
    let full = Subspace::full(n);
    let ann = annihilators(alg, &alg.basis()).two_sided.subspace;
    let sq = alg.product_span(&full, &full);
    alg.label_blocks()
        .into_iter()
        .map(|(label, range)| {
            let block = block_space(n, &range);
            let ann_b = ann.intersect(&block).expect("same ambient");
            let sq_b = sq.intersect(&block).expect("same ambient");
            let r0 = ann_b.intersect(&sq_b).expect("same ambient").complement_in(&ann_b).expect("same ambient");
            let covered = sq_b.sum(&r0).expect("same ambient");
            let rest = covered.complement_in(&block).expect("same ambient");
            let rl = sq_b.sum(&rest).expect("same ambient");
            LabelPart { label, range, r0, rl }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorReport<F> {
    pub label: String,
    pub ideal: IdealSpace<F>,
    pub is_nilpotent: bool,
    /// Simple factors of a complement of the radical, in ambient coordinates.
    pub simple_factors: Vec<SimpleFactorReport<F>>,
    pub radical_dim: usize,
}

/// `A = R_0 × R_1 × ⋯ × R_s` with `R_0` annihilating and one factor per
/// field label with nontrivial multiplication.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport<F> {
    pub s: usize,
    pub r0: Subspace<F>,
    pub r0_dim: usize,
    pub factors: Vec<FactorReport<F>>,
    pub unital: bool,
    pub unity: Option<Element<F>>,
    pub unity_subring_dim: usize,
    pub field_witnesses: Vec<String>,
    pub radical: IdealSpace<F>,
    pub complement: Option<IdealSpace<F>>,
}

impl<F: Scalar> ClassificationReport<F> {
    /// Re-checks the structural claims against `alg`.
    pub fn verify(&self, alg: &Algebra<F>) -> Result<(), String> {
        let n = alg.dim();
        let full = Subspace::full(n);
        let ann = annihilators(alg, &alg.basis()).two_sided.subspace;
        if !self.r0.is_subspace_of(&ann) {
            return Err("R_0 is not contained in Ann(A)".into());
        }
        let sq = alg.product_span(&full, &full);
        if !sq.intersect(&self.r0).expect("same ambient").is_zero() {
            return Err("A² meets R_0".into());
        }
        let mut total = self.r0.clone();
        for f in &self.factors {
            if !alg.is_two_sided_ideal(&f.ideal.subspace) {
                return Err(format!("factor {} is not an ideal", f.label));
            }
            if !total.intersect(&f.ideal.subspace).expect("same ambient").is_zero() {
                return Err(format!("factor {} overlaps earlier factors", f.label));
            }
            total = total.sum(&f.ideal.subspace).expect("same ambient");
            let semisimple: usize = f
                .simple_factors
                .iter()
                .map(|s| s.matrix_degree * s.matrix_degree * s.division_dim)
                .sum();
            if semisimple + f.radical_dim != f.ideal.dim() {
                return Err(format!("factor {} dimensions do not add up", f.label));
            }
            if f.simple_factors.iter().any(|s| s.ideal.dim() != s.matrix_degree * s.matrix_degree * s.division_dim) {
                return Err(format!("factor {} has a simple factor of the wrong size", f.label));
            }
        }
        if total.dim() != n {
            return Err("factors do not span A".into());
        }
        if self.s != self.factors.len() {
            return Err("s differs from the number of factors".into());
        }
        if self.unital && (self.unity_subring_dim != self.s || self.r0_dim != 0) {
            return Err("unital algebra with dim R(1) ≠ s or R_0 ≠ 0".into());
        }
        Ok(())
    }
}

fn embed_from<F: Scalar>(section: &[Element<F>], coords: &[F], n: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (c, s) in coords.iter().zip(section) {
        axpy(&mut v, c, s.coords());
    }
    v
}

fn lift_factor<F: Scalar>(
    f: SimpleFactorReport<F>,
    section: &[Element<F>],
    n: usize,
) -> SimpleFactorReport<F> {
    let lift = |e: &Element<F>| Element::new(embed_from(section, e.coords(), n));
    let ideal: Vec<Vec<F>> =
        f.ideal.subspace.basis_vectors().iter().map(|v| embed_from(section, v, n)).collect();
    SimpleFactorReport {
        ideal: IdealSpace::new(Subspace::span(n, &ideal), Sidedness::TwoSided),
        central_idempotent: lift(&f.central_idempotent),
        primitive_idempotents: f.primitive_idempotents.iter().map(lift).collect(),
        ..f
    }
}

pub fn classify<F: Scalar>(alg: &Algebra<F>) -> Result<ClassificationReport<F>, IdempotentError> {
    let n = alg.dim();
    let parts = label_parts(alg);
    let radical = jacobson_radical(alg);
    let rc = radical_complement(alg)?;
    let simple = if rc.quotient.algebra.dim() == 0 {
        Vec::new()
    } else {
        semisimple_decompose(&rc.quotient.algebra)?.factors
    };
    let simple: Vec<SimpleFactorReport<F>> =
        simple.into_iter().map(|f| lift_factor(f, &rc.section, n)).collect();

    let mut r0 = Subspace::zero(n);
    let mut factors = Vec::new();
    for part in &parts {
        r0 = r0.sum(&part.r0).expect("same ambient");
        if part.rl.is_zero() {
            continue;
        }
        let sub = alg.subalgebra(&part.rl)?;
        let block = block_space(n, &part.range);
        let j_b = radical.subspace.intersect(&block).expect("same ambient");
        factors.push(FactorReport {
            label: part.label.clone(),
            ideal: IdealSpace::new(part.rl.clone(), Sidedness::TwoSided),
            is_nilpotent: is_nilpotent(&sub.algebra).nilpotent,
            simple_factors: simple
                .iter()
                .filter(|f| f.field_label == part.label)
                .cloned()
                .collect(),
            radical_dim: j_b.dim() - part.r0.dim(),
        });
    }
    let unity = find_unity(alg);
    let unity_subring_dim = unity
        .as_ref()
        .map_or(0, |u| label_generated_subring(alg, std::slice::from_ref(u)).dim());
    Ok(ClassificationReport {
        s: factors.len(),
        r0_dim: r0.dim(),
        r0,
        field_witnesses: factors.iter().map(|f| f.label.clone()).collect(),
        factors,
        unital: unity.is_some(),
        unity,
        unity_subring_dim,
        radical,
        complement: Some(rc.complement),
    })
}

/// A unital algebra containing `A` as a two-sided ideal.
#[derive(Debug, Clone)]
pub struct Unitization<F> {
    pub algebra: Algebra<F>,
    /// `embedding[i]` is the coordinate of `e_i` in the unitization.
    pub embedding: Vec<usize>,
    pub unity: Element<F>,
}

impl<F: Scalar> Unitization<F> {
    pub fn verify(&self, original: &Algebra<F>) -> bool {
        let big = &self.algebra;
        let m = big.dim();
        let emb = |v: &[F]| {
            let mut w = vec![F::zero(); m];
            for (c, &k) in v.iter().zip(&self.embedding) {
                w[k] = c.clone();
            }
            w
        };
        let image: Vec<Vec<F>> = original.basis().iter().map(|e| emb(e.coords())).collect();
        let image = Subspace::span(m, &image);
        let homomorphic = (0..original.dim()).all(|i| {
            (0..original.dim()).all(|j| {
                big.mul(&emb(&Subspace::standard_vector(original.dim(), i)), &emb(&Subspace::standard_vector(original.dim(), j)))
                    == emb(original.constant(i, j))
            })
        });
        let u = self.unity.coords();
        homomorphic
            && image.dim() == original.dim()
            && big.is_two_sided_ideal(&image)
            && big.basis().iter().all(|e| big.mul(u, e.coords()) == e.coords() && big.mul(e.coords(), u) == e.coords())
    }
}

/// `K ⊕ A` with `(a, x)(b, y) = (ab, ay + bx + xy)`. The new coordinate
/// comes first and every coordinate carries `label`.
pub fn dorroh_unitization<F: Scalar>(alg: &Algebra<F>, label: &str) -> Unitization<F> {
    let n = alg.dim();
    let m = n + 1;
    let mut constants = vec![vec![F::zero(); m]; m * m];
    constants[0][0] = F::one();
    for i in 0..n {
        constants[i + 1][i + 1] = F::one();
        constants[(i + 1) * m][i + 1] = F::one();
        for j in 0..n {
            let mut v = vec![F::zero()];
            v.extend(alg.constant(i, j).iter().cloned());
            constants[(i + 1) * m + j + 1] = v;
        }
    }
    let algebra = Algebra::new(format!("{}^+", alg.name()), vec![label.to_string(); m], constants)
        .expect("the Dorroh extension of an associative algebra is associative");
    Unitization {
        algebra,
        embedding: (1..m).collect(),
        unity: Element::new(Subspace::standard_vector(m, 0)),
    }
}

/// Adjoins, inside each label block, a scalar line acting as the identity
/// on a non-unital factor `R_ℓ`, and one line per echelon basis vector of
/// the block's part of `R_0`, acting as the identity on that vector.
/// Unital inputs come back unchanged.
pub fn definable_unitization<F: Scalar>(alg: &Algebra<F>) -> Unitization<F> {
    let n = alg.dim();
    if let Some(u) = find_unity(alg) {
        return Unitization { algebra: alg.clone(), embedding: (0..n).collect(), unity: u };
    }
    // new coordinates, block by block: [u?][w?][old block]
    enum Line<F> {
        Old(usize),
        /// Identity on a subspace, given as the projection along the rest
        /// of the block.
        Unit(Subspace<F>, Subspace<F>),
    }
    let mut lines: Vec<(Line<F>, String)> = Vec::new();
    let mut unity_parts: Vec<(usize, Option<Vec<F>>)> = Vec::new();
    for part in label_parts(alg) {
        if !part.rl.is_zero() {
            let sub = alg.subalgebra(&part.rl).expect("factor is a subalgebra");
            match find_unity(&sub.algebra) {
                Some(e) => unity_parts.push((usize::MAX, Some(sub.lift(e.coords())))),
                None => {
                    unity_parts.push((lines.len(), None));
                    lines.push((Line::Unit(part.rl.clone(), part.r0.clone()), part.label.clone()));
                }
            }
        }
        let r0_basis = part.r0.basis_vectors();
        for (k, w) in r0_basis.iter().enumerate() {
            let others: Vec<Vec<F>> = r0_basis
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, v)| v.clone())
                .chain(part.rl.basis_vectors())
                .collect();
            let line = Subspace::span(n, std::slice::from_ref(w));
            unity_parts.push((lines.len(), None));
            lines.push((Line::Unit(line, Subspace::span(n, &others)), part.label.clone()));
        }
        for i in part.range.clone() {
            lines.push((Line::Old(i), part.label.clone()));
        }
    }
    let m = lines.len();
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (t, (l, _)) in lines.iter().enumerate() {
            if let Line::Old(i) = l {
                p[*i] = t;
            }
        }
        p
    };
    let emb = |v: &[F]| {
        let mut w = vec![F::zero(); m];
        for (c, &k) in v.iter().zip(&pos) {
            w[k] = c.clone();
        }
        w
    };
    // projection of e_i onto `onto` along `along`, zero outside both
    let project = |onto: &Subspace<F>, along: &Subspace<F>, i: usize| -> Vec<F> {
        let e = Subspace::standard_vector(n, i);
        let basis: Vec<Vec<F>> =
            onto.basis_vectors().into_iter().chain(along.basis_vectors()).collect();
        let cols = Matrix::from_columns(n, &basis).expect("consistent");
        match solve(&cols, &e).expect("shapes") {
            Some(k) => onto.combine(&k[..onto.dim()]),
            None => vec![F::zero(); n],
        }
    };
    let mut constants = vec![vec![F::zero(); m]; m * m];
    for (s, (ls, _)) in lines.iter().enumerate() {
        for (t, (lt, _)) in lines.iter().enumerate() {
            constants[s * m + t] = match (ls, lt) {
                (Line::Old(i), Line::Old(j)) => emb(alg.constant(*i, *j)),
                (Line::Unit(onto, along), Line::Old(j)) | (Line::Old(j), Line::Unit(onto, along)) => {
                    emb(&project(onto, along, *j))
                }
                (Line::Unit(..), Line::Unit(..)) if s == t => Subspace::standard_vector(m, s),
                _ => vec![F::zero(); m],
            };
        }
    }
    let labels = lines.iter().map(|(_, l)| l.clone()).collect();
    let algebra = Algebra::new(format!("{}^", alg.name()), labels, constants)
        .expect("unitization constants are associative");
    let mut unity = vec![F::zero(); m];
    for (line, e) in unity_parts {
        match e {
            Some(v) => {
                let w = emb(&v);
                for (a, b) in unity.iter_mut().zip(w) {
                    *a = a.clone() + b;
                }
            }
            None => unity[line] = F::one(),
        }
    }
    Unitization { algebra, embedding: pos, unity: Element::new(unity) }
}
