use serde::Serialize;

use crate::algebra::{center, find_unity, Algebra, Element, IdealSpace, Sidedness};
use crate::linalg::{solve, Matrix, Subspace};
use crate::poly::{degree, eval_in, ext_gcd, minimal_polynomial, mul, split_rational, Split};
use crate::radical::{jacobson_radical, left_trace, radical_powers};
use crate::scalar::Scalar;

use super::search::probes;
use super::IdempotentError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdempotentFlags {
    pub primitive: bool,
    pub central: bool,
}

/// Pairwise orthogonal idempotents.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentSet<F> {
    pub members: Vec<Element<F>>,
    pub flags: Vec<IdempotentFlags>,
}

impl<F: Scalar> IdempotentSet<F> {
    pub fn verify(&self, alg: &Algebra<F>) -> bool {
        let m = &self.members;
        m.iter().all(|e| !e.is_zero() && alg.mul(e.coords(), e.coords()) == e.coords())
            && (0..m.len()).all(|i| {
                (0..m.len()).all(|j| {
                    i == j || alg.mul(m[i].coords(), m[j].coords()).iter().all(|c| c.is_zero())
                })
            })
    }

    pub fn sum(&self, dim: usize) -> Element<F> {
        self.members.iter().fold(Element::new(vec![F::zero(); dim]), |acc, e| &acc + e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DivisionType {
    Real,
    Complex,
    Quaternion,
    Unrecognized,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimpleFactorReport<F> {
    /// `A·c` for the central idempotent `c` of the factor.
    pub ideal: IdealSpace<F>,
    pub matrix_degree: usize,
    pub division_dim: usize,
    pub division_type: DivisionType,
    pub field_label: String,
    pub central_idempotent: Element<F>,
    pub primitive_idempotents: Vec<Element<F>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SemisimpleDecomposition<F> {
    pub factors: Vec<SimpleFactorReport<F>>,
    /// All primitive idempotents, factor by factor.
    pub idempotents: IdempotentSet<F>,
}

pub fn semiprime_check<F: Scalar>(alg: &Algebra<F>) -> bool {
    jacobson_radical(alg).is_zero()
}

pub fn prime_check<F: Scalar>(alg: &Algebra<F>) -> bool {
    alg.dim() > 0
        && semiprime_check(alg)
        && semisimple_decompose(alg).is_ok_and(|d| d.factors.len() == 1)
}

fn is_zero<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn sub_vec<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `e·A·f` as a subspace.
pub fn corner<F: Scalar>(alg: &Algebra<F>, e: &[F], f: &[F]) -> Subspace<F> {
    let vs: Vec<Vec<F>> =
        alg.basis().iter().map(|x| alg.mul(&alg.mul(e, x.coords()), f)).collect();
    Subspace::span(alg.dim(), &vs)
}

/// Sort key: index of the first nonzero coordinate.
fn leading_index<F: Scalar>(v: &[F]) -> usize {
    v.iter().position(|c| !c.is_zero()).unwrap_or(v.len())
}

/// Probe elements of a corner: its basis and sums/differences, then a few
/// generic combinations `Σ (k+1)^t b_k`.
fn corner_probes<F: Scalar>(alg: &Algebra<F>, s: &Subspace<F>) -> Vec<Vec<F>> {
    let mut out = probes(alg, s);
    let b = s.basis_vectors();
    for t in 1..=3u32 {
        let coeffs: Vec<F> = (0..b.len()).map(|k| F::from_int((k as i64 + 1).pow(t))).collect();
        out.push(s.combine(&coeffs));
    }
    out
}

/// The idempotent `(t·h)(z)` from `s·g + t·h = 1`, where `g·h` is the
/// minimal polynomial of `z` and `g`, `h` are coprime.
fn bezout_idempotent<F: Scalar>(
    alg: &Algebra<F>,
    z: &[F],
    unity: &[F],
    g: &[F],
    h: &[F],
) -> Option<Vec<F>> {
    let (d, _, t) = ext_gcd(g, h);
    if degree(&d) != Some(0) {
        return None;
    }
    let f = eval_in(alg, &mul(&t, h), z, unity);
    (alg.mul(&f, &f) == f && !is_zero(&f) && f != unity).then_some(f)
}

enum Found<F> {
    Idempotent(Vec<F>),
    /// Some probe generates a field of the corner's full dimension.
    Field,
    Exhausted,
}

/// Looks for a proper idempotent in the corner `s` with identity `unity`
/// via a probe whose minimal polynomial splits over the rationals.
fn split_corner<F: Scalar>(alg: &Algebra<F>, s: &Subspace<F>, unity: &[F]) -> Found<F> {
    for z in corner_probes(alg, s) {
        let mp = minimal_polynomial(alg, &z, unity);
        match split_rational(&mp) {
            Split::Factors(g, h) => {
                if let Some(f) = bezout_idempotent(alg, &z, unity, &g, &h) {
                    return Found::Idempotent(f);
                }
            }
            Split::Irreducible if mp.len() - 1 == s.dim() => return Found::Field,
            _ => {}
        }
    }
    Found::Exhausted
}

/// Primitive idempotents of the commutative semisimple corner `Z·c`.
fn central_split<F: Scalar>(
    alg: &Algebra<F>,
    z: &Subspace<F>,
    c: Vec<F>,
) -> Result<Vec<Vec<F>>, IdempotentError> {
    let zc: Vec<Vec<F>> = z.basis_vectors().iter().map(|v| alg.mul(v, &c)).collect();
    let zc = Subspace::span(alg.dim(), &zc);
    if zc.dim() <= 1 {
        return Ok(vec![c]);
    }
    match split_corner(alg, &zc, &c) {
        Found::Field => Ok(vec![c]),
        Found::Idempotent(f) => {
            let rest = sub_vec(&c, &f);
            let mut out = central_split(alg, z, f)?;
            out.extend(central_split(alg, z, rest)?);
            Ok(out)
        }
        Found::Exhausted => Err(IdempotentError::Undetermined("a splitting of the center")),
    }
}

/// Primitive orthogonal idempotents summing to `e`. A corner in which no
/// probe has a reducible minimal polynomial is taken as a division ring.
fn primitive_split<F: Scalar>(alg: &Algebra<F>, e: Vec<F>) -> Vec<Vec<F>> {
    let c = corner(alg, &e, &e);
    if c.dim() <= 1 {
        return vec![e];
    }
    match split_corner(alg, &c, &e) {
        Found::Idempotent(f) => {
            let rest = sub_vec(&e, &f);
            let mut out = primitive_split(alg, f);
            out.extend(primitive_split(alg, rest));
            out
        }
        Found::Field | Found::Exhausted => vec![e],
    }
}

fn sort_by_leading<F: Scalar>(v: &mut [Vec<F>]) {
    v.sort_by_key(|x| leading_index(x));
}

/// Central idempotents from the center, primitive ones inside each simple
/// factor, and the division corner of each factor.
pub fn semisimple_decompose<F: Scalar>(
    alg: &Algebra<F>,
) -> Result<SemisimpleDecomposition<F>, IdempotentError> {
    let n = alg.dim();
    if n == 0 {
        return Err(IdempotentError::ZeroAlgebra);
    }
    if !semiprime_check(alg) {
        return Err(IdempotentError::NotSemiprime);
    }
    let one = find_unity(alg).ok_or(IdempotentError::NotUnital)?;
    let z = center(alg).subspace;
    let mut centrals = central_split(alg, &z, one.into_coords())?;
    sort_by_leading(&mut centrals);

    let mut factors = Vec::new();
    let mut members = Vec::new();
    let mut flags = Vec::new();
    for c in centrals {
        let mut prims = primitive_split(alg, c.clone());
        sort_by_leading(&mut prims);
        let e1 = &prims[0];
        let d = corner(alg, e1, e1);
        let division = alg.subalgebra(&d)?.algebra;
        let division_type = frobenius_type(&division)?;
        let ideal: Vec<Vec<F>> = alg.basis().iter().map(|x| alg.mul(x.coords(), &c)).collect();
        let ideal = Subspace::span(n, &ideal);
        let label = alg.label_of(leading_index(&c)).to_string();
        for p in &prims {
            let central = alg.basis().iter().all(|x| {
                alg.mul(x.coords(), p) == alg.mul(p, x.coords())
            });
            members.push(Element::new(p.clone()));
            flags.push(IdempotentFlags { primitive: true, central });
        }
        factors.push(SimpleFactorReport {
            ideal: IdealSpace::new(ideal, Sidedness::TwoSided),
            matrix_degree: prims.len(),
            division_dim: d.dim(),
            division_type,
            field_label: label,
            central_idempotent: Element::new(c),
            primitive_idempotents: prims.into_iter().map(Element::new).collect(),
        });
    }
    Ok(SemisimpleDecomposition { factors, idempotents: IdempotentSet { members, flags } })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CornerKind {
    Division,
    Null,
    Other,
}

/// Classifies `e_i·A·e_j`: a division ring on the diagonal (every probe
/// element invertible in the corner), a null ring off it.
pub fn corner_division_check<F: Scalar>(
    alg: &Algebra<F>,
    ei: &Element<F>,
    ej: &Element<F>,
) -> CornerKind {
    let c = corner(alg, ei.coords(), ej.coords());
    let b = c.basis_vectors();
    if ei == ej && !c.is_zero() {
        let invertible = |p: &[F]| {
            let images: Vec<Vec<F>> = b.iter().map(|v| alg.mul(p, v)).collect();
            Subspace::span(alg.dim(), &images).dim() == c.dim()
        };
        if probes(alg, &c).iter().all(|p| invertible(p)) {
            return CornerKind::Division;
        }
    }
    if b.iter().all(|x| b.iter().all(|y| is_zero(&alg.mul(x, y)))) {
        return CornerKind::Null;
    }
    CornerKind::Other
}

/// Which of the three real-closed division templates a division corner
/// matches: `Q`-like of dimension 1, a quadratic field with negative
/// discriminant, or a quaternion algebra with negative `i²` and `j²`.
pub fn frobenius_type<F: Scalar>(d: &Algebra<F>) -> Result<DivisionType, IdempotentError> {
    let one = find_unity(d).ok_or(IdempotentError::NotUnital)?.into_coords();
    let n = d.dim();
    let span_one = Subspace::span(n, std::slice::from_ref(&one));
    // c with v = c·1
    let lead = leading_index(&one);
    let scalar_of = |v: &[F]| -> Option<F> {
        span_one.contains(v).then(|| v[lead].clone() / one[lead].clone())
    };
    match n {
        1 => Ok(DivisionType::Real),
        2 => {
            let t = (0..n)
                .map(|i| Subspace::standard_vector(n, i))
                .find(|v: &Vec<F>| !span_one.contains(v))
                .expect("dimension 2");
            let t2 = d.mul(&t, &t);
            let m = Matrix::from_columns(n, &[one.clone(), t.clone()]).expect("consistent");
            let c = solve(&m, &t2).expect("shapes").expect("basis");
            let (alpha, beta) = (c[0].clone(), c[1].clone());
            let disc = beta.clone() * beta + F::from_int(4) * alpha;
            Ok(if disc < F::zero() { DivisionType::Complex } else { DivisionType::Unrecognized })
        }
        4 => {
            let traces: Vec<F> = (0..n).map(|k| left_trace(d, &Subspace::standard_vector(n, k))).collect();
            let v = crate::linalg::kernel(&Matrix::from_rows(n, &[traces]).expect("row"));
            let Some(i) = v.basis_vectors().into_iter().next() else {
                return Ok(DivisionType::Unrecognized);
            };
            let Some(a) = scalar_of(&d.mul(&i, &i)) else {
                return Ok(DivisionType::Unrecognized);
            };
            // anticommuting trace-zero elements
            let rows: Vec<Vec<F>> = v
                .basis_vectors()
                .iter()
                .map(|x| {
                    let ix = d.mul(&i, x);
                    let xi = d.mul(x, &i);
                    ix.iter().zip(&xi).map(|(p, q)| p.clone() + q.clone()).collect()
                })
                .collect();
            // coefficients c over V's basis with Σ c_k (i·v_k + v_k·i) = 0
            let anti = crate::linalg::kernel(&Matrix::from_columns(n, &rows).expect("consistent"));
            let Some(cj) = anti.basis_vectors().into_iter().next() else {
                return Ok(DivisionType::Unrecognized);
            };
            let j = v.combine(&cj);
            let Some(b) = scalar_of(&d.mul(&j, &j)) else {
                return Ok(DivisionType::Unrecognized);
            };
            let ij = d.mul(&i, &j);
            let independent = Subspace::span(n, &[one.clone(), i.clone(), j.clone(), ij]).dim() == 4;
            Ok(if independent && a < F::zero() && b < F::zero() {
                DivisionType::Quaternion
            } else {
                DivisionType::Unrecognized
            })
        }
        _ => Ok(DivisionType::Unrecognized),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedCounts {
    pub label: String,
    pub r: usize,
    pub p: usize,
    pub q: usize,
    /// Factors whose division type is not one of the three templates.
    pub unrecognized: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Reducedness<F> {
    Reduced(Vec<ReducedCounts>),
    /// A nonzero `x` with `x² = 0`.
    NotReduced { witness: Element<F> },
}

pub fn reduced_decompose<F: Scalar>(
    alg: &Algebra<F>,
) -> Result<Reducedness<F>, IdempotentError> {
    if alg.dim() == 0 {
        return Ok(Reducedness::Reduced(Vec::new()));
    }
    let j = jacobson_radical(alg).subspace;
    if !j.is_zero() {
        // x in the last nonzero power J^m squares into J^{2m} = 0
        let powers = radical_powers(alg, &j);
        let last = &powers[powers.len() - 2];
        return Ok(Reducedness::NotReduced {
            witness: Element::new(last.basis().row(0).to_vec()),
        });
    }
    let dec = semisimple_decompose(alg)?;
    let mut counts: Vec<ReducedCounts> = Vec::new();
    for f in &dec.factors {
        if f.matrix_degree > 1 {
            let (e1, e2) = (&f.primitive_idempotents[0], &f.primitive_idempotents[1]);
            let off = corner(alg, e1.coords(), e2.coords());
            return Ok(Reducedness::NotReduced {
                witness: Element::new(off.basis().row(0).to_vec()),
            });
        }
        let entry = match counts.iter_mut().find(|c| c.label == f.field_label) {
            Some(e) => e,
            None => {
                counts.push(ReducedCounts {
                    label: f.field_label.clone(),
                    r: 0,
                    p: 0,
                    q: 0,
                    unrecognized: 0,
                });
                counts.last_mut().expect("just pushed")
            }
        };
        match f.division_type {
            DivisionType::Real => entry.r += 1,
            DivisionType::Complex => entry.p += 1,
            DivisionType::Quaternion => entry.q += 1,
            DivisionType::Unrecognized => entry.unrecognized += 1,
        }
    }
    Ok(Reducedness::Reduced(counts))
}
