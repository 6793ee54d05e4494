//! Univariate polynomials over the scalar field, minimal polynomials of
//! algebra elements, and a small factor search over the rationals.
//!
//! Coefficients are stored from the constant term upwards and kept trimmed,
//! so the zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Algebra;
use crate::linalg::{solve, Matrix};
use crate::scalar::Scalar;

pub type Poly<F> = Vec<F>;

pub fn trim<F: Scalar>(mut p: Poly<F>) -> Poly<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<F: Scalar>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add<F: Scalar>(a: &[F], b: &[F]) -> Poly<F> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_else(F::zero) + b.get(i).cloned().unwrap_or_else(F::zero)
            })
            .collect(),
    )
}

pub fn neg<F: Scalar>(a: &[F]) -> Poly<F> {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn sub<F: Scalar>(a: &[F], b: &[F]) -> Poly<F> {
    add(a, &neg(b))
}

pub fn mul<F: Scalar>(a: &[F], b: &[F]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Scalar>(a: &[F], b: &[F]) -> (Poly<F>, Poly<F>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r = trim(a.to_vec());
    let mut q = vec![F::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone() / lead.clone();
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[shift + i] = r[shift + i].clone() - c.clone() * bc.clone();
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic<F: Scalar>(p: &[F]) -> Poly<F> {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let lead = p[d].clone();
            p[..=d].iter().map(|c| c.clone() / lead.clone()).collect()
        }
    }
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b)` and `g` monic.
pub fn ext_gcd<F: Scalar>(a: &[F], b: &[F]) -> (Poly<F>, Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let lead = r0[d].clone();
            let scale = |p: &[F]| trim(p.iter().map(|c| c.clone() / lead.clone()).collect());
            (scale(&r0), scale(&s0), scale(&t0))
        }
    }
}

/// Evaluates `p(z)` in `alg`, reading the constant term as `c·unity`.
pub fn eval_in<F: Scalar>(alg: &Algebra<F>, p: &[F], z: &[F], unity: &[F]) -> Vec<F> {
    // Horner
    let mut acc = vec![F::zero(); alg.dim()];
    for c in p.iter().rev() {
        acc = alg.mul(&acc, z);
        for (a, u) in acc.iter_mut().zip(unity) {
            *a = a.clone() + c.clone() * u.clone();
        }
    }
    acc
}

/// Monic minimal polynomial of `z` in a subalgebra with identity `unity`
/// (the powers are `unity, z, z², …`).
pub fn minimal_polynomial<F: Scalar>(alg: &Algebra<F>, z: &[F], unity: &[F]) -> Poly<F> {
    let n = alg.dim();
    let mut powers: Vec<Vec<F>> = vec![unity.to_vec()];
    loop {
        let next = alg.mul(powers.last().expect("nonempty"), z);
        let d = powers.len();
        let m = Matrix::from_columns(n, &powers).expect("consistent lengths");
        if let Some(c) = solve(&m, &next).expect("consistent shapes") {
            // z^d = Σ c_i z^i
            let mut p: Vec<F> = c.into_iter().map(|x| -x).collect();
            p.push(F::one());
            return p;
        }
        powers.push(next);
        assert!(d <= n, "powers exceed the dimension");
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Split<F> {
    /// Two factors of positive degree whose product is the input.
    Factors(Poly<F>, Poly<F>),
    Irreducible,
    /// The search exceeded its budget (coefficients too large to factor
    /// by trial division, or too many Kronecker candidates).
    Unknown,
}

/// Splits a polynomial over the rationals into two factors of positive
/// degree. Rational roots are found first; higher-degree factors come from
/// Kronecker's interpolation search.
pub fn split_rational<F: Scalar>(p: &[F]) -> Split<F> {
    let q: Vec<BigRational> = p.iter().map(|c| c.to_big_rational()).collect();
    let g = match find_factor(&q) {
        Some(Some(g)) => g,
        Some(None) => return Split::Irreducible,
        None => return Split::Unknown,
    };
    let (h, r) = divrem(&q, &g);
    debug_assert!(r.is_empty());
    let back = |v: &[BigRational]| -> Option<Poly<F>> {
        v.iter().map(F::from_big_rational).collect::<Option<Vec<F>>>()
    };
    match (back(&g), back(&h)) {
        (Some(g), Some(h)) => Split::Factors(g, h),
        _ => Split::Unknown,
    }
}

/// Integer primitive multiple of a rational polynomial.
fn to_primitive(p: &[BigRational]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;
const KRONECKER_BUDGET: usize = 200_000;

/// Positive divisors by trial division, or `None` for large inputs.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// `Some(Some(g))`: a factor; `Some(None)`: irreducible; `None`: unknown.
fn find_factor(p: &[BigRational]) -> Option<Option<Vec<BigRational>>> {
    let Some(deg) = degree(p) else { return Some(None) };
    if deg < 2 {
        return Some(None);
    }
    let ints = to_primitive(&p[..=deg]);
    if let Some(root) = rational_root(&ints)? {
        return Some(Some(vec![-root, BigRational::one()]));
    }
    for d in 2..=deg / 2 {
        if let Some(g) = kronecker_factor(&ints, d)? {
            return Some(Some(g));
        }
    }
    Some(None)
}

fn rational_root(p: &[BigInt]) -> Option<Option<BigRational>> {
    if p[0].is_zero() {
        return Some(Some(BigRational::zero()));
    }
    let lead = p.last().expect("nonempty");
    let num = divisors(&p[0])?;
    let den = divisors(lead)?;
    let mut candidates: Vec<BigRational> = Vec::new();
    for a in &num {
        for b in &den {
            for sign in [1i64, -1] {
                let c = BigRational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                if !candidates.contains(&c) {
                    candidates.push(c);
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.abs().cmp(&y.abs()).then(y.cmp(x)));
    let rat: Vec<BigRational> = p.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    Some(candidates.into_iter().find(|c| {
        rat.iter().rev().fold(BigRational::zero(), |acc, k| acc * c + k).is_zero()
    }))
}

/// Searches an integer factor of degree exactly `d` through the values at
/// `d + 1` integer points. The outer `None` means the budget was exceeded.
fn kronecker_factor(p: &[BigInt], d: usize) -> Option<Option<Vec<BigRational>>> {
    let mut points = Vec::new();
    let mut values = Vec::new();
    let mut x = 0i64;
    while points.len() <= d {
        let v = eval_int(p, &BigInt::from(x));
        // no rational roots at this stage, so v ≠ 0
        points.push(BigInt::from(x));
        values.push(v);
        x = if x <= 0 { 1 - x } else { -x };
    }
    let choices: Vec<Vec<BigInt>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            divisors(v).map(|ds| {
                ds.into_iter()
                    .flat_map(|q| {
                        let q = BigInt::from(q);
                        if i == 0 { vec![q] } else { vec![q.clone(), -q] }
                    })
                    .collect()
            })
        })
        .collect::<Option<_>>()?;
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()))?;
    if total > KRONECKER_BUDGET {
        return None;
    }
    let target: Vec<BigRational> = p.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let ys: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let g = interpolate(&points, &ys);
        if degree(&g) == Some(d) {
            let (_, r) = divrem(&target, &g);
            if r.is_empty() {
                return Some(Some(monic(&g)));
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Some(None);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::new();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = mul(&basis, &[BigRational::from_integer(-xj.clone()), BigRational::one()]);
                denom *= BigRational::from_integer(xi - xj);
            }
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        out = add(&out, &basis.iter().map(|c| c * &scale).collect::<Vec<_>>());
    }
    out
}
