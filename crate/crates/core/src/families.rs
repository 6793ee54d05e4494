//! Named algebra families used as inputs, examples and the test corpus.

use crate::algebra::{Algebra, AlgebraError, DEFAULT_LABEL};
use crate::scalar::Scalar;

fn single_label(n: usize) -> Vec<String> {
    vec![DEFAULT_LABEL.to_string(); n]
}

fn build<F: Scalar>(
    name: String,
    names: Vec<String>,
    triples: Vec<(usize, usize, usize, F)>,
) -> Algebra<F> {
    Algebra::from_sparse(name, single_label(names.len()), &triples)
        .and_then(|a| a.with_basis_names(names))
        .expect("family constants are associative")
}

/// Matrix units `E_ij` spanning a set of positions, with
/// `E_ij·E_kl = δ_jk E_il` whenever the product stays inside the set.
fn matrix_units<F: Scalar>(name: String, positions: Vec<(usize, usize)>) -> Algebra<F> {
    let index = |p: (usize, usize)| positions.iter().position(|&q| q == p);
    let mut triples = Vec::new();
    for (s, &(i, j)) in positions.iter().enumerate() {
        for (t, &(k, l)) in positions.iter().enumerate() {
            if j == k {
                if let Some(u) = index((i, l)) {
                    triples.push((s, t, u, F::one()));
                }
            }
        }
    }
    let names = positions.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    build(name, names, triples)
}

/// Full matrix algebra `M_n`, basis `E11, E12, …, Enn` row-major.
pub fn matrix_algebra<F: Scalar>(n: usize) -> Algebra<F> {
    let pos = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_units(format!("M{n}"), pos)
}

/// Strictly upper triangular `T_n`, basis `E_ij` (i < j) in lexicographic order.
pub fn strictly_upper<F: Scalar>(n: usize) -> Algebra<F> {
    let pos = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    matrix_units(format!("T{n}"), pos)
}

/// Upper triangular matrices including the diagonal.
pub fn upper_triangular<F: Scalar>(n: usize) -> Algebra<F> {
    let pos = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_units(format!("UT{n}"), pos)
}

/// The base field itself, one basis element `1`.
pub fn rational_field<F: Scalar>() -> Algebra<F> {
    build("Q".into(), vec!["1".into()], vec![(0, 0, 0, F::one())])
}

/// `Q[t]/(t² + 1)`, basis `1, t`.
pub fn gaussian_field<F: Scalar>() -> Algebra<F> {
    let one = F::one();
    build(
        "Q(i)".into(),
        vec!["1".into(), "t".into()],
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (1, 1, 0, -one),
        ],
    )
}

/// `Q[t]/(t² − α·1 − β·t)`, basis `1, t`.
pub fn quadratic_algebra<F: Scalar>(alpha: F, beta: F) -> Algebra<F> {
    let one = F::one();
    build(
        format!("Q[t]/(t^2-{beta}t-{alpha})"),
        vec!["1".into(), "t".into()],
        vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one),
            (1, 1, 0, alpha),
            (1, 1, 1, beta),
        ],
    )
}

/// The quaternion algebra `(a, b)`: `i² = a`, `j² = b`, `ij = −ji = k`.
pub fn quaternion<F: Scalar>(a: F, b: F) -> Algebra<F> {
    let one = F::one();
    let ab = a.clone() * b.clone();
    let t = |i, j, k, c: F| (i, j, k, c);
    let triples = vec![
        t(0, 0, 0, one.clone()),
        t(0, 1, 1, one.clone()),
        t(0, 2, 2, one.clone()),
        t(0, 3, 3, one.clone()),
        t(1, 0, 1, one.clone()),
        t(2, 0, 2, one.clone()),
        t(3, 0, 3, one.clone()),
        t(1, 1, 0, a.clone()),
        t(2, 2, 0, b.clone()),
        t(3, 3, 0, -ab),
        t(1, 2, 3, one.clone()),
        t(2, 1, 3, -one.clone()),
        t(1, 3, 2, a.clone()),
        t(3, 1, 2, -a),
        t(3, 2, 1, b.clone()),
        t(2, 3, 1, -b.clone()),
    ];
    let names = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
    build("H".into(), names, triples)
}

/// Hamilton's quaternions `(−1, −1)`.
pub fn hamilton<F: Scalar>() -> Algebra<F> {
    quaternion(F::from_int(-1), F::from_int(-1))
}

/// Null ring of dimension `n`.
pub fn null_ring<F: Scalar>(n: usize) -> Algebra<F> {
    let names = (1..=n).map(|i| format!("n{i}")).collect();
    build(format!("N{n}"), names, vec![])
}

/// Nilpotent algebra of dimension `2n + 1` with basis `x, a_1…a_n, b_1…b_n`
/// and the single product family `b_i·x = a_i`; realised by block matrices
/// with `x` on the sub-diagonal and `a_i, b_i` in the last row of block `i`.
pub fn in_trivial<F: Scalar>(n: usize) -> Algebra<F> {
    let mut names = vec!["x".to_string()];
    names.extend((1..=n).map(|i| format!("a{i}")));
    names.extend((1..=n).map(|i| format!("b{i}")));
    let triples = (0..n).map(|i| (1 + n + i, 0, 1 + i, F::one())).collect();
    build(format!("InTrivial{n}"), names, triples)
}

/// The two-dimensional algebra `(x, a)·(y, b) = (0, xy)`: `e1·e1 = e2`.
pub fn cocycle<F: Scalar>() -> Algebra<F> {
    build("Cocycle".into(), vec!["x".into(), "a".into()], vec![(0, 0, 1, F::one())])
}

/// Copies of `alg` joined by direct products.
pub fn power<F: Scalar>(alg: &Algebra<F>, copies: usize) -> Result<Algebra<F>, AlgebraError> {
    let mut out = Algebra::zero_algebra(format!("{}^{copies}", alg.name()));
    for _ in 0..copies {
        out = out.direct_sum(alg)?;
    }
    Ok(out.with_name(format!("{}^{copies}", alg.name())))
}

/// `Q^r × Q(i)^p × H^q` over a single label.
pub fn reduced<F: Scalar>(r: usize, p: usize, q: usize, label: &str) -> Algebra<F> {
    let parts = [
        power(&rational_field(), r),
        power(&gaussian_field(), p),
        power(&hamilton(), q),
    ];
    let mut out = Algebra::zero_algebra("");
    for part in parts {
        out = out.direct_sum(&part.expect("products of fields")).expect("same label");
    }
    out.relabeled(label).with_name(format!("Q^{r} x C^{p} x H^{q} [{label}]"))
}

/// `M_2` over label `K1` together with `Q` over label `K2`.
pub fn two_label_example<F: Scalar>() -> Algebra<F> {
    matrix_algebra::<F>(2)
        .relabeled("K1")
        .direct_sum(&rational_field::<F>().relabeled("K2"))
        .expect("distinct labels")
        .with_name("M2[K1] x Q[K2]")
}

/// Places `alg` over `label`.
pub fn labeled<F: Scalar>(alg: &Algebra<F>, label: &str) -> Algebra<F> {
    alg.relabeled(label)
}
