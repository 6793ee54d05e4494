use proptest::prelude::*;

use super::*;
use crate::families::{
    hamilton, in_trivial, matrix_algebra, null_ring, rational_field, strictly_upper,
    upper_triangular,
};
use crate::linalg::Subspace;
use crate::Rat;

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

fn el(alg: &Algebra<Rat>, c: &[i64]) -> Element<Rat> {
    alg.element_from_ints(c)
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace<Rat> {
    let vs: Vec<Vec<Rat>> = vs.iter().map(|v| v.iter().map(|&x| r(x)).collect()).collect();
    Subspace::span(n, &vs)
}

fn q_times_q() -> Algebra<Rat> {
    rational_field().direct_sum(&rational_field()).unwrap()
}

// Independent oracle: 2×2 matrices as [a, b; c, d] row-major.
fn mat2_mul(x: &[i64; 4], y: &[i64; 4]) -> [i64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

#[test]
fn matrix_units_multiply() {
    let m2 = matrix_algebra::<Rat>(2);
    let p = m2.multiply(&el(&m2, &[0, 1, 0, 0]), &el(&m2, &[0, 0, 1, 0])).unwrap();
    assert_eq!(p, el(&m2, &[1, 0, 0, 0]));
}

#[test]
fn m2_agrees_with_direct_matrix_product() {
    let m2 = matrix_algebra::<Rat>(2);
    let xs = [[1, 2, -3, 4], [0, 5, 1, -1], [2, 0, 0, 7]];
    for x in &xs {
        for y in &xs {
            assert_eq!(m2.multiply(&el(&m2, x), &el(&m2, y)).unwrap(), el(&m2, &mat2_mul(x, y)));
        }
    }
}

#[test]
fn t3_product_matches_matrices() {
    let t3 = strictly_upper::<Rat>(3);
    let p = t3.multiply(&el(&t3, &[1, 0, 0]), &el(&t3, &[0, 0, 1])).unwrap();
    assert_eq!(p, el(&t3, &[0, 1, 0]));
}

#[test]
fn multiply_rejects_wrong_length() {
    let t3 = strictly_upper::<Rat>(3);
    let err = t3.multiply(&el(&t3, &[1, 0, 0]), &Element::new(vec![r(1)])).unwrap_err();
    assert_eq!(err, AlgebraError::MismatchedAlgebras { dim: 3, found: 1 });
}

#[test]
fn null_ring_products_vanish() {
    let n = null_ring::<Rat>(3);
    assert!(n.multiply(&el(&n, &[1, 2, 3]), &el(&n, &[-1, 0, 5])).unwrap().is_zero());
}

#[test]
fn non_associative_constants_are_rejected() {
    // e1·e1 = e2 and e2·e1 = e1 but e1·e2 = 0
    let err = Algebra::<Rat>::from_sparse_unlabeled("bad", 2, &[(0, 0, 1, r(1)), (1, 0, 0, r(1))])
        .unwrap_err();
    assert!(matches!(err, AlgebraError::NonAssociative { .. }));
    assert!(err.to_string().starts_with("associativity fails at"));
}

#[test]
fn cross_label_products_are_rejected() {
    let labels = vec!["K1".to_string(), "K2".to_string()];
    let err = Algebra::<Rat>::from_sparse("x", labels, &[(0, 1, 0, r(1))]).unwrap_err();
    assert_eq!(err, AlgebraError::CrossLabelProduct { i: 0, j: 1 });
}

#[test]
fn non_contiguous_labels_are_rejected() {
    let labels = ["K1", "K2", "K1"].iter().map(|s| s.to_string()).collect();
    let err = Algebra::<Rat>::from_sparse("x", labels, &[]).unwrap_err();
    assert!(matches!(err, AlgebraError::NonContiguousLabel { .. }));
}

#[test]
fn annihilators_of_unital_and_null() {
    let m2 = matrix_algebra::<Rat>(2);
    let a = annihilators(&m2, &m2.basis());
    assert!(a.left.is_zero() && a.right.is_zero() && a.two_sided.is_zero());
    assert_eq!(a.two_sided.sidedness, Sidedness::TwoSided);

    let n = null_ring::<Rat>(2);
    let a = annihilators(&n, &n.basis());
    assert!(a.left.subspace.is_full() && a.right.subspace.is_full());
    assert!(a.two_sided.subspace.is_full());
}

#[test]
fn in_trivial_annihilator() {
    let alg = in_trivial::<Rat>(1);
    let a = annihilators(&alg, &alg.basis());
    assert_eq!(a.two_sided.subspace, span(3, &[&[0, 1, 0]]));
    // a·anything = 0 and x, b are not two-sided annihilators
    assert_eq!(a.left.subspace, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    assert_eq!(a.right.subspace, span(3, &[&[0, 1, 0], &[0, 0, 1]]));
}

#[test]
fn center_and_centralizer() {
    let m2 = matrix_algebra::<Rat>(2);
    assert_eq!(center(&m2).subspace, span(4, &[&[1, 0, 0, 1]]));

    let c = rational_field::<Rat>().direct_sum(&rational_field()).unwrap();
    assert!(center(&c).subspace.is_full());

    let h = hamilton::<Rat>();
    let ci = centralizer(&h, &el(&h, &[0, 1, 0, 0]));
    assert_eq!(ci.subspace, span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
    assert_eq!(ci.sidedness, Sidedness::SubringOnly);
}

#[test]
fn generated_subrings() {
    let m2 = matrix_algebra::<Rat>(2);
    let s = generated_subring(&m2, &[el(&m2, &[0, 1, 0, 0])]);
    assert_eq!(s.subspace, span(4, &[&[0, 1, 0, 0]]));

    let one = el(&m2, &[1, 0, 0, 1]);
    assert_eq!(generated_subring(&m2, &[one]).dim(), 1);

    let h = hamilton::<Rat>();
    let s = generated_subring(&h, &[el(&h, &[0, 1, 0, 0])]);
    assert_eq!(s.subspace, span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
}

#[test]
fn power_spans() {
    let t3 = strictly_upper::<Rat>(3);
    assert_eq!(power_span(&t3, 1).dim(), 3);
    assert_eq!(power_span(&t3, 2), span(3, &[&[0, 1, 0]]));
    assert!(power_span(&t3, 3).is_zero());
    let m2 = matrix_algebra::<Rat>(2);
    for k in 1..5 {
        assert!(power_span(&m2, k).is_full());
    }
    assert!(power_span(&null_ring::<Rat>(2), 2).is_zero());
}

#[test]
#[should_panic]
fn power_span_rejects_zero() {
    power_span(&strictly_upper::<Rat>(3), 0);
}

#[test]
fn unity_search() {
    let m2 = matrix_algebra::<Rat>(2);
    assert_eq!(find_unity(&m2), Some(el(&m2, &[1, 0, 0, 1])));
    assert_eq!(find_unity(&strictly_upper::<Rat>(3)), None);
    let qq = q_times_q();
    assert_eq!(find_unity(&qq), Some(el(&qq, &[1, 1])));
    assert_eq!(find_unity(&upper_triangular::<Rat>(2)), Some(el(&upper_triangular(2), &[1, 0, 1])));
}

#[test]
fn element_kinds() {
    let qq = q_times_q();
    let inv = Element::new(vec![Rat::from_frac(1, 2), Rat::from_frac(1, 3)]);
    assert_eq!(classify_element(&qq, &el(&qq, &[2, 3])), ElementKind::Unit { inverse: inv });
    assert_eq!(
        classify_element(&qq, &el(&qq, &[1, 0])),
        ElementKind::ZeroDivisor { witness: el(&qq, &[0, 1]), side: ZeroDivisorSide::Both }
    );
    assert_eq!(classify_element(&qq, &qq.zero()), ElementKind::Zero);

    let m2 = matrix_algebra::<Rat>(2);
    let e12 = el(&m2, &[0, 1, 0, 0]);
    match classify_element(&m2, &e12) {
        ElementKind::ZeroDivisor { witness, side } => {
            assert_eq!(side, ZeroDivisorSide::Both);
            assert!(m2.multiply(&e12, &witness).unwrap().is_zero());
            assert!(m2.multiply(&witness, &e12).unwrap().is_zero());
            assert_eq!(witness, e12);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn quotient_and_subalgebra_presentations() {
    let ut = upper_triangular::<Rat>(2);
    let q = ut.quotient(&span(3, &[&[0, 1, 0]])).unwrap();
    assert_eq!(q.algebra.dim(), 2);
    assert_eq!(q.kept, vec![0, 2]);
    assert!(q.algebra.check_associativity().is_ok());
    assert_eq!(find_unity(&q.algebra), Some(Element::new(vec![r(1), r(1)])));

    let t3 = strictly_upper::<Rat>(3);
    let q = t3.quotient(&span(3, &[&[0, 1, 0]])).unwrap();
    assert!(q.algebra.is_null());
    assert_eq!(q.algebra.dim(), 2);

    assert_eq!(
        ut.quotient(&span(3, &[&[1, 0, 0]])).unwrap_err(),
        AlgebraError::NotTwoSided
    );
    let sub = ut.subalgebra(&span(3, &[&[1, 0, 0], &[0, 0, 1]])).unwrap();
    assert_eq!(sub.algebra.dim(), 2);
    assert!(sub.algebra.check_associativity().is_ok());
}

// ---- properties ----

fn corpus() -> Vec<Algebra<Rat>> {
    vec![
        matrix_algebra(2),
        strictly_upper(4),
        upper_triangular(3),
        hamilton(),
        in_trivial(2),
        q_times_q(),
        crate::families::two_label_example(),
    ]
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Rat::from_frac(p, q))
}

fn element_of(dim: usize) -> impl Strategy<Value = Element<Rat>> {
    proptest::collection::vec(small_rat(), dim).prop_map(Element::new)
}

fn algebra_and_elements(k: usize) -> impl Strategy<Value = (Algebra<Rat>, Vec<Element<Rat>>)> {
    (0..corpus().len()).prop_flat_map(move |i| {
        let alg = corpus().swap_remove(i);
        let d = alg.dim();
        (Just(alg), proptest::collection::vec(element_of(d), 1..=k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zero_unit_trichotomy((alg, xs) in algebra_and_elements(1)) {
        let a = &xs[0];
        match classify_element(&alg, a) {
            ElementKind::Zero => prop_assert!(a.is_zero()),
            ElementKind::Unit { inverse } => {
                let one = find_unity(&alg).unwrap();
                prop_assert_eq!(alg.multiply(a, &inverse).unwrap(), one.clone());
                prop_assert_eq!(alg.multiply(&inverse, a).unwrap(), one);
            }
            ElementKind::ZeroDivisor { witness, side } => {
                prop_assert!(!a.is_zero() && !witness.is_zero());
                let aw = alg.multiply(a, &witness).unwrap().is_zero();
                let wa = alg.multiply(&witness, a).unwrap().is_zero();
                match side {
                    ZeroDivisorSide::Left => prop_assert!(aw),
                    ZeroDivisorSide::Right => prop_assert!(wa),
                    ZeroDivisorSide::Both => prop_assert!(aw && wa),
                }
            }
        }
    }

    #[test]
    fn annihilator_sidedness((alg, xs) in algebra_and_elements(3)) {
        let a = annihilators(&alg, &xs);
        prop_assert!(a.left.verify(&alg));
        prop_assert!(a.right.verify(&alg));
        prop_assert!(alg.is_closed_under_mul(&a.two_sided.subspace));
        for v in a.left.subspace.basis_vectors() {
            for x in &xs {
                prop_assert!(alg.mul(&v, x.coords()).iter().all(|c| c == &r(0)));
            }
        }
    }

    #[test]
    fn generated_subring_is_least((alg, xs) in algebra_and_elements(2), extra in 0usize..3) {
        let s = generated_subring(&alg, &xs);
        prop_assert!(alg.is_closed_under_mul(&s.subspace));
        for x in &xs {
            prop_assert!(s.subspace.contains(x.coords()));
        }
        // any closed subspace containing xs (here: closure of xs plus basis vectors) contains s
        let mut gens: Vec<Vec<Rat>> = xs.iter().map(|x| x.coords().to_vec()).collect();
        gens.extend((0..extra.min(alg.dim())).map(|i| Subspace::standard_vector(alg.dim(), i)));
        let bigger = generated_subring(&alg, &gens.into_iter().map(Element::new).collect::<Vec<_>>());
        prop_assert!(s.subspace.is_subspace_of(&bigger.subspace));
    }

    #[test]
    fn scalar_compatibility((alg, xs) in algebra_and_elements(2), s in small_rat(), t in small_rat()) {
        let u = &xs[0];
        let v = xs.get(1).unwrap_or(&xs[0]);
        let lhs = alg.multiply(&u.scale(&s), &v.scale(&t)).unwrap();
        let rhs = alg.multiply(u, v).unwrap().scale(&(s * t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_spans_decrease((alg, _xs) in algebra_and_elements(1)) {
        let n = alg.dim();
        for k in 1..=n {
            prop_assert!(power_span(&alg, k + 1).is_subspace_of(&power_span(&alg, k)));
        }
    }
}
