//! Acceptance suite. Runs without the libtest harness so that the summary
//! lines are always printed; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ringstruct::algebra::{annihilators, find_unity, label_generated_subring, Algebra};
use ringstruct::document::Document;
use ringstruct::families::*;
use ringstruct::finite::{
    disconnected_example, jacobson_definitional, largest_nilpotent_ideal, matrix_ring_mod,
    prop_f_decompose, strictly_upper_mod, upper_triangular_mod, zmod, FiniteRing, MixedRing,
};
use ringstruct::idempotent::{
    classify, corner_division_check, definable_unitization, find_idempotent,
    minimal_one_sided_ideal, reduced_decompose, semisimple_decompose, CornerKind, ReducedCounts,
    Reducedness, Side,
};
use ringstruct::linalg::{Matrix, Subspace};
use ringstruct::radical::{is_nilpotent, jacobson_radical, nilpotent_flag, radical_complement};
use ringstruct::report::{build_report, Command};
use ringstruct::Rat;

type Outcome = Result<String, String>;

fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------- independent oracles ----------

/// Dense product straight from the structure constants.
fn dense_mul(alg: &Algebra<Rat>, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let n = alg.dim();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let c = &x[i] * &y[j];
            for (k, t) in alg.constant(i, j).iter().enumerate() {
                if !t.is_zero() {
                    out[k] += &c * t;
                }
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn is_zero(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Row echelon basis by plain Gaussian elimination.
fn echelon(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = vectors.iter().filter(|v| !is_zero(v)).cloned().collect();
    let Some(width) = rows.first().map(Vec::len) else { return Vec::new() };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pr = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

fn rank(vectors: &[Vec<Rat>]) -> usize {
    echelon(vectors).len()
}

fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    rank(&all) == rank(basis)
}

/// `P_{k+1} = P_k · A` with `P_1 = A`, as spanning sets.
fn power_dims(alg: &Algebra<Rat>, upto: usize) -> Vec<usize> {
    let n = alg.dim();
    let mut p: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    let mut dims = vec![rank(&p)];
    for _ in 1..upto {
        let next: Vec<Vec<Rat>> =
            p.iter().flat_map(|x| (0..n).map(move |j| (x, j))).map(|(x, j)| dense_mul(alg, x, &unit(n, j))).collect();
        p = echelon(&next);
        dims.push(p.len());
    }
    dims
}

fn element_nilpotent(alg: &Algebra<Rat>, x: &[Rat]) -> bool {
    let mut p = x.to_vec();
    for _ in 0..=alg.dim() {
        if is_zero(&p) {
            return true;
        }
        p = dense_mul(alg, &p, x);
    }
    is_zero(&p)
}

fn associative(alg_dim: usize, mul: impl Fn(usize, usize) -> Vec<Rat>) -> bool {
    let n = alg_dim;
    let prod = |x: &[Rat], y: &[Rat]| {
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let c = &x[i] * &y[j];
                if c.is_zero() {
                    continue;
                }
                for (k, t) in mul(i, j).iter().enumerate() {
                    out[k] += &c * t;
                }
            }
        }
        out
    };
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| prod(&mul(i, j), &unit(n, k)) == prod(&unit(n, i), &mul(j, k)))
        })
    })
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=2).into())
}

/// Same algebra in the basis `b` (rows), block-diagonal over labels.
fn rebased(alg: &Algebra<Rat>, b: &[Vec<Rat>]) -> Algebra<Rat> {
    let n = alg.dim();
    let m = Matrix::from_rows(n, b).unwrap();
    let inv_t = m.inverse().expect("invertible").transpose();
    let mut constants = Vec::new();
    for x in b {
        for y in b {
            constants.push(inv_t.mul_vec(&dense_mul(alg, x, y)).unwrap());
        }
    }
    Algebra::new(format!("{}'", alg.name()), alg.labels().to_vec(), constants).unwrap()
}

/// Unit upper-triangular change of basis that respects label blocks.
fn random_basis(alg: &Algebra<Rat>, rng: &mut ChaCha8Rng) -> Vec<Vec<Rat>> {
    let n = alg.dim();
    let mut b: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
    for (_, range) in alg.label_blocks() {
        for i in range.clone() {
            for j in i + 1..range.end {
                b[i][j] = r(rng.gen_range(-2i64..=2));
            }
        }
    }
    b
}

// ---------- corpus ----------

fn corpus() -> Vec<Algebra<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut base: Vec<Algebra<Rat>> = Vec::new();
    base.extend((1..=5).map(strictly_upper));
    base.extend((1..=3).map(matrix_algebra));
    base.push(hamilton());
    base.extend((1..=3).map(in_trivial));
    base.push(cocycle());
    base.extend((1..=4).map(upper_triangular));
    base.extend((1..=3).map(null_ring));
    base.push(rational_field());
    base.push(gaussian_field());
    base.push(quaternion(r(1), r(1)));
    base.push(two_label_example());
    let small: Vec<Algebra<Rat>> = base.iter().filter(|a| a.dim() <= 5).cloned().collect();
    let mut all = base.clone();
    for _ in 0..20 {
        let a = &small[rng.gen_range(0..small.len())];
        let b = &small[rng.gen_range(0..small.len())];
        let la = if rng.gen_bool(0.5) { "K1" } else { "K2" };
        let lb = if rng.gen_bool(0.5) { "K1" } else { "K2" };
        let s = a.relabeled(la).direct_sum(&b.relabeled(lb)).unwrap();
        let s = s.with_name(format!("{}[{la}] x {}[{lb}]", a.name(), b.name()));
        if rng.gen_bool(0.5) {
            let basis = random_basis(&s, &mut rng);
            all.push(rebased(&s, &basis));
        } else {
            all.push(s);
        }
    }
    let mut quotients = 0;
    while quotients < 15 {
        let a = &base[rng.gen_range(0..base.len())];
        let n = a.dim();
        let x: Vec<Rat> = (0..n).map(|_| if rng.gen_bool(0.4) { random_rat(&mut rng) } else { Rat::zero() }).collect();
        if is_zero(&x) {
            continue;
        }
        // two-sided ideal generated by x
        let mut gens = vec![x.clone()];
        for i in 0..n {
            let ei = unit(n, i);
            let left = dense_mul(a, &ei, &x);
            gens.push(left.clone());
            gens.push(dense_mul(a, &x, &ei));
            for j in 0..n {
                gens.push(dense_mul(a, &left, &unit(n, j)));
            }
        }
        let ideal = Subspace::span(n, &gens);
        if ideal.dim() == n {
            continue;
        }
        let q = a.quotient(&ideal).unwrap().algebra.with_name(format!("{}/({})", a.name(), quotients));
        all.push(q);
        quotients += 1;
    }
    all
}

// ---------- criteria ----------

fn criterion_1(corpus: &[Algebra<Rat>]) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nilpotent_count = 0;
    for alg in corpus {
        let n = alg.dim();
        let c_nilpotent = is_nilpotent(alg).nilpotent;
        let mut samples: Vec<Vec<Rat>> = (0..n).map(|i| unit(n, i)).collect();
        samples.extend((0..50).map(|_| (0..n).map(|_| random_rat(&mut rng)).collect()));
        let c_nil = samples.iter().all(|x| element_nilpotent(alg, x));
        let c_power = power_dims(alg, n + 1).last().copied() == Some(0) || n == 0;
        let e = find_idempotent(alg);
        if let Some(e) = &e {
            let e = e.coords();
            ensure(!is_zero(e) && dense_mul(alg, e, e) == e, || format!("{}: bad idempotent", alg.name()))?;
        }
        let c_no_idem = e.is_none();
        let c_j = jacobson_radical(alg).dim() == n;
        let all = [c_nilpotent, c_nil, c_power, c_no_idem, c_j];
        ensure(all.iter().all(|&b| b == all[0]), || format!("{}: conditions disagree {all:?}", alg.name()))?;
        nilpotent_count += c_nilpotent as usize;
    }
    let t = start.elapsed();
    ensure(corpus.len() >= 50, || format!("corpus has only {} algebras", corpus.len()))?;
    ensure(t <= Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{} algebras ({nilpotent_count} nilpotent), five conditions agree, {:.1}s", corpus.len(), t.as_secs_f64()))
}

/// Sum of all nilpotent principal ideals, by closure over the tables.
fn finite_oracle(f: &FiniteRing) -> BTreeSet<usize> {
    let n = f.order();
    let close = |seed: &BTreeSet<usize>| {
        let mut s = seed.clone();
        s.insert(f.zero());
        loop {
            let mut next = s.clone();
            for &x in &s {
                for y in 0..n {
                    next.insert(f.mul(x, y));
                    next.insert(f.mul(y, x));
                }
                for &y in &s {
                    next.insert(f.add(x, y));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let additive = |seed: BTreeSet<usize>| {
        let mut s = seed;
        s.insert(f.zero());
        loop {
            let next: BTreeSet<usize> = s.iter().flat_map(|&x| s.iter().map(move |&y| (x, y))).map(|(x, y)| f.add(x, y)).chain(s.iter().copied()).collect();
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let nilpotent = |ideal: &BTreeSet<usize>| {
        let mut p = ideal.clone();
        for _ in 0..=n {
            if p.len() == 1 {
                return true;
            }
            let prods = p.iter().flat_map(|&x| ideal.iter().map(move |&y| (x, y))).map(|(x, y)| f.mul(x, y)).collect();
            p = additive(prods);
        }
        p.len() == 1
    };
    let mut acc = BTreeSet::new();
    for a in 0..n {
        let principal = close(&BTreeSet::from([a]));
        if nilpotent(&principal) {
            acc.extend(principal);
        }
    }
    close(&acc)
}

fn prime_radical(n: u64) -> u64 {
    let mut m = n;
    let mut rad = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            rad *= p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        rad *= m;
    }
    rad
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut literal_matches = 0;
    for n in 1..=100u64 {
        let ring = zmod(n as usize);
        let j: BTreeSet<usize> = jacobson_definitional(&ring).into_iter().collect();
        let rad = prime_radical(n);
        let expected: BTreeSet<usize> = (0..n).filter(|x| x % rad == 0).map(|x| x as usize).collect();
        ensure(j == expected, || format!("Z/{n}: got {j:?}"))?;
        let step = n / rad;
        let literal: BTreeSet<usize> = (0..n).filter(|x| x % step == 0).map(|x| x as usize).collect();
        literal_matches += (literal == j) as usize;
    }
    let z4: Vec<usize> = jacobson_definitional(&zmod(4));
    ensure(z4 == vec![0, 2], || format!("Z/4 gave {z4:?}"))?;
    let z12: BTreeSet<usize> = jacobson_definitional(&zmod(12)).into_iter().collect();
    ensure(z12 == BTreeSet::from([0, 6]), || format!("Z/12 gave {z12:?}"))?;
    let rings = [
        matrix_ring_mod(2, 2).unwrap(),
        strictly_upper_mod(2, 2).unwrap(),
        strictly_upper_mod(3, 2).unwrap(),
        strictly_upper_mod(2, 3).unwrap(),
        strictly_upper_mod(3, 3).unwrap(),
        upper_triangular_mod(2, 2).unwrap(),
        upper_triangular_mod(2, 3).unwrap(),
        upper_triangular_mod(3, 2).unwrap(),
    ];
    for f in &rings {
        let j: BTreeSet<usize> = jacobson_definitional(f).into_iter().collect();
        let lib: BTreeSet<usize> = largest_nilpotent_ideal(f).into_iter().collect();
        let oracle = finite_oracle(f);
        ensure(j == oracle && lib == oracle, || format!("{}: definitional {} / oracle {}", f.name(), j.len(), oracle.len()))?;
    }
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(30), || format!("took {t:?}"))?;
    Ok(format!(
        "Z/n for n <= 100 equals rad(n)*Z/n; {} table rings match the nilpotent-ideal oracle, {:.1}s (literal (n/rad n)*Z/n agrees for {literal_matches}/100 n)",
        rings.len(),
        t.as_secs_f64()
    ))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    for n in 1..=3 {
        let alg = in_trivial::<Rat>(n);
        let d = alg.dim();
        let flag = nilpotent_flag(&alg).map_err(|e| e.to_string())?;
        // annihilator by direct linear algebra: rows of L_x and R_x
        let mut eqs: Vec<Vec<Rat>> = Vec::new();
        for j in 0..d {
            for k in 0..d {
                eqs.push((0..d).map(|i| alg.constant(i, j)[k].clone()).collect());
                eqs.push((0..d).map(|i| alg.constant(j, i)[k].clone()).collect());
            }
        }
        let ann_dim = d - rank(&eqs);
        let lib_ann = annihilators(&alg, &alg.basis()).two_sided;
        ensure(lib_ann.dim() == ann_dim, || format!("n={n}: Ann {} vs {ann_dim}", lib_ann.dim()))?;
        ensure(flag.ideals[flag.annihilator_index].subspace == lib_ann.subspace, || format!("n={n}: flag misses Ann"))?;
        let i2n = flag.ideals[2 * n].dim();
        ensure(i2n - ann_dim == n, || format!("n={n}: dim I_2n - dim Ann = {}", i2n - ann_dim))?;
        parts.push(format!("n={n}: {i2n}-{ann_dim}={n}"));
    }
    Ok(parts.join(", "))
}

fn counts_of(alg: &Algebra<Rat>) -> Result<Vec<ReducedCounts>, String> {
    match reduced_decompose(alg).map_err(|e| e.to_string())? {
        Reducedness::Reduced(c) => Ok(c),
        Reducedness::NotReduced { .. } => Err(format!("{} reported not reduced", alg.name())),
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let combos: Vec<(usize, usize, usize)> =
        (0..=2).flat_map(|a| (0..=2).flat_map(move |b| (0..=1).map(move |c| (a, b, c)))).collect();
    let mut checked = 0;
    let expect = |label: &str, (a, b, c): (usize, usize, usize)| ReducedCounts {
        label: label.into(),
        r: a,
        p: b,
        q: c,
        unrecognized: 0,
    };
    for &t in &combos {
        let alg = reduced::<Rat>(t.0, t.1, t.2, "K1");
        let want: Vec<ReducedCounts> = if alg.dim() == 0 { vec![] } else { vec![expect("K1", t)] };
        let basis = random_basis(&alg, &mut rng);
        for a in [alg.clone(), rebased(&alg, &basis)] {
            let got = counts_of(&a)?;
            ensure(got == want, || format!("{t:?}: got {got:?}"))?;
            checked += 1;
        }
    }
    let nonzero: Vec<_> = combos.iter().copied().filter(|t| *t != (0, 0, 0)).collect();
    for (idx, &t1) in nonzero.iter().enumerate() {
        let t2 = nonzero[(idx * 7 + 3) % nonzero.len()];
        let alg = reduced::<Rat>(t1.0, t1.1, t1.2, "K1").direct_sum(&reduced(t2.0, t2.1, t2.2, "K2")).unwrap();
        let basis = random_basis(&alg, &mut rng);
        let got = counts_of(&rebased(&alg, &basis))?;
        let want = vec![expect("K1", t1), expect("K2", t2)];
        ensure(got == want, || format!("{t1:?}/{t2:?}: got {got:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} reduced algebras recover (r, p, q) per label"))
}

fn criterion_5() -> Outcome {
    for n in 1..=3 {
        let alg = matrix_algebra::<Rat>(n);
        let d = semisimple_decompose(&alg).map_err(|e| e.to_string())?;
        ensure(d.factors.len() == 1, || format!("M_{n}: {} factors", d.factors.len()))?;
        let es: Vec<Vec<Rat>> = d.idempotents.members.iter().map(|e| e.coords().to_vec()).collect();
        ensure(es.len() == n, || format!("M_{n}: {} primitive idempotents", es.len()))?;
        let dim = alg.dim();
        let mut sum = vec![Rat::zero(); dim];
        for (i, e) in es.iter().enumerate() {
            ensure(dense_mul(&alg, e, e) == *e, || format!("M_{n}: e{i} not idempotent"))?;
            for (j, f) in es.iter().enumerate() {
                if i != j {
                    ensure(is_zero(&dense_mul(&alg, e, f)), || format!("M_{n}: e{i} e{j} != 0"))?;
                }
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
            let left: Vec<Vec<Rat>> = (0..dim).map(|k| dense_mul(&alg, &unit(dim, k), e)).collect();
            ensure(rank(&left) == n, || format!("M_{n}: dim A e{i} = {}", rank(&left)))?;
        }
        let identity: Vec<Rat> = (0..n).flat_map(|i| (0..n).map(move |j| if i == j { r(1) } else { r(0) })).collect();
        ensure(sum == identity, || format!("M_{n}: idempotents do not sum to 1"))?;
        let min = minimal_one_sided_ideal(&alg, Side::Left).map_err(|e| e.to_string())?;
        ensure(min.dim() == n, || format!("M_{n}: minimal left ideal of dim {}", min.dim()))?;
        for (i, e) in d.idempotents.members.iter().enumerate() {
            for (j, f) in d.idempotents.members.iter().enumerate() {
                let kind = corner_division_check(&alg, e, f);
                let want = if i == j { CornerKind::Division } else { CornerKind::Null };
                ensure(kind == want, || format!("M_{n}: corner ({i}, {j}) is {kind:?}"))?;
            }
        }
    }
    Ok("M_1, M_2, M_3: one factor, n orthogonal primitives summing to 1, minimal left ideals of dim n, corners DIVISION/NULL".into())
}

fn criterion_6() -> Outcome {
    let mut algs: Vec<Algebra<Rat>> = (1..=4).map(upper_triangular).collect();
    for (a, b) in [(2, 3), (1, 4), (3, 3), (2, 2)] {
        algs.push(upper_triangular::<Rat>(a).relabeled("K1").direct_sum(&upper_triangular(b).relabeled("K2")).unwrap());
    }
    for alg in &algs {
        let n = alg.dim();
        let rc = radical_complement(alg).map_err(|e| e.to_string())?;
        // J of an upper triangular block is its strictly upper part
        let strict: Vec<Vec<Rat>> = (0..n)
            .filter(|&k| {
                let name = alg.basis_name(k);
                name.as_bytes()[1] != name.as_bytes()[2]
            })
            .map(|k| unit(n, k))
            .collect();
        ensure(rc.radical.subspace == Subspace::span(n, &strict), || format!("{}: radical is not the strict part", alg.name()))?;
        let s = rc.complement.subspace.basis_vectors();
        let j = rc.radical.subspace.basis_vectors();
        let mut both = s.clone();
        both.extend(j.iter().cloned());
        ensure(rank(&both) == n && s.len() + j.len() == n, || format!("{}: S + J != A", alg.name()))?;
        for x in &s {
            for y in &s {
                ensure(in_span(&s, &dense_mul(alg, x, y)), || format!("{}: S not closed", alg.name()))?;
            }
        }
        let q = &rc.quotient;
        let m = q.algebra.dim();
        ensure(rc.section.len() == m, || format!("{}: section size", alg.name()))?;
        for (i, si) in rc.section.iter().enumerate() {
            ensure(in_span(&s, si.coords()), || format!("{}: section outside S", alg.name()))?;
            ensure(q.project(si.coords()) == unit(m, i), || format!("{}: section does not lift", alg.name()))?;
            for (k, sk) in rc.section.iter().enumerate() {
                let prod = dense_mul(alg, si.coords(), sk.coords());
                let mut want = vec![Rat::zero(); n];
                for (l, c) in q.algebra.constant(i, k).iter().enumerate() {
                    for (w, x) in want.iter_mut().zip(rc.section[l].coords()) {
                        *w += c * x;
                    }
                }
                ensure(prod == want, || format!("{}: constants of S differ from A/J at ({i}, {k})", alg.name()))?;
            }
        }
        // A/J of upper triangular algebras is a product of copies of Q
        for i in 0..m {
            for k in 0..m {
                let want = if i == k { unit(m, i) } else { vec![Rat::zero(); m] };
                ensure(q.algebra.constant(i, k) == want.as_slice(), || format!("{}: A/J is not Q^{m}", alg.name()))?;
            }
        }
    }
    Ok(format!("{} upper triangular algebras and label sums: S + J = A, S = A/J exactly", algs.len()))
}

fn criterion_7(corpus: &[Algebra<Rat>]) -> Outcome {
    let mut unital = 0;
    for alg in corpus {
        let Some(one) = find_unity(alg) else { continue };
        unital += 1;
        let u = one.coords();
        ensure(dense_mul(alg, u, u) == u, || format!("{}: unity", alg.name()))?;
        // R(1) is spanned by the label components of 1
        let comps: Vec<Vec<Rat>> = alg
            .label_blocks()
            .into_iter()
            .map(|(_, range)| (0..alg.dim()).map(|k| if range.contains(&k) { u[k].clone() } else { Rat::zero() }).collect())
            .collect();
        let oracle = rank(&comps);
        let labels = alg.distinct_labels().len();
        let rep = classify(alg).map_err(|e| format!("{}: {e}", alg.name()))?;
        let lib = label_generated_subring(alg, &[one]).dim();
        ensure(oracle == labels && rep.s == labels && rep.unity_subring_dim == labels && lib == labels && rep.r0_dim == 0, || {
            format!("{}: R(1) {oracle}, s {}, reported {}, labels {labels}", alg.name(), rep.s, rep.unity_subring_dim)
        })?;
    }
    let two = two_label_example::<Rat>();
    let rep = classify(&two).map_err(|e| e.to_string())?;
    ensure(rep.s == 2 && rep.unity_subring_dim == 2, || format!("two-label example: s = {}", rep.s))?;
    Ok(format!("{unital} unital algebras: dim R(1) = s; M2[K1] x Q[K2] has s = 2"))
}

fn criterion_8(corpus: &[Algebra<Rat>]) -> Outcome {
    let mut equalities = 0;
    for alg in corpus {
        let n = alg.dim();
        let rep = classify(alg).map_err(|e| format!("{}: {e}", alg.name()))?;
        let u = definable_unitization(alg);
        let big = &u.algebra;
        let m = big.dim();
        let inc = m - n;
        let bound = rep.r0_dim + rep.s;
        ensure(inc <= bound, || format!("{}: increment {inc} > {bound}", alg.name()))?;
        let null = (0..n).all(|i| (0..n).all(|j| is_zero(alg.constant(i, j))));
        let t_n = alg.name().starts_with('T') && alg.name()[1..].parse::<usize>().is_ok();
        if (null && n > 0) || t_n {
            ensure(inc == bound, || format!("{}: increment {inc} < {bound}", alg.name()))?;
            equalities += 1;
        }
        // embedding is a homomorphism onto a two-sided ideal
        let emb = |v: &[Rat]| {
            let mut w = vec![Rat::zero(); m];
            for (c, &k) in v.iter().zip(&u.embedding) {
                w[k] = c.clone();
            }
            w
        };
        let image: Vec<Vec<Rat>> = (0..n).map(|i| emb(&unit(n, i))).collect();
        ensure(rank(&image) == n, || format!("{}: embedding not injective", alg.name()))?;
        for i in 0..n {
            for j in 0..n {
                ensure(dense_mul(big, &image[i], &image[j]) == emb(alg.constant(i, j)), || format!("{}: not a homomorphism", alg.name()))?;
            }
            for k in 0..m {
                let e = unit(m, k);
                ensure(
                    in_span(&image, &dense_mul(big, &e, &image[i])) && in_span(&image, &dense_mul(big, &image[i], &e)),
                    || format!("{}: image is not an ideal", alg.name()),
                )?;
            }
        }
        let one = find_unity(big).ok_or_else(|| format!("{}: unitization has no unity", alg.name()))?;
        ensure((0..m).all(|k| dense_mul(big, one.coords(), &unit(m, k)) == unit(m, k)), || format!("{}: unity", alg.name()))?;
    }
    Ok(format!("{} algebras within the bound, equality on {equalities} null/T_n rings, embeddings verified", corpus.len()))
}

fn criterion_9() -> Outcome {
    let d = disconnected_example();
    ensure(d.unity().is_none(), || "disconnected example has a unity".into())?;
    ensure(prop_f_decompose(&d).is_none(), || "disconnected example decomposed".into())?;
    // R² ⊆ T_2: every product of two elements is killed by 2
    let f = d.finite();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in f.elements() {
        for b in f.elements() {
            let t1 = vec![Rat::new(rng.gen_range(0i64..8).into(), 8.into())];
            let t2 = vec![Rat::new(rng.gen_range(0i64..8).into(), 8.into())];
            let x = d.element(a, vec![], t1);
            let y = d.element(b, vec![], t2);
            let p = d.multiply(&x, &y);
            ensure(d.times(2, &p) == d.zero(), || format!("({a})({b}) is not 2-torsion"))?;
        }
    }
    ensure(d.square_in_torsion(), || "square_in_torsion false".into())?;
    let m = MixedRing::componentwise(zmod(3), rational_field());
    let dec = prop_f_decompose(&m).ok_or("Z/3 + Q did not decompose")?;
    ensure(dec.verify(&m), || "decomposition does not verify".into())?;
    for a in 0..3 {
        for q in [r(0), r(1), Rat::new((-5).into(), 3.into())] {
            let x = m.element(a, vec![q.clone()], vec![]);
            ensure(m.multiply(&dec.unity, &x) == x && m.multiply(&x, &dec.unity) == x, || format!("unity fails on ({a}, {q})"))?;
            let fin = m.element(a, vec![r(0)], vec![]);
            let con = m.element(0, vec![q.clone()], vec![]);
            ensure(is_zero(&m.multiply(&fin, &con).algebra) && m.multiply(&fin, &con).finite == 0, || "factors interact".into())?;
        }
    }
    ensure(dec.finite.len() == 3 && dec.finite_unity == 1, || "finite factor".into())?;
    Ok("disconnected: non-unital, R^2 in T_2, no decomposition; Z/3 x Q splits componentwise".into())
}

/// The document with one constant perturbed, as text, plus the perturbed
/// triple list.
fn mutate(alg: &Algebra<Rat>, rng: &mut ChaCha8Rng) -> (String, (usize, usize, usize)) {
    let n = alg.dim();
    let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
    let mut delta = random_rat(rng);
    while delta.is_zero() {
        delta = random_rat(rng);
    }
    let text = Document::Algebra(alg.clone()).to_text();
    let (head, body) = text.split_once("constants\n").expect("constants section");
    let target = format!("{} {} {} ", i + 1, j + 1, k + 1);
    let mut lines: Vec<String> = body.lines().map(str::to_string).collect();
    match lines.iter_mut().find(|l| l.starts_with(&target)) {
        Some(line) => {
            let old: Rat = line[target.len()..].parse().unwrap();
            *line = format!("{target}{}", old + delta);
        }
        None => lines.push(format!("{target}{delta}")),
    }
    (format!("{head}constants\n{}\n", lines.join("\n")), (i, j, k))
}

fn criterion_10(corpus: &[Algebra<Rat>]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let pool: Vec<&Algebra<Rat>> = corpus.iter().filter(|a| a.dim() > 0 && a.dim() <= 9).collect();
    let (mut rejected, mut accepted, mut false_accepts) = (0, 0, 0);
    for _ in 0..100 {
        let alg = pool[rng.gen_range(0..pool.len())];
        let (text, (i, j, k)) = mutate(alg, &mut rng);
        // independent associativity check on the mutated constants
        let n = alg.dim();
        let mut table: Vec<Vec<Rat>> = (0..n * n).map(|p| alg.constant(p / n, p % n).to_vec()).collect();
        let parsed_line = text.lines().find(|l| l.starts_with(&format!("{} {} {} ", i + 1, j + 1, k + 1))).unwrap();
        table[i * n + j][k] = parsed_line.rsplit(' ').next().unwrap().parse().unwrap();
        let assoc = associative(n, |a, b| table[a * n + b].clone());
        match Document::parse(&text) {
            Err(_) => rejected += 1,
            Ok(doc) => {
                accepted += 1;
                if !assoc {
                    false_accepts += 1;
                    continue;
                }
                // an accepted mutant must still produce verified reports
                for c in [Command::Classify, Command::Radical] {
                    build_report(&doc, c).map_err(|e| format!("accepted mutant of {}: {e}", alg.name()))?;
                }
            }
        }
    }
    ensure(false_accepts == 0, || format!("{false_accepts} non-associative mutants accepted"))?;
    Ok(format!("100 mutants: {rejected} rejected, {accepted} associative mutants accepted with verified reports, 0 false accepts"))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("nilpotency equivalences over the corpus", Box::new(|| criterion_1(&corpus))),
        ("finite definitional radical oracle", Box::new(criterion_2)),
        ("In-trivial flag dimension", Box::new(criterion_3)),
        ("reduced decomposition round trip", Box::new(criterion_4)),
        ("semisimple structure of M_n", Box::new(criterion_5)),
        ("Wedderburn-Malcev complement", Box::new(criterion_6)),
        ("unity subring dimension equals s", Box::new(|| criterion_7(&corpus))),
        ("unitization bound and embedding", Box::new(|| criterion_8(&corpus))),
        ("disconnected and Z/3 x Q mixed rings", Box::new(criterion_9)),
        ("mutated documents", Box::new(|| criterion_10(&corpus))),
    ];
    let mut failed = 0;
    for (idx, (title, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {detail}", idx + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
