//! Finite rings given by addition and multiplication tables, the
//! definitional Jacobson radical, and mixed rings combining a finite ring,
//! an algebra and a divisible torsion part.

mod mixed;

use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

pub use mixed::{
    disconnected_example, prop_f_decompose, MixedDecomposition, MixedElement, MixedError,
    MixedRing,
};

/// Largest order accepted by the exhaustive routines.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    Order(usize),
    #[error("{table} table has {found} entries, expected {expected}")]
    TableSize { table: &'static str, expected: usize, found: usize },
    #[error("{table} table entry ({a}, {b}) = {value} is out of range")]
    OutOfRange { table: &'static str, a: usize, b: usize, value: usize },
    #[error("zero index {0} is out of range")]
    BadZero(usize),
    #[error("addition is not associative at ({a}, {b}, {c})")]
    AddNotAssociative { a: usize, b: usize, c: usize },
    #[error("addition is not commutative at ({a}, {b})")]
    AddNotCommutative { a: usize, b: usize },
    #[error("{zero} is not an additive identity (fails at {a})")]
    NoIdentity { zero: usize, a: usize },
    #[error("element {a} has no additive inverse")]
    NoInverse { a: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("{side} distributivity fails at ({a}, {b}, {c})")]
    NotDistributive { side: &'static str, a: usize, b: usize, c: usize },
    #[error("subset is not a two-sided ideal")]
    NotIdeal,
}

/// A ring on `{0, …, order − 1}` given by full tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
    names: Vec<String>,
}

impl FiniteRing {
    /// Validating constructor: tables are row-major, `add[a * order + b]`.
    /// Every axiom is checked exhaustively; the first failing instance is
    /// reported.
    pub fn new(
        name: impl Into<String>,
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
    ) -> Result<Self, FiniteError> {
        if order == 0 || order > MAX_ORDER {
            return Err(FiniteError::Order(order));
        }
        for (table, t) in [("add", &add), ("mul", &mul)] {
            if t.len() != order * order {
                return Err(FiniteError::TableSize { table, expected: order * order, found: t.len() });
            }
            if let Some(pos) = t.iter().position(|&v| v >= order) {
                let (a, b) = (pos / order, pos % order);
                return Err(FiniteError::OutOfRange { table, a, b, value: t[pos] });
            }
        }
        if zero >= order {
            return Err(FiniteError::BadZero(zero));
        }
        let names = (0..order).map(|i| i.to_string()).collect();
        let mut ring = FiniteRing { name: name.into(), order, add, mul, zero, neg: Vec::new(), names };
        ring.validate()?;
        ring.neg = (0..order)
            .map(|a| (0..order).find(|&b| ring.add(a, b) == zero).expect("validated"))
            .collect();
        Ok(ring)
    }

    /// Builds the ring on an explicit element list closed under the two
    /// operations, naming each element with `label`.
    pub fn from_elements<T, A, M, L>(
        name: impl Into<String>,
        elements: &[T],
        zero: &T,
        add: A,
        mul: M,
        label: L,
    ) -> Result<Self, FiniteError>
    where
        T: Eq + Hash + Clone,
        A: Fn(&T, &T) -> T,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let n = elements.len();
        if n == 0 || n > MAX_ORDER {
            return Err(FiniteError::Order(n));
        }
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let lookup = |table: &'static str, a: usize, b: usize, v: &T| {
            index.get(v).copied().ok_or(FiniteError::OutOfRange { table, a, b, value: n })
        };
        let mut at = Vec::with_capacity(n * n);
        let mut mt = Vec::with_capacity(n * n);
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                at.push(lookup("add", a, b, &add(x, y))?);
                mt.push(lookup("mul", a, b, &mul(x, y))?);
            }
        }
        let z = *index.get(zero).ok_or(FiniteError::BadZero(n))?;
        let mut ring = FiniteRing::new(name, n, at, mt, z)?;
        ring.names = elements.iter().map(label).collect();
        Ok(ring)
    }

    fn validate(&self) -> Result<(), FiniteError> {
        let n = self.order;
        for a in 0..n {
            if self.add(self.zero, a) != a {
                return Err(FiniteError::NoIdentity { zero: self.zero, a });
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return Err(FiniteError::NoInverse { a });
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(FiniteError::AddNotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                let mab = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Err(FiniteError::AddNotAssociative { a, b, c });
                    }
                    if self.mul(mab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(FiniteError::NotAssociative { a, b, c });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(mab, self.mul(a, c)) {
                        return Err(FiniteError::NotDistributive { side: "left", a, b, c });
                    }
                    if self.mul(ab, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(FiniteError::NotDistributive { side: "right", a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self, FiniteError> {
        if names.len() != self.order {
            return Err(FiniteError::TableSize { table: "names", expected: self.order, found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` for `k ≥ 0`.
    pub fn times(&self, k: usize, a: usize) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn unity(&self) -> Option<usize> {
        self.elements()
            .find(|&u| self.elements().all(|a| self.mul(u, a) == a && self.mul(a, u) == a))
    }

    /// Least `k ≥ 1` with `a^k = 0`.
    pub fn nilpotency_index(&self, a: usize) -> Option<usize> {
        let mut p = a;
        for k in 1..=self.order + 1 {
            if p == self.zero {
                return Some(k);
            }
            p = self.mul(p, a);
        }
        None
    }

    /// Smallest two-sided ideal containing `seed`, as a sorted list.
    pub fn ideal_closure(&self, seed: &[usize]) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        let mut members = Vec::new();
        let mut queue = vec![self.zero];
        queue.extend_from_slice(seed);
        while let Some(x) = queue.pop() {
            if inside[x] {
                continue;
            }
            inside[x] = true;
            members.push(x);
            for &m in &members {
                queue.push(self.add(x, m));
            }
            for r in 0..n {
                queue.push(self.mul(r, x));
                queue.push(self.mul(x, r));
            }
        }
        members.sort_unstable();
        members
    }

    pub fn is_ideal(&self, s: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in s {
            inside[x] = true;
        }
        inside[self.zero]
            && s.iter().all(|&x| {
                s.iter().all(|&y| inside[self.add(x, y)])
                    && self.elements().all(|r| inside[self.mul(r, x)] && inside[self.mul(x, r)])
            })
    }

    /// All two-sided ideals, each sorted, in order of size then content.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        let mut found = vec![vec![self.zero]];
        let mut i = 0;
        while i < found.len() {
            let base = found[i].clone();
            for x in self.elements() {
                if base.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = base.clone();
                seed.push(x);
                let next = self.ideal_closure(&seed);
                if !found.contains(&next) {
                    found.push(next);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    /// `I^k = 0` for some `k`, with `I^{k+1}` the additive span of
    /// products `p·i`.
    pub fn is_nilpotent_subset(&self, ideal: &[usize]) -> bool {
        let mut power: Vec<usize> = ideal.to_vec();
        for _ in 0..=self.order {
            if power.iter().all(|&p| p == self.zero) {
                return true;
            }
            let products: Vec<usize> = power
                .iter()
                .flat_map(|&p| ideal.iter().map(move |&i| (p, i)))
                .map(|(p, i)| self.mul(p, i))
                .collect();
            power = self.additive_span(&products);
        }
        false
    }

    fn additive_span(&self, seed: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        let mut members = Vec::new();
        let mut queue = vec![self.zero];
        queue.extend_from_slice(seed);
        while let Some(x) = queue.pop() {
            if inside[x] {
                continue;
            }
            inside[x] = true;
            members.push(x);
            for &m in &members {
                queue.push(self.add(x, m));
            }
        }
        members.sort_unstable();
        members
    }

    /// `R/I` on coset representatives (the least index of each coset).
    pub fn quotient(&self, ideal: &[usize]) -> Result<FiniteRing, FiniteError> {
        if !self.is_ideal(ideal) {
            return Err(FiniteError::NotIdeal);
        }
        let rep = |a: usize| {
            ideal.iter().map(|&i| self.add(a, i)).min().expect("ideal contains zero")
        };
        let reps: Vec<usize> = {
            let mut r: Vec<usize> = self.elements().map(rep).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let names: Vec<String> = reps.iter().map(|&a| format!("{}+I", self.names[a])).collect();
        let pos = |a: usize| reps.binary_search(&rep(a)).expect("coset");
        let m = reps.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                add.push(pos(self.add(a, b)));
                mul.push(pos(self.mul(a, b)));
            }
        }
        let mut q = FiniteRing::new(format!("{}/I", self.name), m, add, mul, pos(self.zero))?;
        q.names = names;
        Ok(q)
    }
}

/// `J(R) = {a : ∀r ∃b, b·r·a − r·a − b = 0}`, evaluated by brute force.
pub fn jacobson_definitional(ring: &FiniteRing) -> Vec<usize> {
    let j: Vec<usize> = ring
        .elements()
        .filter(|&a| {
            ring.elements().all(|r| {
                let ra = ring.mul(r, a);
                ring.elements().any(|b| ring.sub(ring.sub(ring.mul(b, ra), ra), b) == ring.zero())
            })
        })
        .collect();
    debug_assert!(ring.is_ideal(&j));
    j
}

/// Sum of all nilpotent two-sided ideals, found by enumerating ideals.
pub fn largest_nilpotent_ideal(ring: &FiniteRing) -> Vec<usize> {
    let nilpotent: Vec<usize> = ring
        .ideals()
        .into_iter()
        .filter(|i| ring.is_nilpotent_subset(i))
        .flatten()
        .collect();
    ring.ideal_closure(&nilpotent)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteStructure {
    pub order: usize,
    pub nilpotent: bool,
    /// Least `k` with `R^k = 0`.
    pub nilpotency_index: Option<usize>,
    pub nil: bool,
    pub unity: Option<usize>,
    pub idempotents: Vec<usize>,
    pub units: Vec<usize>,
    pub zero_divisors: Vec<usize>,
    pub jacobson: Vec<usize>,
    pub reduced: bool,
    /// A nonzero `x` with `x² = 0`, when not reduced.
    pub square_zero_witness: Option<usize>,
}

pub fn finite_structure(ring: &FiniteRing) -> FiniteStructure {
    let z = ring.zero();
    let all: Vec<usize> = ring.elements().collect();
    let mut power = all.clone();
    let mut index = None;
    for k in 1..=ring.order() + 1 {
        if power.iter().all(|&p| p == z) {
            index = Some(k);
            break;
        }
        let products: Vec<usize> =
            power.iter().flat_map(|&p| all.iter().map(move |&a| (p, a))).map(|(p, a)| ring.mul(p, a)).collect();
        power = ring.additive_span(&products);
    }
    let unity = ring.unity();
    let units = match unity {
        Some(u) => all
            .iter()
            .copied()
            .filter(|&a| all.iter().any(|&b| ring.mul(a, b) == u && ring.mul(b, a) == u))
            .collect(),
        None => Vec::new(),
    };
    let zero_divisors = all
        .iter()
        .copied()
        .filter(|&a| {
            a != z && all.iter().any(|&b| b != z && (ring.mul(a, b) == z || ring.mul(b, a) == z))
        })
        .collect();
    let square_zero_witness = all.iter().copied().find(|&a| a != z && ring.mul(a, a) == z);
    FiniteStructure {
        order: ring.order(),
        nilpotent: index.is_some(),
        nilpotency_index: index,
        nil: all.iter().all(|&a| ring.nilpotency_index(a).is_some()),
        unity,
        idempotents: all.iter().copied().filter(|&a| ring.mul(a, a) == a).collect(),
        units,
        zero_divisors,
        jacobson: jacobson_definitional(ring),
        reduced: square_zero_witness.is_none(),
        square_zero_witness,
    }
}

/// `Z/n`.
pub fn zmod(n: usize) -> FiniteRing {
    let elements: Vec<usize> = (0..n).collect();
    FiniteRing::from_elements(
        format!("Z/{n}"),
        &elements,
        &0,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        |a| a.to_string(),
    )
    .expect("Z/n is a ring")
}

/// `Z/n` with zero multiplication.
pub fn null_zmod(n: usize) -> FiniteRing {
    let elements: Vec<usize> = (0..n).collect();
    FiniteRing::from_elements(format!("N(Z/{n})"), &elements, &0, |a, b| (a + b) % n, |_, _| 0, |a| a.to_string())
        .expect("null ring")
}

/// `R × S`, elements `(r, s)` indexed `r·|S| + s`.
pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing, FiniteError> {
    let elements: Vec<(usize, usize)> =
        a.elements().flat_map(|x| b.elements().map(move |y| (x, y))).collect();
    FiniteRing::from_elements(
        format!("{} x {}", a.name(), b.name()),
        &elements,
        &(a.zero(), b.zero()),
        |x, y| (a.add(x.0, y.0), b.add(x.1, y.1)),
        |x, y| (a.mul(x.0, y.0), b.mul(x.1, y.1)),
        |x| format!("({},{})", a.element_name(x.0), b.element_name(x.1)),
    )
}

/// `k × k` matrices over `Z/p` whose nonzero entries lie where `allowed`
/// holds.
fn matrix_ring(
    name: String,
    k: usize,
    p: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<FiniteRing, FiniteError> {
    let slots: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|&(i, j)| allowed(i, j)).collect();
    let count = p.checked_pow(slots.len() as u32).filter(|&c| c <= MAX_ORDER);
    let count = count.ok_or(FiniteError::Order(usize::MAX))?;
    let elements: Vec<Vec<usize>> = (0..count)
        .map(|mut code| {
            let mut m = vec![0; k * k];
            for &(i, j) in &slots {
                m[i * k + j] = code % p;
                code /= p;
            }
            m
        })
        .collect();
    let add = |x: &Vec<usize>, y: &Vec<usize>| x.iter().zip(y).map(|(a, b)| (a + b) % p).collect();
    let mul = |x: &Vec<usize>, y: &Vec<usize>| {
        let mut out = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                out[i * k + j] = (0..k).map(|l| x[i * k + l] * y[l * k + j]).sum::<usize>() % p;
            }
        }
        out
    };
    let label = |x: &Vec<usize>| {
        let rows: Vec<String> = x
            .chunks(k)
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        format!("[{}]", rows.join(";"))
    };
    FiniteRing::from_elements(name, &elements, &vec![0; k * k], add, mul, label)
}

/// `M_k(Z/p)`; the order `p^{k²}` must not exceed [`MAX_ORDER`].
pub fn matrix_ring_mod(k: usize, p: usize) -> Result<FiniteRing, FiniteError> {
    matrix_ring(format!("M{k}(Z/{p})"), k, p, |_, _| true)
}

/// Strictly upper triangular `k × k` matrices over `Z/p`.
pub fn strictly_upper_mod(k: usize, p: usize) -> Result<FiniteRing, FiniteError> {
    matrix_ring(format!("T{k}(Z/{p})"), k, p, |i, j| j > i)
}

/// Upper triangular `k × k` matrices over `Z/p`.
pub fn upper_triangular_mod(k: usize, p: usize) -> Result<FiniteRing, FiniteError> {
    matrix_ring(format!("UT{k}(Z/{p})"), k, p, |i, j| j >= i)
}
