use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{find_unity, Algebra};
use crate::{Rat, Scalar};

use super::{null_zmod, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedError {
    #[error("cross table has {found} entries, expected {expected}")]
    CrossSize { expected: usize, found: usize },
    #[error("cross value at ({a}, {b}) is not a {k}-vector in [0, 1)")]
    CrossRange { a: usize, b: usize, k: usize },
    #[error("cross table is not biadditive at ({a}, {b}, {c})")]
    NotBiadditive { a: usize, b: usize, c: usize },
    #[error("cross table breaks associativity at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// `x − ⌊x⌋`.
fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

fn add_mod_one(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| frac(&(x + y))).collect()
}

/// An element `(f, v, t)`: `f` indexes the finite ring, `v` is a vector of
/// the algebra and `t ∈ (Q/Z)^k` is stored in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedElement {
    pub finite: usize,
    pub algebra: Vec<Rat>,
    pub torsion: Vec<Rat>,
}

/// `F ⊕ V ⊕ (Q/Z)^k` with `(f, v, t)(g, w, s) = (fg, vw, c(f, g))`.
///
/// The algebra part and the torsion part annihilate the finite part, and
/// the torsion part annihilates everything; the only interaction is the
/// cross table `c : F × F → (Q/Z)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedRing {
    name: String,
    finite: FiniteRing,
    algebra: Algebra<Rat>,
    k: usize,
    cross: Vec<Vec<Rat>>,
}

impl MixedRing {
    /// Validates the cross table: values in `[0, 1)^k`, biadditive, and
    /// `c(fg, h) = c(f, gh)`.
    pub fn new(
        name: impl Into<String>,
        finite: FiniteRing,
        algebra: Algebra<Rat>,
        k: usize,
        cross: Vec<Vec<Rat>>,
    ) -> Result<Self, MixedError> {
        let n = finite.order();
        if cross.len() != n * n {
            return Err(MixedError::CrossSize { expected: n * n, found: cross.len() });
        }
        for (pos, v) in cross.iter().enumerate() {
            if v.len() != k || v.iter().any(|x| x < &Rat::zero() || x >= &Rat::one()) {
                return Err(MixedError::CrossRange { a: pos / n, b: pos % n, k });
            }
        }
        let ring = MixedRing { name: name.into(), finite, algebra, k, cross };
        let f = &ring.finite;
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    let left = ring.cross(f.add(a, b), c) == &add_mod_one(ring.cross(a, c), ring.cross(b, c))[..];
                    let right = ring.cross(a, f.add(b, c)) == &add_mod_one(ring.cross(a, b), ring.cross(a, c))[..];
                    if !left || !right {
                        return Err(MixedError::NotBiadditive { a, b, c });
                    }
                    if ring.cross(f.mul(a, b), c) != ring.cross(a, f.mul(b, c)) {
                        return Err(MixedError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(ring)
    }

    /// `F × V` with no torsion part.
    pub fn componentwise(finite: FiniteRing, algebra: Algebra<Rat>) -> Self {
        let n = finite.order();
        let name = format!("{} x {}", finite.name(), algebra.name());
        MixedRing::new(name, finite, algebra, 0, vec![Vec::new(); n * n])
            .expect("an empty cross table is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn finite(&self) -> &FiniteRing {
        &self.finite
    }

    pub fn algebra(&self) -> &Algebra<Rat> {
        &self.algebra
    }

    pub fn torsion_rank(&self) -> usize {
        self.k
    }

    pub fn cross(&self, a: usize, b: usize) -> &[Rat] {
        &self.cross[a * self.finite.order() + b]
    }

    pub fn cross_table(&self) -> &[Vec<Rat>] {
        &self.cross
    }

    pub fn zero(&self) -> MixedElement {
        MixedElement {
            finite: self.finite.zero(),
            algebra: vec![Rat::zero(); self.algebra.dim()],
            torsion: vec![Rat::zero(); self.k],
        }
    }

    /// Reduces torsion coordinates into `[0, 1)`.
    pub fn element(&self, finite: usize, algebra: Vec<Rat>, torsion: Vec<Rat>) -> MixedElement {
        assert!(finite < self.finite.order(), "finite index out of range");
        assert_eq!(algebra.len(), self.algebra.dim(), "algebra part has the wrong length");
        assert_eq!(torsion.len(), self.k, "torsion part has the wrong length");
        MixedElement { finite, algebra, torsion: torsion.iter().map(frac).collect() }
    }

    pub fn add(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        MixedElement {
            finite: self.finite.add(x.finite, y.finite),
            algebra: x.algebra.iter().zip(&y.algebra).map(|(a, b)| a + b).collect(),
            torsion: add_mod_one(&x.torsion, &y.torsion),
        }
    }

    pub fn multiply(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        MixedElement {
            finite: self.finite.mul(x.finite, y.finite),
            algebra: self.algebra.mul(&x.algebra, &y.algebra),
            torsion: self.cross(x.finite, y.finite).to_vec(),
        }
    }

    /// `n·x`.
    pub fn times(&self, n: usize, x: &MixedElement) -> MixedElement {
        let s = Rat::from_int(n as i64);
        MixedElement {
            finite: self.finite.times(n, x.finite),
            algebra: x.algebra.iter().map(|a| a * &s).collect(),
            torsion: x.torsion.iter().map(|t| frac(&(t * &s))).collect(),
        }
    }

    /// `T_n = {x : n·x = 0}`. The algebra part is torsion-free, so `T_n`
    /// consists of `(f, 0, t)` with `n·f = 0` and `t ∈ ((1/n)Z/Z)^k`.
    pub fn torsion_ideal(&self, n: usize) -> Vec<MixedElement> {
        assert!(n >= 1, "torsion_ideal needs n ≥ 1");
        let fs: Vec<usize> =
            self.finite.elements().filter(|&f| self.finite.times(n, f) == self.finite.zero()).collect();
        let mut points: Vec<Vec<Rat>> = vec![Vec::new()];
        for _ in 0..self.k {
            points = points
                .into_iter()
                .flat_map(|p| {
                    (0..n).map(move |j| {
                        let mut q = p.clone();
                        q.push(Rat::new((j as i64).into(), (n as i64).into()));
                        q
                    })
                })
                .collect();
        }
        let zero_v = vec![Rat::zero(); self.algebra.dim()];
        fs.iter()
            .flat_map(|&f| {
                let zero_v = zero_v.clone();
                points.iter().map(move |t| MixedElement { finite: f, algebra: zero_v.clone(), torsion: t.clone() })
            })
            .collect()
    }

    /// `s` is closed under addition and under multiplication on both sides
    /// by every element. Products only see the finite coordinate of the
    /// outside factor, so it suffices to multiply by `(f, 0, 0)`.
    pub fn is_ideal(&self, s: &[MixedElement]) -> bool {
        let contains = |x: &MixedElement| s.contains(x);
        let zero = self.zero();
        s.iter().all(|x| {
            s.iter().all(|y| contains(&self.add(x, y)))
                && self.finite.elements().all(|f| {
                    let r = MixedElement { finite: f, ..zero.clone() };
                    contains(&self.multiply(&r, x)) && contains(&self.multiply(x, &r))
                })
        })
    }

    /// `s·R^0 = R^0·s = 0`, where `R^0 = {(0, v, t)}`. Checked against the
    /// algebra basis and a unit torsion vector per coordinate.
    pub fn annihilates_connected(&self, s: &[MixedElement]) -> bool {
        let zero = self.zero();
        let mut probes = Vec::new();
        for i in 0..self.algebra.dim() {
            let mut v = zero.clone();
            v.algebra[i] = Rat::one();
            probes.push(v);
        }
        for i in 0..self.k {
            let mut v = zero.clone();
            v.torsion[i] = Rat::new(1.into(), 2.into());
            probes.push(v);
        }
        s.iter().all(|x| {
            probes.iter().all(|p| self.multiply(x, p) == zero && self.multiply(p, x) == zero)
        })
    }

    /// `R² ⊆ V ⊕ T_n` with `n = |F|`, over all finite pairs.
    pub fn square_in_torsion(&self) -> bool {
        let n = self.finite.order();
        let f = &self.finite;
        f.elements().all(|a| {
            f.elements().all(|b| {
                let p = MixedElement {
                    finite: f.mul(a, b),
                    algebra: vec![Rat::zero(); self.algebra.dim()],
                    torsion: self.cross(a, b).to_vec(),
                };
                self.times(n, &p) == self.zero()
            })
        })
    }

    /// A two-sided unity. A nonzero torsion rank rules one out: the torsion
    /// coordinate of `x·u` is `c(f, u_f)`, independent of `x`'s own
    /// torsion coordinate.
    pub fn unity(&self) -> Option<MixedElement> {
        if self.k > 0 {
            return None;
        }
        let f = self.finite.unity()?;
        let v = if self.algebra.dim() == 0 {
            Vec::new()
        } else {
            find_unity(&self.algebra)?.into_coords()
        };
        Some(MixedElement { finite: f, algebra: v, torsion: Vec::new() })
    }
}

/// `R = F × R^0` for a unital mixed ring.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedDecomposition {
    /// `F = T_n` with `n = |F|`.
    pub finite: Vec<MixedElement>,
    pub connected: Algebra<Rat>,
    pub unity: MixedElement,
    pub finite_unity: usize,
    pub connected_unity: Vec<Rat>,
}

impl MixedDecomposition {
    /// `F` is an ideal equal to `T_n`, both factors carry their part of the
    /// unity, and products of the two factors vanish.
    pub fn verify(&self, ring: &MixedRing) -> bool {
        let n = ring.finite().order();
        let t_n = ring.torsion_ideal(n);
        let same = t_n.len() == self.finite.len() && t_n.iter().all(|x| self.finite.contains(x));
        let zero = ring.zero();
        let cross_zero = self.finite.iter().all(|x| {
            (0..ring.algebra().dim()).all(|i| {
                let mut v = zero.clone();
                v.algebra[i] = Rat::one();
                ring.multiply(x, &v) == zero && ring.multiply(&v, x) == zero
            })
        });
        let fu = ring.finite();
        let finite_unital = fu.elements().all(|a| {
            fu.mul(self.finite_unity, a) == a && fu.mul(a, self.finite_unity) == a
        });
        let alg = ring.algebra();
        let connected_unital = alg.basis().iter().all(|e| {
            alg.mul(&self.connected_unity, e.coords()) == e.coords()
                && alg.mul(e.coords(), &self.connected_unity) == e.coords()
        });
        same && cross_zero && finite_unital && connected_unital && ring.torsion_rank() == 0
    }
}

/// The direct-product splitting of a unital mixed ring; `None` when the ring
/// has no unity.
pub fn prop_f_decompose(ring: &MixedRing) -> Option<MixedDecomposition> {
    let unity = ring.unity()?;
    let n = ring.finite().order();
    Some(MixedDecomposition {
        finite: ring.torsion_ideal(n),
        connected: ring.algebra().clone(),
        finite_unity: unity.finite,
        connected_unity: unity.algebra.clone(),
        unity,
    })
}

/// `Z/2 × [0, a)` with `(t, x)(s, y) = (0, a/2)` when `t = s = 1` and zero
/// otherwise; the circle `[0, a)` is modelled as `Q/Z`.
pub fn disconnected_example() -> MixedRing {
    let half = Rat::new(1.into(), 2.into());
    let z = Rat::zero();
    let cross = vec![vec![z.clone()], vec![z.clone()], vec![z], vec![half]];
    MixedRing::new("Disconnected", null_zmod(2), Algebra::zero_algebra("0"), 1, cross)
        .expect("the example's cross table is biadditive and associative")
}
