//! Named family generators producing validated documents.
//!
//! Families and their `key=value` parameters:
//!
//! | family | params | result |
//! |---|---|---|
//! | `T` | `n` | strictly upper triangular `T_n` |
//! | `M` | `n` | full matrix algebra `M_n` |
//! | `UT` | `n` | upper triangular with diagonal |
//! | `Q`, `QI` | | `Q`, `Q(i)` |
//! | `H` | `a`, `b` (default −1, −1) | quaternion algebra `(a, b)` |
//! | `quadratic` | `alpha`, `beta` | `Q[t]/(t² − βt − α)` |
//! | `null` | `n` | null ring |
//! | `ExampleInTrivial` | `n` | dimension `2n + 1` nilpotent example |
//! | `Cocycle` | | `e1·e1 = e2` |
//! | `reduced` | `r`, `p`, `q`, `label` | `Q^r × Q(i)^p × H^q` |
//! | `two-label` | | `M_2` over `K1` with `Q` over `K2` |
//! | `sum` | `parts`, `labels` | direct sum of `+`-separated parts such as `T3+M2`, each over its label |
//! | `zmod`, `null-zmod` | `n` | `Z/n`, null `Z/n` |
//! | `matmod`, `tmod`, `utmod` | `k`, `p` | matrices, strictly upper and upper triangular over `Z/p` |
//! | `disconnected` | | the disconnected mixed example |
//! | `zmodq` | `n` (default 3) | `Z/n ⊕ Q` |
//!
//! Algebra families also accept `label` (relabel everything) and `name`.

use num_traits::One;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::document::Document;
use crate::families;
use crate::finite::{self, disconnected_example, FiniteError, MixedRing};
use crate::{Rat, Scalar};

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("missing parameter `{0}`")]
    Missing(&'static str),
    #[error("bad value `{value}` for parameter `{key}`")]
    BadParam { key: String, value: String },
    #[error("parameter `{key}`: {message}")]
    Invalid { key: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

/// Parsed `key=value` pairs.
#[derive(Debug, Clone, Default)]
pub struct Params(Vec<(String, String)>);

impl Params {
    pub fn parse<S: AsRef<str>>(args: &[S]) -> Result<Self, GenerateError> {
        let mut out = Vec::new();
        for a in args {
            let a = a.as_ref();
            let (k, v) = a.split_once('=').ok_or_else(|| GenerateError::BadParam {
                key: a.to_string(),
                value: String::new(),
            })?;
            out.push((k.to_string(), v.to_string()));
        }
        Ok(Params(out))
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn count(&self, key: &'static str, min: usize, max: usize) -> Result<usize, GenerateError> {
        let v = self.get(key).ok_or(GenerateError::Missing(key))?;
        let n: usize = v.parse().map_err(|_| GenerateError::BadParam { key: key.into(), value: v.into() })?;
        if n < min || n > max {
            return Err(GenerateError::Invalid { key: key.into(), message: format!("must lie in {min}..={max}") });
        }
        Ok(n)
    }

    fn count_or(&self, key: &'static str, default: usize, min: usize, max: usize) -> Result<usize, GenerateError> {
        if self.get(key).is_some() {
            self.count(key, min, max)
        } else {
            Ok(default)
        }
    }

    fn rational_or(&self, key: &str, default: i64) -> Result<Rat, GenerateError> {
        match self.get(key) {
            None => Ok(Rat::from_int(default)),
            Some(v) => Rat::parse_rational(v).ok_or_else(|| GenerateError::BadParam { key: key.into(), value: v.into() }),
        }
    }

    fn prime(&self, key: &'static str) -> Result<usize, GenerateError> {
        let p = self.count(key, 2, 256)?;
        if (2..p).any(|d| p % d == 0) {
            return Err(GenerateError::Invalid { key: key.into(), message: format!("{p} is not prime") });
        }
        Ok(p)
    }
}

const MAX_MATRIX: usize = 8;

/// Builds the named family.
pub fn generate(family: &str, params: &Params) -> Result<Document, GenerateError> {
    let key = family.to_ascii_lowercase();
    let doc = match key.as_str() {
        "zmod" => finite::zmod(params.count("n", 1, finite::MAX_ORDER)?).into(),
        "null-zmod" => finite::null_zmod(params.count("n", 1, finite::MAX_ORDER)?).into(),
        "matmod" | "tmod" | "utmod" => {
            let k = params.count("k", 1, 4)?;
            let p = params.prime("p")?;
            let ring = match key.as_str() {
                "matmod" => finite::matrix_ring_mod(k, p),
                "tmod" => finite::strictly_upper_mod(k, p),
                _ => finite::upper_triangular_mod(k, p),
            };
            ring.map_err(|e| match e {
                FiniteError::Order(_) => GenerateError::Invalid { key: "k".into(), message: "ring too large".into() },
                e => e.into(),
            })?
            .into()
        }
        "disconnected" => disconnected_example().into(),
        "zmodq" => {
            let n = params.count_or("n", 3, 1, finite::MAX_ORDER)?;
            let ring = MixedRing::componentwise(finite::zmod(n), families::rational_field());
            let name = format!("Z/{n} x Q");
            MixedRing::new(name, ring.finite().clone(), ring.algebra().clone(), 0, ring.cross_table().to_vec())
                .expect("componentwise rings are valid")
                .into()
        }
        _ => {
            let mut alg = algebra_family(&key, family, params)?;
            if let Some(label) = params.get("label") {
                check_label("label", label)?;
                alg = alg.relabeled(label);
            }
            if let Some(name) = params.get("name") {
                alg = alg.with_name(name);
            }
            alg.into()
        }
    };
    Ok(doc)
}

fn check_label(key: &str, label: &str) -> Result<(), GenerateError> {
    if label.is_empty() || label.contains(char::is_whitespace) || label.contains('+') {
        return Err(GenerateError::Invalid { key: key.into(), message: format!("`{label}` is not a label") });
    }
    Ok(())
}

fn algebra_family(key: &str, family: &str, params: &Params) -> Result<Algebra<Rat>, GenerateError> {
    let alg = match key {
        "t" => families::strictly_upper(params.count("n", 1, MAX_MATRIX)?),
        "m" => families::matrix_algebra(params.count("n", 1, MAX_MATRIX)?),
        "ut" => families::upper_triangular(params.count("n", 1, MAX_MATRIX)?),
        "q" => families::rational_field(),
        "qi" => families::gaussian_field(),
        "h" => {
            let (a, b) = (params.rational_or("a", -1)?, params.rational_or("b", -1)?);
            if a == Rat::from_int(0) || b == Rat::from_int(0) {
                return Err(GenerateError::Invalid { key: "a, b".into(), message: "must be nonzero".into() });
            }
            if a == -Rat::one() && b == -Rat::one() {
                families::hamilton()
            } else {
                families::quaternion(a, b)
            }
        }
        "quadratic" => families::quadratic_algebra(params.rational_or("alpha", -1)?, params.rational_or("beta", 0)?),
        "null" | "n" => families::null_ring(params.count("n", 1, 64)?),
        "exampleintrivial" | "in-trivial" | "intrivial" => families::in_trivial(params.count("n", 1, 16)?),
        "cocycle" => families::cocycle(),
        "reduced" => {
            let (r, p, q) = (params.count_or("r", 0, 0, 8)?, params.count_or("p", 0, 0, 8)?, params.count_or("q", 0, 0, 4)?);
            let label = params.get("label").unwrap_or(crate::algebra::DEFAULT_LABEL);
            check_label("label", label)?;
            families::reduced(r, p, q, label)
        }
        "two-label" => families::two_label_example(),
        "sum" => sum(params)?,
        _ => return Err(GenerateError::UnknownFamily(family.to_string())),
    };
    Ok(alg)
}

/// `parts=T3+M2 labels=K1+K2`; a single label applies to every part.
fn sum(params: &Params) -> Result<Algebra<Rat>, GenerateError> {
    let parts: Vec<&str> = params.get("parts").ok_or(GenerateError::Missing("parts"))?.split('+').collect();
    let labels: Vec<&str> = match params.get("labels") {
        Some(l) => l.split('+').collect(),
        None => vec![crate::algebra::DEFAULT_LABEL],
    };
    if labels.len() != 1 && labels.len() != parts.len() {
        return Err(GenerateError::Invalid { key: "labels".into(), message: "one label, or one per part".into() });
    }
    let mut out = Algebra::zero_algebra("");
    let mut names = Vec::new();
    for (idx, part) in parts.iter().enumerate() {
        let label = labels[if labels.len() == 1 { 0 } else { idx }];
        check_label("labels", label)?;
        let split = part.find(|c: char| c.is_ascii_digit()).unwrap_or(part.len());
        let (fam, n) = part.split_at(split);
        let mut p = Params::default();
        if !n.is_empty() {
            p = p.with("n", n);
        }
        let piece = algebra_family(&fam.to_ascii_lowercase(), fam, &p).map_err(|e| GenerateError::Invalid {
            key: "parts".into(),
            message: format!("`{part}`: {e}"),
        })?;
        out = out.direct_sum(&piece.relabeled(label))?;
        names.push(format!("{part}[{label}]"));
    }
    Ok(out.with_name(names.join(" x ")))
}

/// A fixed corpus of named documents covering every family.
pub fn corpus() -> Vec<Document> {
    let mut specs: Vec<(&str, Params)> = Vec::new();
    for n in 1..=5 {
        specs.push(("T", Params::default().with("n", n)));
    }
    for n in 1..=3 {
        specs.push(("M", Params::default().with("n", n)));
        specs.push(("ExampleInTrivial", Params::default().with("n", n)));
        specs.push(("null", Params::default().with("n", n)));
    }
    for n in 1..=4 {
        specs.push(("UT", Params::default().with("n", n)));
    }
    specs.push(("Q", Params::default()));
    specs.push(("QI", Params::default()));
    specs.push(("H", Params::default()));
    specs.push(("H", Params::default().with("a", 1).with("b", 1)));
    specs.push(("Cocycle", Params::default()));
    specs.push(("two-label", Params::default()));
    specs.push(("reduced", Params::default().with("r", 1).with("p", 1).with("q", 1)));
    specs.push(("sum", Params::default().with("parts", "UT2+T3").with("labels", "K1+K2")));
    specs.push(("sum", Params::default().with("parts", "M2+Q+N2").with("labels", "K1+K2+K1")));
    specs.push(("zmod", Params::default().with("n", 12)));
    specs.push(("matmod", Params::default().with("k", 2).with("p", 2)));
    specs.push(("tmod", Params::default().with("k", 3).with("p", 2)));
    specs.push(("utmod", Params::default().with("k", 2).with("p", 3)));
    specs.push(("disconnected", Params::default()));
    specs.push(("zmodq", Params::default()));
    specs
        .into_iter()
        .map(|(f, p)| generate(f, &p).expect("corpus parameters are valid"))
        .collect()
}
