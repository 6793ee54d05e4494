//! Line-oriented text format for algebras, finite rings and mixed rings.
//!
//! ```text
//! format_version 1
//! kind algebra
//! name T3
//! dim 3
//! labels K1 K1 K1
//! basis E12 E13 E23
//! constants
//! 1 3 2 1
//! ```
//!
//! Each constants line `i j k c` says `e_i·e_j` has coefficient `c` on
//! `e_k` (indices from 1, `c` written `p` or `p/q`). Unlisted constants are
//! zero. A `finite_ring` document gives `order`, `zero`, optional
//! `elements` names and the full `add` and `mul` tables on `0..order`. A
//! `mixed` document nests a finite ring under `finite.` keys and an algebra
//! under `algebra.` keys, followed by `torsion_rank` and a sparse `cross`
//! section of lines `a b t_1 … t_k` with values in `[0, 1)`.
//!
//! Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::finite::{FiniteError, FiniteRing, MixedError, MixedRing};
use crate::{Rat, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing field `{0}`")]
    Missing(String),
    #[error("unsupported format_version {0}")]
    Version(String),
    #[error("unknown document kind `{0}`")]
    Kind(String),
    #[error("line {line}: structure constant ({i}, {j}, {k}): {message}")]
    Triple { line: usize, i: usize, j: usize, k: usize, message: String },
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("invalid finite ring: {0}")]
    Finite(#[from] FiniteError),
    #[error("invalid mixed ring: {0}")]
    Mixed(#[from] MixedError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Algebra,
    FiniteRing,
    Mixed,
}

impl DocumentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DocumentKind::Algebra => "algebra",
            DocumentKind::FiniteRing => "finite_ring",
            DocumentKind::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Algebra(Algebra<Rat>),
    FiniteRing(FiniteRing),
    Mixed(MixedRing),
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Algebra(_) => DocumentKind::Algebra,
            Document::FiniteRing(_) => DocumentKind::FiniteRing,
            Document::Mixed(_) => DocumentKind::Mixed,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Algebra(a) => a.name(),
            Document::FiniteRing(f) => f.name(),
            Document::Mixed(m) => m.name(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let fields = Fields::read(text)?;
        let version = fields.scalar("format_version")?;
        if version != FORMAT_VERSION.to_string() {
            return Err(DocumentError::Version(version));
        }
        match fields.scalar("kind")?.as_str() {
            "algebra" => Ok(Document::Algebra(fields.algebra("")?)),
            "finite_ring" => Ok(Document::FiniteRing(fields.finite("")?)),
            "mixed" => Ok(Document::Mixed(fields.mixed()?)),
            other => Err(DocumentError::Kind(other.to_string())),
        }
    }

    /// Canonical text: sparse constants in `(i, j, k)` order, rationals in
    /// lowest terms. `parse` followed by `to_text` reproduces this form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "format_version {FORMAT_VERSION}");
        let _ = writeln!(out, "kind {}", self.kind().as_str());
        let _ = writeln!(out, "name {}", self.name());
        match self {
            Document::Algebra(a) => write_algebra(&mut out, "", a),
            Document::FiniteRing(f) => write_finite(&mut out, "", f),
            Document::Mixed(m) => {
                write_finite(&mut out, "finite.", m.finite());
                write_algebra(&mut out, "algebra.", m.algebra());
                let _ = writeln!(out, "torsion_rank {}", m.torsion_rank());
                out.push_str("cross\n");
                let n = m.finite().order();
                for a in 0..n {
                    for b in 0..n {
                        let v = m.cross(a, b);
                        if v.iter().any(|x| !x.is_zero()) {
                            let vals: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                            let _ = writeln!(out, "{a} {b} {}", vals.join(" "));
                        }
                    }
                }
            }
        }
        out
    }
}

impl From<Algebra<Rat>> for Document {
    fn from(a: Algebra<Rat>) -> Self {
        Document::Algebra(a)
    }
}

impl From<FiniteRing> for Document {
    fn from(f: FiniteRing) -> Self {
        Document::FiniteRing(f)
    }
}

impl From<MixedRing> for Document {
    fn from(m: MixedRing) -> Self {
        Document::Mixed(m)
    }
}

impl std::fmt::Display for Document {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn write_algebra(out: &mut String, prefix: &str, a: &Algebra<Rat>) {
    if !prefix.is_empty() {
        let _ = writeln!(out, "{prefix}name {}", a.name());
    }
    let _ = writeln!(out, "{prefix}dim {}", a.dim());
    let _ = writeln!(out, "{prefix}labels {}", a.labels().join(" "));
    if let Some(names) = a.basis_names() {
        let _ = writeln!(out, "{prefix}basis {}", names.join(" "));
    }
    let _ = writeln!(out, "{prefix}constants");
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.constant(i, j).iter().enumerate() {
                if !c.is_zero() {
                    let _ = writeln!(out, "{} {} {} {c}", i + 1, j + 1, k + 1);
                }
            }
        }
    }
}

fn write_finite(out: &mut String, prefix: &str, f: &FiniteRing) {
    if !prefix.is_empty() {
        let _ = writeln!(out, "{prefix}name {}", f.name());
    }
    let n = f.order();
    let _ = writeln!(out, "{prefix}order {n}");
    let _ = writeln!(out, "{prefix}zero {}", f.zero());
    let default = f.element_names().iter().enumerate().all(|(i, s)| *s == i.to_string());
    if !default {
        let _ = writeln!(out, "{prefix}elements {}", f.element_names().join(" "));
    }
    for (key, table) in [("add", f.add_table()), ("mul", f.mul_table())] {
        let _ = writeln!(out, "{prefix}{key}");
        for row in table.chunks(n) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    }
}

struct Field {
    line: usize,
    rest: String,
    body: Vec<(usize, Vec<String>)>,
}

struct Fields(BTreeMap<String, Field>);

impl Fields {
    fn read(text: &str) -> Result<Self, DocumentError> {
        let mut map: BTreeMap<String, Field> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let starts_keyword = trimmed.chars().next().is_some_and(|c| c.is_ascii_alphabetic());
            if starts_keyword {
                let (key, rest) = match trimmed.split_once(char::is_whitespace) {
                    Some((k, r)) => (k, r.trim()),
                    None => (trimmed, ""),
                };
                if map.contains_key(key) {
                    return Err(DocumentError::Syntax { line, message: format!("repeated field `{key}`") });
                }
                map.insert(key.to_string(), Field { line, rest: rest.to_string(), body: Vec::new() });
                current = Some(key.to_string());
            } else {
                let Some(key) = &current else {
                    return Err(DocumentError::Syntax { line, message: "data line before any field".into() });
                };
                let tokens = trimmed.split_whitespace().map(str::to_string).collect();
                map.get_mut(key).expect("current field exists").body.push((line, tokens));
            }
        }
        Ok(Fields(map))
    }

    fn get(&self, key: &str) -> Result<&Field, DocumentError> {
        self.0.get(key).ok_or_else(|| DocumentError::Missing(key.to_string()))
    }

    fn scalar(&self, key: &str) -> Result<String, DocumentError> {
        let f = self.get(key)?;
        if !f.body.is_empty() {
            return Err(DocumentError::Syntax { line: f.body[0].0, message: format!("unexpected data after `{key}`") });
        }
        Ok(f.rest.clone())
    }

    fn count(&self, key: &str) -> Result<usize, DocumentError> {
        let f = self.get(key)?;
        f.rest.parse().map_err(|_| DocumentError::Syntax {
            line: f.line,
            message: format!("`{key}` expects a non-negative integer, found `{}`", f.rest),
        })
    }

    fn words(&self, key: &str) -> Option<Vec<String>> {
        self.0.get(key).map(|f| f.rest.split_whitespace().map(str::to_string).collect())
    }

    fn section(&self, key: &str) -> Result<&Field, DocumentError> {
        let f = self.get(key)?;
        if !f.rest.is_empty() {
            return Err(DocumentError::Syntax { line: f.line, message: format!("`{key}` takes no arguments") });
        }
        Ok(f)
    }

    fn name(&self, prefix: &str) -> Result<String, DocumentError> {
        self.scalar(&format!("{prefix}name"))
    }

    fn algebra(&self, prefix: &str) -> Result<Algebra<Rat>, DocumentError> {
        let key = |k: &str| format!("{prefix}{k}");
        let name = self.name(prefix)?;
        let dim = self.count(&key("dim"))?;
        let labels = self.words(&key("labels")).ok_or_else(|| DocumentError::Missing(key("labels")))?;
        if labels.len() != dim {
            let line = self.get(&key("labels"))?.line;
            return Err(DocumentError::Syntax { line, message: format!("expected {dim} labels, found {}", labels.len()) });
        }
        let mut constants = vec![vec![Rat::zero(); dim]; dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for (line, tokens) in &self.section(&key("constants"))?.body {
            let line = *line;
            if tokens.len() != 4 {
                return Err(DocumentError::Syntax { line, message: "constants lines are `i j k c`".into() });
            }
            let idx: Vec<usize> = tokens[..3]
                .iter()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| DocumentError::Syntax { line, message: format!("bad index in `{}`", tokens.join(" ")) })?;
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let bad = |message: String| DocumentError::Triple { line, i, j, k, message };
            if [i, j, k].iter().any(|&x| x == 0 || x > dim) {
                return Err(bad(format!("index out of range 1..={dim}")));
            }
            if !seen.insert((i, j, k)) {
                return Err(bad("repeated".into()));
            }
            let c = Rat::parse_rational(&tokens[3]).ok_or_else(|| bad(format!("`{}` is not a rational", tokens[3])))?;
            constants[(i - 1) * dim + (j - 1)][k - 1] = c;
        }
        let mut alg = Algebra::new(name, labels, constants)?;
        if let Some(names) = self.words(&key("basis")) {
            alg = alg.with_basis_names(names)?;
        }
        Ok(alg)
    }

    fn finite(&self, prefix: &str) -> Result<FiniteRing, DocumentError> {
        let key = |k: &str| format!("{prefix}{k}");
        let name = self.name(prefix)?;
        let order = self.count(&key("order"))?;
        let zero = self.count(&key("zero"))?;
        let table = |k: &str| -> Result<Vec<usize>, DocumentError> {
            let f = self.section(&key(k))?;
            if f.body.len() != order {
                return Err(DocumentError::Syntax {
                    line: f.line,
                    message: format!("`{}` needs {order} rows, found {}", key(k), f.body.len()),
                });
            }
            let mut out = Vec::with_capacity(order * order);
            for (line, tokens) in &f.body {
                if tokens.len() != order {
                    return Err(DocumentError::Syntax { line: *line, message: format!("row needs {order} entries") });
                }
                for t in tokens {
                    out.push(t.parse().map_err(|_| DocumentError::Syntax {
                        line: *line,
                        message: format!("`{t}` is not an element index"),
                    })?);
                }
            }
            Ok(out)
        };
        let ring = FiniteRing::new(name, order, table("add")?, table("mul")?, zero)?;
        match self.words(&key("elements")) {
            Some(names) => Ok(ring.with_element_names(names)?),
            None => Ok(ring),
        }
    }

    fn mixed(&self) -> Result<MixedRing, DocumentError> {
        let name = self.name("")?;
        let finite = self.finite("finite.")?;
        let algebra = self.algebra("algebra.")?;
        let k = self.count("torsion_rank")?;
        let n = finite.order();
        let mut cross = vec![vec![Rat::zero(); k]; n * n];
        for (line, tokens) in &self.section("cross")?.body {
            let line = *line;
            let syntax = |message: String| DocumentError::Syntax { line, message };
            if tokens.len() != k + 2 {
                return Err(syntax(format!("cross lines are `a b` followed by {k} values")));
            }
            let a: usize = tokens[0].parse().map_err(|_| syntax(format!("bad element `{}`", tokens[0])))?;
            let b: usize = tokens[1].parse().map_err(|_| syntax(format!("bad element `{}`", tokens[1])))?;
            if a >= n || b >= n {
                return Err(syntax(format!("cross entry ({a}, {b}) out of range for order {n}")));
            }
            for (slot, t) in cross[a * n + b].iter_mut().zip(&tokens[2..]) {
                *slot = Rat::parse_rational(t).ok_or_else(|| syntax(format!("`{t}` is not a rational")))?;
            }
        }
        Ok(MixedRing::new(name, finite, algebra, k, cross)?)
    }
}
