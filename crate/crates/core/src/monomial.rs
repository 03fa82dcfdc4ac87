//! Exponent vectors and monomial orders.
//!
//! A [`Monomial`] is the exponent vector `u` of `x^u`. Its derived `Ord` is
//! plain lexicographic comparison of the entries and is only used for
//! storage; every algebraic question goes through a [`MonomialOrder`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one non-negative entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(entries: impl Into<Vec<u32>>) -> Self {
        Monomial(SmallVec::from_vec(entries.into()))
    }

    pub fn zero(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    /// The `i`-th unit vector of length `nvars`.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut m = Self::zero(nvars);
        m.0[i] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of the entries.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    /// `self + other`, i.e. the exponent of the product of the monomials.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Monomial)
    }

    /// `k * self`.
    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Monomial)
    }

    /// Panicking variant of [`Monomial::checked_mul`] for internal hot paths
    /// where lengths are already known to agree.
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other - self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.len() != other.len() || !self.divides(other) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl std::ops::Index<usize> for Monomial {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Monomial {
    fn from(v: [u32; N]) -> Self {
        Monomial(SmallVec::from_slice(&v))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The comparison rule of a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
    /// Compare by a non-negative weight vector, break ties lexicographically.
    WeightThenLex(Vec<u32>),
    /// Compare block by block; each block lists its variables in priority
    /// order and carries its own rule. Blocks must partition the variables.
    Block(Vec<OrderBlock>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderBlock {
    pub vars: Vec<usize>,
    pub kind: OrderKind,
}

/// A monomial order: a rule plus an optional variable-priority permutation.
///
/// `priority[k]` is the index of the `k`-th most significant variable. The
/// permutation is ignored by [`OrderKind::Block`], whose blocks carry their
/// own priority lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        OrderKind::Lex.into()
    }

    pub fn grlex() -> Self {
        OrderKind::GrLex.into()
    }

    pub fn grevlex() -> Self {
        OrderKind::GrevLex.into()
    }

    pub fn weight(weights: Vec<u32>) -> Self {
        OrderKind::WeightThenLex(weights).into()
    }

    /// Elimination order: `first` block strictly dominates `second`.
    pub fn elimination(first: OrderBlock, second: OrderBlock) -> Self {
        OrderKind::Block(vec![first, second]).into()
    }

    pub fn with_priority(mut self, priority: Vec<usize>) -> Self {
        self.priority = Some(priority);
        self
    }

    /// `true` when the order first compares total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self.kind, OrderKind::GrLex | OrderKind::GrevLex)
            || matches!(&self.kind, OrderKind::WeightThenLex(w) if !w.is_empty() && w.iter().all(|&x| x == w[0]))
    }

    /// Check that the order is a well-defined order on `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let Some(p) = &self.priority {
            check_permutation(p, nvars, "priority")?;
        }
        validate_kind(&self.kind, nvars, None)
    }

    /// Compare two exponent vectors, checking lengths.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_len(b)?;
        if let Some(p) = &self.priority {
            if p.len() != a.len() {
                return Err(Error::Dimension {
                    expected: p.len(),
                    got: a.len(),
                });
            }
        }
        if let OrderKind::WeightThenLex(w) = &self.kind {
            if w.len() != a.len() {
                return Err(Error::Dimension {
                    expected: w.len(),
                    got: a.len(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; lengths must agree.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let perm = match self.kind {
            OrderKind::Block(_) => None,
            _ => self.priority.as_deref(),
        };
        cmp_kind(&self.kind, &a.0, &b.0, perm)
    }

    /// The larger of two exponents.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl From<OrderKind> for MonomialOrder {
    fn from(kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            priority: None,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_kind(&self.kind, f)?;
        if let Some(p) = &self.priority {
            let p: Vec<String> = p.iter().map(|i| i.to_string()).collect();
            write!(f, "@{}", p.join(","))?;
        }
        Ok(())
    }
}

fn fmt_kind(kind: &OrderKind, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match kind {
        OrderKind::Lex => write!(f, "lex"),
        OrderKind::GrLex => write!(f, "grlex"),
        OrderKind::GrevLex => write!(f, "grevlex"),
        OrderKind::WeightThenLex(w) => {
            let w: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            write!(f, "weight:{}", w.join(","))
        }
        OrderKind::Block(blocks) => {
            write!(f, "block[")?;
            for (i, b) in blocks.iter().enumerate() {
                if i > 0 {
                    write!(f, "; ")?;
                }
                let v: Vec<String> = b.vars.iter().map(|i| i.to_string()).collect();
                write!(f, "{{{}}} ", v.join(","))?;
                fmt_kind(&b.kind, f)?;
            }
            write!(f, "]")
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    /// Accepts `lex`, `grlex`, `grevlex`, `weight:w1,w2,...`, each optionally
    /// followed by `@p0,p1,...` giving the variable priority.
    fn from_str(s: &str) -> Result<Self> {
        let (body, prio) = match s.split_once('@') {
            Some((b, p)) => (b, Some(p)),
            None => (s, None),
        };
        let kind = match body.trim().to_ascii_lowercase().as_str() {
            "lex" => OrderKind::Lex,
            "grlex" | "deglex" => OrderKind::GrLex,
            "grevlex" | "degrevlex" => OrderKind::GrevLex,
            other => match other.strip_prefix("weight:") {
                Some(w) => OrderKind::WeightThenLex(
                    parse_usize_list(w)?.into_iter().map(|x| x as u32).collect(),
                ),
                None => return Err(Error::InvalidOrder(format!("unknown order `{s}`"))),
            },
        };
        let priority = prio.map(parse_usize_list).transpose()?;
        Ok(MonomialOrder { kind, priority })
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidOrder(format!("bad integer `{t}`")))
        })
        .collect()
}

fn check_permutation(p: &[usize], n: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; n];
    if p.len() != n {
        return Err(Error::InvalidOrder(format!(
            "{what} has length {}, ring has {n} variables",
            p.len()
        )));
    }
    for &i in p {
        if i >= n || seen[i] {
            return Err(Error::InvalidOrder(format!("{what} is not a permutation")));
        }
        seen[i] = true;
    }
    Ok(())
}

fn validate_kind(kind: &OrderKind, nvars: usize, scope: Option<&[usize]>) -> Result<()> {
    let width = scope.map_or(nvars, |s| s.len());
    match kind {
        OrderKind::Lex | OrderKind::GrLex | OrderKind::GrevLex => Ok(()),
        OrderKind::WeightThenLex(w) if w.len() != width => Err(Error::InvalidOrder(format!(
            "weight vector has length {}, expected {width}",
            w.len()
        ))),
        OrderKind::WeightThenLex(_) => Ok(()),
        OrderKind::Block(blocks) => {
            let mut all: Vec<usize> = blocks.iter().flat_map(|b| b.vars.iter().copied()).collect();
            all.sort_unstable();
            let expected: Vec<usize> = match scope {
                Some(s) => {
                    let mut s = s.to_vec();
                    s.sort_unstable();
                    s
                }
                None => (0..nvars).collect(),
            };
            if all != expected {
                return Err(Error::InvalidOrder(
                    "blocks must partition the variables".into(),
                ));
            }
            for b in blocks {
                validate_kind(&b.kind, nvars, Some(&b.vars))?;
            }
            Ok(())
        }
    }
}

#[inline]
fn at(v: &[u32], perm: Option<&[usize]>, k: usize) -> u32 {
    match perm {
        Some(p) => v[p[k]],
        None => v[k],
    }
}

fn cmp_lex(a: &[u32], b: &[u32], perm: Option<&[usize]>, width: usize) -> Ordering {
    for k in 0..width {
        match at(a, perm, k).cmp(&at(b, perm, k)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn degree(v: &[u32], perm: Option<&[usize]>, width: usize) -> u64 {
    (0..width).map(|k| at(v, perm, k) as u64).sum()
}

fn cmp_kind(kind: &OrderKind, a: &[u32], b: &[u32], perm: Option<&[usize]>) -> Ordering {
    let width = perm.map_or(a.len(), |p| p.len());
    match kind {
        OrderKind::Lex => cmp_lex(a, b, perm, width),
        OrderKind::GrLex => degree(a, perm, width)
            .cmp(&degree(b, perm, width))
            .then_with(|| cmp_lex(a, b, perm, width)),
        OrderKind::GrevLex => degree(a, perm, width)
            .cmp(&degree(b, perm, width))
            .then_with(|| {
                for k in (0..width).rev() {
                    match at(a, perm, k).cmp(&at(b, perm, k)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        OrderKind::WeightThenLex(w) => {
            let wa: u64 = (0..width)
                .map(|k| w[k] as u64 * at(a, perm, k) as u64)
                .sum();
            let wb: u64 = (0..width)
                .map(|k| w[k] as u64 * at(b, perm, k) as u64)
                .sum();
            wa.cmp(&wb).then_with(|| cmp_lex(a, b, perm, width))
        }
        OrderKind::Block(blocks) => {
            for blk in blocks {
                match cmp_kind(&blk.kind, a, b, Some(&blk.vars)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
    }
}
