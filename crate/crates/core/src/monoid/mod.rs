//! Affine submonoids of `Z_{>=0}^n`, explored inside finite boxes.
//!
//! Monoids may have infinitely many generators, so every enumeration takes an
//! explicit coordinate bound.

mod cone;
mod module;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::subalgebra::monoid_in_box;

pub use cone::{cone_of, interior_contains, Cone2D};
pub use module::{
    binomial_transfer_matrix, construct_module_monoid, is_finitely_generated,
    module_algebra_generators, transfer_polynomials, FiniteGeneration, ModuleAlgebra, ModuleData,
    TransferMatrix,
};

/// `{base + m * period : m >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Family {
    pub base: Monomial,
    pub period: Monomial,
}

/// Infinite generator sequences given in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NamedStream {
    /// `(1, n^2)` for `n >= 0`.
    Squares,
}

impl NamedStream {
    pub fn dimension(self) -> usize {
        match self {
            NamedStream::Squares => 2,
        }
    }

    /// The `n`-th generator, or `None` on overflow.
    pub fn nth(self, n: u64) -> Option<Monomial> {
        match self {
            NamedStream::Squares => {
                let sq = u32::try_from(n.checked_mul(n)?).ok()?;
                Some(Monomial::new(vec![1, sq]))
            }
        }
    }

    /// Generators with all coordinates at most `bound`.
    pub fn in_box(self, bound: u32) -> Vec<Monomial> {
        (0..)
            .map_while(|n| {
                self.nth(n)
                    .filter(|m| m.entries().iter().all(|&e| e <= bound))
            })
            .collect()
    }
}

impl fmt::Display for NamedStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedStream::Squares => write!(f, "(1,n^2)"),
        }
    }
}

/// A monoid generated by finitely many points, arithmetic-progression
/// families, and optionally a named stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMonoid {
    dim: usize,
    finite_gens: Vec<Monomial>,
    families: Vec<Family>,
    stream: Option<NamedStream>,
}

impl AffineMonoid {
    pub fn new(dim: usize) -> Self {
        AffineMonoid {
            dim,
            finite_gens: Vec::new(),
            families: Vec::new(),
            stream: None,
        }
    }

    pub fn generated_by(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut m = AffineMonoid::new(dim);
        for g in gens {
            m = m.with_generator(g)?;
        }
        Ok(m)
    }

    fn check_dim(&self, p: &Monomial) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(())
    }

    pub fn with_generator(mut self, g: Monomial) -> Result<Self> {
        self.check_dim(&g)?;
        self.finite_gens.push(g);
        Ok(self)
    }

    pub fn with_family(mut self, base: Monomial, period: Monomial) -> Result<Self> {
        self.check_dim(&base)?;
        self.check_dim(&period)?;
        if period.is_zero() {
            return Err(Error::precondition("family period must be non-zero"));
        }
        self.families.push(Family { base, period });
        Ok(self)
    }

    pub fn with_stream(mut self, stream: NamedStream) -> Result<Self> {
        if stream.dimension() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: stream.dimension(),
            });
        }
        self.stream = Some(stream);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn finite_gens(&self) -> &[Monomial] {
        &self.finite_gens
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn stream(&self) -> Option<NamedStream> {
        self.stream
    }

    /// Non-zero generators with every coordinate at most `bound`, sorted and
    /// without repeats.
    pub fn generators_in_box(&self, bound: u32) -> Vec<Monomial> {
        let fits = |m: &Monomial| m.entries().iter().all(|&e| e <= bound);
        let mut out: BTreeSet<Monomial> = self
            .finite_gens
            .iter()
            .filter(|g| fits(g))
            .cloned()
            .collect();
        for f in &self.families {
            let mut p = f.base.clone();
            while fits(&p) {
                out.insert(p.clone());
                match p.checked_mul(&f.period) {
                    Ok(q) => p = q,
                    Err(_) => break,
                }
            }
        }
        if let Some(s) = self.stream {
            out.extend(s.in_box(bound));
        }
        out.retain(|m| !m.is_zero());
        out.into_iter().collect()
    }

    /// Every element with all coordinates at most `bound`.
    pub fn elements_in_box(&self, bound: u32) -> BTreeSet<Monomial> {
        monoid_in_box(&self.generators_in_box(bound), self.dim, bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    /// A decomposition into generators with the fewest summands.
    Yes(Vec<Monomial>),
    No,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }
}

/// Decide whether `p` is a sum of generators, using generators with
/// coordinates at most `search_bound`.
pub fn membership(m: &AffineMonoid, p: &Monomial, search_bound: u32) -> Result<Membership> {
    m.check_dim(p)?;
    if p.entries().iter().any(|&e| e > search_bound) {
        return Err(Error::precondition(format!(
            "{p} lies outside the search box [0,{search_bound}]"
        )));
    }
    let gens: Vec<Monomial> = m
        .generators_in_box(search_bound)
        .into_iter()
        .filter(|g| g.divides(p))
        .collect();
    // breadth-first search from the origin stays inside the box below p
    let zero = Monomial::zero(m.dim);
    let mut parent: HashMap<Monomial, Option<(Monomial, usize)>> = HashMap::new();
    parent.insert(zero.clone(), None);
    let mut queue = VecDeque::from([zero]);
    while let Some(q) = queue.pop_front() {
        if &q == p {
            break;
        }
        for (i, g) in gens.iter().enumerate() {
            let next = q.mul(g);
            if next.divides(p) && !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((q.clone(), i)));
                queue.push_back(next);
            }
        }
    }
    if !parent.contains_key(p) {
        return Ok(Membership::No);
    }
    let mut parts = Vec::new();
    let mut cur = p.clone();
    while let Some(Some((prev, i))) = parent.get(&cur) {
        parts.push(gens[*i].clone());
        cur = prev.clone();
    }
    parts.sort();
    Ok(Membership::Yes(parts))
}

/// Irreducible elements with all coordinates at most `box_bound`.
pub fn irreducibles(m: &AffineMonoid, box_bound: u32) -> Result<Vec<Monomial>> {
    if box_bound == 0 {
        return Err(Error::precondition("box bound must be at least 1"));
    }
    let elems = m.elements_in_box(box_bound);
    let nonzero: Vec<&Monomial> = elems.iter().filter(|e| !e.is_zero()).collect();
    let mut out = Vec::new();
    for &x in &nonzero {
        let splits = nonzero
            .iter()
            .any(|&y| y != x && y.quotient(x).is_some_and(|z| elems.contains(&z)));
        if !splits {
            out.push(x.clone());
        }
    }
    Ok(out)
}
