//! Buchberger's algorithm over the rationals.
//!
//! Pair selection follows the normal strategy (smallest lcm degree first)
//! with the coprime-leading-monomial and chain criteria. Output bases are
//! reduced, monic, and sorted by ascending leading exponent.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Rational, Ring};

/// Default cap on the Buchberger pair queue.
pub const DEFAULT_MAX_PAIRS: usize = 100_000;

/// Resource caps for the completion procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: DEFAULT_MAX_PAIRS,
        }
    }
}

impl Limits {
    /// Reads `SAGBI_MAX_PAIRS`, falling back to the default when it is unset
    /// or unparsable.
    pub fn from_env() -> Self {
        let max_pairs = std::env::var("SAGBI_MAX_PAIRS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_PAIRS);
        Limits { max_pairs }
    }
}

/// An ideal given by non-zero generators in a common ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.vars().join(","),
                    right: g.ring().vars().join(","),
                });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch {
                left: self.ring.vars().join(","),
                right: f.ring().vars().join(","),
            });
        }
        let basis: Vec<Sparse> = self
            .elements
            .iter()
            .map(|g| Sparse::from_poly(g, &self.order))
            .collect();
        Ok(
            reduce_full(Sparse::from_poly(f, &self.order), &basis, &self.order)
                .into_poly(&self.ring),
        )
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// Terms sorted ascending under a fixed order; the leading term is last.
#[derive(Clone, Debug)]
pub(crate) struct Sparse {
    terms: Vec<(Monomial, Rational)>,
}

impl Sparse {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p
            .terms()
            .iter()
            .map(|t| (t.exp.clone(), t.coeff.clone()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sparse { terms }
    }

    pub(crate) fn into_poly(self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.into_iter().map(|(e, c)| (c, e)))
            .expect("exponents have ring length")
    }

    fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self -= c * x^shift * g`.
    fn sub_scaled(&mut self, c: &Rational, shift: &Monomial, g: &Sparse, order: &MonomialOrder) {
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = g
            .terms
            .iter()
            .map(|(e, k)| (e.mul(shift), -(k * c)))
            .peekable();
        loop {
            let ord = match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord {
                Ordering::Less => out.push(ai.next().unwrap()),
                Ordering::Greater => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let (e, x) = ai.next().unwrap();
                    let (_, y) = bi.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        self.terms = out;
    }
}

fn find_divisor<'a>(m: &Monomial, basis: &'a [Sparse]) -> Option<(usize, &'a Sparse)> {
    basis
        .iter()
        .enumerate()
        .find(|(_, g)| g.lead().is_some_and(|(lm, _)| lm.divides(m)))
}

/// Full reduction of `p` modulo `basis` (first divisor in list order).
pub(crate) fn reduce_full(mut p: Sparse, basis: &[Sparse], order: &MonomialOrder) -> Sparse {
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.lead() {
        match find_divisor(lm, basis) {
            Some((_, g)) => {
                let (glm, glc) = g.lead().unwrap();
                let shift = glm.quotient(lm).unwrap();
                let c = lc / glc;
                p.sub_scaled(&c, &shift, g, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Sparse { terms: rem }
}

/// Output of [`divide`]: `f = sum(q_i * g_i) + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by the list `divisors`.
///
/// The first divisor (in list order) whose leading exponent divides the
/// current leading exponent is used. No term of the remainder is divisible
/// by any leading exponent of `divisors`.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division> {
    let ring = f.ring();
    if divisors.is_empty() {
        return Err(Error::precondition("division needs at least one divisor"));
    }
    for g in divisors {
        if g.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.vars().join(","),
                right: g.ring().vars().join(","),
            });
        }
        if g.is_zero() {
            return Err(Error::precondition("division by the zero polynomial"));
        }
    }
    let basis: Vec<Sparse> = divisors
        .iter()
        .map(|g| Sparse::from_poly(g, order))
        .collect();
    let mut quotients: Vec<Vec<(Rational, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut p = Sparse::from_poly(f, order);
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.lead() {
        match find_divisor(lm, &basis) {
            Some((i, g)) => {
                let (glm, glc) = g.lead().unwrap();
                let shift = glm.quotient(lm).unwrap();
                let c = lc / glc;
                quotients[i].push((c.clone(), shift.clone()));
                p.sub_scaled(&c, &shift, g, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(ring, q))
        .collect::<Result<Vec<_>>>()?;
    let remainder = Polynomial::from_terms(ring, rem.into_iter().map(|(e, c)| (c, e)))?;
    if cfg!(debug_assertions) {
        let mut back = remainder.clone();
        for (q, g) in quotients.iter().zip(divisors) {
            back = &back + &(q * g);
        }
        debug_assert_eq!(&back, f, "division identity violated");
    }
    Ok(Division {
        quotients,
        remainder,
    })
}

/// S-polynomial of `f` and `g`: the combination cancelling both leading
/// terms at their lcm.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    let tf = f.initial_term(order)?;
    let tg = g.initial_term(order)?;
    let l = tf.exp.lcm(&tg.exp);
    let a = f.mul_term(&tf.coeff.recip(), &tf.exp.quotient(&l).unwrap())?;
    let b = g.mul_term(&tg.coeff.recip(), &tg.exp.quotient(&l).unwrap())?;
    a.try_sub(&b)
}

fn s_sparse(f: &Sparse, g: &Sparse, order: &MonomialOrder) -> Sparse {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = fm.lcm(gm);
    let mut a = Sparse { terms: Vec::new() };
    a.sub_scaled(&(-fc.recip()), &fm.quotient(&l).unwrap(), f, order);
    a.sub_scaled(&gc.recip(), &gm.quotient(&l).unwrap(), g, order);
    a
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder, limits: Limits) -> Result<GroebnerBasis> {
    Ok(run_buchberger(ideal, order, limits, None)?.0)
}

/// Degree-truncated Buchberger for ideals homogeneous under the positive
/// grading `weights`.
///
/// Pairs whose lcm has weighted degree above `max_weight` are skipped, so
/// the output agrees with the reduced Gröbner basis in all degrees up to
/// `max_weight`. The second component is the smallest skipped degree, or
/// `None` when nothing was skipped and the basis is complete.
pub fn buchberger_truncated(
    ideal: &Ideal,
    order: &MonomialOrder,
    limits: Limits,
    weights: &[u64],
    max_weight: u64,
) -> Result<(GroebnerBasis, Option<u64>)> {
    if weights.len() != ideal.ring.nvars() {
        return Err(Error::Dimension {
            expected: ideal.ring.nvars(),
            got: weights.len(),
        });
    }
    run_buchberger(ideal, order, limits, Some((weights, max_weight)))
}

fn weighted_degree(m: &Monomial, weights: Option<&[u64]>) -> u64 {
    match weights {
        None => m.degree(),
        Some(w) => m.entries().iter().zip(w).map(|(&e, &k)| e as u64 * k).sum(),
    }
}

fn run_buchberger(
    ideal: &Ideal,
    order: &MonomialOrder,
    limits: Limits,
    truncation: Option<(&[u64], u64)>,
) -> Result<(GroebnerBasis, Option<u64>)> {
    order.validate(ideal.ring.nvars())?;
    let weights = truncation.map(|(w, _)| w);
    let mut skipped: Option<u64> = None;
    let mut basis: Vec<Sparse> = Vec::new();
    for g in &ideal.generators {
        let mut s = Sparse::from_poly(g, order);
        s.make_monic();
        basis.push(s);
    }
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |heap: &mut BinaryHeap<_>,
                     pending: &mut HashSet<_>,
                     basis: &[Sparse],
                     i: usize,
                     j: usize|
     -> Result<()> {
        let l = basis[i].lead().unwrap().0.lcm(&basis[j].lead().unwrap().0);
        heap.push(Reverse((weighted_degree(&l, weights), j, i)));
        pending.insert(pair_key(i, j));
        if pending.len() > limits.max_pairs {
            return Err(Error::ResourceLimit {
                what: "Buchberger pair queue",
                limit: limits.max_pairs,
            });
        }
        Ok(())
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut heap, &mut pending, &basis, i, j)?;
        }
    }
    while let Some(Reverse((deg, j, i))) = heap.pop() {
        let li = &basis[i].lead().unwrap().0;
        let lj = &basis[j].lead().unwrap().0;
        if truncation.is_some_and(|(_, max)| deg > max) {
            // pairs pop in degree order, so everything left is above the cap
            let rest = std::iter::once((deg, j, i)).chain(heap.drain().map(|Reverse(k)| k));
            skipped = rest
                .filter(|&(_, j, i)| {
                    !basis[i]
                        .lead()
                        .unwrap()
                        .0
                        .is_coprime(&basis[j].lead().unwrap().0)
                })
                .map(|(d, _, _)| d)
                .min();
            break;
        }
        pending.remove(&(i, j));
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().unwrap().0.divides(&l)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_sparse(&basis[i], &basis[j], order);
        let mut r = reduce_full(s, &basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        basis.push(r);
        let n = basis.len() - 1;
        for k in 0..n {
            push_pair(&mut heap, &mut pending, &basis, k, n)?;
        }
    }
    Ok((interreduce(basis, &ideal.ring, order), skipped))
}

/// Turn a Gröbner basis (any generating set already satisfying the
/// S-pair criterion) into the reduced one.
pub fn reduce_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(Error::precondition("empty basis")),
    };
    let basis = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if g.ring() != &ring {
                return Err(Error::RingMismatch {
                    left: ring.vars().join(","),
                    right: g.ring().vars().join(","),
                });
            }
            Ok(Sparse::from_poly(g, order))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(interreduce(basis, &ring, order))
}

fn interreduce(mut basis: Vec<Sparse>, ring: &Ring, order: &MonomialOrder) -> GroebnerBasis {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| order.cmp(&a.lead().unwrap().0, &b.lead().unwrap().0));
    // minimal basis: drop anything whose lead is divisible by an earlier kept lead
    let mut minimal: Vec<Sparse> = Vec::new();
    for g in basis {
        let lm = &g.lead().unwrap().0;
        if minimal.iter().any(|h| h.lead().unwrap().0.divides(lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Sparse> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = reduce_full(minimal[i].clone(), &others, order);
        r.make_monic();
        reduced.push(r.into_poly(ring));
    }
    GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        elements: reduced,
    }
}
