//! Subduction and SAGBI bases.
//!
//! A finite set `F` of polynomials is a SAGBI basis of the algebra it
//! generates when the initial terms of `F` generate the initial algebra.
//! [`sagbi_check`] decides this by subducing the tête-à-têtes
//! `p(f_1, ..., f_s)` for generators `p` of the toric ideal of the initial
//! exponents; [`sagbi_construct`] completes a generating set up to a degree
//! bound by adjoining the remainders.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Limits;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Homogeneity, Polynomial, Rational, Ring};
use crate::toric::{toric_ideal, toric_ideal_up_to, Binomial, BinomialIdeal, ExponentMatrix};

/// Non-constant monic algebra generators under a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    ring: Ring,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
}

impl GeneratorSet {
    /// Generators are made monic; non-zero constants are dropped since they
    /// add nothing to the algebra.
    pub fn new(
        ring: &Ring,
        order: MonomialOrder,
        gens: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Self> {
        order.validate(ring.nvars())?;
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.vars().join(","),
                    right: g.ring().vars().join(","),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !g.is_constant() {
                out.push(g.monic(&order));
            }
        }
        Ok(GeneratorSet {
            ring: ring.clone(),
            order,
            gens: out,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn initials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.initial_exponent(&self.order).unwrap().clone())
            .collect()
    }

    /// True when every generator is homogeneous (degrees may differ).
    pub fn is_graded(&self) -> bool {
        self.gens
            .iter()
            .all(|g| matches!(g.is_homogeneous(), Some(Homogeneity::Degree(_))))
    }

    fn max_degree(&self) -> u64 {
        self.gens
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn exponent_matrix(&self) -> Result<ExponentMatrix> {
        ExponentMatrix::new(self.initials())
    }

    fn sorted(mut self) -> Self {
        let order = self.order.clone();
        self.gens.sort_by(|a, b| {
            order.cmp(
                a.initial_exponent(&order).unwrap(),
                b.initial_exponent(&order).unwrap(),
            )
        });
        self
    }
}

/// Lexicographically smallest `i` with `sum_j i_j * initials[j] = e`.
pub fn find_initial_representation(e: &Monomial, initials: &[Monomial]) -> Option<Vec<u32>> {
    let mut failed = HashSet::new();
    let mut out = vec![0u32; initials.len()];
    represent(e, initials, 0, &mut out, &mut failed).then_some(out)
}

fn represent(
    rest: &Monomial,
    initials: &[Monomial],
    j: usize,
    out: &mut [u32],
    failed: &mut HashSet<(usize, Monomial)>,
) -> bool {
    if rest.is_zero() {
        out[j..].iter_mut().for_each(|k| *k = 0);
        return true;
    }
    if j == initials.len() || failed.contains(&(j, rest.clone())) {
        return false;
    }
    let u = &initials[j];
    if u.is_zero() {
        out[j] = 0;
        return represent(rest, initials, j + 1, out, failed);
    }
    let max = rest
        .entries()
        .iter()
        .zip(u.entries())
        .filter(|(_, &b)| b > 0)
        .map(|(&a, &b)| a / b)
        .min()
        .unwrap_or(0);
    let mut cur = rest.clone();
    for k in 0..=max {
        out[j] = k;
        if represent(&cur, initials, j + 1, out, failed) {
            return true;
        }
        if k < max {
            cur = u.quotient(&cur).expect("bounded by max");
        }
    }
    failed.insert((j, rest.clone()));
    false
}

/// Output of [`subduct`]: `f = q + r + c`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubductionResult {
    /// The part of `f` expressed through the generators.
    pub q: Polynomial,
    /// `q` as a sum of `coefficient * prod_j f_j^{k_j}`.
    pub q_expr: Vec<(Rational, Vec<u32>)>,
    /// Terms whose exponents could not be represented.
    pub r: Polynomial,
    /// The constant left when the loop stops.
    pub c: Rational,
}

/// Reusable subduction against a fixed generator set, caching products.
pub struct Subductor<'a> {
    set: &'a GeneratorSet,
    initials: Vec<Monomial>,
    powers: HashMap<(usize, u32), Polynomial>,
    products: HashMap<Vec<u32>, Polynomial>,
}

impl<'a> Subductor<'a> {
    pub fn new(set: &'a GeneratorSet) -> Self {
        Subductor {
            set,
            initials: set.initials(),
            powers: HashMap::new(),
            products: HashMap::new(),
        }
    }

    fn power(&mut self, j: usize, k: u32) -> Result<Polynomial> {
        if let Some(p) = self.powers.get(&(j, k)) {
            return Ok(p.clone());
        }
        let p = match k {
            0 => Polynomial::one(&self.set.ring),
            1 => self.set.gens[j].clone(),
            _ => self.power(j, k - 1)?.try_mul(&self.set.gens[j])?,
        };
        self.powers.insert((j, k), p.clone());
        Ok(p)
    }

    /// `prod_j f_j^{k_j}`.
    pub fn product(&mut self, ks: &[u32]) -> Result<Polynomial> {
        if let Some(p) = self.products.get(ks) {
            return Ok(p.clone());
        }
        let mut acc = Polynomial::one(&self.set.ring);
        for (j, &k) in ks.iter().enumerate() {
            if k > 0 {
                acc = acc.try_mul(&self.power(j, k)?)?;
            }
        }
        self.products.insert(ks.to_vec(), acc.clone());
        Ok(acc)
    }

    pub fn subduct(&mut self, f: &Polynomial) -> Result<SubductionResult> {
        let ring = &self.set.ring;
        if f.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.vars().join(","),
                right: f.ring().vars().join(","),
            });
        }
        let order = self.set.order.clone();
        let mut p = f.clone();
        let mut q = Polynomial::zero(ring);
        let mut q_expr = Vec::new();
        let mut r_terms = Vec::new();
        let mut last: Option<Monomial> = None;
        while !p.is_constant() {
            let t = p.initial_term(&order)?.clone();
            if let Some(prev) = &last {
                debug_assert!(
                    order.cmp(&t.exp, prev).is_lt(),
                    "subduction must strictly descend"
                );
            }
            last = Some(t.exp.clone());
            match find_initial_representation(&t.exp, &self.initials) {
                Some(ks) => {
                    let prod = self.product(&ks)?.scale(&t.coeff);
                    p = p.try_sub(&prod)?;
                    q = q.try_add(&prod)?;
                    q_expr.push((t.coeff, ks));
                }
                None => {
                    let lead = Polynomial::monomial(ring, t.coeff.clone(), t.exp.clone());
                    p = p.try_sub(&lead)?;
                    r_terms.push((t.coeff, t.exp));
                }
            }
        }
        Ok(SubductionResult {
            q,
            q_expr,
            r: Polynomial::from_terms(ring, r_terms)?,
            c: p.constant_term(),
        })
    }

    /// `p(f_1, ..., f_s)` for a relation `X^plus - X^minus`.
    pub fn evaluate(&mut self, b: &Binomial) -> Result<Polynomial> {
        let plus = self.product(b.plus.entries())?;
        let minus = self.product(b.minus.entries())?;
        plus.try_sub(&minus)
    }
}

/// Run the subduction loop on `f` against `set`.
pub fn subduct(f: &Polynomial, set: &GeneratorSet) -> Result<SubductionResult> {
    Subductor::new(set).subduct(f)
}

/// A relation among the initial exponents together with the constant its
/// tête-à-tête subduced to.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedRelation {
    pub relation: Binomial,
    pub constant: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SagbiCheck {
    /// Every tête-à-tête subduces to a constant.
    IsSagbi(Vec<CertifiedRelation>),
    /// A relation whose tête-à-tête leaves a non-zero remainder.
    NotSagbi {
        witness: Binomial,
        remainder: Polynomial,
    },
}

impl SagbiCheck {
    pub fn is_sagbi(&self) -> bool {
        matches!(self, SagbiCheck::IsSagbi(_))
    }
}

fn sort_relations(
    ideal: &BinomialIdeal,
    a: &ExponentMatrix,
    order: &MonomialOrder,
) -> Vec<Binomial> {
    let mut rels = ideal.generators().to_vec();
    rels.sort_by(|x, y| order.cmp(&a.apply(&x.plus), &a.apply(&y.plus)));
    rels
}

/// Decide whether `set` is a SAGBI basis of the algebra it generates.
pub fn sagbi_check(set: &GeneratorSet, limits: Limits) -> Result<SagbiCheck> {
    if set.is_empty() {
        return Ok(SagbiCheck::IsSagbi(Vec::new()));
    }
    let a = set.exponent_matrix()?;
    let ideal = toric_ideal(&a, limits)?;
    let mut sub = Subductor::new(set);
    let mut cert = Vec::new();
    for b in sort_relations(&ideal, &a, &set.order) {
        let t = sub.evaluate(&b)?;
        let res = sub.subduct(&t)?;
        let relation = b;
        if !res.r.is_zero() {
            return Ok(SagbiCheck::NotSagbi {
                witness: relation,
                remainder: res.r,
            });
        }
        cert.push(CertifiedRelation {
            relation,
            constant: res.c,
        });
    }
    Ok(SagbiCheck::IsSagbi(cert))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SagbiStatus {
    /// The basis is a complete SAGBI basis.
    Finite,
    /// The completion stopped at the degree bound.
    Truncated,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SagbiReport {
    pub status: SagbiStatus,
    /// Sorted by ascending initial exponent.
    pub basis: GeneratorSet,
    /// Largest total degree among the basis elements.
    pub max_degree_reached: u64,
    pub rounds: usize,
    /// For `Finite`, the certified relations.
    pub certificate: Option<Vec<CertifiedRelation>>,
    /// For `Truncated`, a tête-à-tête remainder beyond the bound, if one was
    /// found.
    pub pending: Option<Polynomial>,
}

impl SagbiReport {
    pub fn initials(&self) -> Vec<Monomial> {
        self.basis.initials()
    }
}

fn adjoin(set: &mut GeneratorSet, r: Polynomial) {
    let g = r.monic(&set.order);
    set.gens.push(g);
}

/// Subduce `f` and return the non-constant remainder, if any.
fn remainder(set: &GeneratorSet, f: &Polynomial) -> Result<Option<Polynomial>> {
    let r = subduct(f, set)?.r;
    Ok((!r.is_zero()).then_some(r))
}

/// Complete `start` to a SAGBI basis, adjoining only elements of total degree
/// at most `max_degree`.
///
/// Each round computes the toric ideal of the current initial exponents,
/// subduces the tête-à-têtes in ascending order of their initial exponents,
/// and adjoins the monic remainders (each re-subduced against the basis
/// grown so far). When every generator is homogeneous, relations above the
/// bound are not computed until the final certification.
pub fn sagbi_construct(
    start: &GeneratorSet,
    max_degree: u64,
    limits: Limits,
) -> Result<SagbiReport> {
    if start.max_degree() > max_degree {
        return Err(Error::precondition(format!(
            "degree bound {max_degree} is below the generator degree {}",
            start.max_degree()
        )));
    }
    let order = start.order.clone();
    let graded = start.is_graded();

    // initial pass: drop generators already in the algebra of the earlier ones
    let mut input = start.clone().sorted().gens;
    let mut basis = GeneratorSet {
        ring: start.ring.clone(),
        order: order.clone(),
        gens: Vec::new(),
    };
    for f in input.drain(..) {
        if let Some(r) = remainder(&basis, &f)? {
            adjoin(&mut basis, r);
        }
    }

    let mut rounds = 0;
    loop {
        rounds += 1;
        if basis.is_empty() {
            return Ok(finish(
                basis,
                SagbiStatus::Finite,
                rounds,
                Some(Vec::new()),
                None,
            ));
        }
        let a = basis.exponent_matrix()?;
        let ideal = if graded {
            toric_ideal_up_to(&a, max_degree, limits)?.0
        } else {
            toric_ideal(&a, limits)?
        };
        let mut found: Vec<Polynomial> = Vec::new();
        {
            let mut sub = Subductor::new(&basis);
            for b in sort_relations(&ideal, &a, &order) {
                let t = sub.evaluate(&b)?;
                let r = sub.subduct(&t)?.r;
                if !r.is_zero() {
                    found.push(r);
                }
            }
        }
        found.sort_by(|x, y| {
            order.cmp(
                x.initial_exponent(&order).unwrap(),
                y.initial_exponent(&order).unwrap(),
            )
        });
        let mut adjoined = 0;
        let mut beyond: Option<Polynomial> = None;
        for r in found {
            let Some(r) = remainder(&basis, &r)? else {
                continue;
            };
            if r.total_degree().unwrap() <= max_degree {
                adjoin(&mut basis, r);
                adjoined += 1;
            } else if beyond.is_none() {
                beyond = Some(r);
            }
        }
        if adjoined > 0 {
            continue;
        }
        if beyond.is_some() {
            return Ok(finish(basis, SagbiStatus::Truncated, rounds, None, beyond));
        }
        if !graded {
            let cert = match sagbi_check(&basis, limits)? {
                SagbiCheck::IsSagbi(c) => c,
                SagbiCheck::NotSagbi { .. } => unreachable!("all relations were processed"),
            };
            return Ok(finish(basis, SagbiStatus::Finite, rounds, Some(cert), None));
        }
        // nothing new up to the bound: look above it
        return match search_above(&basis, max_degree, limits)? {
            Some(r) => Ok(finish(basis, SagbiStatus::Truncated, rounds, None, Some(r))),
            None => {
                let cert = match sagbi_check(&basis, limits)? {
                    SagbiCheck::IsSagbi(c) => c,
                    SagbiCheck::NotSagbi { .. } => {
                        unreachable!("all relations subduce to constants")
                    }
                };
                Ok(finish(basis, SagbiStatus::Finite, rounds, Some(cert), None))
            }
        };
    }
}

/// For graded bases complete up to `from`, find a non-zero tête-à-tête
/// remainder of higher degree, raising the toric cutoff step by step.
fn search_above(basis: &GeneratorSet, from: u64, limits: Limits) -> Result<Option<Polynomial>> {
    let a = basis.exponent_matrix()?;
    let mut done = from;
    let mut seen: HashSet<Binomial> = HashSet::new();
    let mut sub = Subductor::new(basis);
    loop {
        let (_, next) = toric_ideal_up_to(&a, done, limits)?;
        let Some(next) = next else { return Ok(None) };
        let (ideal, _) = toric_ideal_up_to(&a, next, limits)?;
        for b in sort_relations(&ideal, &a, &basis.order) {
            if a.apply(&b.plus).degree() <= from || !seen.insert(b.clone()) {
                continue;
            }
            let t = sub.evaluate(&b)?;
            let r = sub.subduct(&t)?.r;
            if !r.is_zero() {
                return Ok(Some(r));
            }
        }
        done = next;
    }
}

fn finish(
    basis: GeneratorSet,
    status: SagbiStatus,
    rounds: usize,
    certificate: Option<Vec<CertifiedRelation>>,
    pending: Option<Polynomial>,
) -> SagbiReport {
    let basis = basis.sorted();
    SagbiReport {
        status,
        max_degree_reached: basis.max_degree(),
        basis,
        rounds,
        certificate,
        pending,
    }
}

/// Remove generators with representable initial exponents, make the rest
/// monic, and subduce every tail against the other generators until nothing
/// changes.
pub fn autoreduce(set: &GeneratorSet) -> Result<GeneratorSet> {
    let order = set.order.clone();
    let mut gens = set.clone().sorted().gens;
    // drop from the top so equal initials keep the first copy
    let mut i = gens.len();
    while i > 0 {
        i -= 1;
        let e = gens[i].initial_exponent(&order)?.clone();
        let others: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.initial_exponent(&order).unwrap().clone())
            .collect();
        if find_initial_representation(&e, &others).is_some() {
            gens.remove(i);
        }
    }
    let mut gens: Vec<Polynomial> = gens.into_iter().map(|g| g.monic(&order)).collect();
    loop {
        let mut changed = false;
        for i in 0..gens.len() {
            let lead = {
                let t = gens[i].initial_term(&order)?;
                Polynomial::monomial(&set.ring, t.coeff.clone(), t.exp.clone())
            };
            let tail = gens[i].try_sub(&lead)?;
            if tail.is_zero() {
                continue;
            }
            let others = GeneratorSet {
                ring: set.ring.clone(),
                order: order.clone(),
                gens: gens
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, g)| g.clone())
                    .collect(),
            };
            let r = subduct(&tail, &others)?.r;
            let new = lead.try_add(&r)?;
            if new != gens[i] {
                gens[i] = new;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(GeneratorSet {
        ring: set.ring.clone(),
        order,
        gens,
    }
    .sorted())
}

/// Elements of a monoid in the box `[0, bound]^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxedMonoid {
    pub points: BTreeSet<Monomial>,
    /// True when the generators may be incomplete (a truncated basis).
    pub partial: bool,
}

/// All sums of `gens` with every coordinate at most `bound`.
pub fn monoid_in_box(gens: &[Monomial], nvars: usize, bound: u32) -> BTreeSet<Monomial> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack = vec![Monomial::zero(nvars)];
    seen.insert(Monomial::zero(nvars));
    while let Some(p) = stack.pop() {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let Ok(q) = p.checked_mul(g) else { continue };
            if q.entries().iter().all(|&e| e <= bound) && seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen
}

/// The part of the initial-exponent monoid inside `[0, bound]^n`.
pub fn initial_algebra_monoid(report: &SagbiReport, bound: u32) -> BoxedMonoid {
    BoxedMonoid {
        points: monoid_in_box(&report.initials(), report.basis.ring.nvars(), bound),
        partial: report.status == SagbiStatus::Truncated,
    }
}
