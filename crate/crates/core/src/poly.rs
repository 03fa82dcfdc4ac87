//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// Coefficient field.
pub type Rational = BigRational;

/// Shorthand for a small rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Clone, Eq)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        Ring(vars.iter().map(|v| v.as_ref().to_string()).collect())
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            });
        }
        Ok(())
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.join(","))
    }
}

/// A non-zero coefficient times a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub exp: Monomial,
}

/// Result of [`Polynomial::is_homogeneous`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// Every term has this total degree.
    Degree(u64),
    /// The zero polynomial, homogeneous of every degree.
    Zero,
}

/// A polynomial in canonical form: no zero coefficients, terms sorted in
/// descending graded-reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

fn storage_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    // descending grevlex
    MonomialOrder::grevlex().cmp(b, a)
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, c, Monomial::zero(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Ring, coeff: Rational, exp: Monomial) -> Self {
        assert_eq!(
            exp.len(),
            ring.nvars(),
            "exponent length must match the ring"
        );
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff, exp }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The monomial `x^exp` with coefficient one.
    pub fn from_exponent(ring: &Ring, exp: impl Into<Monomial>) -> Self {
        Self::monomial(ring, Rational::one(), exp.into())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::from_exponent(ring, Monomial::unit(ring.nvars(), i)))
    }

    /// Build a polynomial from arbitrary terms: like terms are merged and
    /// zero coefficients dropped.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Rational, Monomial)>,
    ) -> Result<Self> {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, e) in terms {
            if e.len() != ring.nvars() {
                return Err(Error::Dimension {
                    expected: ring.nvars(),
                    got: e.len(),
                });
            }
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exp, coeff)| Term { coeff, exp })
            .collect();
        terms.sort_by(|a, b| storage_cmp(&a.exp, &b.exp));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in descending graded-reverse-lexicographic order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` for zero and non-zero constants, i.e. elements of the field.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_zero())
    }

    pub fn coefficient(&self, exp: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.exp == exp)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::zero(self.ring.nvars()))
    }

    /// Exponents carrying a non-zero coefficient.
    pub fn support(&self) -> BTreeSet<Monomial> {
        self.terms.iter().map(|t| t.exp.clone()).collect()
    }

    /// The term whose exponent is the order-maximum of the support.
    pub fn initial_term(&self, order: &MonomialOrder) -> Result<&Term> {
        let mut it = self.terms.iter();
        let mut best = it.next().ok_or(Error::ZeroPolynomial)?;
        for t in it {
            if order.cmp(&t.exp, &best.exp) == Ordering::Greater {
                best = t;
            }
        }
        Ok(best)
    }

    pub fn initial_exponent(&self, order: &MonomialOrder) -> Result<&Monomial> {
        self.initial_term(order).map(|t| &t.exp)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exp.degree()).max()
    }

    pub fn is_homogeneous(&self) -> Option<Homogeneity> {
        let mut it = self.terms.iter().map(|t| t.exp.degree());
        let Some(d) = it.next() else {
            return Some(Homogeneity::Zero);
        };
        it.all(|e| e == d).then_some(Homogeneity::Degree(d))
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match storage_cmp(&a[i].exp, &b[j].exp) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(Term {
                        coeff: sign(&b[j].coeff),
                        exp: b[j].exp.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            exp: a[i].exp.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: sign(&t.coeff),
            exp: t.exp.clone(),
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.exp);
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.exp);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                let e = s.exp.checked_mul(&t.exp)?;
                let c = &s.coeff * &t.coeff;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    /// `c * x^exp * self`.
    pub fn mul_term(&self, c: &Rational, exp: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: &t.coeff * c,
                    exp: t.exp.checked_mul(exp)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // multiplication by a monomial preserves any monomial order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Divide by the initial coefficient. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.initial_term(order) {
            Ok(t) if !t.coeff.is_one() => self.scale(&t.coeff.recip()),
            _ => self.clone(),
        }
    }

    /// Multiply by the positive rational making all coefficients coprime
    /// integers with a positive initial coefficient.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
            num = num.gcd(t.coeff.numer());
        }
        let mut f = Rational::new(den, num);
        if self.initial_term(order).unwrap().coeff.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    /// Ring homomorphism sending each variable to its image.
    ///
    /// Every variable of `self`'s ring that occurs in a term needs an
    /// image; all images must share one target ring.
    pub fn substitute(&self, images: &HashMap<String, Polynomial>) -> Result<Polynomial> {
        let vars = self.ring.vars();
        let mut slots: Vec<Option<&Polynomial>> = Vec::with_capacity(vars.len());
        let mut target: Option<&Ring> = None;
        for v in vars {
            let img = images.get(v);
            if let Some(p) = img {
                match target {
                    Some(r) => r.check_same(&p.ring)?,
                    None => target = Some(&p.ring),
                }
            }
            slots.push(img);
        }
        let target = match target {
            Some(r) => r.clone(),
            None if self.is_constant() => self.ring.clone(),
            None => return Err(Error::MissingImage(first_used_var(self).to_string())),
        };
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); vars.len()];
        let mut out = Polynomial::zero(&target);
        for t in &self.terms {
            let mut acc = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.exp.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = slots[i].ok_or_else(|| Error::MissingImage(vars[i].clone()))?;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().try_mul(img)?;
                    cache.push(next);
                }
                acc = acc.try_mul(&cache[e as usize])?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }

    /// Convenience wrapper around [`Polynomial::substitute`] taking pairs.
    pub fn substitute_pairs(&self, images: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let map: HashMap<String, Polynomial> = images
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.substitute(&map)
    }

    /// Re-express the polynomial in a ring containing all of its variables
    /// (matched by name).
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let idx: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| {
                target
                    .index_of(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut e = vec![0u32; target.nvars()];
                for (i, &x) in t.exp.entries().iter().enumerate() {
                    e[idx[i]] = x;
                }
                (t.coeff.clone(), Monomial::new(e))
            }),
        )
    }
}

fn first_used_var(p: &Polynomial) -> &str {
    for t in &p.terms {
        for (i, &e) in t.exp.entries().iter().enumerate() {
            if e > 0 {
                return &p.ring.vars()[i];
            }
        }
    }
    ""
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ring)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the rings differ or an exponent overflows.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs)
                    .expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &xy()).unwrap()
    }

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            p("x+y").support(),
            [m(&[1, 0]), m(&[0, 1])].into_iter().collect()
        );
        assert!(Polynomial::zero(&xy()).support().is_empty());
        let sq = p("x+y").pow(2).unwrap();
        assert_eq!(
            sq.support(),
            [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])].into_iter().collect()
        );
        // cross-check against the hand expansion
        assert_eq!(sq, p("x^2 + 2*x*y + y^2"));
    }

    #[test]
    fn initial_term_examples() {
        let g = MonomialOrder::grevlex();
        assert_eq!(
            p("x+y").initial_term(&g).unwrap(),
            &Term {
                coeff: int(1),
                exp: m(&[1, 0])
            }
        );
        // degree 6 beats degree 5 in every graded order
        for o in [MonomialOrder::grevlex(), MonomialOrder::grlex()] {
            let f = p("x*y^4 + 3*y^6");
            assert_eq!(
                f.initial_term(&o).unwrap(),
                &Term {
                    coeff: int(3),
                    exp: m(&[0, 6])
                }
            );
            assert_eq!(o.cmp(&m(&[0, 6]), &m(&[1, 4])), Ordering::Greater);
        }
        // lex prefers the x-term instead
        assert_eq!(
            p("x*y^4 + 3*y^6")
                .initial_exponent(&MonomialOrder::lex())
                .unwrap(),
            &m(&[1, 4])
        );
        assert_eq!(
            p("7").initial_term(&g).unwrap(),
            &Term {
                coeff: int(7),
                exp: m(&[0, 0])
            }
        );
        assert_eq!(
            Polynomial::zero(&xy()).initial_term(&g).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x+y") * p("x-y"), p("x^2-y^2"));
        assert_eq!(p("x+y").pow(3).unwrap(), p("x^3+3*x^2*y+3*x*y^2+y^3"));
        let f = (p("x+y").pow(2).unwrap() - p("x^2")).scale(&rat(1, 2));
        assert_eq!(f, p("x*y + 1/2*y^2"));
        assert_eq!(p("x") - p("x"), Polynomial::zero(&xy()));
        assert_eq!(p("x").pow(0).unwrap(), p("1"));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let other = parse_poly("x", &Ring::new(&["x", "z"])).unwrap();
        assert!(matches!(
            p("x").try_add(&other),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            p("x").try_mul(&other),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = Polynomial::from_exponent(&xy(), [u32::MAX, 0]);
        assert_eq!(big.try_mul(&p("x")).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn substitution_examples() {
        let r = Ring::new(&["x", "y", "a"]);
        let q = |s: &str| parse_poly(s, &r).unwrap();
        let f = q("x*y + a*y^2");
        let img = f
            .substitute_pairs(&[("x", q("x - a*y")), ("y", q("y")), ("a", q("a"))])
            .unwrap();
        assert_eq!(img, q("x*y"));

        // X0*X2 - X1^2 at x*y^(i^2), i = 0, 1, 2
        let big = Ring::new(&["X0", "X1", "X2"]);
        let rel = parse_poly("X0*X2 - X1^2", &big).unwrap();
        let val = rel
            .substitute_pairs(&[("X0", p("x")), ("X1", p("x*y")), ("X2", p("x*y^4"))])
            .unwrap();
        assert_eq!(val, p("x^2*y^4 - x^2*y^2"));
        assert!(!val.is_zero());

        let id = p("x^3 - 2*x*y + 5");
        assert_eq!(
            id.substitute_pairs(&[("x", p("x")), ("y", p("y"))])
                .unwrap(),
            id
        );

        let err = p("x*y").substitute_pairs(&[("x", p("x"))]).unwrap_err();
        assert_eq!(err, Error::MissingImage("y".into()));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x^2-y^2").is_homogeneous(), Some(Homogeneity::Degree(2)));
        assert_eq!(p("x+y^2").is_homogeneous(), None);
        assert_eq!(p("x^3-y^3").is_homogeneous(), Some(Homogeneity::Degree(3)));
        assert_eq!(p("0").is_homogeneous(), Some(Homogeneity::Zero));
    }

    #[test]
    fn embed_into_larger_ring() {
        let big = Ring::new(&["a", "x", "y"]);
        let e = p("x^2 - 3*y").embed(&big).unwrap();
        assert_eq!(e, parse_poly("x^2 - 3*y", &big).unwrap());
        assert!(p("x").embed(&Ring::new(&["y"])).is_err());
    }

    pub(crate) fn small_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
        let n = ring.nvars();
        prop::collection::vec(
            (-4i64..=4, 1i64..=3, prop::collection::vec(0u32..4, n)),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(
                &ring,
                ts.into_iter()
                    .map(|(a, b, e)| (rat(a, b), Monomial::new(e))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(f in small_poly(xy()), g in small_poly(xy()), h in small_poly(xy())) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f - &g) + &g, f.clone());
        }

        #[test]
        fn initial_terms_multiply(f in small_poly(xy()), g in small_poly(xy())) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            for o in [MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::weight(vec![2, 1])] {
                let fg = &f * &g;
                let a = f.initial_term(&o).unwrap();
                let b = g.initial_term(&o).unwrap();
                let c = fg.initial_term(&o).unwrap();
                prop_assert_eq!(&c.exp, &a.exp.mul(&b.exp));
                prop_assert_eq!(&c.coeff, &(&a.coeff * &b.coeff));
            }
        }

        #[test]
        fn graded_orders_agree_on_homogeneous(f in small_poly(xy())) {
            // take the top-degree part to get a homogeneous polynomial
            prop_assume!(!f.is_zero());
            let d = f.total_degree().unwrap();
            let h = Polynomial::from_terms(
                &xy(),
                f.terms().iter().filter(|t| t.exp.degree() == d).map(|t| (t.coeff.clone(), t.exp.clone())),
            ).unwrap();
            let orders = [MonomialOrder::grevlex(), MonomialOrder::grlex(), MonomialOrder::weight(vec![1, 1])];
            let first = h.initial_term(&orders[0]).unwrap();
            for o in &orders[1..] {
                prop_assert_eq!(h.initial_term(o).unwrap(), first);
            }
        }
    }
}
