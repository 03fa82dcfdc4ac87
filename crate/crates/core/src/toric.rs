//! Toric ideals of non-negative integer matrices.
//!
//! The toric ideal of `A = (u_1 | ... | u_s)` is the kernel of
//! `X_i -> x^{u_i}`. It is computed by eliminating the `x` variables from
//! `<X_i - x^{u_i}>` under a block order with the `x` block on top.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_truncated, Ideal, Limits};
use crate::monomial::{Monomial, MonomialOrder, OrderBlock, OrderKind};
use crate::poly::{Polynomial, Rational, Ring};

/// Non-negative integer matrix given by its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: usize,
    columns: Vec<Monomial>,
}

impl ExponentMatrix {
    pub fn new(columns: Vec<Monomial>) -> Result<Self> {
        let rows = columns
            .first()
            .ok_or_else(|| Error::precondition("matrix needs at least one column"))?
            .len();
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::Dimension {
                expected: rows,
                got: bad.len(),
            });
        }
        Ok(ExponentMatrix { rows, columns })
    }

    /// Number of rows (ambient variables).
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    /// `A * v` for a non-negative exponent vector `v` of length `s`.
    pub fn apply(&self, v: &Monomial) -> Monomial {
        let mut out = vec![0u32; self.rows];
        for (c, &k) in self.columns.iter().zip(v.entries()) {
            for (o, &e) in out.iter_mut().zip(c.entries()) {
                *o += e * k;
            }
        }
        Monomial::new(out)
    }
}

/// `X^plus - X^minus` with `A*plus = A*minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(
            ring,
            [
                (Rational::one(), self.plus.clone()),
                (-Rational::one(), self.minus.clone()),
            ],
        )
        .expect("binomial exponents match the relation ring")
    }

    /// Total degree of the `plus` side.
    pub fn degree(&self) -> u64 {
        self.plus.degree()
    }
}

/// Generators of a toric ideal in the relation ring `X0, ..., X{s-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialIdeal {
    ring: Ring,
    generators: Vec<Binomial>,
}

impl BinomialIdeal {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|b| b.to_poly(&self.ring))
            .collect()
    }
}

impl fmt::Display for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

fn fmt_side(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("X{i}")
            } else {
                format!("X{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Written `plus - minus` in the variables `X0, X1, ...`.
impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", fmt_side(&self.plus), fmt_side(&self.minus))
    }
}

/// The relation ring `X0, ..., X{s-1}`.
pub fn relation_ring(s: usize) -> Ring {
    let names: Vec<String> = (0..s).map(|i| format!("X{i}")).collect();
    Ring::new(&names)
}

/// Generators of the toric ideal of `a`.
///
/// Each generator has support-disjoint sides, the lexicographically larger
/// side (with `X0 > X1 > ...`) first. The list is sorted by degree, then
/// lexicographically.
pub fn toric_ideal(a: &ExponentMatrix, limits: Limits) -> Result<BinomialIdeal> {
    Ok(eliminate(a, limits, None)?.0)
}

/// The generators `X^plus - X^minus` of the toric ideal with
/// `|A * plus| <= max_degree`, together with the smallest degree at which the
/// computation was cut off (`None` if the result is the full ideal).
///
/// Every column must be non-zero.
pub fn toric_ideal_up_to(
    a: &ExponentMatrix,
    max_degree: u64,
    limits: Limits,
) -> Result<(BinomialIdeal, Option<u64>)> {
    if a.columns.iter().any(|c| c.is_zero()) {
        return Err(Error::precondition(
            "truncated toric ideals need non-zero columns",
        ));
    }
    eliminate(a, limits, Some(max_degree))
}

fn eliminate(
    a: &ExponentMatrix,
    limits: Limits,
    max_degree: Option<u64>,
) -> Result<(BinomialIdeal, Option<u64>)> {
    let n = a.rows;
    let s = a.columns.len();
    let rel = relation_ring(s);
    let mut names: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
    names.extend(rel.vars().iter().cloned());
    let big = Ring::new(&names);

    let gens = a.columns.iter().enumerate().map(|(i, u)| {
        let mut xi = vec![0u32; n + s];
        xi[n + i] = 1;
        let mut xu = u.entries().to_vec();
        xu.resize(n + s, 0);
        Polynomial::from_terms(
            &big,
            [
                (Rational::one(), Monomial::new(xi)),
                (-Rational::one(), Monomial::new(xu)),
            ],
        )
        .expect("lengths agree")
    });
    let ideal = Ideal::new(&big, gens)?;
    let order = MonomialOrder::elimination(
        OrderBlock {
            vars: (0..n).collect(),
            kind: OrderKind::GrevLex,
        },
        OrderBlock {
            vars: (n..n + s).collect(),
            kind: OrderKind::GrevLex,
        },
    );
    let (gb, skipped) = match max_degree {
        None => (buchberger(&ideal, &order, limits)?, None),
        Some(d) => {
            let mut weights = vec![1u64; n];
            weights.extend(a.columns.iter().map(|c| c.degree()));
            buchberger_truncated(&ideal, &order, limits, &weights, d)?
        }
    };

    let lex = MonomialOrder::lex();
    let mut out: Vec<Binomial> = Vec::new();
    for g in gb.elements() {
        if g.terms()
            .iter()
            .any(|t| t.exp.entries()[..n].iter().any(|&e| e != 0))
        {
            continue;
        }
        let terms = g.terms();
        let ok = terms.len() == 2 && (&terms[0].coeff + &terms[1].coeff).is_zero();
        if !ok {
            return Err(Error::precondition(format!(
                "elimination produced a non-binomial relation `{g}`"
            )));
        }
        let strip = |m: &Monomial| Monomial::new(m.entries()[n..].to_vec());
        let (p, q) = (strip(&terms[0].exp), strip(&terms[1].exp));
        let common = p.gcd(&q);
        let p = common.quotient(&p).unwrap();
        let q = common.quotient(&q).unwrap();
        let (plus, minus) = if lex.cmp(&p, &q) == Ordering::Less {
            (q, p)
        } else {
            (p, q)
        };
        debug_assert_eq!(a.apply(&plus), a.apply(&minus));
        let b = Binomial { plus, minus };
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| lex.cmp(&y.plus, &x.plus))
            .then_with(|| lex.cmp(&y.minus, &x.minus))
    });
    Ok((
        BinomialIdeal {
            ring: rel,
            generators: out,
        },
        skipped,
    ))
}

/// A basis of the integer kernel `{v in Z^s : A v = 0}`.
///
/// Each vector is normalized so its first non-zero entry is positive.
#[allow(clippy::needless_range_loop)]
pub fn kernel_lattice(a: &ExponentMatrix) -> Result<Vec<Vec<i64>>> {
    let n = a.rows;
    let s = a.columns.len();
    // work[r][c] = A[r][c], unimodular column transform tracked in u
    let mut work: Vec<Vec<i128>> = (0..n)
        .map(|r| a.columns.iter().map(|c| c[r] as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..s)
        .map(|r| (0..s).map(|c| i128::from(r == c)).collect())
        .collect();
    let overflow = || Error::precondition("kernel computation overflowed");

    let col_op = |work: &mut Vec<Vec<i128>>,
                  u: &mut Vec<Vec<i128>>,
                  dst: usize,
                  src: usize,
                  k: i128|
     -> Result<()> {
        // column dst -= k * column src
        for row in work.iter_mut().chain(u.iter_mut()) {
            row[dst] = row[dst]
                .checked_sub(k.checked_mul(row[src]).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        Ok(())
    };
    let swap = |work: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for row in work.iter_mut().chain(u.iter_mut()) {
            row.swap(i, j);
        }
    };

    let mut pivot = 0;
    for r in 0..n {
        if pivot == s {
            break;
        }
        loop {
            // smallest non-zero |entry| in row r among columns >= pivot
            let best = (pivot..s)
                .filter(|&c| work[r][c] != 0)
                .min_by_key(|&c| work[r][c].abs());
            let Some(b) = best else { break };
            swap(&mut work, &mut u, pivot, b);
            let mut done = true;
            for c in pivot + 1..s {
                if work[r][c] != 0 {
                    let k = work[r][c].div_euclid(work[r][pivot]);
                    col_op(&mut work, &mut u, c, pivot, k)?;
                    if work[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    let mut basis = Vec::new();
    for c in pivot..s {
        let mut v: Vec<i64> = (0..s)
            .map(|r| i64::try_from(u[r][c]).map_err(|_| overflow()))
            .collect::<Result<_>>()?;
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::reduce_basis;
    use crate::parse::parse_poly;
    use proptest::prelude::*;

    fn cols(v: &[&[u32]]) -> ExponentMatrix {
        ExponentMatrix::new(v.iter().map(|c| Monomial::new(c.to_vec())).collect()).unwrap()
    }

    fn rel(s: &str, k: usize) -> Polynomial {
        parse_poly(s, &relation_ring(k)).unwrap()
    }

    #[test]
    fn rational_normal_curve_relation() {
        let a = cols(&[&[1, 0], &[1, 1], &[1, 2]]);
        let t = toric_ideal(&a, Limits::default()).unwrap();
        assert_eq!(t.polynomials(), vec![rel("X0*X2 - X1^2", 3)]);
        assert_eq!(t.to_string(), "X0*X2 - X1^2\n");
        assert_eq!(kernel_lattice(&a).unwrap(), vec![vec![1, -2, 1]]);
    }

    #[test]
    fn rational_normal_curve_relation_by_enumeration() {
        // every kernel vector with entries in [-2, 2] is a multiple of (1,-2,1)
        let a = cols(&[&[1, 0], &[1, 1], &[1, 2]]);
        let mut found = Vec::new();
        for x in -2i64..=2 {
            for y in -2i64..=2 {
                for z in -2i64..=2 {
                    let v = [x, y, z];
                    let zero = (0..2)
                        .all(|r| (0..3).map(|c| a.columns()[c][r] as i64 * v[c]).sum::<i64>() == 0);
                    if zero && v != [0, 0, 0] {
                        found.push(v);
                    }
                }
            }
        }
        assert_eq!(found, vec![[-1, 2, -1], [1, -2, 1]]);
    }

    #[test]
    fn injective_map_has_no_relations() {
        let a = cols(&[&[1, 0], &[0, 1]]);
        assert!(toric_ideal(&a, Limits::default())
            .unwrap()
            .generators()
            .is_empty());
        assert!(kernel_lattice(&a).unwrap().is_empty());
    }

    #[test]
    fn squares_matrix_at_two() {
        let a = cols(&[&[1, 0], &[1, 1], &[1, 4]]);
        assert_eq!(kernel_lattice(&a).unwrap(), vec![vec![3, -4, 1]]);
        let t = toric_ideal(&a, Limits::default()).unwrap();
        assert_eq!(t.polynomials(), vec![rel("X0^3*X2 - X1^4", 3)]);
    }

    #[test]
    fn duplicated_column() {
        let a = cols(&[&[2, 1], &[1, 1], &[2, 1]]);
        let k = kernel_lattice(&a).unwrap();
        assert_eq!(k, vec![vec![1, 0, -1]]);
        let t = toric_ideal(&a, Limits::default()).unwrap();
        assert_eq!(t.polynomials(), vec![rel("X0 - X2", 3)]);
    }

    #[test]
    fn zero_column_gives_unit_relation() {
        let a = cols(&[&[0, 0], &[1, 1]]);
        let t = toric_ideal(&a, Limits::default()).unwrap();
        assert_eq!(t.polynomials(), vec![rel("X0 - 1", 2)]);
    }

    fn soundness(a: &ExponentMatrix, t: &BinomialIdeal) {
        for b in t.generators() {
            assert_eq!(a.apply(&b.plus), a.apply(&b.minus));
            assert!(b.plus.is_coprime(&b.minus));
        }
    }

    /// Brute-force completeness: every binomial of degree <= 4 on both
    /// sides lies in the ideal.
    fn completeness(a: &ExponentMatrix, t: &BinomialIdeal) {
        let s = a.columns().len();
        let ring = relation_ring(s);
        let mut exps: Vec<Monomial> = Vec::new();
        let mut cur = vec![0u32; s];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for k in 0..=left {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, 4, &mut cur, &mut exps);
        let polys = t.polynomials();
        if polys.is_empty() {
            for (i, x) in exps.iter().enumerate() {
                for y in &exps[i + 1..] {
                    assert_ne!(a.apply(x), a.apply(y), "missing relation {x:?} ~ {y:?}");
                }
            }
            return;
        }
        // Groebner basis of the output generators, used to test membership
        let gb = buchberger(
            &Ideal::new(&ring, polys).unwrap(),
            &MonomialOrder::grevlex(),
            Limits::default(),
        )
        .unwrap();
        let gb = reduce_basis(gb.elements(), gb.order()).unwrap();
        for (i, x) in exps.iter().enumerate() {
            for y in &exps[i + 1..] {
                if a.apply(x) == a.apply(y) {
                    let b = Binomial {
                        plus: x.clone(),
                        minus: y.clone(),
                    }
                    .to_poly(&ring);
                    assert!(gb.contains(&b).unwrap(), "{b} not in toric ideal of {a:?}");
                }
            }
        }
    }

    #[test]
    fn small_instances_sound_and_complete() {
        let cases: Vec<ExponentMatrix> = vec![
            cols(&[&[1, 0], &[1, 1], &[1, 2]]),
            cols(&[&[1, 0], &[1, 1], &[1, 2], &[1, 3]]),
            cols(&[&[2, 0], &[1, 1], &[0, 2]]),
            cols(&[&[2, 0], &[3, 0], &[2, 2], &[3, 3]]),
            cols(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[2, 1, 0]]),
        ];
        for a in cases {
            let t = toric_ideal(&a, Limits::default()).unwrap();
            soundness(&a, &t);
            completeness(&a, &t);
        }
    }

    #[test]
    fn homogeneous_columns_give_homogeneous_generators() {
        let a = cols(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]);
        let t = toric_ideal(&a, Limits::default()).unwrap();
        assert!(!t.generators().is_empty());
        for b in t.generators() {
            assert_eq!(b.plus.degree(), b.minus.degree());
        }
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let a = cols(&[&[2, 0], &[3, 0], &[2, 2], &[3, 3], &[1, 3]]);
        let full = toric_ideal(&a, Limits::default()).unwrap();
        let top = full
            .generators()
            .iter()
            .map(|b| a.apply(&b.plus).degree())
            .max()
            .unwrap();
        for d in 0..=top + 2 {
            let (part, skipped) = toric_ideal_up_to(&a, d, Limits::default()).unwrap();
            let expected: Vec<Binomial> = full
                .generators()
                .iter()
                .filter(|b| a.apply(&b.plus).degree() <= d)
                .cloned()
                .collect();
            assert_eq!(part.generators(), &expected[..], "cap {d}");
            assert!(skipped.is_none_or(|s| s > d));
        }
        assert_eq!(
            toric_ideal_up_to(&a, 200, Limits::default()).unwrap().1,
            None
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn random_matrices(cols_ in prop::collection::vec(prop::collection::vec(0u32..=6, 2), 1..=4)) {
            let a = ExponentMatrix::new(cols_.into_iter().map(Monomial::new).collect()).unwrap();
            let t = toric_ideal(&a, Limits::default()).unwrap();
            soundness(&a, &t);
            completeness(&a, &t);
            for v in kernel_lattice(&a).unwrap() {
                for r in 0..a.rows() {
                    let dot: i64 = (0..v.len()).map(|c| a.columns()[c][r] as i64 * v[c]).sum();
                    prop_assert_eq!(dot, 0);
                }
            }
        }
    }
}
