//! Randomized property suites shared by the integration tests and the
//! acceptance runner. Each suite returns the first counterexample it finds.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use sagbi::monoid::{
    construct_module_monoid, irreducibles, module_algebra_generators, AffineMonoid,
};
use sagbi::poly::rat;
use sagbi::subalgebra::{find_initial_representation, monoid_in_box, Subductor};
use sagbi::toric::relation_ring;
use sagbi::{
    buchberger, sagbi_construct, subduct, toric_ideal, ExponentMatrix, GeneratorSet, Ideal, Limits,
    Monomial, MonomialOrder, Polynomial, Ring,
};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn report<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn xy() -> Ring {
    Ring::new(&["x", "y"])
}

pub fn small_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
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

fn mono(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, n).prop_map(Monomial::new)
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::lex()),
        Just(MonomialOrder::grlex()),
        Just(MonomialOrder::grevlex()),
        prop::collection::vec(1u32..5, 3).prop_map(MonomialOrder::weight),
        Just(MonomialOrder::grevlex().with_priority(vec![2, 0, 1])),
    ]
}

/// Totality, antisymmetry, transitivity, compatibility with products, and
/// the unit as the minimum.
pub fn order_axioms(cases: u32) -> Result<(), String> {
    report(
        runner(cases).run(&(orders(), mono(3), mono(3), mono(3)), |(o, a, b, c)| {
            use std::cmp::Ordering::*;
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab.reverse(), o.cmp(&b, &a));
            prop_assert_eq!(ab == Equal, a == b);
            if ab != Greater && o.cmp(&b, &c) != Greater {
                prop_assert!(o.cmp(&a, &c) != Greater);
            }
            let (ac, bc) = (a.checked_mul(&c).unwrap(), b.checked_mul(&c).unwrap());
            prop_assert_eq!(o.cmp(&ac, &bc), ab);
            prop_assert!(o.cmp(&Monomial::zero(3), &a) != Greater);
            Ok(())
        }),
    )
}

/// `in(f g) = in(f) in(g)`.
pub fn initial_multiplicativity(cases: u32) -> Result<(), String> {
    let r = Ring::new(&["x", "y", "z"]);
    report(runner(cases).run(
        &(orders(), small_poly(r.clone()), small_poly(r)),
        |(o, f, g)| {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = f.try_mul(&g).unwrap();
            let (tf, tg, tfg) = (
                f.initial_term(&o).unwrap(),
                g.initial_term(&o).unwrap(),
                fg.initial_term(&o).unwrap(),
            );
            prop_assert_eq!(&tfg.exp, &tf.exp.checked_mul(&tg.exp).unwrap());
            prop_assert_eq!(&tfg.coeff, &(&tf.coeff * &tg.coeff));
            Ok(())
        },
    ))
}

fn random_set() -> impl Strategy<Value = GeneratorSet> {
    prop::collection::vec(small_poly(xy()), 1..4).prop_filter_map("non-constant generators", |gs| {
        let s = GeneratorSet::new(
            &xy(),
            MonomialOrder::grevlex(),
            gs.into_iter().filter(|g| !g.is_zero()),
        )
        .ok()?;
        (!s.is_empty()).then_some(s)
    })
}

/// `f = q + r + c`, `q` is the recorded combination of products, and no
/// term of `r` has a representable exponent.
pub fn subduction_contract(cases: u32) -> Result<(), String> {
    report(
        runner(cases).run(&(small_poly(xy()), random_set()), |(f, s)| {
            let res = subduct(&f, &s).unwrap();
            let back = &(&res.q + &res.r) + &Polynomial::constant(&xy(), res.c.clone());
            prop_assert_eq!(&back, &f);
            let init = s.initials();
            for t in res.r.terms() {
                prop_assert!(!t.exp.is_zero());
                prop_assert!(find_initial_representation(&t.exp, &init).is_none());
            }
            let mut sub = Subductor::new(&s);
            let mut q = Polynomial::zero(&xy());
            for (c, ks) in &res.q_expr {
                q = &q + &sub.product(ks).unwrap().scale(c);
            }
            prop_assert_eq!(q, res.q);
            Ok(())
        }),
    )
}

/// All exponent vectors with total degree at most `d` in `n` variables.
fn vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 0..=d {
        for mut rest in vectors(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Generators map to equal monomials, and every binomial of degree at most
/// 3 in the kernel reduces to zero modulo the ideal.
pub fn toric_oracle(cases: u32) -> Result<(), String> {
    let cols = prop::collection::vec(prop::collection::vec(0u32..=4, 2), 2..=4);
    report(runner(cases).run(&cols, |cols| {
        let a = ExponentMatrix::new(cols.into_iter().map(Monomial::new).collect()).unwrap();
        let ideal = toric_ideal(&a, Limits::default()).unwrap();
        for b in ideal.generators() {
            prop_assert_eq!(a.apply(&b.plus), a.apply(&b.minus));
        }
        let n = a.columns().len();
        let ring = relation_ring(n);
        let polys = ideal.polynomials();
        let gb = if polys.is_empty() {
            None
        } else {
            Some(
                buchberger(
                    &Ideal::new(&ring, polys).unwrap(),
                    &MonomialOrder::grevlex(),
                    Limits::default(),
                )
                .unwrap(),
            )
        };
        let vs = vectors(n, 3);
        for u in &vs {
            for v in &vs {
                let (u, v) = (Monomial::new(u.clone()), Monomial::new(v.clone()));
                if u >= v || !u.is_coprime(&v) || a.apply(&u) != a.apply(&v) {
                    continue;
                }
                let bin = Polynomial::from_exponent(&ring, u.clone())
                    - Polynomial::from_exponent(&ring, v.clone());
                let inside = gb.as_ref().is_some_and(|g| g.contains(&bin).unwrap());
                prop_assert!(inside, "{} missing", bin);
            }
        }
        Ok(())
    }))
}

/// Irreducibles straight from the definition, by a table of members.
pub fn irreducibles_brute_force(gens: &[Monomial], bound: u32) -> Vec<Monomial> {
    let n = (bound + 1) as usize;
    let mut member = vec![vec![false; n]; n];
    member[0][0] = true;
    for a in 0..n {
        for b in 0..n {
            if (a, b) != (0, 0) {
                member[a][b] = gens.iter().any(|g| {
                    let (ga, gb) = (g[0] as usize, g[1] as usize);
                    (ga, gb) != (0, 0) && ga <= a && gb <= b && member[a - ga][b - gb]
                });
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if (a, b) == (0, 0) || !member[a][b] {
                continue;
            }
            let split = (0..=a).any(|c| {
                (0..=b).any(|d| {
                    (c, d) != (0, 0) && (c, d) != (a, b) && member[c][d] && member[a - c][b - d]
                })
            });
            if !split {
                out.push(Monomial::new(vec![a as u32, b as u32]));
            }
        }
    }
    out
}

pub fn irreducibles_oracle(cases: u32) -> Result<(), String> {
    let gens = prop::collection::vec(
        prop::collection::vec(0u32..=8, 2).prop_map(Monomial::new),
        1..6,
    );
    report(runner(cases).run(&(gens, 1u32..=20), |(gens, bound)| {
        let m = AffineMonoid::generated_by(2, gens.clone()).unwrap();
        prop_assert_eq!(
            irreducibles(&m, bound).unwrap(),
            irreducibles_brute_force(&gens, bound)
        );
        Ok(())
    }))
}

fn pt(a: u32, b: u32) -> Monomial {
    Monomial::new(vec![a, b])
}

/// Random admissible ray, period, and module generator: the truncated
/// completion of the finite generating set has the predicted initial monoid.
pub fn module_family(cases: u32) -> Result<(), String> {
    let data = (0u32..=3, 0u32..=3, 0u32..=3, 0u32..=3, 1u32..=4, 1u32..=4);
    report(runner(cases).run(&data, |(a1, a2, b1, b2, p, q)| {
        let (v1, v2, u) = (pt(a1, a2), pt(b1, b2), pt(p, q));
        let det = a1 as i64 * b2 as i64 - a2 as i64 * b1 as i64;
        prop_assume!(det != 0);
        prop_assume!(MonomialOrder::grevlex().cmp(&v1, &v2) == std::cmp::Ordering::Greater);
        let Ok(monoid) = construct_module_monoid(&v1, &v2, std::slice::from_ref(&u)) else {
            return Err(TestCaseError::reject("u outside the open cone"));
        };
        let algebra = module_algebra_generators(&v1, &v2, &[u]).unwrap();
        let top = algebra
            .generators
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap();
        prop_assume!(top <= 14);
        let d = top.max(12);
        let set = GeneratorSet::new(&xy(), MonomialOrder::grevlex(), algebra.generators).unwrap();
        let report = sagbi_construct(&set, d, Limits::default()).unwrap();
        let bound = (d / 2) as u32;
        let got: BTreeSet<Monomial> = monoid_in_box(&report.initials(), 2, bound);
        prop_assert_eq!(got, monoid.elements_in_box(bound));
        Ok(())
    }))
}
