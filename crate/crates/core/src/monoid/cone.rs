//! Cones spanned by points of the non-negative quadrant.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// `R_{>=0}`-span of finitely many points in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Cone2D {
    /// Only the origin.
    Zero,
    /// A single primitive ray.
    Ray(Monomial),
    /// Primitive rays `v1` (closest to the x-axis) and `v2`, with primitive
    /// facet normals: `<w1, v1> = 0`, `<w2, v2> = 0`, both positive inside.
    Proper {
        v1: Monomial,
        v2: Monomial,
        w1: [i64; 2],
        w2: [i64; 2],
    },
}

fn primitive(p: &Monomial) -> Monomial {
    let g = p[0].gcd(&p[1]);
    Monomial::new(vec![p[0] / g, p[1] / g])
}

fn cross(a: &Monomial, b: &Monomial) -> i64 {
    a[0] as i64 * b[1] as i64 - a[1] as i64 * b[0] as i64
}

fn normal(a: i64, b: i64) -> [i64; 2] {
    let g = a.gcd(&b).max(1);
    [a / g, b / g]
}

impl Cone2D {
    /// `<w, p>` for each facet normal.
    pub fn evaluate(&self, p: &Monomial) -> Option<(i64, i64)> {
        match self {
            Cone2D::Proper { w1, w2, .. } => {
                let dot = |w: &[i64; 2]| w[0] * p[0] as i64 + w[1] * p[1] as i64;
                Some((dot(w1), dot(w2)))
            }
            _ => None,
        }
    }

    pub fn contains(&self, p: &Monomial) -> bool {
        match self {
            Cone2D::Zero => p.is_zero(),
            Cone2D::Ray(v) => cross(v, p) == 0,
            Cone2D::Proper { .. } => {
                let (a, b) = self.evaluate(p).unwrap();
                a >= 0 && b >= 0
            }
        }
    }
}

/// The cone spanned by `points` in the plane.
pub fn cone_of(points: &[Monomial]) -> Result<Cone2D> {
    if let Some(bad) = points.iter().find(|p| p.len() != 2) {
        return Err(Error::Dimension {
            expected: 2,
            got: bad.len(),
        });
    }
    let nonzero: Vec<&Monomial> = points.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(Cone2D::Zero);
    }
    // in the quadrant, angle order is cross-product order
    let by_angle = |a: &&Monomial, b: &&Monomial| match cross(a, b) {
        c if c > 0 => Ordering::Less,
        c if c < 0 => Ordering::Greater,
        _ => Ordering::Equal,
    };
    let v1 = primitive(nonzero.iter().copied().min_by(by_angle).unwrap());
    let v2 = primitive(nonzero.iter().copied().max_by(by_angle).unwrap());
    if v1 == v2 {
        return Ok(Cone2D::Ray(v1));
    }
    let w1 = normal(-(v1[1] as i64), v1[0] as i64);
    let w2 = normal(v2[1] as i64, -(v2[0] as i64));
    Ok(Cone2D::Proper { v1, v2, w1, w2 })
}

/// Whether `p` lies strictly inside a two-dimensional cone.
pub fn interior_contains(cone: &Cone2D, p: &Monomial) -> Result<bool> {
    if p.len() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: p.len(),
        });
    }
    match cone.evaluate(p) {
        Some((a, b)) => Ok(a > 0 && b > 0),
        None => Err(Error::precondition(
            "the interior of a degenerate cone is empty",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(a: u32, b: u32) -> Monomial {
        Monomial::new(vec![a, b])
    }

    fn rays(c: &Cone2D) -> (Monomial, Monomial) {
        match c {
            Cone2D::Proper { v1, v2, .. } => (v1.clone(), v2.clone()),
            other => panic!("degenerate cone {other:?}"),
        }
    }

    #[test]
    fn cone_examples() {
        assert_eq!(
            rays(&cone_of(&[m(2, 1), m(1, 2), m(1, 1)]).unwrap()),
            (m(2, 1), m(1, 2))
        );
        assert_eq!(cone_of(&[m(1, 0)]).unwrap(), Cone2D::Ray(m(1, 0)));
        assert_eq!(cone_of(&[m(2, 4), m(1, 2)]).unwrap(), Cone2D::Ray(m(1, 2)));
        assert_eq!(
            rays(&cone_of(&[m(1, 0), m(0, 1), m(3, 5)]).unwrap()),
            (m(1, 0), m(0, 1))
        );
        assert_eq!(cone_of(&[m(0, 0)]).unwrap(), Cone2D::Zero);
        assert!(cone_of(&[Monomial::new(vec![1, 2, 3])]).is_err());
        assert_eq!(
            rays(&cone_of(&[m(4, 2), m(3, 6)]).unwrap()),
            (m(2, 1), m(1, 2))
        );
    }

    #[test]
    fn normals() {
        match cone_of(&[m(2, 1), m(1, 2)]).unwrap() {
            Cone2D::Proper { w1, w2, .. } => {
                assert_eq!(w1, [-1, 2]);
                assert_eq!(w2, [2, -1]);
            }
            other => panic!("{other:?}"),
        }
        match cone_of(&[m(1, 0), m(0, 1)]).unwrap() {
            Cone2D::Proper { w1, w2, .. } => {
                assert_eq!(w1, [0, 1]);
                assert_eq!(w2, [1, 0]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn interior_examples() {
        let quad = cone_of(&[m(1, 0), m(0, 1)]).unwrap();
        assert!(interior_contains(&quad, &m(1, 1)).unwrap());
        assert!(!interior_contains(&quad, &m(1, 0)).unwrap());
        let c = cone_of(&[m(2, 1), m(1, 2)]).unwrap();
        assert!(interior_contains(&c, &m(1, 1)).unwrap());
        assert!(!interior_contains(&c, &m(1, 0)).unwrap());
        assert!(interior_contains(&Cone2D::Ray(m(1, 0)), &m(1, 0)).is_err());
    }

    fn point() -> impl Strategy<Value = Monomial> {
        (0u32..12, 0u32..12).prop_map(|(a, b)| m(a, b))
    }

    proptest! {
        #[test]
        fn normals_support_generators(pts in prop::collection::vec(point(), 1..8)) {
            let c = cone_of(&pts).unwrap();
            if let Cone2D::Proper { v1, v2, .. } = &c {
                for p in &pts {
                    let (a, b) = c.evaluate(p).unwrap();
                    prop_assert!(a >= 0 && b >= 0);
                    prop_assert_eq!(a == 0, !p.is_zero() && primitive(p) == *v1 || p.is_zero());
                    prop_assert_eq!(b == 0, !p.is_zero() && primitive(p) == *v2 || p.is_zero());
                }
            }
        }

        #[test]
        fn interior_absorbs_cone(pts in prop::collection::vec(point(), 2..6), x in point(), y in point()) {
            let c = cone_of(&pts).unwrap();
            if matches!(c, Cone2D::Proper { .. }) && c.contains(&x) && interior_contains(&c, &y).unwrap() {
                prop_assert!(interior_contains(&c, &x.mul(&y)).unwrap());
            }
        }
    }
}
