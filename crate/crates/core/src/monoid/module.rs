//! Monoids generated by a ray and arithmetic progressions inside a cone,
//! and the finite generating sets of the matching subalgebras.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::cone::{cone_of, interior_contains};
use super::AffineMonoid;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational, Ring};

fn det(v1: &Monomial, v2: &Monomial) -> i64 {
    v1[0] as i64 * v2[1] as i64 - v1[1] as i64 * v2[0] as i64
}

fn check_hypotheses(v1: &Monomial, v2: &Monomial, us: &[Monomial]) -> Result<()> {
    for p in std::iter::once(v1).chain(std::iter::once(v2)).chain(us) {
        if p.len() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                got: p.len(),
            });
        }
    }
    if det(v1, v2) == 0 {
        return Err(Error::precondition(format!(
            "{v1} and {v2} are linearly dependent"
        )));
    }
    if us.is_empty() {
        return Err(Error::precondition(
            "at least one module generator is needed",
        ));
    }
    let cone = cone_of(&[v1.clone(), v2.clone()])?;
    for u in us {
        if !interior_contains(&cone, u)? {
            return Err(Error::precondition(format!(
                "{u} is not in the interior of the cone spanned by {v1} and {v2}"
            )));
        }
    }
    Ok(())
}

/// The monoid generated by `v1` and `{u_i + m * v2 : m >= 0}`.
///
/// Requires `v1`, `v2` linearly independent and every `u_i` strictly inside
/// the cone they span.
pub fn construct_module_monoid(
    v1: &Monomial,
    v2: &Monomial,
    us: &[Monomial],
) -> Result<AffineMonoid> {
    check_hypotheses(v1, v2, us)?;
    let mut m = AffineMonoid::new(2).with_generator(v1.clone())?;
    for u in us {
        m = m.with_family(u.clone(), v2.clone())?;
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum FiniteGeneration {
    Yes,
    No,
    /// Probing cannot decide; `slopes` lists `y/x` for the probed
    /// generators (those with `x > 0`) in generation order.
    Unknown {
        slopes: Vec<String>,
        strictly_increasing: bool,
    },
}

fn is_module_shape(m: &AffineMonoid) -> bool {
    let [v1] = m.finite_gens() else { return false };
    let Some(first) = m.families().first() else {
        return false;
    };
    let v2 = &first.period;
    m.stream().is_none()
        && m.families().iter().all(|f| &f.period == v2)
        && check_hypotheses(
            v1,
            v2,
            &m.families()
                .iter()
                .map(|f| f.base.clone())
                .collect::<Vec<_>>(),
        )
        .is_ok()
}

/// Finite generation in the plane. Only finite generator lists and the
/// ray-plus-progressions shape are decided; anything else is probed up to
/// `probe_bound` and reported as unknown.
pub fn is_finitely_generated(m: &AffineMonoid, probe_bound: u32) -> FiniteGeneration {
    if m.families().is_empty() && m.stream().is_none() {
        return FiniteGeneration::Yes;
    }
    if is_module_shape(m) {
        return FiniteGeneration::No;
    }
    let mut probe: Vec<Monomial> = m.finite_gens().to_vec();
    for f in m.families() {
        let mut p = f.base.clone();
        while p.entries().iter().all(|&e| e <= probe_bound) {
            probe.push(p.clone());
            p = p.mul(&f.period);
        }
    }
    if let Some(s) = m.stream() {
        probe.extend(s.in_box(probe_bound));
    }
    let slopes: Vec<Rational> = probe
        .iter()
        .filter(|p| p.len() == 2 && p[0] > 0)
        .map(|p| Rational::new(BigInt::from(p[1]), BigInt::from(p[0])))
        .collect();
    let strictly_increasing = slopes.windows(2).all(|w| w[0] < w[1]);
    FiniteGeneration::Unknown {
        slopes: slopes.iter().map(crate::parse::fmt_rational).collect(),
        strictly_increasing,
    }
}

/// `l * u = a * v1 + b * v2` with `l` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleData {
    pub u: Monomial,
    pub l: u64,
    pub a: u64,
    pub b: u64,
}

/// A finite generating set of the algebra spanned by `x^v1 + x^v2` and all
/// monomials `x^(u_i + m v2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleAlgebra {
    pub v1: Monomial,
    pub v2: Monomial,
    pub data: Vec<ModuleData>,
    /// `x^v1 + x^v2`, then for each `u_i` the monomials
    /// `x^(u_i + k v2)` for `0 <= k < a_i + b_i`.
    pub generators: Vec<Polynomial>,
}

fn decompose(v1: &Monomial, v2: &Monomial, u: &Monomial) -> ModuleData {
    let d = det(v1, v2);
    // Cramer's rule, then clear denominators
    let (mut na, mut nb, mut den) = (det(u, v2), det(v1, u), d);
    if den < 0 {
        (na, nb, den) = (-na, -nb, -den);
    }
    let g = na.gcd(&nb).gcd(&den);
    let (a, b, l) = (na / g, nb / g, den / g);
    ModuleData {
        u: u.clone(),
        l: l as u64,
        a: a as u64,
        b: b as u64,
    }
}

/// The ring `Q[x, y]`.
pub fn plane_ring() -> Ring {
    Ring::new(&["x", "y"])
}

/// The finite generating set for the subalgebra whose initial monoid is
/// [`construct_module_monoid`]`(v1, v2, us)`.
pub fn module_algebra_generators(
    v1: &Monomial,
    v2: &Monomial,
    us: &[Monomial],
) -> Result<ModuleAlgebra> {
    check_hypotheses(v1, v2, us)?;
    let ring = plane_ring();
    let mono = |e: &Monomial| Polynomial::from_exponent(&ring, e.clone());
    let mut generators = vec![&mono(v1) + &mono(v2)];
    let mut data = Vec::new();
    for u in us {
        let d = decompose(v1, v2, u);
        let mut e = u.clone();
        for _ in 0..d.a + d.b {
            generators.push(mono(&e));
            e = e.checked_mul(v2)?;
        }
        data.push(d);
    }
    Ok(ModuleAlgebra {
        v1: v1.clone(),
        v2: v2.clone(),
        data,
        generators,
    })
}

/// The square matrix `A` with `(m_0 ... m_a) A = (f_0 ... f_a)`:
/// column 0 is `e_0`, column `k >= 1` has `C(a+1-k, p-k+1)` in row `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    pub a: u32,
    pub entries: Vec<Vec<BigInt>>,
    pub determinant: Rational,
    /// `c` with `A c = e_a`, i.e. `m_a = sum_k c_k f_k`.
    pub solution: Vec<Rational>,
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn transfer_entries(a: u32) -> Vec<Vec<BigInt>> {
    let n = a as usize + 1;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    m[0][0] = BigInt::one();
    for k in 1..n {
        for (p, row) in m.iter_mut().enumerate() {
            row[k] = binomial(a as i64 + 1 - k as i64, p as i64 - k as i64 + 1);
        }
    }
    m
}

/// Determinant and solution of `A c = rhs` by exact Gaussian elimination.
fn solve(entries: &[Vec<BigInt>], rhs: &[Rational]) -> (Rational, Option<Vec<Rational>>) {
    let n = entries.len();
    let mut m: Vec<Vec<Rational>> = entries
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v: Vec<Rational> = row
                .iter()
                .map(|e| Rational::from_integer(e.clone()))
                .collect();
            v.push(r.clone());
            v
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return (Rational::zero(), None);
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = &row[col] / &p;
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * y;
                }
            }
        }
    }
    let sol = (0..n).map(|r| &m[r][n] / &m[r][r]).collect();
    (det, Some(sol))
}

/// The transfer matrix for `a >= 1`, its determinant, and the coefficients
/// expressing `m_a` through `f_0, ..., f_a`.
pub fn binomial_transfer_matrix(a: u32) -> Result<TransferMatrix> {
    if a == 0 {
        return Err(Error::precondition("the transfer matrix needs a >= 1"));
    }
    let entries = transfer_entries(a);
    let mut rhs = vec![Rational::zero(); a as usize + 1];
    rhs[a as usize] = Rational::one();
    let (determinant, solution) = solve(&entries, &rhs);
    let solution = solution.ok_or_else(|| Error::precondition("transfer matrix is singular"))?;
    Ok(TransferMatrix {
        a,
        entries,
        determinant,
        solution,
    })
}

impl TransferMatrix {
    /// Subtract column `k+1` from column `k` for `1 <= k < a` (all at once).
    pub fn column_reduced(&self) -> Vec<Vec<BigInt>> {
        let n = self.entries.len();
        let mut out = self.entries.clone();
        for row in out.iter_mut().zip(&self.entries) {
            for k in 1..n - 1 {
                row.0[k] = &row.1[k] - &row.1[k + 1];
            }
        }
        out
    }

    /// The column-reduced matrix is block triangular: the leading `a x a`
    /// block is the matrix for `a - 1`, the last row is `e_a`.
    pub fn reduces_to_previous(&self) -> bool {
        if self.a < 2 {
            return true;
        }
        let red = self.column_reduced();
        let prev = transfer_entries(self.a - 1);
        let n = red.len();
        let block = (0..n - 1).all(|r| red[r][..n - 1] == prev[r][..]);
        let last_row =
            red[n - 1][..n - 1].iter().all(|e| e.is_zero()) && red[n - 1][n - 1].is_one();
        block && last_row
    }
}

/// `f_0, ..., f_a` and `m_a` for `l u = a v1 + b v2`: `f_0 = x^(u + a v1 + b v2)`,
/// `f_k = x^(u + (b - 1 + k) v2) (x^v1 + x^v2)^(a + 1 - k)`,
/// `m_a = x^(u + (a + b) v2)`.
pub fn transfer_polynomials(
    v1: &Monomial,
    v2: &Monomial,
    d: &ModuleData,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = plane_ring();
    let mono = |e: Monomial| Polynomial::from_exponent(&ring, e);
    let times = |v: &Monomial, k: u64| v.checked_pow(k as u32);
    let binom = &mono(v1.clone()) + &mono(v2.clone());
    let mut fs = vec![mono(
        d.u.checked_mul(&times(v1, d.a)?)?
            .checked_mul(&times(v2, d.b)?)?,
    )];
    for k in 1..=d.a {
        let shift = d.u.checked_mul(&times(v2, d.b - 1 + k)?)?;
        fs.push(mono(shift).try_mul(&binom.pow((d.a + 1 - k) as u32)?)?);
    }
    let target = mono(d.u.checked_mul(&times(v2, d.a + d.b)?)?);
    Ok((fs, target))
}
