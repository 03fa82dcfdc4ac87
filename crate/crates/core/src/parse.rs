//! Text and JSON forms of polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly    := ['-'] term (('+'|'-') term)*
//! term    := coeff | coeff '*'? factors | factors
//! factors := var ('^' nat)? ('*'? var ('^' nat)?)*
//! coeff   := nat | nat '/' nat
//! var     := letter (letter | digit | '_')*
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::parse(
                    start,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn nat(&mut self) -> Result<BigInt> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(Error::parse(at, "expected a natural number")),
        }
    }

    fn poly(&mut self) -> Result<Vec<(Rational, Monomial)>> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negative = true;
        }
        loop {
            let (c, e) = self.term()?;
            terms.push((if negative { -c } else { c }, e));
            match self.peek() {
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                None => break,
                Some(_) => return Err(Error::parse(self.offset(), "expected `+` or `-`")),
            }
            self.bump();
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut coeff = Rational::one();
        let mut exp = vec![0u32; self.ring.nvars()];
        let mut have_coeff = false;
        if let Some(Tok::Num(_)) = self.peek() {
            let num = self.nat()?;
            let den = if self.peek() == Some(&Tok::Slash) {
                self.bump();
                let at = self.offset();
                let d = self.nat()?;
                if d.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            have_coeff = true;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                if !matches!(self.peek(), Some(Tok::Ident(_))) {
                    return Err(Error::parse(self.offset(), "expected a variable after `*`"));
                }
            }
        }
        let mut have_factor = false;
        loop {
            match self.peek() {
                Some(Tok::Ident(_)) => {}
                Some(Tok::Star) if have_factor => {
                    self.bump();
                    if !matches!(self.peek(), Some(Tok::Ident(_))) {
                        return Err(Error::parse(self.offset(), "expected a variable after `*`"));
                    }
                    continue;
                }
                _ => break,
            }
            let at = self.offset();
            let Some(Tok::Ident(name)) = self.bump() else {
                unreachable!()
            };
            let idx = self
                .ring
                .index_of(&name)
                .ok_or(Error::UnknownVariable(name.clone()))
                .map_err(|e| match e {
                    Error::UnknownVariable(v) => {
                        Error::parse(at, format!("unknown variable `{v}`"))
                    }
                    e => e,
                })?;
            let mut power = 1u32;
            if self.peek() == Some(&Tok::Caret) {
                self.bump();
                let at = self.offset();
                let n = self.nat()?;
                power = u32::try_from(n).map_err(|_| Error::parse(at, "exponent too large"))?;
            }
            exp[idx] = exp[idx].checked_add(power).ok_or(Error::ExponentOverflow)?;
            have_factor = true;
        }
        if !have_coeff && !have_factor {
            return Err(Error::parse(self.offset(), "expected a term"));
        }
        Ok((coeff, Monomial::new(exp)))
    }
}

/// Parse `text` as a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
    };
    let terms = p.poly()?;
    Polynomial::from_terms(ring, terms)
}

impl std::str::FromStr for Ring {
    type Err = Error;

    /// Space- or comma-separated variable names.
    fn from_str(s: &str) -> Result<Ring> {
        let vars: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|v| !v.is_empty())
            .collect();
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::parse(0, format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::parse(0, format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring::new(&vars))
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_monomial(ring: &Ring, e: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.entries().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(ring.vars()[i].clone()),
            k => parts.push(format!("{}^{k}", ring.vars()[i])),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            let mono = fmt_monomial(self.ring(), &t.exp);
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&c))?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&c))?;
            }
        }
        Ok(())
    }
}

/// JSON form `{"vars":[...],"terms":[{"c":"3/2","e":[1,0]}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            vars: p.ring().vars().to_vec(),
            terms: p
                .terms()
                .iter()
                .map(|t| TermJson {
                    c: fmt_rational(&t.coeff),
                    e: t.exp.entries().to_vec(),
                })
                .collect(),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("invalid rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl TryFrom<&PolyJson> for Polynomial {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Polynomial> {
        let ring = Ring::new(&j.vars);
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((parse_rational(&t.c)?, Monomial::new(t.e.clone()))))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(&ring, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use proptest::prelude::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn parse_examples() {
        let f = parse_poly("x^2*y + 3/2*x", &xy()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coefficient(&m(&[2, 1])), int(1));
        assert_eq!(f.coefficient(&m(&[1, 0])), rat(3, 2));

        let g = parse_poly("x^2 - y^2", &xy()).unwrap();
        assert_eq!(g.coefficient(&m(&[2, 0])), int(1));
        assert_eq!(g.coefficient(&m(&[0, 2])), int(-1));

        assert!(parse_poly("0", &xy()).unwrap().is_zero());
    }

    #[test]
    fn parse_variants() {
        let r = xy();
        let a = parse_poly("3x y^2", &r).unwrap();
        let b = parse_poly("3*x*y^2", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-x + x", &r).unwrap(), Polynomial::zero(&r));
        assert_eq!(
            parse_poly(" x*x ", &r).unwrap(),
            parse_poly("x^2", &r).unwrap()
        );
    }

    #[test]
    fn parse_errors() {
        let r = xy();
        assert!(matches!(
            parse_poly("x + z", &r),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_poly("x +", &r),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(parse_poly("x ^ y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poly("x $ y", &r),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_poly("2**x", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn display() {
        let r = xy();
        let f = parse_poly("3/2*x - x^2*y - 1", &r).unwrap();
        assert_eq!(f.to_string(), "-x^2*y + 3/2*x - 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(parse_poly("-7/3", &r).unwrap().to_string(), "-7/3");
    }

    #[test]
    fn json_form() {
        let f = parse_poly("3/2*x + y", &xy()).unwrap();
        let j = serde_json::to_string(&PolyJson::from(&f)).unwrap();
        assert_eq!(
            j,
            r#"{"vars":["x","y"],"terms":[{"c":"3/2","e":[1,0]},{"c":"1","e":[0,1]}]}"#
        );
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Polynomial::try_from(&back).unwrap(), f);
    }

    #[test]
    fn ring_from_str() {
        let r: Ring = "x y z_1".parse().unwrap();
        assert_eq!(r.vars(), ["x", "y", "z_1"]);
        assert!("x x".parse::<Ring>().is_err());
        assert!("1x".parse::<Ring>().is_err());
    }

    proptest! {
        #[test]
        fn parse_format_roundtrip(terms in prop::collection::vec(
            (-9i64..=9, 1i64..=4, prop::collection::vec(0u32..5, 3)), 0..6)
        ) {
            let r = Ring::new(&["x", "y", "z"]);
            let f = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(a, b, e)| (rat(a, b), Monomial::new(e))),
            ).unwrap();
            prop_assert_eq!(parse_poly(&f.to_string(), &r).unwrap(), f);
        }
    }
}
