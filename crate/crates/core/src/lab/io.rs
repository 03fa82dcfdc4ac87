//! Text formats for generator lists, matrices, and monoid specifications.

use std::path::Path;

use crate::error::{Error, Result};
use crate::monoid::{AffineMonoid, NamedStream};
use crate::monomial::Monomial;
use crate::parse::parse_poly;
use crate::poly::{Polynomial, Ring};
use crate::toric::ExponentMatrix;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// A `vars: x y` header followed by one polynomial per line; `#` starts a
/// comment.
pub fn parse_polynomial_list(text: &str) -> Result<(Ring, Vec<Polynomial>)> {
    let mut lines = content_lines(text);
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing `vars:` header"))?;
    let vars = header
        .strip_prefix("vars:")
        .ok_or_else(|| Error::parse(0, "first line must be `vars: ...`"))?;
    let ring: Ring = vars.parse()?;
    if ring.nvars() == 0 {
        return Err(Error::parse(0, "no variables declared"));
    }
    let mut polys = Vec::new();
    for (line, l) in lines {
        let p = parse_poly(l, &ring).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos,
                msg: format!("line {line}: {msg}"),
            },
            e => e,
        })?;
        polys.push(p);
    }
    Ok((ring, polys))
}

pub fn read_polynomial_list(path: &Path) -> Result<(Ring, Vec<Polynomial>)> {
    parse_polynomial_list(&read(path)?)
}

/// One column per line as whitespace-separated non-negative integers.
pub fn parse_matrix(text: &str) -> Result<ExponentMatrix> {
    let mut cols = Vec::new();
    for (line, l) in content_lines(text) {
        let entries = l
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>().map_err(|_| {
                    Error::parse(
                        0,
                        format!("line {line}: `{t}` is not a non-negative integer"),
                    )
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        cols.push(Monomial::new(entries));
    }
    ExponentMatrix::new(cols)
}

pub fn read_matrix(path: &Path) -> Result<ExponentMatrix> {
    parse_matrix(&read(path)?)
}

/// A point `a,b,...`.
pub fn parse_point(s: &str) -> Result<Monomial> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::parse(0, format!("invalid point coordinate `{}`", t.trim())))
        })
        .collect::<Result<Vec<u32>>>()?;
    if entries.is_empty() {
        return Err(Error::parse(0, "empty point"));
    }
    Ok(Monomial::new(entries))
}

/// Semicolon-separated points.
pub fn parse_points(s: &str) -> Result<Vec<Monomial>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_point)
        .collect()
}

/// Semicolon-separated items, each a point `a,b`, a family
/// `base+m*period` (for example `1,1+m*0,1`), or the stream `(1,n^2)`.
pub fn parse_monoid_spec(spec: &str) -> Result<AffineMonoid> {
    let mut finite = Vec::new();
    let mut families = Vec::new();
    let mut stream = None;
    for item in spec.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let compact: String = item.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "(1,n^2)" {
            stream = Some(NamedStream::Squares);
        } else if let Some((base, period)) = compact.split_once("+m*") {
            families.push((parse_point(base)?, parse_point(period)?));
        } else if compact.contains('n') || compact.contains('m') {
            return Err(Error::parse(
                0,
                format!("unrecognized generator stream `{item}`"),
            ));
        } else {
            finite.push(parse_point(&compact)?);
        }
    }
    let dim = finite
        .first()
        .map(|p| p.len())
        .or_else(|| families.first().map(|f| f.0.len()))
        .or_else(|| stream.map(NamedStream::dimension))
        .ok_or_else(|| Error::parse(0, "empty monoid specification"))?;
    let mut m = AffineMonoid::new(dim);
    for p in finite {
        m = m.with_generator(p)?;
    }
    for (b, p) in families {
        m = m.with_family(b, p)?;
    }
    if let Some(s) = stream {
        m = m.with_stream(s)?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_list() {
        let (ring, ps) =
            parse_polynomial_list("# generators\nvars: x y\nx + y\n\nx*y  # monomial\n").unwrap();
        assert_eq!(ring.vars(), ["x", "y"]);
        assert_eq!(ps.len(), 2);
        assert!(parse_polynomial_list("x + y\n").is_err());
        assert!(matches!(
            parse_polynomial_list("vars: x\nx + z\n"),
            Err(Error::Parse { msg, .. }) if msg.starts_with("line 2")
        ));
    }

    #[test]
    fn matrix() {
        let a = parse_matrix("1 0\n1 1\n# comment\n1 2\n").unwrap();
        assert_eq!(a.columns().len(), 3);
        assert_eq!(a.rows(), 2);
        assert!(parse_matrix("1 0\n1\n").is_err());
        assert!(parse_matrix("1 -1\n").is_err());
        assert!(parse_matrix("").is_err());
    }

    #[test]
    fn monoid_specs() {
        let m = parse_monoid_spec("1,0; 1,1+m*0,1").unwrap();
        assert_eq!(m.finite_gens(), &[Monomial::new(vec![1, 0])]);
        assert_eq!(m.families().len(), 1);
        let s = parse_monoid_spec("(1,n^2)").unwrap();
        assert_eq!(s.stream(), Some(NamedStream::Squares));
        assert!(parse_monoid_spec("(1,n^3)").is_err());
        assert!(parse_monoid_spec("1,0;1,2,3").is_err());
        assert!(parse_monoid_spec("1,0+m*0,0").is_err());
    }
}
