//! Parsing, arithmetic, and initial terms under different monomial orders.

use sagbi::{parse_poly, MonomialOrder, Result, Ring};

fn main() -> Result<()> {
    let ring = Ring::new(&["x", "y", "z"]);
    let f = parse_poly("x*y^2 + 3/2*x^3 - z^4 + 7", &ring)?;
    let g = parse_poly("x - y", &ring)?;

    println!("f       = {f}");
    println!("f * g   = {}", f.try_mul(&g)?);
    println!("g^3     = {}", g.pow(3)?);

    for name in ["lex", "grlex", "grevlex", "weight:1,2,3"] {
        let order: MonomialOrder = name.parse()?;
        let t = f.initial_term(&order)?;
        println!(
            "{name:>13}: in(f) has exponent {} and coefficient {}",
            t.exp, t.coeff
        );
    }

    let swapped = parse_poly("x", &ring)?;
    let images = [
        ("x", g.clone()),
        ("y", parse_poly("y", &ring)?),
        ("z", swapped),
    ];
    println!("f(x - y, y, x) = {}", f.substitute_pairs(&images)?);
    Ok(())
}
