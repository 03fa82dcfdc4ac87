//! Reduced Gröbner bases: the twisted cubic by elimination, and a small
//! lexicographic computation in three variables.

use sagbi::{buchberger, divide, parse_poly, Ideal, Limits, MonomialOrder, Result, Ring};

fn main() -> Result<()> {
    let ring = Ring::new(&["t", "x", "y", "z"]);
    let gens = ["x - t", "y - t^2", "z - t^3"]
        .iter()
        .map(|s| parse_poly(s, &ring))
        .collect::<Result<Vec<_>>>()?;
    let gb = buchberger(
        &Ideal::new(&ring, gens)?,
        &MonomialOrder::lex(),
        Limits::default(),
    )?;
    println!("lex basis of <x - t, y - t^2, z - t^3>:");
    for g in gb.elements() {
        println!("  {g}");
    }
    let t_free: Vec<_> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.exp[0] == 0))
        .collect();
    println!(
        "eliminating t leaves {} equations of the curve",
        t_free.len()
    );

    let r = Ring::new(&["X0", "X1", "X2"]);
    let h = [
        "X0*X1 - X0*X2 - 2*X1^2 + 3*X1*X2 - X2^2",
        "X0^3 - 3*X0^2*X1 + 4*X0*X1^2 - X0*X2^2 - 4*X1^3 + 4*X1^2*X2 - X1*X2^2",
        "X0^3*X2 - 3*X0^2*X1*X2 + 4*X0*X1^2*X2 - X0*X1*X2^2 - X1^4",
    ]
    .iter()
    .map(|s| parse_poly(s, &r))
    .collect::<Result<Vec<_>>>()?;
    let gb = buchberger(
        &Ideal::new(&r, h.clone())?,
        &MonomialOrder::lex(),
        Limits::default(),
    )?;
    println!("\nlex basis with X0 > X1 > X2:");
    for g in gb.elements() {
        println!("  {g}");
    }
    let fourth = parse_poly("X1 - X2", &r)?.pow(4)?;
    println!("(X1 - X2)^4 in the ideal: {}", gb.contains(&fourth)?);

    let d = divide(&h[1], gb.elements(), &MonomialOrder::lex())?;
    println!("second generator reduces to {}", d.remainder);
    Ok(())
}
