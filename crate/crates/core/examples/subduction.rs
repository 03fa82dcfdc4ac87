//! Subduction: writing a polynomial as q + r + c with q in the algebra and r
//! free of reducible initial terms.

use sagbi::subalgebra::subduct;
use sagbi::{parse_poly, GeneratorSet, MonomialOrder, Result, Ring};

fn main() -> Result<()> {
    let ring = Ring::new(&["x", "y"]);
    let gens = ["x + y", "x*y", "x*y^2"]
        .iter()
        .map(|s| parse_poly(s, &ring))
        .collect::<Result<Vec<_>>>()?;
    let set = GeneratorSet::new(&ring, MonomialOrder::grevlex(), gens)?;

    for f in ["x^3 + y^3 + 5", "x*y^3 + y^4", "x^2*y^3", "y^2"] {
        let f = parse_poly(f, &ring)?;
        let res = subduct(&f, &set)?;
        println!("f = {f}");
        println!("  q = {}", res.q);
        println!("  r = {}", res.r);
        println!("  c = {}", res.c);
        for (c, ks) in &res.q_expr {
            println!("    {c} * product with exponents {ks:?}");
        }
    }
    Ok(())
}
