//! Toric ideals of exponent matrices and their integer kernels.

use sagbi::{kernel_lattice, toric_ideal, ExponentMatrix, Limits, Monomial, Result};

fn show(columns: &[[u32; 2]]) -> Result<()> {
    let a = ExponentMatrix::new(columns.iter().map(|c| Monomial::new(c.to_vec())).collect())?;
    println!("columns {:?}", columns);
    println!("  kernel basis: {:?}", kernel_lattice(&a)?);
    let ideal = toric_ideal(&a, Limits::default())?;
    for b in ideal.generators() {
        println!("  {b}");
    }
    Ok(())
}

fn main() -> Result<()> {
    // the rational normal curve of degree 3
    show(&[[1, 0], [1, 1], [1, 2], [1, 3]])?;
    // initial exponents x, x*y, x*y^4 of the squares stream
    show(&[[1, 0], [1, 1], [1, 4]])?;
    // a non-homogeneous matrix
    show(&[[2, 0], [3, 0], [2, 2], [3, 3]])
}
