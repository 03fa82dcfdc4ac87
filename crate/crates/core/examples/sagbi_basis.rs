//! SAGBI bases: the criterion on finite sets and truncated completion of an
//! algebra whose initial algebra is not finitely generated.

use sagbi::subalgebra::initial_algebra_monoid;
use sagbi::{
    parse_poly, sagbi_check, sagbi_construct, GeneratorSet, Limits, MonomialOrder, Result, Ring,
    SagbiCheck,
};

fn set(ring: &Ring, gens: &[&str]) -> Result<GeneratorSet> {
    let polys = gens
        .iter()
        .map(|s| parse_poly(s, ring))
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(ring, MonomialOrder::grevlex(), polys)
}

fn main() -> Result<()> {
    let ring = Ring::new(&["x", "y"]);

    let start = set(&ring, &["x + y", "x*y", "x*y^2"])?;
    match sagbi_check(&start, Limits::default())? {
        SagbiCheck::IsSagbi(_) => println!("already a SAGBI basis"),
        SagbiCheck::NotSagbi { witness, remainder } => {
            println!("not a SAGBI basis: {witness} leaves remainder {remainder}")
        }
    }

    let report = sagbi_construct(&start, 10, Limits::default())?;
    println!("\n{:?} after {} rounds:", report.status, report.rounds);
    for g in report.basis.gens() {
        println!("  {g}");
    }
    let boxed = initial_algebra_monoid(&report, 4);
    println!(
        "initial monoid in [0,4]^2 has {} points (partial: {})",
        boxed.points.len(),
        boxed.partial
    );

    let finite = set(&ring, &["x^2 + y^2", "x^3 + y^3", "x^4 + y^4"])?;
    let report = sagbi_construct(&finite, 12, Limits::default())?;
    println!("\n{:?}:", report.status);
    for g in report.basis.gens() {
        println!("  {g}");
    }
    Ok(())
}
