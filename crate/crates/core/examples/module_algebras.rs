//! Finite generating sets for algebras whose initial monoid is a ray plus
//! arithmetic progressions, and the linear algebra behind them.

use sagbi::monoid::{
    binomial_transfer_matrix, construct_module_monoid, is_finitely_generated,
    module_algebra_generators,
};
use sagbi::subalgebra::monoid_in_box;
use sagbi::{sagbi_construct, GeneratorSet, Limits, Monomial, MonomialOrder, Result};

fn pt(a: u32, b: u32) -> Monomial {
    Monomial::new(vec![a, b])
}

fn main() -> Result<()> {
    let (v1, v2, us) = (pt(2, 1), pt(1, 2), vec![pt(3, 3)]);
    let monoid = construct_module_monoid(&v1, &v2, &us)?;
    println!(
        "finitely generated: {:?}",
        is_finitely_generated(&monoid, 12)
    );

    let algebra = module_algebra_generators(&v1, &v2, &us)?;
    for d in &algebra.data {
        println!("{} * {} = {} * {v1} + {} * {v2}", d.l, d.u, d.a, d.b);
    }
    println!("generators:");
    for g in &algebra.generators {
        println!("  {g}");
    }

    let set = GeneratorSet::new(
        algebra.generators[0].ring(),
        MonomialOrder::grevlex(),
        algebra.generators.clone(),
    )?;
    let report = sagbi_construct(&set, 20, Limits::default())?;
    let bound = 10;
    let from_basis = monoid_in_box(&report.initials(), 2, bound);
    let predicted = monoid.elements_in_box(bound);
    println!(
        "initial monoid equals the predicted monoid in [0,{bound}]^2: {}",
        from_basis == predicted
    );

    for a in 1..=5 {
        let t = binomial_transfer_matrix(a)?;
        println!(
            "a = {a}: det = {}, reduces to a - 1: {}",
            t.determinant,
            t.reduces_to_previous()
        );
    }
    Ok(())
}
