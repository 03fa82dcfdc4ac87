//! Affine monoids in the plane: irreducibles, membership, and cones.

use sagbi::monoid::{cone_of, irreducibles, membership, AffineMonoid, Membership, NamedStream};
use sagbi::{Monomial, Result};

fn pt(a: u32, b: u32) -> Monomial {
    Monomial::new(vec![a, b])
}

fn main() -> Result<()> {
    let squares = AffineMonoid::new(2).with_stream(NamedStream::Squares)?;
    println!(
        "irreducibles of <(1,n^2)> in [0,26]^2: {:?}",
        irreducibles(&squares, 26)?
    );
    for p in [pt(2, 5), pt(2, 3), pt(3, 9)] {
        match membership(&squares, &p, 30)? {
            Membership::Yes(parts) => println!("{p} = sum of {parts:?}"),
            Membership::No => println!("{p} is not a member"),
        }
    }

    let progression = AffineMonoid::new(2)
        .with_generator(pt(1, 0))?
        .with_family(pt(4, 3), pt(0, 1))?;
    println!(
        "\nirreducibles of <(1,0), (4,3+m)> in [0,8]^2: {:?}",
        irreducibles(&progression, 8)?
    );

    let finite = AffineMonoid::generated_by(2, [pt(2, 0), pt(3, 0), pt(2, 2), pt(3, 3)])?;
    println!(
        "\nirreducibles of a finite monoid: {:?}",
        irreducibles(&finite, 12)?
    );
    println!("its cone: {:?}", cone_of(finite.finite_gens())?);
    Ok(())
}
