//! Exact polynomial algebra over the rationals: Gröbner bases, toric ideals,
//! SAGBI bases of subalgebras, and affine monoids in the plane.

pub mod error;
pub mod groebner;
pub mod lab;
pub mod monoid;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod subalgebra;
pub mod toric;

pub use error::{Error, Result};
pub use groebner::{buchberger, divide, Ideal, Limits};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{Polynomial, Rational, Ring};
pub use subalgebra::{
    autoreduce, sagbi_check, sagbi_construct, subduct, GeneratorSet, SagbiCheck, SagbiReport,
    SagbiStatus,
};
pub use toric::{kernel_lattice, toric_ideal, ExponentMatrix};
