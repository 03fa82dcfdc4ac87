//! Every computational step showing that the monoid generated by (1, n^2)
//! is not an initial monoid of a finitely generated homogeneous algebra.

use sagbi::lab::verify_square_monoid_obstruction;
use sagbi::{Limits, Result};

fn main() -> Result<()> {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let k_max: u32 = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let out = verify_square_monoid_obstruction(m, k_max, Limits::default())?;
    for c in &out.checks {
        println!("{:6} {}", if c.passed { "ok" } else { "FAILED" }, c.name);
    }
    if !out.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
