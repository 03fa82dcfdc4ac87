//! Writes lattice diagrams of a few monoids as SVG files into a directory
//! (default: the system temp directory).

use std::path::PathBuf;

use sagbi::lab::commands::plot_cmd;
use sagbi::{Limits, Result};

fn main() -> Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    for (name, example, spec, bound) in [
        ("changing_cone.svg", Some("E3.5(2,1;1,2)"), None, 8),
        ("three_lines.svg", Some("E3.6(3)"), None, 9),
        ("progression.svg", Some("E3.7(4,3)"), None, 8),
        ("squares.svg", None, Some("(1,n^2)"), 10),
    ] {
        let out = plot_cmd(example, spec, bound, &dir.join(name), Limits::default())?;
        print!("{}", out.text);
    }
    Ok(())
}
