//! Runs every catalogued example and prints the verdicts; pass an id such as
//! `E3.7(4,3)` to run just one, with `--json` for the full report.

use sagbi::lab::{reproduce, ExampleId};
use sagbi::{Limits, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let ids = match args.iter().find(|a| !a.starts_with("--")) {
        Some(id) => vec![id.parse::<ExampleId>()?],
        None => ExampleId::all(),
    };
    let mut all_match = true;
    for id in ids {
        let report = reproduce(&id, None, Limits::default())?;
        all_match &= report.is_match();
        if json {
            println!("{}", report.to_json(false));
        } else {
            print!("{report}");
        }
    }
    if !all_match {
        std::process::exit(3);
    }
    Ok(())
}
