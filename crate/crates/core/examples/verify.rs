//! Running property suites from code and printing their reports.

use moongrowth::cli::{run_verify, VerifyConfig};

fn main() -> moongrowth::Result<()> {
    let config = VerifyConfig::new(7);
    for suite in ["counterexamples", "prop-difference", "jdt-difference"] {
        print!("{}", run_verify(suite, &config)?);
    }
    Ok(())
}
