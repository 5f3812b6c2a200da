//! Run every verification suite at small bounds and print the reports.
//!
//! Run with: cargo run -p qcrystal --example verify_suites

use qcrystal::verify::{run, Suite, SuiteParams};

fn main() {
    let params = SuiteParams {
        n_max: 3,
        power_max: 4,
        shape_max: 4,
        trials: 1_000,
    };
    let mut all_passed = true;
    for suite in Suite::ALL {
        let report = run(suite, &params);
        print!("{}", report.render());
        all_passed &= report.passed();
    }
    assert!(all_passed, "every suite passes at these bounds");
}
