// Follows E(x)/x across a grid and reports where the error changes sign.

use fracsum::{error_scan, ArithFn, StepRule};

pub fn run_example() -> fracsum::Result<()> {
    for f in [ArithFn::Phi, ArithFn::Psi, ArithFn::Sigma] {
        let scan = error_scan(f, 1_000_000, StepRule::Geometric(1.5))?;
        println!(
            "{f:>5}: {} samples, max |E|/x = {:.3}, sign changes at {:?}",
            scan.samples.len(),
            scan.max_abs_normalized,
            scan.sign_changes
        );
    }
    // The decade grid of the published tables.
    let sigma = error_scan(ArithFn::Sigma, 100_000, StepRule::Geometric(10.0))?;
    println!("sigma on decades positive: {}", sigma.all_positive());
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
