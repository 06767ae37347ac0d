// The three ways of computing Σ f(⌊x/n⌋), side by side.

use std::time::Instant;

use fracsum::{frac_sum, quotient_blocks, ArithFn, Strategy};

pub fn run_example() -> fracsum::Result<()> {
    let x = 50_000;
    println!(
        "{} quotient blocks tile 1..={x}",
        quotient_blocks(x)?.count()
    );
    for f in [ArithFn::Phi, ArithFn::Psi, ArithFn::Sigma] {
        let mut sums = Vec::new();
        for s in Strategy::ALL {
            let start = Instant::now();
            let r = frac_sum(f, x, s)?;
            println!(
                "{f:>5} {:>13} sum={:>10} E/x={:+.4} ({:.2?})",
                s.name(),
                r.exact_sum,
                r.normalized_error,
                start.elapsed()
            );
            sums.push(r.exact_sum);
        }
        assert!(sums.windows(2).all(|w| w[0] == w[1]));
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
