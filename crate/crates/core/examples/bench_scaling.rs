// How the block strategy's cost grows with x.

use std::time::{Duration, Instant};

use fracsum::{frac_sum_blocks, quotient_blocks, ArithFn};

pub fn run_example() -> fracsum::Result<()> {
    let mut previous: Option<Duration> = None;
    for x in [10_000u64, 100_000, 1_000_000, 10_000_000] {
        let mut best = Duration::MAX;
        for _ in 0..5 {
            let start = Instant::now();
            std::hint::black_box(frac_sum_blocks(ArithFn::Sigma, x)?);
            best = best.min(start.elapsed());
        }
        let growth = previous.map_or(String::new(), |p| {
            format!("  x{:.1}", best.as_secs_f64() / p.as_secs_f64())
        });
        println!(
            "x={x:<9} blocks={:<6} {best:>10.2?}{growth}",
            quotient_blocks(x)?.count()
        );
        previous = Some(best);
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
