// Partial sums of the series behind the main terms, with tail bounds.

use fracsum::{partial_series, SeriesConstants, SeriesKind};

pub fn run_example() -> fracsum::Result<()> {
    let c = SeriesConstants::new();
    for kind in SeriesKind::ALL {
        for limit in [1_000, 100_000] {
            let (sum, tail) = partial_series(kind, limit)?;
            match kind.limit(&c) {
                Some(target) => println!(
                    "{kind:>12} L={limit:<7} {sum:.9}  |diff|={:.2e}  bound={tail:.2e}",
                    (sum - target).abs()
                ),
                None => println!("{kind:>12} L={limit:<7} {sum:.9}  bound={tail:.2e}"),
            }
        }
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
