// Factoring and pointwise evaluation across the whole 63-bit range.

use fracsum::{eval_point, factorize, ArithFn, Error};

pub fn run_example() -> fracsum::Result<()> {
    for n in [
        720_720u64,
        999_999_000_001,
        (1 << 61) - 1,
        9_223_372_036_854_775_783,
        4_611_686_014_132_420_609,
    ] {
        let f = factorize(n)?;
        let parts: Vec<String> = f
            .factors()
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        println!("{n} = {}", parts.join(" * "));
        for tag in ArithFn::ALL {
            match eval_point(tag, n) {
                Ok(v) => println!("  {tag}({n}) = {v}"),
                Err(Error::Overflow(msg)) => println!("  {tag}: overflow ({msg})"),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
