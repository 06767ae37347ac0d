// Splits each sum into the Möbius-weighted sub-sums S1..S6 and checks
// Σ f(⌊x/n⌋) = S_odd − S_even.

use fracsum::{decomposition_check, frac_sum_blocks, sieve_table, sub_sum, ArithFn, SubSumLabel};

pub fn run_example() -> fracsum::Result<()> {
    let x = 1000;
    let mu = sieve_table(ArithFn::Mu, x)?;
    for f in [ArithFn::Phi, ArithFn::Psi, ArithFn::Sigma] {
        let (odd, even) = SubSumLabel::pair_for(f).expect("growing function");
        let s_odd = sub_sum(odd, x, &mu)?.value;
        let s_even = sub_sum(even, x, &mu)?.value;
        let exact = frac_sum_blocks(f, x)?.exact_sum;
        println!(
            "{f:>5}: {odd:?} = {s_odd:.6}, {even:?} = {s_even:.6}, difference {:.6}, exact {exact}",
            s_odd - s_even
        );
        assert!(decomposition_check(f, x)? < 1e-6);
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
