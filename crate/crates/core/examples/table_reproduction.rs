// Reproduces both published tables and prints the discrepancy notes.
//
//     cargo run --example table_reproduction

use fracsum::report::{self, Command, RunConfig};
use fracsum::ArithFn;

pub fn run_example() -> fracsum::Result<()> {
    for f in [ArithFn::Phi, ArithFn::Sigma, ArithFn::Psi] {
        let mut config = RunConfig::new(Command::Table);
        config.fn_tags = vec![f];
        let report = report::run(&config);
        println!("{}", report.body);
        assert_eq!(report.status.code(), 0);
    }
    Ok(())
}

fn main() -> fracsum::Result<()> {
    run_example()
}
