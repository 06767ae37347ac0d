//! Published reference tables, embedded verbatim.

use crate::arith::ArithFn;
use crate::numeric::format_fixed;
use crate::quotient::FracSumResult;

const TABLE1_PHI: &str = include_str!("../../golden/published_table1_phi.csv");
const TABLE2_SIGMA: &str = include_str!("../../golden/published_table2_sigma.csv");

/// One printed row: the exact sum plus the two real columns as printed
/// (two decimals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub x: u64,
    pub sum: i64,
    pub main: String,
    pub error: String,
}

fn parse(text: &str) -> Vec<GoldenRow> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            GoldenRow {
                x: cols[0].parse().expect("golden x"),
                sum: cols[1].parse().expect("golden sum"),
                main: cols[2].to_string(),
                error: cols[3].to_string(),
            }
        })
        .collect()
}

/// Published rows for `fn_tag`; `ψ` has no published table.
pub fn published_rows(fn_tag: ArithFn) -> Vec<GoldenRow> {
    match fn_tag {
        ArithFn::Phi => parse(TABLE1_PHI),
        ArithFn::Sigma => parse(TABLE2_SIGMA),
        _ => Vec::new(),
    }
}

/// Differences between a computed result and the published row for the same
/// `x`, one message per differing column. Real columns are compared at two
/// decimals, the precision they were printed with.
pub fn compare(result: &FracSumResult) -> Vec<String> {
    let Some(row) = published_rows(result.fn_tag)
        .into_iter()
        .find(|r| r.x == result.x)
    else {
        return Vec::new();
    };
    let mut notes = Vec::new();
    let tag = result.fn_tag;
    let x = result.x;
    if row.sum != result.exact_sum {
        notes.push(format!(
            "{tag} x={x}: computed sum {} differs from published {}",
            result.exact_sum, row.sum
        ));
    }
    let main = format_fixed(result.main_term, 2);
    if main != row.main {
        notes.push(format!(
            "{tag} x={x}: computed main term {main} differs from published {}",
            row.main
        ));
    }
    let error = format_fixed(result.error_term, 2);
    if error != row.error {
        let sign_only = error.trim_start_matches('-') == row.error.trim_start_matches('-');
        notes.push(format!(
            "{tag} x={x}: computed error {error} differs from published {}{}",
            row.error,
            if sign_only { " (sign differs)" } else { "" }
        ));
    }
    notes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::frac_sum_blocks;

    #[test]
    fn embedded_tables_parse() {
        assert_eq!(published_rows(ArithFn::Phi).len(), 5);
        assert_eq!(published_rows(ArithFn::Sigma)[4].sum, 2_033_577);
        assert!(published_rows(ArithFn::Psi).is_empty());
    }

    #[test]
    fn only_the_sign_flag_differs() {
        let mut notes = Vec::new();
        for f in [ArithFn::Phi, ArithFn::Sigma] {
            for row in published_rows(f) {
                notes.extend(compare(&frac_sum_blocks(f, row.x).unwrap()));
            }
        }
        assert_eq!(
            notes,
            vec!["phi x=1000: computed error -146.41 differs from published 146.41 (sign differs)"]
        );
    }
}
