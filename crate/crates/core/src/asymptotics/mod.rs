//! Main terms, error terms and series constants for the `c·x·log x` asymptotics.

mod constants;
mod scan;
mod series;
mod terms;

pub use constants::{ConstantEntry, SeriesConstants};
pub use scan::{error_scan, sample_grid, ErrorScan, StepRule};
pub use series::{partial_series, SeriesKind};
pub use terms::{bound_fit, error_term, log_coefficient, main_term};
