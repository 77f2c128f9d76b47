//! Exact truncated series: q-series, t-polynomials over them, and w-series over them.

mod qseries;
pub mod ring;
mod tpoly;
mod wseries;

pub use qseries::{inverse_shift, invert_exp_shift, QSeries};
pub use tpoly::TPoly;
pub use wseries::{taylor_rational, WSeries};
