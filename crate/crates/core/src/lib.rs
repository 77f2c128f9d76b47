//! Exact computation of genus-0 and genus-1 Gromov-Witten invariants of degree-n Calabi-Yau
//! hypersurfaces in P^{n-1} from hypergeometric series.
//!
//! Everything is rational-exact on truncated power series: [`series`] holds the series rings,
//! [`residue`] the residue calculus and regularization of ℏ-dependent series,
//! [`hypergeometric`] the I-series and their derived data, and [`gw`] the invariants and the
//! identities that tie them together. [`suites`] groups the identity checks by topic and
//! [`cli`] drives them from the command line.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod gw;
pub mod hypergeometric;
pub mod rational;
pub mod report;
pub mod residue;
pub mod series;
pub mod suites;

pub use error::{Error, Result};
pub use rational::Rational;
pub use report::IdentityReport;
pub use series::{QSeries, TPoly, WSeries};
