//! Exact residue calculus in one variable ℏ and the regularization of power series
//! whose coefficients are rational functions of ℏ.

mod identities;
mod laurent;
mod poly;
mod ratfunc;
mod regularize;

pub use identities::{check_binomial_identity, check_product_residue, BinomialIdentity};
pub use laurent::HLaurent;
pub use poly::Poly;
pub use ratfunc::{laurent_expansion, RatFunc};
pub use regularize::{
    check_regularizability, check_residue_expansion, hbar_coefficient, regularizable_example,
    regularize, simple_pole_example, RegularizabilityIdentity, Regularization, USeriesRF,
};

use crate::rational::Rational;

pub fn residue_at(f: &RatFunc, a: &Rational) -> Rational {
    f.residue_at(a)
}

pub fn residue_at_infinity(f: &RatFunc) -> Rational {
    f.residue_at_infinity()
}

pub fn laurent_at_zero(f: &RatFunc, l: i64, k: i64) -> crate::Result<HLaurent> {
    f.laurent_at_zero(l, k)
}
