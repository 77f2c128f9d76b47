//! Reduced genus-1 invariants of degree-n Calabi-Yau hypersurfaces in P^{n-1}.
//!
//! Everything is a truncated series in `q = e^t`. A generating function in `Q = e^T`
//! is read off by the mirror change of variables `Q = q exp(T - t)`.

mod fixed_loci;
mod quintic;
mod special;
mod table;

pub use fixed_loci::{
    boundary_residues, boundary_term, effective_term, effective_term_paired, fixed_locus_check,
    fixed_locus_reports, BoundaryResidues,
};
pub use quintic::{
    genus0_quintic, genus0_reconstruction, quintic_consistency, quintic_genus1,
    quintic_genus1_series,
};
pub use special::{bridge_z, bridge_z_report, special_case_reports, special_cases};
pub use table::{
    genus0_multiple_covers, genus1_multiple_covers, instanton_inversion, invariants_table,
    reduced_to_standard, GWRow, GWTable, Genus,
};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypergeometric::Hypergeometric;
use crate::rational::{binomial, frac, int, powi, Rational};
use crate::series::{taylor_rational, QSeries};

/// `[w^k] (1+w)^n / (1+nw)` for `k = 0..=order`.
pub fn conifold_weights(n: u32, order: usize) -> Vec<Rational> {
    let num: Vec<Rational> = (0..=n as i64).map(|k| binomial(n as i64, k)).collect();
    taylor_rational(&num, &[int(1), int(n as i64)], order).expect("unit constant term")
}

/// Coefficient of `T - t` in the genus-1 formula.
pub(crate) fn mirror_weight(n: i64) -> Rational {
    frac((n - 2) * (n + 1), 48) + (int(1) - powi(&int(1 - n), n)) / int(24 * n * n)
}

/// Coefficient of `ln I_{0,0}` in the genus-1 formula.
pub(crate) fn fundamental_weight(n: i64) -> Rational {
    (int(n * n - 1) + powi(&int(1 - n), n)) / int(24 * n)
}

/// `sum_p c_p ln I_{p,p}` with the parity-dependent weights shared by the genus-1 formula
/// and the effective-loci term.
pub(crate) fn diagonal_block(h: &Hypergeometric) -> QSeries {
    let n = h.n() as i64;
    let odd = n % 2 == 1;
    let limit = if odd { n - 3 } else { n - 4 };
    let mut acc = QSeries::zero(h.spec().d);
    for p in (0..).take_while(|p| 2 * p <= limit) {
        let weight = if odd {
            frac((n - 1 - 2 * p).pow(2), 8)
        } else {
            frac((n - 2 * p) * (n - 2 - 2 * p), 8)
        };
        acc = &acc + &log_diagonal(h, p as usize).scale(&weight);
    }
    acc
}

pub(crate) fn log_diagonal(h: &Hypergeometric, p: usize) -> QSeries {
    h.diagonal(p).log().expect("diagonal series start at 1")
}

pub(crate) fn log_conifold(h: &Hypergeometric) -> QSeries {
    h.spec()
        .one_minus_conifold()
        .log()
        .expect("constant term 1")
}

/// `(n/24) sum_{p=2}^{n-2} [w^{n-2-p}]((1+w)^n/(1+nw)) · [w^p] ln F`.
pub fn boundary_tail(h: &Hypergeometric) -> QSeries {
    let n = h.n() as usize;
    let mut acc = QSeries::zero(h.spec().d);
    if n < 4 {
        return acc;
    }
    let weights = conifold_weights(h.n(), n - 4);
    let log_f = h.kernel().log().expect("kernel starts at 1");
    for p in 2..=n - 2 {
        let lp = log_f.coeff(p).expect("kernel w-truncation exceeds n-2");
        acc = &acc + &lp.scale(&weights[n - 2 - p]);
    }
    acc.scale(&frac(n as i64, 24))
}

/// Right-hand side of the genus-1 mirror formula as a series in `q = e^t`.
///
/// Its `Q`-coefficients after [`extract_invariants`] are the reduced genus-1 invariants.
pub fn genus1_series(h: &Hypergeometric) -> QSeries {
    let n = h.n() as i64;
    let conifold = if n % 2 == 1 {
        frac(n - 1, 48)
    } else {
        frac(n - 4, 48)
    };
    let mut g = h.mirror().scale(&mirror_weight(n));
    g = &g + &log_diagonal(h, 0).scale(&fundamental_weight(n));
    g = &g - &log_conifold(h).scale(&conifold);
    g = &g - &diagonal_block(h);
    &g + &boundary_tail(h)
}

/// Per-degree coefficients `[Q^d] G`, `d = 1..=D`, of a series `G(q)` with `G(0) = 0`,
/// where `Q = q exp(mirror(q))`.
pub fn extract_invariants(g: &QSeries, mirror: &QSeries) -> Result<Vec<Rational>> {
    if !g.constant_term().is_zero() {
        return Err(Error::BadConstantTerm(g.constant_term().clone()));
    }
    let out = g.change_variable_exp_t(mirror)?;
    Ok(out.coeffs()[1..].to_vec())
}

/// Reduced genus-1 invariants `d = 1..=D` for degree-n hypersurfaces.
pub fn reduced_genus1(h: &Hypergeometric) -> Result<Vec<Rational>> {
    extract_invariants(&genus1_series(h), h.mirror())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeometric::HyperSpec;

    fn hyper(n: u32, d: usize) -> Hypergeometric {
        Hypergeometric::new(HyperSpec::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn weights_of_conifold_factor() {
        // (1+w)^5/(1+5w) = 1 + 0w + 10w^2 - 40w^3 + ...
        let w = conifold_weights(5, 3);
        assert_eq!(w, vec![int(1), int(0), int(10), int(-40)]);
    }

    #[test]
    fn quintic_weights_match_the_genus1_formula() {
        assert_eq!(mirror_weight(5), frac(25, 12));
        assert_eq!(fundamental_weight(5), frac(-25, 3));
        assert_eq!(mirror_weight(3), frac(1, 8));
        assert_eq!(fundamental_weight(3), int(0));
    }

    #[test]
    fn low_dimensions_vanish() {
        for n in [1u32, 2, 4] {
            let h = hyper(n, 8);
            let g = genus1_series(&h);
            if n == 4 {
                assert!(reduced_genus1(&h).unwrap().iter().all(|c| c.is_zero()));
            }
            assert!(g.is_zero(), "n = {n}: {g}");
        }
    }

    #[test]
    fn quintic_degree_one_reduced_vanishes() {
        let h = hyper(5, 3);
        assert!(reduced_genus1(&h).unwrap()[0].is_zero());
    }

    #[test]
    fn extraction_trivial_cases() {
        let zero = QSeries::zero(4);
        assert!(extract_invariants(
            &zero,
            &QSeries::new(vec![int(0), int(3), int(1), int(0), int(2)])
        )
        .unwrap()
        .iter()
        .all(|c| c.is_zero()));
        let g = QSeries::new(vec![int(0), frac(1, 2), int(-7), int(5)]);
        assert_eq!(
            extract_invariants(&g, &QSeries::zero(3)).unwrap(),
            g.coeffs()[1..].to_vec()
        );
        assert_eq!(
            extract_invariants(&QSeries::one(2), &QSeries::zero(2)).unwrap_err(),
            Error::BadConstantTerm(int(1))
        );
    }
}
