//! The tower `I_{0,k} = [w^k] e^{wt} F`, `I_{p,k} = d/dt (I_{p-1,k} / I_{p-1,p-1})`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergeometric::Hypergeometric;
use crate::rational::{big, factorial, frac, Rational};
use crate::report::IdentityReport;
use crate::series::{QSeries, TPoly, WSeries};

/// `tower[p][k - p] = I_{p,k}` for `0 <= p <= k <= kmax`.
pub fn i_tower(kernel: &WSeries, kmax: usize) -> Result<Vec<Vec<TPoly>>> {
    if kmax > kernel.w_truncation() {
        return Err(Error::OutOfRange {
            degree: kmax,
            truncation: kernel.w_truncation(),
        });
    }
    let d = kernel.q_truncation();
    let base: Vec<TPoly> = (0..=kmax)
        .map(|k| {
            // I_{0,k} = sum_{r<=k} t^{k-r}/(k-r)! [w^r]F
            let coeffs = (0..=k)
                .map(|j| kernel.coeffs()[k - j].scale(&big(factorial(j as u64)).recip()))
                .collect();
            TPoly::new(coeffs)
        })
        .collect();
    let mut tower = vec![base];
    for p in 1..=kmax {
        let prev = &tower[p - 1];
        let diag = prev[0].t_free()?;
        let row = prev[1..]
            .iter()
            .map(|i| Ok(i.div_series(&diag)?.d_dt()))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(row.iter().all(|r| r.truncation() == d));
        tower.push(row);
    }
    Ok(tower)
}

/// Degree and constant-term pattern of the t-expansion of `I_{p,k}`, `p <= k <= n-1`.
pub fn decomposition_report(h: &Hypergeometric) -> Result<IdentityReport> {
    let n = h.n() as usize;
    let mut report = IdentityReport::new("t-expansion structure of the I-series tower")
        .param("n", n)
        .param("D", h.spec().d);
    // reduced[p][r] = Ĩ_{p,r}, as first seen
    let mut reduced: Vec<Vec<Option<QSeries>>> = vec![vec![None; n]; n];
    for p in 0..n {
        for k in p..n {
            let i = h.i_series(p, k)?;
            if i.degree() > k - p {
                report.fail(k, format!("I_{{{p},{k}}} has t-degree {}", i.degree()));
            }
            for r in p..=k {
                let tilde = i.coeff(k - r).scale(&big(factorial((k - r) as u64)));
                let expect = if r == p {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                report.check(k, tilde.constant_term(), &expect);
                match &reduced[p][r] {
                    Some(seen) => {
                        report.check(k, seen, &tilde);
                    }
                    None => reduced[p][r] = Some(tilde),
                }
            }
        }
    }
    Ok(report)
}

/// Product, weighted product, and symmetry identities of the diagonal `I_{p,p}`.
pub fn diagonal_identities(h: &Hypergeometric) -> Result<IdentityReport> {
    let n = h.n() as usize;
    let d = h.spec().d;
    let diag = h.diagonals();
    let base = h.spec().one_minus_conifold();
    let one = QSeries::one(d);
    let mut report = IdentityReport::new("diagonal I-series identities")
        .param("n", n)
        .param("D", d);

    let product = diag.iter().fold(one.clone(), |acc, s| &acc * s);
    report.check_all((&product * &base).coeffs(), one.coeffs());

    let mut weighted = one.clone();
    for (p, s) in diag.iter().enumerate() {
        for _ in 0..n - 1 - p {
            weighted = &weighted * s;
        }
    }
    let half = base.pow(&frac(n as i64 - 1, 2))?;
    report.check_all((&weighted * &half).coeffs(), one.coeffs());

    for p in 0..n {
        report.check_all(diag[p].coeffs(), diag[n - 1 - p].coeffs());
    }

    // consistency: the squared weighted product equals the plain product to the (n-1)
    let lhs = &weighted * &weighted;
    let mut rhs = one;
    for _ in 0..n - 1 {
        rhs = &rhs * &product;
    }
    report.check_all(lhs.coeffs(), rhs.coeffs());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeometric::HyperSpec;
    use crate::rational::{binomial, int};

    fn h(n: u32, d: usize) -> Hypergeometric {
        Hypergeometric::new(HyperSpec::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn quintic_first_terms() {
        let h = h(5, 2);
        let i00 = h.diagonal(0);
        assert_eq!(i00.coeffs()[..], [int(1), int(120), int(113400)]);
        let i01 = h.i_series(0, 1).unwrap();
        assert_eq!(&i01.coeff(1), i00);
        assert_eq!(i01.coeff(0).coeffs()[1], int(770));
        // oracle: 120 * sum_{r=2}^{5} 5/r
        let s: Rational = (2..=5).map(|r| frac(5, r)).sum();
        assert_eq!(int(120) * s, int(770));
        assert_eq!(h.mirror().coeffs()[1], int(770));
        assert!(h.mirror().constant_term().is_zero());
    }

    #[test]
    fn linear_case_mirror_is_a_logarithm() {
        // n = 1: [w^1] prod (1 + w/r) = H_d, so T - t = (1 - q) sum H_d q^d = -ln(1 - q)
        let h = h(1, 5);
        let harmonic = QSeries::from_fn(5, |d| (1..=d as i64).map(|r| frac(1, r)).sum());
        let expect = &QSeries::one_minus(int(1), 5) * &harmonic;
        assert_eq!(h.mirror(), &expect);
        let oracle = QSeries::from_fn(5, |d| {
            if d == 0 {
                Rational::zero()
            } else {
                frac(1, d as i64)
            }
        });
        assert_eq!(h.mirror(), &oracle);
    }

    #[test]
    fn diagonals_are_units() {
        for n in 1..=6 {
            let h = h(n, 4);
            for p in 0..n as usize {
                assert_eq!(h.diagonal(p).constant_term(), &Rational::one());
            }
        }
    }

    #[test]
    fn n2_forces_central_binomials() {
        let h = h(2, 6);
        let r = diagonal_identities(&h).unwrap();
        assert!(r.pass, "{r}");
        let expect: Vec<Rational> = (0..=6).map(|d| binomial(2 * d, d)).collect();
        assert_eq!(h.diagonal(0).coeffs(), &expect[..]);
        let closed = QSeries::one_minus(int(4), 6).pow(&frac(-1, 2)).unwrap();
        assert_eq!(h.diagonal(0), &closed);
    }

    #[test]
    fn symmetric_diagonals() {
        let h5 = h(5, 5);
        assert_eq!(h5.diagonal(1), h5.diagonal(3));
        let h4 = h(4, 5);
        assert_eq!(h4.diagonal(1), h4.diagonal(2));
    }

    #[test]
    fn structure_and_identities_small_n() {
        for n in 1..=6 {
            let h = h(n, 5);
            assert!(decomposition_report(&h).unwrap().pass, "n = {n}");
            assert!(diagonal_identities(&h).unwrap().pass, "n = {n}");
        }
    }
}
