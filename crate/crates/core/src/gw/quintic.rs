//! Quintic threefold: genus-0 invariants, the standard genus-1 series and their cross-checks.

use crate::error::Result;
use crate::gw::{boundary_tail, extract_invariants, log_diagonal, reduced_genus1};
use crate::hypergeometric::{HyperSpec, Hypergeometric};
use crate::rational::{frac, int, Rational};
use crate::report::IdentityReport;
use crate::series::{QSeries, TPoly};

pub(crate) fn quintic(d: usize) -> Result<Hypergeometric> {
    Hypergeometric::new(HyperSpec::new(5, d)?)
}

/// `J_k = I_{0,k} / I_{0,0}` as a polynomial in t.
fn normalized(h: &Hypergeometric, k: usize) -> Result<TPoly> {
    h.i_series(0, k)?.div_series(h.diagonal(0))
}

/// `T = t + (T - t)`.
fn mirror_coordinate(h: &Hypergeometric) -> TPoly {
    TPoly::t(h.spec().d).add(&TPoly::from_series(h.mirror().clone()))
}

/// Records every mismatch between two t-polynomials, keyed by q-degree.
fn check_tpoly(report: &mut IdentityReport, lhs: &TPoly, rhs: &TPoly) {
    let top = lhs.degree().max(rhs.degree());
    for k in 0..=top {
        report.check_all(lhs.coeff(k).coeffs(), rhs.coeff(k).coeffs());
    }
}

/// Genus-0 invariants `N_{0,d}`, `d = 1..=D`, with a report on the cancellation of t and on
/// the reconstruction of `J_0..J_3` from the extracted numbers.
///
/// `(5/2)(J_1 J_2 - J_3) - (5/6) T^3` must be free of t; otherwise this fails with
/// `Error::NotTFree`.
pub fn genus0_quintic(d: usize) -> Result<(Vec<Rational>, IdentityReport)> {
    let h = quintic(d)?;
    let (j1, j2, j3) = (normalized(&h, 1)?, normalized(&h, 2)?, normalized(&h, 3)?);
    let t_big = mirror_coordinate(&h);
    let cubic = t_big.mul(&t_big).mul(&t_big);
    let prepotential = j1
        .mul(&j2)
        .sub(&j3)
        .scale(&frac(5, 2))
        .sub(&cubic.scale(&frac(5, 6)));
    let series = prepotential.t_free()?;
    let n0 = extract_invariants(&series, h.mirror())?;

    let mut report = IdentityReport::new("quintic genus-0 invariants").param("D", d);
    report.check(0, series.constant_term(), &Rational::default());
    report.absorb(&genus0_reconstruction(&h, &n0)?);
    Ok((n0, report))
}

/// Rebuild `J_0..J_3` from `N_{0,d}`:
/// `sum_i H^i T^i/i! + (H²/5) sum_d N_{0,d} (d - 2H) e^{(H+d)T} = sum_i J_i H^i mod H^4`.
pub fn genus0_reconstruction(h: &Hypergeometric, n0: &[Rational]) -> Result<IdentityReport> {
    let d = h.spec().d;
    let mut report = IdentityReport::new("genus-0 reconstruction of J_0..J_3").param("D", d);
    let big_q = QSeries::monomial(int(1), 1, d).mul_series(&h.mirror().exp()?);
    let mut counts = vec![Rational::default()];
    counts.extend(n0.iter().take(d).cloned());
    counts.resize(d + 1, Rational::default());
    let counts = QSeries::new(counts);
    // e^{dT} = Q^d, expressed in q
    let plain = TPoly::from_series(counts.compose(&big_q)?);
    let weighted = TPoly::from_series(counts.derivative().compose(&big_q)?);

    let t_big = mirror_coordinate(h);
    let t2 = t_big.mul(&t_big);
    let fifth = frac(1, 5);

    check_tpoly(
        &mut report,
        &TPoly::from_series(QSeries::one(d)),
        &normalized(h, 0)?,
    );
    check_tpoly(&mut report, &t_big, &normalized(h, 1)?);
    let h2 = t2.scale(&frac(1, 2)).add(&weighted.scale(&fifth));
    check_tpoly(&mut report, &h2, &normalized(h, 2)?);
    let h3 = t2.mul(&t_big).scale(&frac(1, 6)).add(
        &t_big
            .mul(&weighted)
            .sub(&plain.scale(&int(2)))
            .scale(&fifth),
    );
    check_tpoly(&mut report, &h3, &normalized(h, 3)?);
    Ok(report)
}

/// `(1/2)[(25/6)(T - t) - (62/3) ln I_0 - (1/6) ln(1 - 5^5 q) - ln J_1']` as a series in q.
pub fn quintic_genus1_series(h: &Hypergeometric) -> Result<QSeries> {
    let m = h.mirror();
    let d = h.spec().d;
    let j1_prime = &QSeries::one(d) + &m.derivative();
    let mut g = m.scale(&frac(25, 6));
    g = &g - &log_diagonal(h, 0).scale(&frac(62, 3));
    g = &g - &h.spec().one_minus_conifold().log()?.scale(&frac(1, 6));
    g = &g - &j1_prime.log()?;
    Ok(g.scale(&frac(1, 2)))
}

/// Standard genus-1 invariants `N_{1,d}`, `d = 1..=D`, of the quintic.
pub fn quintic_genus1(d: usize) -> Result<Vec<Rational>> {
    let h = quintic(d)?;
    extract_invariants(&quintic_genus1_series(&h)?, h.mirror())
}

/// The standard genus-1 series against the reduced one plus `N_{0,d}/12`, and
/// `(5/24)(J_3 - J_1 J_2 + J_1³/3) = -(1/12) sum_d N_{0,d} e^{dT}`.
pub fn quintic_consistency(d: usize) -> Result<Vec<IdentityReport>> {
    let h = quintic(d)?;
    let (n0, _) = genus0_quintic(d)?;
    let standard = extract_invariants(&quintic_genus1_series(&h)?, h.mirror())?;
    let reduced = reduced_genus1(&h)?;
    let twelfth = frac(1, 12);

    let mut shift = IdentityReport::new("standard genus 1 = reduced + genus 0 / 12").param("D", d);
    let rhs: Vec<Rational> = reduced
        .iter()
        .zip(&n0)
        .map(|(r, g)| r + g * &twelfth)
        .collect();
    shift.check_all(&standard, &rhs);

    let mut cubic = IdentityReport::new("cubic J-combination = -(genus 0)/12").param("D", d);
    let (j1, j2, j3) = (normalized(&h, 1)?, normalized(&h, 2)?, normalized(&h, 3)?);
    let combo = j3
        .sub(&j1.mul(&j2))
        .add(&j1.mul(&j1).mul(&j1).scale(&frac(1, 3)))
        .scale(&frac(5, 24));
    let combo = combo.t_free()?;
    cubic.check_all(combo.coeffs(), boundary_tail(&h).coeffs());
    let lhs = extract_invariants(&combo, h.mirror())?;
    let rhs: Vec<Rational> = n0.iter().map(|g| -(g * &twelfth)).collect();
    cubic.check_all(&lhs, &rhs);
    Ok(vec![shift, cubic])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_genus0_numbers() {
        let (n0, report) = genus0_quintic(3).unwrap();
        assert!(report.pass, "{report}");
        assert_eq!(n0, vec![int(2875), frac(4876875, 8), frac(8564575000, 27)]);
    }

    #[test]
    fn first_genus1_number() {
        assert_eq!(quintic_genus1(2).unwrap()[0], frac(2875, 12));
    }

    #[test]
    fn consistency_low_order() {
        for r in quintic_consistency(4).unwrap() {
            assert!(r.pass, "{r}");
        }
    }
}
