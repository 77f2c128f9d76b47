//! Plane cubic and quartic surface cases, and the genus-0 series fed to the regularization
//! checks.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gw::{extract_invariants, genus1_series, log_conifold, log_diagonal, reduced_genus1};
use crate::hypergeometric::{HyperSpec, Hypergeometric};
use crate::rational::{frac, Rational};
use crate::report::IdentityReport;
use crate::residue::{
    check_regularizability, regularize, RatFunc, RegularizabilityIdentity, USeriesRF,
};
use crate::series::{QSeries, TPoly};

/// `-sum_{k>=1} ln(1 - Q^{3k})` through `Q^D`.
fn torus_cover_series(d: usize) -> Result<QSeries> {
    let mut acc = QSeries::zero(d);
    for k in (3..=d).step_by(3) {
        let factor = &QSeries::one(d) - &QSeries::monomial(Rational::from_integer(1.into()), k, d);
        acc = &acc - &factor.log()?;
    }
    Ok(acc)
}

fn cubic_reports(d: usize) -> Result<Vec<IdentityReport>> {
    let h = Hypergeometric::new(HyperSpec::new(3, d)?)?;
    let closed = &(&h.mirror().scale(&frac(1, 8)) - &log_conifold(&h).scale(&frac(1, 24)))
        - &log_diagonal(&h, 0).scale(&frac(1, 2));

    let mut form = IdentityReport::new("cubic: genus-1 series in closed form").param("D", d);
    form.check_all(genus1_series(&h).coeffs(), closed.coeffs());

    let mut covers = IdentityReport::new("cubic: invariants count torus covers").param("D", d);
    let invariants = extract_invariants(&closed, h.mirror())?;
    covers.check_all(&invariants, &torus_cover_series(d)?.coeffs()[1..]);
    Ok(vec![form, covers])
}

fn quartic_reports(d: usize) -> Result<Vec<IdentityReport>> {
    let h = Hypergeometric::new(HyperSpec::new(4, d)?)?;
    let i00 = h.diagonal(0);
    let j1 = h.i_series(0, 1)?.div_series(i00)?;
    let j2 = h.i_series(0, 2)?.div_series(i00)?;
    let zero = TPoly::zero(d);

    let mut vanish = IdentityReport::new("quartic: J_2 - J_1^2/2 vanishes").param("D", d);
    let x = j2.sub(&j1.mul(&j1).scale(&frac(1, 2)));
    tpoly_equal(&mut vanish, &x, &zero);

    let mut chain = IdentityReport::new("quartic: derivative decomposition").param("D", d);
    let j1p = j1.d_dt().t_free()?;
    let ratio = j2.d_dt().div_series(&j1p)?;
    let y = ratio.sub(&j1);
    tpoly_equal(&mut chain, &x.d_dt(), &y.mul_series(&j1p));
    let ratio_p = ratio.d_dt();
    tpoly_equal(
        &mut chain,
        &ratio_p,
        &TPoly::from_series(h.diagonal(2).clone()),
    );
    tpoly_equal(
        &mut chain,
        &y.d_dt(),
        &ratio_p.sub(&TPoly::from_series(j1p)),
    );
    chain.check_all(h.diagonal(2).coeffs(), h.diagonal(1).coeffs());

    let mut series =
        IdentityReport::new("quartic: genus-1 series and invariants vanish").param("D", d);
    series.check_all(genus1_series(&h).coeffs(), QSeries::zero(d).coeffs());
    let inv = reduced_genus1(&h)?;
    series.check_all(&inv, &vec![Rational::zero(); inv.len()]);
    Ok(vec![vanish, chain, series])
}

fn tpoly_equal(report: &mut IdentityReport, lhs: &TPoly, rhs: &TPoly) {
    for k in 0..=lhs.degree().max(rhs.degree()) {
        report.check_all(lhs.coeff(k).coeffs(), rhs.coeff(k).coeffs());
    }
}

/// Plane cubic (n = 3) and quartic surface (n = 4) checks through `q^D`.
pub fn special_case_reports(d: usize) -> Result<Vec<IdentityReport>> {
    if d < 3 {
        return Err(Error::InvalidSpec(format!(
            "special cases need D >= 3, got {d}"
        )));
    }
    let mut out = cubic_reports(d)?;
    out.extend(quartic_reports(d)?);
    Ok(out)
}

pub fn special_cases(d: usize) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("low-dimensional special cases").param("D", d);
    for r in special_case_reports(d)? {
        report.absorb(&r);
    }
    Ok(report)
}

/// `Z(ℏ, u) = F(1/ℏ, u)/I_{0,0}(u) - 1`, regularizable with `η = μ`.
pub fn bridge_z(h: &Hypergeometric) -> Result<USeriesRF> {
    if h.n() < 2 {
        return Err(Error::InvalidSpec(format!(
            "bridge series needs n >= 2, got {}",
            h.n()
        )));
    }
    let scaled = h.kernel_hbar().mul_series(&h.diagonal(0).inverse()?);
    let mut coeffs: Vec<RatFunc> = (0..=scaled.truncation())
        .map(|k| scaled.ratfunc(k))
        .collect();
    coeffs[0] = &coeffs[0] - &RatFunc::one();
    USeriesRF::without_constant(coeffs)
}

/// Regularization of the bridge series against `μ` and `Φ₀/I_{0,0}`, and both residue-sum
/// characterizations for `a = 0..=a_max`.
pub fn bridge_z_report(h: &Hypergeometric, a_max: usize) -> Result<Vec<IdentityReport>> {
    let z = bridge_z(h)?;
    let d = h.spec().d;
    let reg = regularize(&z)?;
    let mut split = IdentityReport::new("bridge series regularizes with eta = mu")
        .param("n", h.n())
        .param("D", d);
    split.check_all(reg.eta.coeffs(), h.mu().coeffs());
    split.check_all(reg.eta_from_log.coeffs(), h.mu().coeffs());
    if let Some((degree, order)) = reg.zbar.first_pole() {
        split.fail(degree, format!("regular part has a pole of order {order}"));
    } else {
        let value = &reg.zbar.value_at_zero()? + &QSeries::one(d);
        split.check_all(value.coeffs(), h.phi0().div_series(h.diagonal(0))?.coeffs());
    }
    let mut out = vec![split];
    for which in [
        RegularizabilityIdentity::ResidueProducts,
        RegularizabilityIdentity::InverseRegularPart,
    ] {
        for a in 0..=a_max {
            out.push(check_regularizability(&z, a, which)?.param("n", h.n()));
        }
    }
    Ok(out)
}
