//! The ℏ-series `Y_p = (1/I_pp)(1 + ℏD) ... (1/I_11)(1 + ℏD) F(1/ℏ, q)/I_00`, `D = q d/dq`,
//! and the identities satisfied by the expansion of `e^{-μ/ℏ} Y_p` at ℏ = 0.

use crate::error::{Error, Result};
use crate::hypergeometric::{HbarQSeries, Hypergeometric};
use crate::rational::int;
use crate::report::IdentityReport;
use crate::series::QSeries;

pub fn y_series(h: &Hypergeometric, p: usize) -> Result<HbarQSeries> {
    if p >= h.n() as usize {
        return Err(Error::InvalidSpec(format!("Y_p needs p <= n-1, got p={p}")));
    }
    let mut y = h.kernel_hbar().mul_series(&h.diagonal(0).inverse()?);
    for j in 1..=p {
        y = y
            .one_plus_hbar_derivative()
            .mul_series(&h.diagonal(j).inverse()?);
    }
    Ok(y)
}

/// `Y_1 = (dt/dT)(1 + ℏ D) Y`, with `dT/dt` taken from the mirror map.
pub fn y_one_identity(h: &Hypergeometric) -> Result<IdentityReport> {
    let d = h.spec().d;
    let mut report = IdentityReport::new("first Y-series via the mirror map")
        .param("n", h.n())
        .param("D", d);
    if h.n() < 2 {
        return Ok(report);
    }
    let dt_dt = &QSeries::one(d) + &h.mirror().derivative();
    let via_mirror = y_series(h, 0)?
        .one_plus_hbar_derivative()
        .mul_series(&dt_dt.inverse()?);
    let y1 = y_series(h, 1)?;
    // both sit over the same denominators, so numerators must agree
    for k in 0..=d {
        report.check(k, y1.numerator(k), via_mirror.numerator(k));
    }
    Ok(report)
}

struct Closed {
    l: QSeries,
    /// `f_r'/f_r`.
    log_derivs: Vec<QSeries>,
    /// `prod_{r<=p} f_r`.
    prods: Vec<QSeries>,
}

fn closed_forms(h: &Hypergeometric) -> Result<Closed> {
    let n = h.n() as usize;
    let l = h.l_series();
    let mut prods = Vec::with_capacity(n);
    let mut log_derivs = Vec::with_capacity(n);
    let mut acc = QSeries::one(h.spec().d);
    for r in 0..n {
        let f = (&l * h.diagonal(r)).inverse()?;
        log_derivs.push(f.derivative().div_series(&f)?);
        acc = &acc * &f;
        prods.push(acc.clone());
    }
    Ok(Closed {
        l,
        log_derivs,
        prods,
    })
}

fn weighted_log_derivs(c: &Closed, p: usize) -> QSeries {
    let mut s = QSeries::zero(c.l.truncation());
    for r in 0..p {
        s = &s + &c.log_derivs[r].scale(&int((p - r) as i64));
    }
    s
}

/// `Σ_k (-1)^k [ℏ^{k+1}]A · [ℏ^{-k}]B`: the iterated residue at ℏ₂ = 0 then ℏ₁ = 0 of
/// `A(ℏ₁) B(ℏ₂) / (ℏ₁ ℏ₂ (ℏ₁ + ℏ₂))`, expanding `1/(ℏ₁ + ℏ₂)` in the inner variable.
fn double_residue(a: &HbarQSeries, b: &HbarQSeries) -> QSeries {
    let poles = (0..=b.truncation())
        .map(|d| b.pole_order_at_zero(d))
        .max()
        .unwrap_or(0);
    let mut out = QSeries::zero(a.truncation().min(b.truncation()));
    for k in 0..=poles {
        let term = &a.hbar_coefficient(k as i64 + 1) * &b.hbar_coefficient(-(k as i64));
        out = if k % 2 == 0 {
            &out + &term
        } else {
            &out - &term
        };
    }
    out
}

/// Holomorphy of `e^{-μ/ℏ} Y_p` at 0, its first two Taylor coefficients in closed form,
/// and the double-residue identity for the symmetric pairing of the `Y_p`.
pub fn theta_identities(h: &Hypergeometric) -> Result<IdentityReport> {
    let n = h.n() as usize;
    if n < 2 {
        return Err(Error::InvalidSpec("the Θ identities need n >= 2".into()));
    }
    let d = h.spec().d;
    let mut report = IdentityReport::new("twisted Y-series expansion and double residue")
        .param("n", n)
        .param("D", d);
    let c = closed_forms(h)?;
    let phi1 = h.phi1();
    let mut g = Vec::with_capacity(n);
    for p in 0..n {
        let gp = y_series(h, p)?.mul_exp_neg_over_hbar(h.mu())?;
        for k in 0..=d {
            let order = gp.pole_order_at_zero(k);
            if order > 0 {
                report.fail(
                    k,
                    format!("e^(-mu/h) Y_{p} has a pole of order {order} at q^{k}"),
                );
            }
        }
        let theta0 = gp.hbar_coefficient(0);
        let theta1 = gp.hbar_coefficient(1);
        report.check_all(theta0.coeffs(), c.prods[p].coeffs());
        let closed1 = &(&c.l * &c.prods[p]) * &(&phi1 + &weighted_log_derivs(&c, p));
        report.check_all(theta1.coeffs(), closed1.coeffs());
        if p == n - 1 {
            report.check_all(theta0.coeffs(), QSeries::one(d).coeffs());
            report.check_all(theta1.coeffs(), (&c.l * &phi1).coeffs());
        }
        g.push(gp);
    }
    let mut lhs = double_residue(&g[n - 1], &g[n - 1]);
    for p in 0..=n - 2 {
        lhs = &lhs + &double_residue(&g[p], &g[n - 2 - p]);
    }
    let mut inner = phi1.scale(&int(n as i64));
    for p in 0..=n - 2 {
        inner = &inner + &weighted_log_derivs(&c, p);
    }
    let rhs = &c.l * &inner;
    report.check_all(lhs.coeffs(), rhs.coeffs());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeometric::HyperSpec;
    use num_traits::One;

    #[test]
    fn y0_starts_at_one() {
        let h = Hypergeometric::new(HyperSpec::new(5, 3).unwrap()).unwrap();
        let y = y_series(&h, 0).unwrap();
        assert!(y.ratfunc(0).eval(&int(0)).unwrap().is_one());
        assert!(y_one_identity(&h).unwrap().pass);
    }

    #[test]
    fn theta_small_n() {
        for n in 2..=5 {
            let h = Hypergeometric::new(HyperSpec::new(n, 4).unwrap()).unwrap();
            let r = theta_identities(&h).unwrap();
            assert!(r.pass, "{r}");
        }
    }
}
