//! Power series in `u` with rational-function coefficients, and their regularization
//! `1 + Z = e^{η/ℏ} (1 + Z̄)` with `Z̄` holomorphic at ℏ = 0.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{big, factorial, int, Rational};
use crate::report::IdentityReport;
use crate::residue::{HLaurent, RatFunc};
use crate::series::ring::{exp_series, log_one_plus, mul_trunc};
use crate::series::QSeries;

/// `sum_{d=0}^{D} Z_d(ℏ) u^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeriesRF {
    coeffs: Vec<RatFunc>,
}

impl USeriesRF {
    pub fn new(coeffs: Vec<RatFunc>) -> Self {
        assert!(!coeffs.is_empty(), "a u-series needs the u^0 coefficient");
        USeriesRF { coeffs }
    }

    /// As `new`, but rejects a nonzero `u^0` coefficient.
    pub fn without_constant(coeffs: Vec<RatFunc>) -> Result<Self> {
        let s = USeriesRF::new(coeffs);
        if !s.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant);
        }
        Ok(s)
    }

    /// Coefficients `Q_d(u)` with no ℏ-dependence.
    pub fn from_series(s: &QSeries) -> Self {
        USeriesRF::new(
            s.coeffs()
                .iter()
                .map(|c| RatFunc::constant(c.clone()))
                .collect(),
        )
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &RatFunc {
        &self.coeffs[d]
    }

    pub fn is_regular_at_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_regular_at_zero)
    }

    /// First `u`-degree whose coefficient has a pole at 0, with that pole's order.
    pub fn first_pole(&self) -> Option<(usize, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_regular_at_zero())
            .map(|(d, c)| (d, c.pole_order_at_zero()))
    }

    /// Taylor coefficient of ℏ^j at 0 of every `u`-coefficient.
    pub fn taylor_coefficient(&self, j: usize) -> Result<QSeries> {
        if let Some((degree, order)) = self.first_pole() {
            return Err(Error::RegularityViolation { degree, order });
        }
        let v: Result<Vec<Rational>> = self
            .coeffs
            .iter()
            .map(|c| c.taylor_coeff_at_zero(j))
            .collect();
        Ok(QSeries::new(v?))
    }

    pub fn value_at_zero(&self) -> Result<QSeries> {
        self.taylor_coefficient(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.truncation().min(other.truncation());
        USeriesRF::new(
            (0..=d)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        USeriesRF::new(mul_trunc(&self.coeffs, &other.coeffs))
    }

    /// `e^{c(u)/ℏ} (1 + self) - 1`.
    pub fn twist_by_exponential(&self, c: &QSeries) -> Self {
        let d = self.truncation().min(c.truncation());
        let x: Vec<HLaurent> = (0..=d)
            .map(|k| {
                if k == 0 {
                    HLaurent::zero()
                } else {
                    HLaurent::monomial(c.coeffs()[k].clone(), -1)
                }
            })
            .collect();
        let e: Vec<RatFunc> = exp_series(&x).iter().map(RatFunc::from_laurent).collect();
        let mut one_plus = self.coeffs[..=d].to_vec();
        one_plus[0] = &one_plus[0] + &RatFunc::one();
        let mut out = mul_trunc(&e, &one_plus);
        out[0] = &out[0] - &RatFunc::one();
        USeriesRF::new(out)
    }
}

impl std::fmt::Display for USeriesRF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "u^{d}: {c}")?;
            }
        }
        write!(f, "O(u^{})", self.coeffs.len())
    }
}

/// Laurent expansions at 0 of every `u`-coefficient, each known through ℏ^high.
fn expansions(z: &USeriesRF, high: i64) -> Vec<HLaurent> {
    z.coeffs.iter().map(|c| c.expand_at_zero(high)).collect()
}

fn hbar_slice(exps: &[HLaurent], q: i64) -> QSeries {
    QSeries::new(
        exps.iter()
            .map(|l| l.coeff(q).expect("expansion window covers the request"))
            .collect(),
    )
}

/// `[ℏ^q] Z` as a series in `u`.
pub fn hbar_coefficient(z: &USeriesRF, q: i64) -> QSeries {
    hbar_slice(&expansions(z, q), q)
}

/// Result of splitting `1 + Z = e^{η/ℏ}(1 + Z̄)`.
#[derive(Clone, Debug)]
pub struct Regularization {
    /// From the fixed-point iteration on the ℏ-expansion coefficients.
    pub eta: QSeries,
    /// From the residue at 0 of `ln(1 + Z)`.
    pub eta_from_log: QSeries,
    pub zbar: USeriesRF,
    /// Whether every `u`-coefficient of `Z̄` is holomorphic at ℏ = 0.
    pub regular: bool,
}

impl Regularization {
    pub fn eta_paths_agree(&self) -> bool {
        self.eta == self.eta_from_log
    }
}

fn recip_factorial(k: usize) -> Rational {
    big(factorial(k as u64)).recip()
}

fn eta_by_iteration(exps: &[HLaurent], d: usize) -> QSeries {
    // tilde[q] = [ℏ^{q-1}] Z
    let tilde: Vec<QSeries> = (0..=d).map(|q| hbar_slice(exps, q as i64 - 1)).collect();
    let mut eta = tilde[0].clone();
    for p in 1..=d {
        let neg = eta.neg_series();
        let mut pow = QSeries::one(d);
        let mut next = QSeries::zero(d);
        for (q, t) in tilde.iter().enumerate().take(p + 1) {
            next = &next + &(&pow * t).scale(&recip_factorial(q));
            pow = &pow * &neg;
        }
        eta = next;
    }
    eta
}

fn eta_by_log_residue(z: &USeriesRF) -> Result<QSeries> {
    let d = z.truncation();
    // a product of coefficients of total u-degree <= D has a pole of order at most D * ratio
    let ratio = (1..=d)
        .map(|k| {
            Rational::new(
                (z.coeffs[k].pole_order_at_zero() as i64).into(),
                (k as i64).into(),
            )
        })
        .max()
        .unwrap_or_else(Rational::zero);
    let extra = (ratio * int(d as i64)).ceil().to_integer();
    let high = -1 + i64::try_from(extra).expect("pole bound fits in i64");
    let mut exps = expansions(z, high);
    exps[0] = HLaurent::zero();
    let logs = log_one_plus(&exps);
    let v: Result<Vec<Rational>> = logs.iter().map(HLaurent::residue).collect();
    Ok(QSeries::new(v?))
}

pub fn regularize(z: &USeriesRF) -> Result<Regularization> {
    if !z.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let d = z.truncation();
    let exps = expansions(z, d as i64 - 1);
    let eta = eta_by_iteration(&exps, d);
    let eta_from_log = eta_by_log_residue(z)?;
    let zbar = z.twist_by_exponential(&eta.neg_series());
    let regular = zbar.is_regular_at_zero();
    Ok(Regularization {
        eta,
        eta_from_log,
        zbar,
        regular,
    })
}

/// The two residue-sum characterizations of a regularizable series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularizabilityIdentity {
    /// `sum_m 1/(m(m-1)) sum prod (-1)^{a_l}/a_l! Res{ℏ^{-a_l} Z} = a! Res{ℏ^{a+1} Z}`.
    ResidueProducts,
    /// `sum_m sum prod (-1)^{a_l}/a_l! Res{ℏ^{-a_l} Z} = η^a / (1 + Z̄(0, u))`.
    InverseRegularPart,
}

/// Powers `G^m`, `m = 0..=D`, of `G(x) = sum_j (-1)^j/j! [ℏ^{j-1}]Z x^j`, truncated at `x^D`.
fn residue_generating_powers(exps: &[HLaurent], d: usize) -> Vec<Vec<QSeries>> {
    let g: Vec<QSeries> = (0..=d)
        .map(|j| {
            let sign = if j % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            hbar_slice(exps, j as i64 - 1).scale(&(sign * recip_factorial(j)))
        })
        .collect();
    let mut unit = vec![QSeries::zero(d); d + 1];
    unit[0] = QSeries::one(d);
    let mut powers = vec![unit];
    for m in 1..=d {
        let next = mul_trunc(&powers[m - 1], &g);
        powers.push(next);
    }
    powers
}

pub fn check_regularizability(
    z: &USeriesRF,
    a: usize,
    which: RegularizabilityIdentity,
) -> Result<IdentityReport> {
    if !z.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let d = z.truncation();
    let exps = expansions(z, d as i64 - 1);
    let powers = residue_generating_powers(&exps, d);
    let (name, lhs, rhs) = match which {
        RegularizabilityIdentity::ResidueProducts => {
            let mut lhs = QSeries::zero(d);
            for (m, p) in powers.iter().enumerate().skip(2) {
                if m >= 2 + a {
                    let w = Rational::new(1.into(), ((m * (m - 1)) as i64).into());
                    lhs = &lhs + &p[m - 2 - a].scale(&w);
                }
            }
            let rhs = hbar_slice(&exps, -(a as i64) - 2).scale(&big(factorial(a as u64)));
            ("regularizability residue products", lhs, rhs)
        }
        RegularizabilityIdentity::InverseRegularPart => {
            let reg = regularize(z)?;
            if let Some((degree, order)) = reg.zbar.first_pole() {
                return Err(Error::NotRegularizable { degree, order });
            }
            let mut lhs = QSeries::zero(d);
            for (m, p) in powers.iter().enumerate().skip(a) {
                lhs = &lhs + &p[m - a];
            }
            let mut one_plus = reg.zbar.value_at_zero()?;
            one_plus = &one_plus + &QSeries::one(d);
            let mut eta_a = QSeries::one(d);
            for _ in 0..a {
                eta_a = &eta_a * &reg.eta;
            }
            let rhs = eta_a.div_series(&one_plus)?;
            ("regularizability inverse regular part", lhs, rhs)
        }
    };
    let mut report = IdentityReport::new(name)
        .param("a", a)
        .param("u_truncation", d);
    report.check_all(lhs.coeffs(), rhs.coeffs());
    Ok(report)
}

/// `Res{ℏ^a Z} = sum_{p-q=1+a} η^p/p! C_q + [a >= 0] η^{a+1}/(a+1)!`, `C_q` the Taylor
/// coefficients of `Z̄`.
pub fn check_residue_expansion(z: &USeriesRF, a: i64) -> Result<IdentityReport> {
    let reg = regularize(z)?;
    if let Some((degree, order)) = reg.zbar.first_pole() {
        return Err(Error::NotRegularizable { degree, order });
    }
    let d = z.truncation();
    let lhs = hbar_coefficient(z, -a - 1);
    let mut rhs = QSeries::zero(d);
    let mut eta_p = QSeries::one(d);
    for p in 0..=d as i64 {
        let q = p - 1 - a;
        if q >= 0 {
            let c = reg.zbar.taylor_coefficient(q as usize)?;
            rhs = &rhs + &(&eta_p * &c).scale(&recip_factorial(p as usize));
        }
        if a >= 0 && p == a + 1 {
            rhs = &rhs + &eta_p.scale(&recip_factorial(p as usize));
        }
        eta_p = &eta_p * &reg.eta;
    }
    let mut report = IdentityReport::new("residue expansion of a regularizable series")
        .param("a", a)
        .param("u_truncation", d);
    report.check_all(lhs.coeffs(), rhs.coeffs());
    Ok(report)
}

/// `e^{cu/ℏ}(1 + uℏ) - 1` through `u^d`: regularizable with `η = cu`, `Z̄ = uℏ`.
pub fn regularizable_example(c: &Rational, d: usize) -> USeriesRF {
    let mut one = vec![RatFunc::zero(); d + 1];
    one[1] = RatFunc::hbar();
    USeriesRF::new(one).twist_by_exponential(&QSeries::monomial(c.clone(), 1, d))
}

/// `u/ℏ` through `u^d`: not regularizable.
pub fn simple_pole_example(d: usize) -> USeriesRF {
    let mut v = vec![RatFunc::zero(); d + 1];
    v[1] = RatFunc::monomial(int(1), -1);
    USeriesRF::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn constructed(c: Rational, d: usize) -> USeriesRF {
        regularizable_example(&c, d)
    }

    #[test]
    fn hbar_free_series_needs_nothing() {
        let z = USeriesRF::from_series(&QSeries::monomial(int(1), 1, 4));
        let r = regularize(&z).unwrap();
        assert!(r.eta.is_zero());
        assert!(r.eta_paths_agree());
        assert_eq!(r.zbar, z);
        assert!(r.regular);
    }

    #[test]
    fn constructed_series_recovers_its_pair() {
        let c = frac(-3, 2);
        let z = constructed(c.clone(), 5);
        let r = regularize(&z).unwrap();
        assert_eq!(r.eta, QSeries::monomial(c, 1, 5));
        assert!(r.eta_paths_agree());
        let mut expect = vec![RatFunc::zero(); 6];
        expect[1] = RatFunc::hbar();
        assert_eq!(r.zbar, USeriesRF::new(expect));
        assert!(r.regular);
    }

    #[test]
    fn simple_pole_is_not_regularizable() {
        let z = simple_pole_example(3);
        let r = regularize(&z).unwrap();
        assert_eq!(r.eta, QSeries::monomial(int(1), 1, 3));
        assert!(!r.regular);
        // (1 + u/ℏ) e^{-u/ℏ} = 1 - u²/(2ℏ²) + ...
        assert_eq!(r.zbar.coeff(2), &RatFunc::monomial(frac(-1, 2), -2));
        let fails = (0..=4).any(|a| {
            !check_regularizability(&z, a, RegularizabilityIdentity::ResidueProducts)
                .unwrap()
                .pass
        });
        assert!(fails);
        assert!(matches!(
            check_regularizability(&z, 0, RegularizabilityIdentity::InverseRegularPart),
            Err(Error::NotRegularizable { .. })
        ));
    }

    #[test]
    fn constructed_series_satisfies_both_identities() {
        let z = constructed(int(2), 6);
        for a in 0..=4 {
            for which in [
                RegularizabilityIdentity::ResidueProducts,
                RegularizabilityIdentity::InverseRegularPart,
            ] {
                let r = check_regularizability(&z, a, which).unwrap();
                assert!(r.pass, "{r}");
            }
        }
        for a in -3..=3 {
            assert!(check_residue_expansion(&z, a).unwrap().pass);
        }
    }

    #[test]
    fn constant_term_rejected() {
        let z = USeriesRF::new(vec![RatFunc::one(), RatFunc::zero()]);
        assert_eq!(regularize(&z).unwrap_err(), Error::NonzeroConstant);
        assert!(USeriesRF::without_constant(vec![RatFunc::one()]).is_err());
    }
}
