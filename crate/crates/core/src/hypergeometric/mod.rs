//! Hypergeometric series attached to a degree-n hypersurface in P^{n-1}.
//!
//! Everything is stored t-free: the generating function is `e^{wt} F(w, q)` with
//! `q = e^t`, and `F(1/ℏ, q)` is the same kernel read as a series in q with
//! coefficients in ℚ(ℏ).

mod chain;
mod kernel;
mod theta;
mod tower;

pub use chain::{Chain, HbarQSeries};
pub use kernel::{build_f, build_f_hbar, kernel_denominator_factor};
pub use theta::{theta_identities, y_one_identity, y_series};
pub use tower::{decomposition_report, diagonal_identities, i_tower};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{frac, int, powi, Rational};
use crate::report::IdentityReport;
use crate::residue::{HLaurent, RatFunc};
use crate::series::ring::log_one_plus;
use crate::series::{QSeries, TPoly, WSeries};

/// Degree `n`, q-truncation `d`, w-truncation `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperSpec {
    pub n: u32,
    pub d: usize,
    pub w: usize,
}

impl HyperSpec {
    /// Default w-truncation `n + 2`.
    pub fn new(n: u32, d: usize) -> Result<Self> {
        HyperSpec::with_w(n, d, n as usize + 2)
    }

    pub fn with_w(n: u32, d: usize, w: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if d < 1 {
            return Err(Error::InvalidSpec("q-truncation must be at least 1".into()));
        }
        if w < n as usize {
            return Err(Error::InvalidSpec(format!(
                "w-truncation {w} is below n = {n}"
            )));
        }
        Ok(HyperSpec { n, d, w })
    }

    /// `n^n`, the singular point of the Picard-Fuchs equation in q.
    pub fn conifold(&self) -> Rational {
        powi(&int(self.n as i64), self.n as i64)
    }

    /// `1 - n^n q`.
    pub fn one_minus_conifold(&self) -> QSeries {
        QSeries::one_minus(self.conifold(), self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuMethod {
    /// Termwise integral of `((1 - n^n u)^{-1/n} - 1)/u`.
    ClosedForm,
    /// `Res_{ℏ=0} ln F(1/ℏ, q)`.
    Residue,
}

/// All t-free series attached to one `HyperSpec`, built eagerly and immutable afterwards.
#[derive(Clone, Debug)]
pub struct Hypergeometric {
    spec: HyperSpec,
    kernel: WSeries,
    /// `tower[p][k - p] = I_{p,k}` for `p <= k <= max(n-1, 1)`.
    tower: Vec<Vec<TPoly>>,
    diagonal: Vec<QSeries>,
    mirror: QSeries,
    mu: QSeries,
    f_hbar: HbarQSeries,
}

impl Hypergeometric {
    pub fn new(spec: HyperSpec) -> Result<Self> {
        let kernel = build_f(&spec);
        let kmax = (spec.n as usize - 1).max(1);
        let tower = i_tower(&kernel, kmax)?;
        let diagonal = (0..spec.n as usize)
            .map(|p| tower[p][0].t_free())
            .collect::<Result<Vec<_>>>()?;
        let mirror = mirror_from_tower(&tower)?;
        let mu = mu_closed_form(&spec);
        let f_hbar = build_f_hbar(&spec);
        Ok(Hypergeometric {
            spec,
            kernel,
            tower,
            diagonal,
            mirror,
            mu,
            f_hbar,
        })
    }

    pub fn spec(&self) -> &HyperSpec {
        &self.spec
    }

    pub fn n(&self) -> u32 {
        self.spec.n
    }

    /// The kernel `F(w, q)`.
    pub fn kernel(&self) -> &WSeries {
        &self.kernel
    }

    /// `F(1/ℏ, q)` over its denominator chain.
    pub fn kernel_hbar(&self) -> &HbarQSeries {
        &self.f_hbar
    }

    /// `I_{p,k}` for `p <= k <= max(n-1, 1)`.
    pub fn i_series(&self, p: usize, k: usize) -> Result<TPoly> {
        if p > k {
            return Err(Error::InvalidSpec(format!(
                "I_{{p,k}} needs p <= k, got p={p}, k={k}"
            )));
        }
        if k < self.tower.len() {
            return Ok(self.tower[p][k - p].clone());
        }
        let tower = i_tower(&self.kernel, k)?;
        Ok(tower[p][k - p].clone())
    }

    /// The t-free diagonal series `I_{p,p}`, `0 <= p <= n-1`.
    pub fn diagonal(&self, p: usize) -> &QSeries {
        &self.diagonal[p]
    }

    pub fn diagonals(&self) -> &[QSeries] {
        &self.diagonal
    }

    /// `T - t`.
    pub fn mirror(&self) -> &QSeries {
        &self.mirror
    }

    pub fn mu(&self) -> &QSeries {
        &self.mu
    }

    pub fn mu_by(&self, method: MuMethod) -> Result<QSeries> {
        match method {
            MuMethod::ClosedForm => Ok(self.mu.clone()),
            MuMethod::Residue => mu_residue(&self.f_hbar),
        }
    }

    /// `Φ₀ = (1 - n^n q)^{-1/n}`.
    pub fn phi0(&self) -> QSeries {
        phi0(&self.spec)
    }

    /// `Φ₁ = (n-2)(n+1)/(24n) ((1 - n^n q)^{-1/n} - (1 - n^n q)^{-1})`.
    pub fn phi1(&self) -> QSeries {
        phi1(&self.spec)
    }

    /// `L = (1 - n^n q)^{1/n}`.
    pub fn l_series(&self) -> QSeries {
        self.spec
            .one_minus_conifold()
            .pow(&frac(1, self.spec.n as i64))
            .expect("constant term 1")
    }

    /// `Q(ℏ, q) = e^{-μ/ℏ} F(1/ℏ, q)` over its denominator chain.
    pub fn q_hbar_series(&self) -> HbarQSeries {
        self.f_hbar
            .mul_exp_neg_over_hbar(&self.mu)
            .expect("μ has no constant term")
    }

    /// The q^d coefficient of `Q(ℏ, q)`, checked holomorphic at ℏ = 0.
    pub fn q_hbar(&self, d: usize) -> Result<RatFunc> {
        let q = self.q_hbar_series();
        check_regular(&q, d)?;
        Ok(q.ratfunc(d))
    }

    /// Regularity of every `[q^d] Q` at 0 and its value and first derivative there.
    pub fn q_hbar_report(&self) -> IdentityReport {
        let q = self.q_hbar_series();
        let mut report = IdentityReport::new("holomorphic expansion of the twisted kernel")
            .param("n", self.spec.n)
            .param("D", self.spec.d);
        for d in 0..=self.spec.d {
            if let Err(e) = check_regular(&q, d) {
                report.fail(d, e.to_string());
                return report;
            }
        }
        report.check_all(q.hbar_coefficient(0).coeffs(), self.phi0().coeffs());
        report.check_all(q.hbar_coefficient(1).coeffs(), self.phi1().coeffs());
        let residue = self.mu_by(MuMethod::Residue);
        match residue {
            Ok(m) => {
                report.check_all(m.coeffs(), self.mu.coeffs());
            }
            Err(e) => report.fail(0, e.to_string()),
        }
        report
    }
}

fn check_regular(q: &HbarQSeries, d: usize) -> Result<()> {
    let order = q.pole_order_at_zero(d);
    if order > 0 {
        return Err(Error::RegularityViolation { degree: d, order });
    }
    Ok(())
}

fn mirror_from_tower(tower: &[Vec<TPoly>]) -> Result<QSeries> {
    let i00 = tower[0][0].t_free()?;
    let i01 = &tower[0][1];
    let t = TPoly::t(i00.truncation());
    let shifted = i01.div_series(&i00)?.sub(&t);
    let m = shifted.t_free()?;
    if !m.constant_term().is_zero() {
        return Err(Error::BadMirrorMap(m.constant_term().clone()));
    }
    Ok(m)
}

pub fn phi0(spec: &HyperSpec) -> QSeries {
    spec.one_minus_conifold()
        .pow(&frac(-1, spec.n as i64))
        .expect("constant term 1")
}

pub fn phi1(spec: &HyperSpec) -> QSeries {
    let n = spec.n as i64;
    let c = frac((n - 2) * (n + 1), 24 * n);
    let inv = spec.one_minus_conifold().inverse().expect("unit");
    (&phi0(spec) - &inv).scale(&c)
}

/// `μ_d = [u^d] (1 - n^n u)^{-1/n} / d`.
pub fn mu_closed_form(spec: &HyperSpec) -> QSeries {
    let p = phi0(spec);
    QSeries::from_fn(spec.d, |d| {
        if d == 0 {
            Rational::default()
        } else {
            &p.coeffs()[d] / int(d as i64)
        }
    })
}

/// Expansions at ℏ = 0 of the q-coefficients of `ln F(1/ℏ, q)`, each known through ℏ^need.
pub fn log_kernel_at_zero(f: &HbarQSeries, need: i64) -> Vec<HLaurent> {
    let d = f.truncation();
    // the q^k coefficient of F has a pole of order at most k, so products of total degree
    // <= D lose at most D orders of precision
    let high = need + d as i64;
    let exps: Vec<HLaurent> = (0..=d)
        .map(|k| {
            if k == 0 {
                HLaurent::zero()
            } else {
                f.expand_at_zero(k, high)
            }
        })
        .collect();
    log_one_plus(&exps)
}

/// `Res_{ℏ=0} ln F(1/ℏ, q)`, degree by degree.
pub fn mu_residue(f: &HbarQSeries) -> Result<QSeries> {
    let logs = log_kernel_at_zero(f, -1);
    let res: Result<Vec<Rational>> = logs.iter().map(HLaurent::residue).collect();
    Ok(QSeries::new(res?))
}

pub fn mu(spec: &HyperSpec, method: MuMethod) -> Result<QSeries> {
    match method {
        MuMethod::ClosedForm => Ok(mu_closed_form(spec)),
        MuMethod::Residue => mu_residue(&build_f_hbar(spec)),
    }
}

pub fn mirror_map(spec: &HyperSpec) -> Result<QSeries> {
    let kernel = build_f(spec);
    mirror_from_tower(&i_tower(&kernel, 1)?)
}

pub fn q_hbar(spec: &HyperSpec, d: usize) -> Result<RatFunc> {
    if d > spec.d {
        return Err(Error::OutOfRange {
            degree: d,
            truncation: spec.d,
        });
    }
    let q = build_f_hbar(spec).mul_exp_neg_over_hbar(&mu_closed_form(spec))?;
    check_regular(&q, d)?;
    Ok(q.ratfunc(d))
}

pub fn i_series(spec: &HyperSpec, p: usize, k: usize) -> Result<TPoly> {
    if p > k {
        return Err(Error::InvalidSpec(format!(
            "I_{{p,k}} needs p <= k, got p={p}, k={k}"
        )));
    }
    let tower = i_tower(&build_f(spec), k)?;
    Ok(tower[p][k - p].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn mu_first_coefficient() {
        for n in 1..=6u32 {
            let s = HyperSpec::new(n, 3).unwrap();
            let m = mu_closed_form(&s);
            assert!(m.constant_term().is_zero());
            assert_eq!(m.coeffs()[1], powi(&int(n as i64), n as i64 - 1));
        }
        assert_eq!(
            mu_closed_form(&HyperSpec::new(5, 1).unwrap()).coeffs()[1],
            int(625)
        );
    }

    #[test]
    fn mu_methods_agree() {
        for n in 2..=6u32 {
            let s = HyperSpec::new(n, 8).unwrap();
            assert_eq!(
                mu(&s, MuMethod::Residue).unwrap(),
                mu(&s, MuMethod::ClosedForm).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn twisted_kernel_examples() {
        let s = HyperSpec::new(5, 2).unwrap();
        assert_eq!(q_hbar(&s, 0).unwrap(), RatFunc::one());
        let q1 = q_hbar(&s, 1).unwrap();
        assert_eq!(q1.eval(&int(0)).unwrap(), int(625));
        assert_eq!(q1.taylor_coeff_at_zero(1).unwrap(), int(-375));
        // oracle: (3/20)(625 - 3125)
        assert_eq!(frac(3, 20) * int(625 - 3125), int(-375));
        assert!(Rational::one() == q_hbar(&s, 0).unwrap().eval(&int(3)).unwrap());
    }

    #[test]
    fn twisted_kernel_report() {
        for n in 2..=6u32 {
            let h = Hypergeometric::new(HyperSpec::new(n, 6).unwrap()).unwrap();
            let r = h.q_hbar_report();
            assert!(r.pass, "{r}");
        }
    }
}
