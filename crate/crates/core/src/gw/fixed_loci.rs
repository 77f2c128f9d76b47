//! The genus-1 series split into contributions of effective and boundary fixed loci.

use crate::error::{Error, Result};
use crate::gw::{
    boundary_tail, diagonal_block, fundamental_weight, genus1_series, log_conifold, log_diagonal,
    mirror_weight,
};
use crate::hypergeometric::{log_kernel_at_zero, Hypergeometric};
use crate::rational::{binomial, frac, int, powi, Rational};
use crate::report::IdentityReport;
use crate::residue::{laurent_expansion, HLaurent, Poly};
use crate::series::{taylor_rational, QSeries};

fn hodge_weight(n: i64) -> Rational {
    frac((n - 2) * (n + 1), 48)
}

/// Effective-loci term, written with `C(n-1-p, 2)` weights on every `ln I_{p,p}`, `p <= n-3`.
pub fn effective_term(h: &Hypergeometric) -> QSeries {
    let n = h.n() as i64;
    let mut acc = h.mu().scale(&frac((n - 2) * (n + 1), 24));
    acc = &acc - &log_conifold(h).scale(&frac((n - 2) * (3 * n - 5), 24));
    for p in 0..=n - 3 {
        acc = &acc - &log_diagonal(h, p as usize).scale(&binomial(n - 1 - p, 2));
    }
    acc.scale(&frac(1, 2))
}

/// Effective-loci term after pairing `I_{p,p}` with `I_{n-1-p,n-1-p}`.
pub fn effective_term_paired(h: &Hypergeometric) -> QSeries {
    let n = h.n() as i64;
    let conifold = if n % 2 == 1 {
        frac(n + 1, 48)
    } else {
        frac(n - 2, 48)
    };
    let acc = &h.mu().scale(&hodge_weight(n)) - &log_conifold(h).scale(&conifold);
    &acc - &diagonal_block(h)
}

/// Boundary-loci term in closed form.
pub fn boundary_term(h: &Hypergeometric) -> QSeries {
    let n = h.n() as i64;
    let mut acc = h.mirror().scale(&mirror_weight(n));
    acc = &acc - &h.mu().scale(&hodge_weight(n));
    acc = &acc + &log_conifold(h).scale(&frac(1, 24));
    acc = &acc + &log_diagonal(h, 0).scale(&fundamental_weight(n));
    &acc + &boundary_tail(h)
}

/// The boundary-loci term as `-(n/24) Res` of
/// `((1+ℏ)^n - 1)/((n+ℏ)ℏ²) · ln(e^{-(T-t)/ℏ} F(1/ℏ, q)/I_{0,0})` at ℏ = -n, 0, ∞.
#[derive(Clone, Debug)]
pub struct BoundaryResidues {
    pub at_minus_n: QSeries,
    pub at_zero: QSeries,
    pub at_infinity: QSeries,
}

impl BoundaryResidues {
    pub fn total(&self) -> QSeries {
        &(&self.at_minus_n + &self.at_zero) + &self.at_infinity
    }
}

fn require_n_at_least_two(h: &Hypergeometric) -> Result<i64> {
    let n = h.n() as i64;
    if n < 2 {
        return Err(Error::InvalidSpec(format!(
            "fixed-locus decomposition needs n >= 2, got {n}"
        )));
    }
    Ok(n)
}

fn prefactor_numerator(n: u32) -> Poly {
    &Poly::binomial_power(&int(1), n) - &Poly::one()
}

pub fn boundary_residues(h: &Hypergeometric) -> Result<BoundaryResidues> {
    let n = require_n_at_least_two(h)?;
    let d = h.spec().d;
    let outer = frac(-n, 24);
    let m = h.mirror();
    let log_i00 = log_diagonal(h, 0);

    // simple pole at -n; the bracket is regular there
    let f_at = h.kernel_hbar().values_at(&int(-n))?;
    let bracket = &(&m.scale(&frac(1, n)) + &f_at.log()?) - &log_i00;
    let simple = (powi(&int(1 - n), n) - int(1)) / int(n * n);
    let at_minus_n = bracket.scale(&(&outer * &simple));

    // pole of order <= d at 0 in the q^d coefficient
    let den = Poly::from_ints(&[0, 0, n, 1]);
    let g = laurent_expansion(
        &prefactor_numerator(h.n()),
        &den,
        &Rational::default(),
        d as i64,
    );
    let logs = log_kernel_at_zero(h.kernel_hbar(), 0);
    let mut at_zero = Vec::with_capacity(d + 1);
    for (k, l) in logs.iter().enumerate() {
        let term = l
            .add(&HLaurent::monomial(-&m.coeffs()[k], -1))
            .add(&HLaurent::constant(-&log_i00.coeffs()[k]));
        at_zero.push(&outer * g.mul(&term).residue()?);
    }

    // at infinity, with w = 1/ℏ: a w^{n-2} coefficient
    let log_f = h.kernel().log()?;
    let num: Vec<Rational> = (0..n).map(|k| binomial(n, k)).collect();
    let weights = taylor_rational(&num, &[int(1), int(n)], (n - 2) as usize)?;
    let mut at_infinity = QSeries::zero(d);
    for (k, wk) in weights.iter().enumerate() {
        let j = (n - 2) as usize - k;
        let mut lam = log_f.coeff(j)?.clone();
        if j == 0 {
            lam = &lam - &log_i00;
        }
        if j == 1 {
            lam = &lam - m;
        }
        at_infinity = &at_infinity + &lam.scale(wk);
    }
    let at_infinity = at_infinity.scale(&-outer);

    Ok(BoundaryResidues {
        at_minus_n,
        at_zero: QSeries::new(at_zero),
        at_infinity,
    })
}

/// Each residue against its closed form, the residue sum against the closed boundary term,
/// and effective + boundary against the full genus-1 series.
pub fn fixed_locus_reports(h: &Hypergeometric) -> Result<Vec<IdentityReport>> {
    let n = require_n_at_least_two(h)?;
    let d = h.spec().d;
    let labelled = |name: &str| IdentityReport::new(name).param("n", n).param("D", d);
    let m = h.mirror();
    let log_i00 = log_diagonal(h, 0);
    let res = boundary_residues(h)?;

    let mut forms = labelled("effective-loci term: both printed forms agree");
    let a1 = effective_term(h);
    forms.check_all(a1.coeffs(), effective_term_paired(h).coeffs());

    let mut minus_n = labelled("boundary residue at hbar = -n");
    let closed = (&m.scale(&frac(1, n)) - &log_i00)
        .scale(&(frac(-n, 24) * (powi(&int(1 - n), n) - int(1)) / int(n * n)));
    minus_n.check_all(res.at_minus_n.coeffs(), closed.coeffs());

    let mut zero = labelled("boundary residue at hbar = 0");
    let log_phi0 = h.phi0().log()?;
    let inner = &(&(h.mu() - m).scale(&frac((n - 2) * (n + 1), 2 * n)) + &log_phi0) - &log_i00;
    zero.check_all(res.at_zero.coeffs(), inner.scale(&frac(-n, 24)).coeffs());

    let mut infinity = labelled("boundary residue at hbar = infinity");
    infinity.check_all(res.at_infinity.coeffs(), boundary_tail(h).coeffs());

    let mut closed_b = labelled("boundary term: residue sum equals closed form");
    let b = res.total();
    closed_b.check_all(b.coeffs(), boundary_term(h).coeffs());

    let mut whole = labelled("effective + boundary equals the genus-1 series");
    whole.check_all((&a1 + &b).coeffs(), genus1_series(h).coeffs());

    Ok(vec![forms, minus_n, zero, infinity, closed_b, whole])
}

/// All fixed-locus checks folded into one report.
pub fn fixed_locus_check(h: &Hypergeometric) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("fixed-locus decomposition of the genus-1 series")
        .param("n", h.n())
        .param("D", h.spec().d);
    for r in fixed_locus_reports(h)? {
        report.absorb(&r);
    }
    Ok(report)
}
