//! Series in `w` (truncated at `W`) whose coefficients are q-series (truncated at `D`).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::QSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSeries {
    /// Index = power of `w`, `0..=W`.
    coeffs: Vec<QSeries>,
}

impl WSeries {
    pub fn new(coeffs: Vec<QSeries>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a WSeries needs at least the w^0 coefficient"
        );
        let d = coeffs.iter().map(QSeries::truncation).min().unwrap();
        WSeries {
            coeffs: coeffs.into_iter().map(|c| c.truncate(d).unwrap()).collect(),
        }
    }

    /// A w-series with constant q-coefficients.
    pub fn from_rational(w_coeffs: &[Rational], q_truncation: usize) -> Self {
        WSeries::new(
            w_coeffs
                .iter()
                .map(|c| QSeries::constant(c.clone(), q_truncation))
                .collect(),
        )
    }

    pub fn w_truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn q_truncation(&self) -> usize {
        self.coeffs[0].truncation()
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&QSeries> {
        self.coeffs.get(k).ok_or(Error::OutOfRange {
            degree: k,
            truncation: self.w_truncation(),
        })
    }

    fn shape(&self, other: &Self) -> (usize, usize) {
        (
            self.w_truncation().min(other.w_truncation()),
            self.q_truncation().min(other.q_truncation()),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (w, _) = self.shape(other);
        WSeries::new(
            (0..=w)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (w, _) = self.shape(other);
        WSeries::new(
            (0..=w)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (w, d) = self.shape(other);
        let mut out = vec![QSeries::zero(d); w + 1];
        for i in 0..=w {
            for j in 0..=w - i {
                out[i + j] = &out[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        WSeries::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WSeries::new(self.coeffs.iter().map(|s| s.scale(c)).collect())
    }

    fn check_unit_constant(&self, want_one: bool) -> Result<()> {
        let c = self.coeffs[0].constant_term();
        let ok = if want_one { c.is_one() } else { c.is_zero() };
        if ok {
            Ok(())
        } else {
            Err(Error::BadConstantTerm(c.clone()))
        }
    }

    /// Logarithm in the `(w, q)`-bigraded ring; the `(w^0, q^0)` coefficient must be 1.
    pub fn log(&self) -> Result<Self> {
        self.check_unit_constant(true)?;
        let w = self.w_truncation();
        let f0_inv = self.coeffs[0].inverse()?;
        let mut out = vec![self.coeffs[0].log()?];
        // k F_k = sum_{j=1}^{k} j l_j F_{k-j}
        for k in 1..=w {
            let mut acc = self.coeffs[k].scale(&int(k as i64));
            for j in 1..k {
                acc = &acc - &(&out[j] * &self.coeffs[k - j]).scale(&int(j as i64));
            }
            out.push((&acc * &f0_inv).scale(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(WSeries::new(out))
    }

    /// Exponential; the `(w^0, q^0)` coefficient must be 0.
    pub fn exp(&self) -> Result<Self> {
        self.check_unit_constant(false)?;
        let w = self.w_truncation();
        let mut out = vec![self.coeffs[0].exp()?];
        for k in 1..=w {
            let mut acc = QSeries::zero(self.q_truncation());
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out[k - j]).scale(&int(j as i64));
            }
            out.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        Ok(WSeries::new(out))
    }
}

/// Taylor coefficients at `w = 0` of `num(w)/den(w)` up to `w^order`; `den(0) != 0`.
pub fn taylor_rational(num: &[Rational], den: &[Rational], order: usize) -> Result<Vec<Rational>> {
    let d0 = den.first().cloned().unwrap_or_else(Rational::zero);
    if d0.is_zero() {
        return Err(Error::DivByNonUnit);
    }
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(den.len().saturating_sub(1)) {
            acc -= &den[j] * &out[k - j];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}
