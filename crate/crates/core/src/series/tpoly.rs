//! Polynomials in the formal variable `t` whose coefficients are q-series.
//!
//! `q = e^t`, so `d/dt` acts on `c(q) t^k` by the product rule:
//! `k c(q) t^(k-1) + (q dc/dq) t^k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::QSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly {
    /// Index = power of `t`. Never empty; trailing zero coefficients are trimmed
    /// down to the single-entry zero polynomial.
    coeffs: Vec<QSeries>,
}

impl TPoly {
    pub fn new(coeffs: Vec<QSeries>) -> Self {
        assert!(!coeffs.is_empty(), "a TPoly needs at least one coefficient");
        let d = coeffs.iter().map(QSeries::truncation).min().unwrap();
        let coeffs = coeffs.into_iter().map(|c| c.truncate(d).unwrap()).collect();
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_series(c: QSeries) -> Self {
        TPoly::new(vec![c])
    }

    pub fn zero(truncation: usize) -> Self {
        TPoly::from_series(QSeries::zero(truncation))
    }

    /// The variable `t` itself.
    pub fn t(truncation: usize) -> Self {
        TPoly::new(vec![QSeries::zero(truncation), QSeries::one(truncation)])
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs[0].truncation()
    }

    /// Degree in `t` (the zero polynomial reports 0).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> QSeries {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.truncation()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    fn zip(&self, other: &Self, f: impl Fn(&QSeries, &QSeries) -> QSeries) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        TPoly::new((0..n).map(|k| f(&self.coeff(k), &other.coeff(k))).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.truncation().min(other.truncation());
        let mut out = vec![QSeries::zero(d); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TPoly::new(self.coeffs.iter().map(|s| s.scale(c)).collect())
    }

    pub fn mul_series(&self, s: &QSeries) -> Self {
        TPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Division by a t-free unit series.
    pub fn div_series(&self, s: &QSeries) -> Result<Self> {
        let inv = s.inverse()?;
        Ok(self.mul_series(&inv))
    }

    pub fn d_dt(&self) -> Self {
        let d = self.truncation();
        let mut out = vec![QSeries::zero(d); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] = &out[k] + &c.derivative();
            if k > 0 {
                out[k - 1] = &out[k - 1] + &c.scale(&int(k as i64));
            }
        }
        TPoly::new(out)
    }

    pub fn is_t_free(&self) -> bool {
        self.t_free().is_ok()
    }

    /// The `t^0` part, provided every positive power of `t` vanishes to truncation.
    pub fn t_free(&self) -> Result<QSeries> {
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if let Some((d, v)) = c.coeffs().iter().enumerate().find(|(_, v)| !v.is_zero()) {
                return Err(Error::NotTFree {
                    t_power: k,
                    q_degree: d,
                    value: v.clone(),
                });
            }
        }
        Ok(self.coeffs[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QSeries {
        QSeries::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn product_rule() {
        // d/dt (t q) = q + t q
        let tq = TPoly::new(vec![q(&[0, 0, 0]), q(&[0, 1, 0])]);
        assert_eq!(tq.d_dt(), TPoly::new(vec![q(&[0, 1, 0]), q(&[0, 1, 0])]));
        // d/dt t^2 = 2t
        let t = TPoly::t(2);
        assert_eq!(t.mul(&t).d_dt(), t.scale(&int(2)));
    }

    #[test]
    fn t_free_extraction() {
        let p = TPoly::new(vec![q(&[1, 1]), q(&[0, 0])]);
        assert!(p.is_t_free());
        assert_eq!(p.t_free().unwrap(), q(&[1, 1]));
        assert_eq!(p.degree(), 0);
        let bad = TPoly::new(vec![q(&[1, 1]), q(&[0, 3])]);
        assert_eq!(
            bad.t_free(),
            Err(Error::NotTFree {
                t_power: 1,
                q_degree: 1,
                value: int(3)
            })
        );
    }

    #[test]
    fn zero_is_canonical() {
        let t = TPoly::t(3);
        assert!(t.sub(&t).is_zero());
        assert_eq!(t.sub(&t), TPoly::zero(3));
    }
}
