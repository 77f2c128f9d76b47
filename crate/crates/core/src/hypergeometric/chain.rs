//! q-series whose coefficients are rational functions of ℏ with nested denominators.
//!
//! The q^d coefficient is `num_d / den_d` with `den_j | den_d` for `j <= d`. Sums and
//! products then stay over the known denominator `den_d`, so no polynomial gcd is needed
//! until a reduced `RatFunc` is requested.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{big, factorial, Rational};
use crate::residue::{laurent_expansion, HLaurent, Poly, RatFunc, USeriesRF};
use crate::series::QSeries;

#[derive(Debug)]
pub struct Chain {
    dens: Vec<Poly>,
    /// `ratio[d][j] = den_d / den_j`.
    ratio: Vec<Vec<Poly>>,
}

impl Chain {
    /// Denominators `den_d = prod_{r<=d} factors[r-1]`, `den_0 = 1`.
    pub fn from_factors(factors: &[Poly]) -> Arc<Self> {
        let mut dens = vec![Poly::one()];
        for f in factors {
            let next = dens.last().unwrap() * f;
            dens.push(next);
        }
        let ratio = (0..dens.len())
            .map(|d| {
                let mut row = vec![Poly::one(); d + 1];
                for j in (0..d).rev() {
                    row[j] = &row[j + 1] * &factors[j];
                }
                row
            })
            .collect();
        Arc::new(Chain { dens, ratio })
    }

    /// The chain `ℏ^d den_d`.
    fn hbar_twisted(&self) -> Arc<Self> {
        let dens = self
            .dens
            .iter()
            .enumerate()
            .map(|(d, p)| p.shift_up(d))
            .collect();
        let ratio = self
            .ratio
            .iter()
            .enumerate()
            .map(|(d, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, p)| p.shift_up(d - j))
                    .collect()
            })
            .collect();
        Arc::new(Chain { dens, ratio })
    }

    pub fn len(&self) -> usize {
        self.dens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dens.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct HbarQSeries {
    nums: Vec<Poly>,
    chain: Arc<Chain>,
}

impl HbarQSeries {
    pub fn new(nums: Vec<Poly>, chain: Arc<Chain>) -> Self {
        assert!(nums.len() <= chain.len(), "denominator chain too short");
        HbarQSeries { nums, chain }
    }

    pub fn truncation(&self) -> usize {
        self.nums.len() - 1
    }

    pub fn numerator(&self, d: usize) -> &Poly {
        &self.nums[d]
    }

    pub fn denominator(&self, d: usize) -> &Poly {
        &self.chain.dens[d]
    }

    /// The q^d coefficient, reduced.
    pub fn ratfunc(&self, d: usize) -> RatFunc {
        RatFunc::new(self.nums[d].clone(), self.chain.dens[d].clone())
            .expect("chain denominators are nonzero")
    }

    pub fn to_useries(&self) -> USeriesRF {
        USeriesRF::new((0..self.nums.len()).map(|d| self.ratfunc(d)).collect())
    }

    /// Order of vanishing at ℏ = 0 of the q^d coefficient (`None` if it is zero).
    pub fn order_at_zero(&self, d: usize) -> Option<i64> {
        let vn = self.nums[d].valuation()? as i64;
        Some(vn - self.chain.dens[d].valuation().unwrap() as i64)
    }

    pub fn pole_order_at_zero(&self, d: usize) -> usize {
        self.order_at_zero(d).map_or(0, |o| (-o).max(0) as usize)
    }

    /// Expansion of the q^d coefficient at ℏ = a, through `(ℏ-a)^high`.
    pub fn expand_at(&self, d: usize, a: &Rational, high: i64) -> HLaurent {
        laurent_expansion(&self.nums[d], &self.chain.dens[d], a, high)
    }

    pub fn expand_at_zero(&self, d: usize, high: i64) -> HLaurent {
        self.expand_at(d, &Rational::zero(), high)
    }

    /// Value of the q^d coefficient at ℏ = a (after cancelling common factors).
    pub fn value_at(&self, d: usize, a: &Rational) -> Result<Rational> {
        let l = self.expand_at(d, a, 0);
        if !l.is_regular() {
            return Err(Error::PoleAt(a.clone()));
        }
        l.coeff(0)
    }

    /// Values at ℏ = a of every coefficient, as a q-series.
    pub fn values_at(&self, a: &Rational) -> Result<QSeries> {
        let v: Result<Vec<Rational>> = (0..self.nums.len()).map(|d| self.value_at(d, a)).collect();
        Ok(QSeries::new(v?))
    }

    /// `[ℏ^k]` at 0 of every coefficient, as a q-series.
    pub fn hbar_coefficient(&self, k: i64) -> QSeries {
        QSeries::new(
            (0..self.nums.len())
                .map(|d| {
                    self.expand_at_zero(d, k)
                        .coeff(k)
                        .expect("window reaches k")
                })
                .collect(),
        )
    }

    /// Multiply by a series with ℏ-free coefficients.
    pub fn mul_series(&self, c: &QSeries) -> Self {
        let dmax = self.truncation().min(c.truncation());
        let nums = (0..=dmax)
            .map(|d| {
                let mut acc = Poly::zero();
                for j in 0..=d {
                    let cj = &c.coeffs()[d - j];
                    if cj.is_zero() || self.nums[j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.nums[j] * &self.chain.ratio[d][j]).scale(cj);
                }
                acc
            })
            .collect();
        HbarQSeries::new(nums, self.chain.clone())
    }

    /// `(1 + ℏ q d/dq)` applied coefficientwise: the q^d coefficient gains `(1 + dℏ)`.
    pub fn one_plus_hbar_derivative(&self) -> Self {
        let nums = self
            .nums
            .iter()
            .enumerate()
            .map(|(d, p)| p * &Poly::from_ints(&[1, d as i64]))
            .collect();
        HbarQSeries::new(nums, self.chain.clone())
    }

    /// Multiply by `e^{-m(q)/ℏ}`, where `m` has no constant term.
    pub fn mul_exp_neg_over_hbar(&self, m: &QSeries) -> Result<Self> {
        if !m.constant_term().is_zero() {
            return Err(Error::BadConstantTerm(m.constant_term().clone()));
        }
        let dmax = self.truncation().min(m.truncation());
        // ℏ^j [q^j] e^{-m/ℏ} = sum_k [q^j](m^k) (-1)^k / k! ℏ^{j-k}
        let mut powers = vec![QSeries::one(dmax)];
        for k in 1..=dmax {
            let next = &powers[k - 1] * m;
            powers.push(next);
        }
        let p: Vec<Poly> = (0..=dmax)
            .map(|j| {
                let mut c = vec![Rational::zero(); j + 1];
                for (k, pw) in powers.iter().enumerate().take(j + 1) {
                    let sign = if k % 2 == 0 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    c[j - k] = &pw.coeffs()[j] * sign / big(factorial(k as u64));
                }
                Poly::new(c)
            })
            .collect();
        let chain = self.chain.hbar_twisted();
        let nums = (0..=dmax)
            .map(|d| {
                let mut acc = Poly::zero();
                for j in 0..=d {
                    if self.nums[j].is_zero() {
                        continue;
                    }
                    let term = &(&p[d - j] * &self.nums[j]) * &self.chain.ratio[d][j];
                    acc = &acc + &term.shift_up(j);
                }
                acc
            })
            .collect();
        Ok(HbarQSeries::new(nums, chain))
    }
}
