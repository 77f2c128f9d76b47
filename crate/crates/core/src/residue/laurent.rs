//! Truncated Laurent expansions in ℏ at ℏ = 0.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::ring::Coefficient;

/// `sum_{k >= low} c_k ℏ^k`, known through `ℏ^high`; `high = None` means exact.
///
/// Every coefficient below `low` is zero, so `low` is a bound on the valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLaurent {
    low: i64,
    coeffs: Vec<Rational>,
    high: Option<i64>,
}

impl HLaurent {
    fn build(low: i64, mut coeffs: Vec<Rational>, high: Option<i64>) -> Self {
        if let Some(h) = high {
            let keep = (h - low + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(z) => HLaurent {
                low: low + z as i64,
                coeffs: coeffs.split_off(z),
                high,
            },
            None => HLaurent {
                low: high.map_or(0, |h| h.max(low - 1) + 1),
                coeffs: Vec::new(),
                high,
            },
        }
    }

    /// An exact Laurent polynomial with lowest power `low`.
    pub fn exact(low: i64, coeffs: Vec<Rational>) -> Self {
        HLaurent::build(low, coeffs, None)
    }

    /// Coefficients of `ℏ^low ..` known through `ℏ^high`.
    pub fn with_precision(low: i64, coeffs: Vec<Rational>, high: i64) -> Self {
        HLaurent::build(low, coeffs, Some(high))
    }

    pub fn zero() -> Self {
        HLaurent::exact(0, Vec::new())
    }

    pub fn one() -> Self {
        HLaurent::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        HLaurent::exact(0, vec![c])
    }

    /// `c ℏ^k`, exact.
    pub fn monomial(c: Rational, k: i64) -> Self {
        HLaurent::exact(k, vec![c])
    }

    /// Valuation bound: no nonzero coefficient sits below this power.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest known power; `None` when exact.
    pub fn high(&self) -> Option<i64> {
        self.high
    }

    /// Stored coefficients, starting at `ℏ^low`.
    pub fn stored(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_exact(&self) -> bool {
        self.high.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.high.is_none() && self.coeffs.is_empty()
    }

    /// Order of the pole at 0 (0 when regular), as far as it is known.
    pub fn pole_order(&self) -> usize {
        if self.coeffs.is_empty() {
            0
        } else {
            (-self.low).max(0) as usize
        }
    }

    pub fn coeff(&self, k: i64) -> Result<Rational> {
        if let Some(h) = self.high {
            if k > h {
                return Err(Error::WindowTooSmall {
                    needed: k,
                    low: self.low,
                    high: h,
                });
            }
        }
        if k < self.low {
            return Ok(Rational::zero());
        }
        Ok(self
            .coeffs
            .get((k - self.low) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Coefficient of `ℏ^{-1}`.
    pub fn residue(&self) -> Result<Rational> {
        self.coeff(-1)
    }

    /// Whether every negative power vanishes.
    pub fn is_regular(&self) -> bool {
        self.coeffs.is_empty() || self.low >= 0
    }

    pub fn shift(&self, k: i64) -> Self {
        HLaurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
            high: self.high.map(|h| h + k),
        }
    }

    /// Forget everything above `ℏ^high`.
    pub fn truncate(&self, high: i64) -> Self {
        let h = self.high.map_or(high, |s| s.min(high));
        HLaurent::build(self.low, self.coeffs.clone(), Some(h))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        HLaurent::build(
            self.low,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.high,
        )
    }

    fn stored_top(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let high = match (self.high, other.high) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let low = self.low.min(other.low);
        let mut top = self.stored_top().max(other.stored_top());
        if let Some(h) = high {
            top = top.min(h);
        }
        if top < low {
            return HLaurent::build(low, Vec::new(), high);
        }
        let v = (low..=top)
            .map(|k| {
                let a = self.get(k);
                let b = other.get(k);
                if sign {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        HLaurent::build(low, v, high)
    }

    fn get(&self, k: i64) -> Rational {
        if k < self.low {
            return Rational::zero();
        }
        self.coeffs
            .get((k - self.low) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return HLaurent::zero();
        }
        let low = self.low + other.low;
        let high = match (self.high, other.high) {
            (None, None) => None,
            (Some(a), None) => Some(a + other.low),
            (None, Some(b)) => Some(b + self.low),
            (Some(a), Some(b)) => Some((a + other.low).min(b + self.low)),
        };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return HLaurent::build(low, Vec::new(), high);
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(h) = high {
            len = len.min((h - low + 1).max(0) as usize);
        }
        let mut v = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                v[i + j] += a * b;
            }
        }
        HLaurent::build(low, v, high)
    }
}

impl Coefficient for HLaurent {
    fn zero_like(&self) -> Self {
        HLaurent::zero()
    }
    fn one_like(&self) -> Self {
        HLaurent::one()
    }
    fn add_c(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_c(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_c(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale_c(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

impl std::fmt::Display for HLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match self.low + i as i64 {
                0 => format!("{c}"),
                1 => format!("({c})h"),
                k => format!("({c})h^{k}"),
            })
            .collect();
        if let Some(h) = self.high {
            terms.push(format!("O(h^{})", h + 1));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn precision_tracks_valuation() {
        // (ℏ^-1 + 1 + O(ℏ^2)) * (ℏ^-1 + O(ℏ))
        let a = HLaurent::with_precision(-1, vec![int(1), int(1), int(0), int(0)], 1);
        let b = HLaurent::with_precision(-1, vec![int(1), int(0)], 0);
        let p = a.mul(&b);
        assert_eq!(p.low(), -2);
        assert_eq!(p.high(), Some(-1));
        assert_eq!(p.coeff(-2).unwrap(), int(1));
        assert_eq!(p.coeff(-1).unwrap(), int(1));
        assert!(p.coeff(0).is_err());
    }

    #[test]
    fn exact_polynomials_keep_full_precision() {
        let inv = HLaurent::monomial(int(2), -3);
        let a = HLaurent::with_precision(0, vec![int(1), int(1), int(1), int(1), int(1)], 4);
        let p = inv.mul(&a);
        assert_eq!(p.high(), Some(1));
        assert_eq!(p.residue().unwrap(), int(2));
        assert!(HLaurent::zero().mul(&a).is_exact_zero());
    }

    #[test]
    fn leading_zeros_raise_the_bound() {
        let a = HLaurent::with_precision(-2, vec![int(0), int(0), int(3)], 3);
        assert_eq!(a.low(), 0);
        assert!(a.is_regular());
        let z = HLaurent::with_precision(-2, vec![int(0)], 3);
        assert_eq!(z.low(), 4);
        assert_eq!(z.mul(&HLaurent::monomial(int(1), -5)).high(), Some(-2));
    }
}
