//! Truncated power series in `q = e^t` with exact rational coefficients.
//!
//! A [`QSeries`] stores every coefficient of degree `0..=D`, where `D` is the
//! inclusive truncation. Binary operations truncate at the smaller of the two
//! operand truncations; coefficients past the truncation are unknown, not zero.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Series with the given coefficients; the truncation is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a QSeries needs at least the constant term"
        );
        QSeries { coeffs }
    }

    pub fn from_fn(truncation: usize, f: impl FnMut(usize) -> Rational) -> Self {
        QSeries {
            coeffs: (0..=truncation).map(f).collect(),
        }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::from_fn(truncation, |_| Rational::zero())
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(Rational::one(), truncation)
    }

    pub fn constant(c: Rational, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = c;
        s
    }

    /// `c q^k`, truncated at `truncation` (zero when `k` exceeds it).
    pub fn monomial(c: Rational, k: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if k <= truncation {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series of `1 - c q`.
    pub fn one_minus(c: Rational, truncation: usize) -> Self {
        let mut s = Self::one(truncation);
        if truncation >= 1 {
            s.coeffs[1] = -c;
        }
        s
    }

    /// Inclusive degree bound `D`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Result<&Rational> {
        self.coeffs.get(degree).ok_or(Error::OutOfRange {
            degree,
            truncation: self.truncation(),
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Restrict to a smaller truncation; asking for more than is known is an error.
    pub fn truncate(&self, truncation: usize) -> Result<Self> {
        if truncation > self.truncation() {
            return Err(Error::TruncationMismatch {
                requested: truncation,
                available: self.truncation(),
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=truncation].to_vec(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^k`, keeping the truncation.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.truncation();
        Self::from_fn(d, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                Rational::zero()
            }
        })
    }

    fn common(&self, other: &Self) -> usize {
        self.truncation().min(other.truncation())
    }

    pub fn add_series(&self, other: &Self) -> Self {
        let d = self.common(other);
        Self::from_fn(d, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub_series(&self, other: &Self) -> Self {
        let d = self.common(other);
        Self::from_fn(d, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    /// Cauchy product.
    pub fn mul_series(&self, other: &Self) -> Self {
        let d = self.common(other);
        let mut out = vec![Rational::zero(); d + 1];
        for (i, a) in self.coeffs[..=d].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::DivByNonUnit);
        }
        let inv0 = a0.recip();
        let d = self.truncation();
        let mut out: Vec<Rational> = Vec::with_capacity(d + 1);
        out.push(inv0.clone());
        for k in 1..=d {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn div_series(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_series(&other.inverse()?))
    }

    /// `d/dt = q d/dq`: the `q^d` coefficient is scaled by `d`.
    pub fn derivative(&self) -> Self {
        Self::from_fn(self.truncation(), |i| &self.coeffs[i] * int(i as i64))
    }

    /// `exp(f)`; requires `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm(self.coeffs[0].clone()));
        }
        let d = self.truncation();
        let mut out: Vec<Rational> = Vec::with_capacity(d + 1);
        out.push(Rational::one());
        // k g_k = sum_{j=1}^{k} j f_j g_{k-j}
        for k in 1..=d {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j] * int(j as i64);
                }
            }
            out.push(acc / int(k as i64));
        }
        Ok(QSeries { coeffs: out })
    }

    /// `log(f)`; requires `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm(self.coeffs[0].clone()));
        }
        let d = self.truncation();
        let mut out: Vec<Rational> = Vec::with_capacity(d + 1);
        out.push(Rational::zero());
        // k f_k = sum_{j=1}^{k} j l_j f_{k-j}
        for k in 1..=d {
            let mut acc = &self.coeffs[k] * int(k as i64);
            for j in 1..k {
                if !out[j].is_zero() {
                    acc -= &out[j] * &self.coeffs[k - j] * int(j as i64);
                }
            }
            out.push(acc / int(k as i64));
        }
        Ok(QSeries { coeffs: out })
    }

    /// `f^r = exp(r log f)`; requires `f(0) = 1`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        self.log()?.scale(r).exp()
    }

    /// `f(h(q))` for an inner series with `h(0) = 0`, by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm(inner.coeffs[0].clone()));
        }
        let d = self.common(inner);
        let inner = inner.truncate(d)?;
        let mut acc = QSeries::zero(d);
        for c in self.coeffs[..=d].iter().rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Rewrite `F(q)` as a series in `Q = q exp(g(q))`.
    ///
    /// `g` is the shift `T - t` of a mirror map and must vanish at `q = 0`. The
    /// inverse `q(Q)` is found by the fixed point `q <- Q exp(-g(q))`, which gains
    /// at least one correct degree per pass.
    pub fn change_variable_exp_t(&self, g: &Self) -> Result<Self> {
        let q_of_big_q = invert_exp_shift(g)?;
        let d = self.common(g);
        self.truncate(d)?.compose(&q_of_big_q)
    }
}

/// Compositional inverse of `Q = q exp(g(q))`, returned as `q(Q)`.
pub fn invert_exp_shift(g: &QSeries) -> Result<QSeries> {
    if !g.coeffs[0].is_zero() {
        return Err(Error::BadMirrorMap(g.coeffs[0].clone()));
    }
    let d = g.truncation();
    let big_q = QSeries::monomial(Rational::one(), 1, d);
    let mut q = big_q.clone();
    for _ in 0..d {
        let next = big_q.mul_series(&g.compose(&q)?.neg_series().exp()?);
        if next == q {
            break;
        }
        q = next;
    }
    Ok(q)
}

/// The shift `ĝ` of the inverse change of variables: `q = Q exp(ĝ(Q))`.
///
/// Applying [`QSeries::change_variable_exp_t`] with `g` and then with `ĝ`
/// returns the original series.
pub fn inverse_shift(g: &QSeries) -> Result<QSeries> {
    // Q = q e^{g(q)} and q = Q e^{ĝ(Q)} force ĝ(Q) = -g(q(Q)).
    let q = invert_exp_shift(g)?;
    Ok(g.compose(&q)?.neg_series())
}

impl QSeries {
    pub fn neg_series(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.add_series(rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.sub_series(rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.neg_series()
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.truncation() + 1)
    }
}
