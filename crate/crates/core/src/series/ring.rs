//! Truncated power-series recurrences over any coefficient ring that is a ℚ-algebra.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub trait Coefficient: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_c(&self, other: &Self) -> Self;
    fn sub_c(&self, other: &Self) -> Self;
    fn mul_c(&self, other: &Self) -> Self;
    fn scale_c(&self, r: &Rational) -> Self;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add_c(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_c(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_c(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_c(&self, r: &Rational) -> Self {
        self * r
    }
}

impl Coefficient for crate::series::QSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.truncation())
    }
    fn one_like(&self) -> Self {
        Self::one(self.truncation())
    }
    fn add_c(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_c(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_c(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_c(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

fn recip(k: usize) -> Rational {
    Rational::new(1.into(), (k as i64).into())
}

/// Product truncated to the shorter input.
pub fn mul_trunc<C: Coefficient>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut acc = a[0].mul_c(&b[k]);
            for i in 1..=k {
                acc = acc.add_c(&a[i].mul_c(&b[k - i]));
            }
            acc
        })
        .collect()
}

/// `ln(1 + z)`; the constant term of `z` is taken to be zero.
pub fn log_one_plus<C: Coefficient>(z: &[C]) -> Vec<C> {
    let mut out: Vec<C> = Vec::with_capacity(z.len());
    if z.is_empty() {
        return out;
    }
    out.push(z[0].zero_like());
    for k in 1..z.len() {
        let mut acc = z[k].zero_like();
        for j in 1..k {
            acc = acc.add_c(
                &out[j]
                    .mul_c(&z[k - j])
                    .scale_c(&Rational::from_integer((j as i64).into())),
            );
        }
        out.push(z[k].sub_c(&acc.scale_c(&recip(k))));
    }
    out
}

/// `exp(x)`; the constant term of `x` is taken to be zero.
pub fn exp_series<C: Coefficient>(x: &[C]) -> Vec<C> {
    let mut out: Vec<C> = Vec::with_capacity(x.len());
    if x.is_empty() {
        return out;
    }
    out.push(x[0].one_like());
    for k in 1..x.len() {
        let mut acc = x[k].zero_like();
        for j in 1..=k {
            acc = acc.add_c(
                &x[j]
                    .mul_c(&out[k - j])
                    .scale_c(&Rational::from_integer((j as i64).into())),
            );
        }
        out.push(acc.scale_c(&recip(k)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn scalar_log_and_exp() {
        let z = vec![int(0), int(1), int(0), int(0)];
        assert_eq!(
            log_one_plus(&z),
            vec![int(0), int(1), frac(-1, 2), frac(1, 3)]
        );
        assert_eq!(exp_series(&z), vec![int(1), int(1), frac(1, 2), frac(1, 6)]);
        let l = log_one_plus(&[int(0), int(3), int(-2), int(7)]);
        let mut e = exp_series(&l);
        e[0] -= int(1);
        assert_eq!(e, vec![int(0), int(3), int(-2), int(7)]);
    }
}
