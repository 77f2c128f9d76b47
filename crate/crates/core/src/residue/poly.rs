//! Dense univariate polynomials over ℚ, lowest degree first.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{binomial, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `x - a`.
    pub fn linear_root(a: Rational) -> Self {
        Poly::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplicity of the root 0; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Divide by `x^k`, dropping lower terms.
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(a + s)` as a polynomial in `s`.
    pub fn taylor_shift(&self, a: &Rational) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let n = c.len();
        // repeated synthetic division
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Poly::new(c)
    }

    /// `p(c x)`.
    pub fn scale_variable(&self, c: i64) -> Self {
        let c = int(c);
        let mut pw = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &pw);
            pw *= &c;
        }
        Poly::new(v)
    }

    /// `x^n p(1/x)`, where `n = deg p`.
    pub fn reverse(&self) -> Self {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                let t = &c * di;
                r[k + i] -= t;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Exact division; panics in debug builds if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || other.degree() == Some(0) || coprime_mod_p(self, other) {
            return Poly::one();
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// `(c + x)^n` expanded.
    pub fn binomial_power(c: &Rational, n: u32) -> Self {
        Poly::new(
            (0..=n as i64)
                .map(|k| binomial(n as i64, k) * crate::rational::powi(c, n as i64 - k))
                .collect(),
        )
    }
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_int(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().unwrap()
}

fn reduce(r: &Rational) -> Option<u64> {
    let d = reduce_int(r.denom());
    if d == 0 {
        return None;
    }
    let n = reduce_int(r.numer());
    Some(mulmod(n, powmod(d, P - 2)))
}

fn reduce_poly(p: &Poly) -> Option<Vec<u64>> {
    let v: Option<Vec<u64>> = p.coeffs.iter().map(reduce).collect();
    let v = v?;
    // the reduction must keep the degree
    if *v.last()? == 0 {
        return None;
    }
    Some(v)
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `true` means the inputs are certainly coprime over ℚ; `false` is inconclusive.
fn coprime_mod_p(a: &Poly, b: &Poly) -> bool {
    let (Some(mut x), Some(mut y)) = (reduce_poly(a), reduce_poly(b)) else {
        return false;
    };
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let inv = powmod(*y.last().unwrap(), P - 2);
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv);
            let off = x.len() - y.len();
            for (i, yi) in y.iter().enumerate() {
                x[off + i] = (x[off + i] + P - mulmod(c, *yi)) % P;
            }
            trim_mod(&mut x);
        }
        if x.is_empty() {
            return false;
        }
        std::mem::swap(&mut x, &mut y);
    }
    y.len() == 1
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "h")?,
                _ => write!(f, "h^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Poly::from_ints(&[2, 2])), b);
        assert_eq!(a.gcd(&Poly::from_ints(&[2, 1])), Poly::one());
        let c = &Poly::from_ints(&[3, 7, 1]) * &Poly::from_ints(&[1, 0, 5]);
        let d = &Poly::from_ints(&[3, 7, 1]) * &Poly::from_ints(&[-4, 1]);
        assert_eq!(c.gcd(&d), Poly::from_ints(&[3, 7, 1]));
    }

    #[test]
    fn shifts_and_evaluation() {
        let p = Poly::from_ints(&[1, 2, 3]);
        let s = p.taylor_shift(&int(2));
        for x in -3..4 {
            assert_eq!(s.eval(&int(x)), p.eval(&int(x + 2)));
        }
        assert_eq!(p.reverse(), Poly::from_ints(&[3, 2, 1]));
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6]));
        assert_eq!(p.eval(&frac(1, 2)), frac(11, 4));
        assert_eq!(
            Poly::binomial_power(&int(1), 2),
            Poly::from_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn modular_precheck_is_conservative() {
        let a = Poly::from_ints(&[-2, 0, 1]);
        let b = Poly::from_ints(&[-3, 0, 1]);
        assert!(coprime_mod_p(&a, &b));
        assert!(!coprime_mod_p(&a, &a));
    }
}
