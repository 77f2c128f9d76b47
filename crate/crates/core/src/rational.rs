//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Its textual form is `p/q`, or just `p` when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Canonical `p/q` string.
pub fn to_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)` for possibly negative `n`; zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    if n >= 0 && k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
    }
    Rational::new(acc, factorial(k as u64))
}

/// `r^e` for integer `e` (negative exponents invert).
pub fn powi(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Human-readable decimal approximation, for text output only.
pub fn approx(r: &Rational, digits: usize) -> String {
    let neg = r.is_negative();
    let r = r.abs();
    let int_part = r.numer() / r.denom();
    let mut rem = r.numer() % r.denom();
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    s.push('.');
    for _ in 0..digits {
        rem *= 10;
        s.push_str(&(&rem / r.denom()).to_string());
        rem = &rem % r.denom();
    }
    s
}

/// Sum of positive divisors.
pub fn sigma(r: u64) -> u64 {
    (1..=r).filter(|k| r.is_multiple_of(*k)).sum()
}

pub fn divisors(r: u64) -> impl Iterator<Item = u64> {
    (1..=r).filter(move |k| r.is_multiple_of(*k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_is_canonical() {
        assert_eq!(to_string(&frac(6, 4)), "3/2");
        assert_eq!(to_string(&frac(-8, 4)), "-2");
        assert_eq!(to_string(&frac(3, -9)), "-1/3");
        assert_eq!(parse("4876875/8"), Some(frac(4876875, 8)));
        assert_eq!(parse(" -7 "), Some(int(-7)));
        assert_eq!(parse("1/0x"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(1, 2), int(0));
        assert_eq!(binomial(-1, 3), int(-1));
        assert_eq!(binomial(4, -1), int(0));
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(sigma(1), 1);
        assert_eq!(sigma(2), 3);
        assert_eq!(sigma(4), 7);
        assert_eq!(sigma(6), 12);
    }

    #[test]
    fn decimal_approximation() {
        assert_eq!(approx(&frac(2875, 12), 3), "239.583");
        assert_eq!(approx(&frac(-1, 3), 2), "-0.33");
    }
}
