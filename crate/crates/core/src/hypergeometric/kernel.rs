//! The kernel `F(w, q) = sum_d q^d prod_{r=1}^{nd} (nw + r) / prod_{r=1}^{d} ((w + r)^n - w^n)`.

use std::sync::Arc;

use num_traits::Zero;

use crate::hypergeometric::{Chain, HbarQSeries, HyperSpec};
use crate::rational::{binomial, int, powi, Rational};
use crate::residue::Poly;
use crate::series::{taylor_rational, QSeries, WSeries};

fn mul_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `F(w, q)` to `w^W` and `q^D`.
pub fn build_f(spec: &HyperSpec) -> WSeries {
    let n = spec.n as i64;
    let len = spec.w + 1;
    let mut num = vec![Rational::zero(); len];
    num[0] = int(1);
    let mut den = num.clone();
    // columns[k][d] = [w^k q^d] F
    let mut columns = vec![vec![Rational::zero(); spec.d + 1]; len];
    for d in 0..=spec.d as i64 {
        if d > 0 {
            for r in n * (d - 1) + 1..=n * d {
                num = mul_trunc(&num, &[int(r), int(n)], len);
            }
            // (w + d)^n - w^n = sum_{k<n} C(n,k) d^{n-k} w^k
            let factor: Vec<Rational> = (0..n)
                .map(|k| binomial(n, k) * powi(&int(d), n - k))
                .collect();
            den = mul_trunc(&den, &factor, len);
        }
        let t = taylor_rational(&num, &den, spec.w).expect("constant term (d!)^n is nonzero");
        for (k, c) in t.into_iter().enumerate() {
            columns[k][d as usize] = c;
        }
    }
    WSeries::new(columns.into_iter().map(QSeries::new).collect())
}

/// `(1 + rℏ)^n - 1`.
pub fn kernel_denominator_factor(n: u32, r: i64) -> Poly {
    &Poly::binomial_power(&int(1), n).scale_variable(r) - &Poly::one()
}

/// `F(1/ℏ, q) = sum_d q^d prod_{r=1}^{nd} (n + rℏ) / prod_{r=1}^{d} ((1 + rℏ)^n - 1)`.
pub fn build_f_hbar(spec: &HyperSpec) -> HbarQSeries {
    let n = spec.n as i64;
    let factors: Vec<Poly> = (1..=spec.d as i64)
        .map(|r| kernel_denominator_factor(spec.n, r))
        .collect();
    let chain = Chain::from_factors(&factors);
    let mut nums = vec![Poly::one()];
    for d in 1..=spec.d as i64 {
        let mut p = nums.last().unwrap().clone();
        for r in n * (d - 1) + 1..=n * d {
            p = &p * &Poly::from_ints(&[n, r]);
        }
        nums.push(p);
    }
    HbarQSeries::new(nums, Arc::clone(&chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::factorial;
    use num_bigint::BigInt;

    fn spec(n: u32, d: usize) -> HyperSpec {
        HyperSpec::new(n, d).unwrap()
    }

    #[test]
    fn quintic_constant_terms() {
        let f = build_f(&spec(5, 3));
        let c0 = f.coeff(0).unwrap();
        // oracle: (5d)!/(d!)^5
        for d in 0..=3u64 {
            let expect = factorial(5 * d) / factorial(d).pow(5);
            assert_eq!(c0.coeffs()[d as usize], Rational::from_integer(expect));
        }
        assert_eq!(c0.coeffs()[1], int(120));
        assert_eq!(c0.coeffs()[2], int(113400));
    }

    #[test]
    fn w_powers_at_q0_vanish() {
        let f = build_f(&spec(4, 2));
        assert_eq!(f.coeff(0).unwrap().coeffs()[0], int(1));
        for k in 1..=f.w_truncation() {
            assert!(f.coeff(k).unwrap().coeffs()[0].is_zero());
        }
    }

    #[test]
    fn n2_central_binomials() {
        let f = build_f(&spec(2, 5));
        for d in 0..=5i64 {
            assert_eq!(f.coeff(0).unwrap().coeffs()[d as usize], binomial(2 * d, d));
        }
        assert_eq!(f.coeff(0).unwrap().coeffs()[2], int(6));
    }

    #[test]
    fn hbar_kernel_matches_w_kernel() {
        // F(1/ℏ) at ℏ = 1/2 equals F(w) at w = 2 degree by degree; compare the
        // ℏ-free leading data instead: the q^1 coefficient is prod (n + rℏ)/((1+ℏ)^n - 1)
        let s = spec(3, 2);
        let fh = build_f_hbar(&s);
        let x = Rational::new(BigInt::from(1), BigInt::from(2));
        let w = x.recip();
        for d in 0..=2i64 {
            let mut num = int(1);
            for r in 1..=3 * d {
                num *= int(3) * &w + int(r);
            }
            let mut den = int(1);
            for r in 1..=d {
                den *= powi(&(&w + int(r)), 3) - powi(&w, 3);
            }
            assert_eq!(fh.value_at(d as usize, &x).unwrap(), num / den);
        }
    }
}
