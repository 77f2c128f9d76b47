//! Exact checks of the residue-of-a-product expansion and three binomial sum identities.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{big, binomial, factorial, int, Rational};
use crate::report::IdentityReport;
use crate::residue::RatFunc;

/// `[λ^j]` at 0 of a function holomorphic there.
fn taylor(f: &RatFunc, j: usize) -> Rational {
    f.taylor_coeff_at_zero(j)
        .expect("holomorphic at 0 by construction")
}

/// Residue at 0 of `prod f_e` against the sum over nonempty `E₊ ⊂ E` of
/// `prod_{E₊} Res f_e · [λ^{|E₊|-1}] prod_{E \ E₊} (f_e - Res f_e / λ)`.
///
/// Also checks the intermediate form `[λ^{|E|-1}] prod λ f_e`.
pub fn check_product_residue(fs: &[RatFunc]) -> Result<IdentityReport> {
    for (index, f) in fs.iter().enumerate() {
        let order = f.pole_order_at_zero();
        if order > 1 {
            return Err(Error::PoleTooHigh { index, order });
        }
    }
    let zero = Rational::zero();
    let product = fs.iter().fold(RatFunc::one(), |acc, f| &acc * f);
    let lhs = product.residue_at(&zero);

    let r: Vec<Rational> = fs.iter().map(|f| f.residue_at(&zero)).collect();
    let g: Vec<RatFunc> = fs
        .iter()
        .zip(&r)
        .map(|(f, re)| f - &RatFunc::monomial(re.clone(), -1))
        .collect();
    let mut rhs = Rational::zero();
    for mask in 1u32..(1u32 << fs.len()) {
        let size = mask.count_ones() as usize;
        let mut coeff = Rational::one();
        let mut rest = RatFunc::one();
        for e in 0..fs.len() {
            if mask & (1 << e) != 0 {
                coeff *= &r[e];
            } else {
                rest = &rest * &g[e];
            }
        }
        if !coeff.is_zero() {
            rhs += coeff * taylor(&rest, size - 1);
        }
    }

    let mut report = IdentityReport::new("residue of a product").param("functions", fs.len());
    report.check(0, &lhs, &rhs);
    if !fs.is_empty() {
        let h = fs
            .iter()
            .fold(RatFunc::one(), |acc, f| &acc * &f.mul_hbar_pow(1));
        report.check(1, &lhs, &taylor(&h, fs.len() - 1));
    }
    Ok(report)
}

/// Three binomial sums used in the regularizability proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinomialIdentity {
    /// `sum_{β_1+..+β_N=b} prod C(q_l, β_l) = C(q_1+..+q_N, b)`.
    Vandermonde { b: u64, qs: Vec<u64> },
    /// `sum_b (-1)^b C(q,b)/(a+b) = (a-1)! q!/(a+q)!`, `a >= 1`.
    AlternatingReciprocal { q: u64, a: u64 },
    /// `sum_b (-1)^b C(q,b) prod_{r=a-s+1}^{a} (r+b) = (-1)^q s! C(a, s-q)`.
    AlternatingFalling { q: u64, a: u64, s: u64 },
}

fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn fact(k: u64) -> Rational {
    big(factorial(k))
}

fn tuples_sum(b: u64, qs: &[u64]) -> Rational {
    match qs.split_first() {
        None => {
            if b == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        Some((&q, rest)) => (0..=b.min(q))
            .map(|beta| binomial(q as i64, beta as i64) * tuples_sum(b - beta, rest))
            .sum(),
    }
}

pub fn check_binomial_identity(kind: &BinomialIdentity) -> IdentityReport {
    let (name, lhs, rhs, report) = match kind {
        BinomialIdentity::Vandermonde { b, qs } => {
            let total: u64 = qs.iter().sum();
            let qs_text = qs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            (
                "binomial convolution",
                tuples_sum(*b, qs),
                binomial(total as i64, *b as i64),
                IdentityReport::new("").param("b", b).param("qs", qs_text),
            )
        }
        BinomialIdentity::AlternatingReciprocal { q, a } => {
            assert!(*a >= 1, "the reciprocal sum needs a >= 1");
            let lhs = (0..=*q)
                .map(|b| sign(b) * binomial(*q as i64, b as i64) / int((a + b) as i64))
                .sum();
            let rhs = fact(a - 1) * fact(*q) / fact(a + q);
            (
                "alternating reciprocal binomial sum",
                lhs,
                rhs,
                IdentityReport::new("").param("q", q).param("a", a),
            )
        }
        BinomialIdentity::AlternatingFalling { q, a, s } => {
            let (a_i, s_i) = (*a as i64, *s as i64);
            let lhs = (0..=*q)
                .map(|b| {
                    let prod: Rational = (a_i - s_i + 1..=a_i).map(|r| int(r + b as i64)).product();
                    sign(b) * binomial(*q as i64, b as i64) * prod
                })
                .sum();
            let rhs = sign(*q) * fact(*s) * binomial(a_i, s_i - *q as i64);
            (
                "alternating falling-product binomial sum",
                lhs,
                rhs,
                IdentityReport::new("")
                    .param("q", q)
                    .param("a", a)
                    .param("s", s),
            )
        }
    };
    let mut report = report;
    report.identity = name.to_string();
    report.check(0, &lhs, &rhs);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::residue::Poly;

    fn simple(r: i64, a: i64, b: i64) -> RatFunc {
        // r/λ + a + bλ
        RatFunc::new(Poly::from_ints(&[r, a, b]), Poly::from_ints(&[0, 1])).unwrap()
    }

    #[test]
    fn product_residue_small_cases() {
        let one = check_product_residue(&[simple(3, 5, 7)]).unwrap();
        assert!(one.pass);
        let two = check_product_residue(&[simple(2, 3, 5), simple(7, 11, 13)]).unwrap();
        assert!(two.pass);
        // direct expansion: r1 a2 + r2 a1
        let p = &simple(2, 3, 5) * &simple(7, 11, 13);
        assert_eq!(p.residue_at(&int(0)), int(2 * 11 + 7 * 3));
        assert!(check_product_residue(&[]).unwrap().pass);
        let double = RatFunc::monomial(int(1), -2);
        assert_eq!(
            check_product_residue(&[simple(1, 1, 1), double]).unwrap_err(),
            Error::PoleTooHigh { index: 1, order: 2 }
        );
    }

    #[test]
    fn binomial_examples() {
        let r = check_binomial_identity(&BinomialIdentity::AlternatingReciprocal { q: 0, a: 5 });
        assert!(r.pass);
        let r = check_binomial_identity(&BinomialIdentity::AlternatingReciprocal { q: 1, a: 1 });
        assert!(r.pass);
        assert_eq!(int(1) - frac(1, 2), frac(1, 2));
        let r = check_binomial_identity(&BinomialIdentity::AlternatingFalling { q: 1, a: 2, s: 1 });
        assert!(r.pass, "{r}");
        assert!(
            check_binomial_identity(&BinomialIdentity::Vandermonde {
                b: 3,
                qs: vec![2, 4, 1]
            })
            .pass
        );
    }
}
