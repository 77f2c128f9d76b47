//! Reduced rational functions of one variable ℏ over ℚ.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::residue::{HLaurent, Poly};
use crate::series::ring::Coefficient;
use crate::series::taylor_rational;

/// `num/den` with `den` monic and `gcd(num, den) = 1`; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        RatFunc::normalize_lead(num, den)
    }

    fn normalize_lead(num: Poly, den: Poly) -> Self {
        let l = den.leading();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let li = l.recip();
            RatFunc {
                num: num.scale(&li),
                den: den.scale(&li),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    /// ℏ itself.
    pub fn hbar() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    /// `c ℏ^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(c, k as usize))
        } else {
            RatFunc {
                num: Poly::constant(c),
                den: Poly::monomial(Rational::one(), (-k) as usize),
            }
        }
    }

    /// An exact Laurent polynomial in ℏ.
    pub fn from_laurent(l: &HLaurent) -> Self {
        assert!(
            l.is_exact(),
            "only exact Laurent polynomials convert to rational functions"
        );
        let p = Poly::new(l.stored().to_vec());
        let low = l.low();
        if low >= 0 {
            RatFunc::from_poly(p.shift_up(low as usize))
        } else {
            RatFunc::reduce(p, Poly::monomial(Rational::one(), (-low) as usize))
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Multiply by ℏ^k.
    pub fn mul_hbar_pow(&self, k: i64) -> Self {
        self * &RatFunc::monomial(Rational::one(), k)
    }

    /// `val(num) - val(den)`: the order of vanishing at 0, negative at a pole.
    pub fn order_at_zero(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        Some(vn - self.den.valuation().unwrap() as i64)
    }

    pub fn pole_order_at_zero(&self) -> usize {
        self.order_at_zero().map_or(0, |o| (-o).max(0) as usize)
    }

    pub fn is_regular_at_zero(&self) -> bool {
        self.pole_order_at_zero() == 0
    }

    pub fn eval(&self, a: &Rational) -> Result<Rational> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(Error::PoleAt(a.clone()));
        }
        Ok(self.num.eval(a) / d)
    }

    /// Laurent expansion at `a` in `s = ℏ - a`, through `s^high`.
    pub fn laurent_at(&self, a: &Rational, high: i64) -> HLaurent {
        laurent_expansion(&self.num, &self.den, a, high)
    }

    /// Window `ℏ^{-l} .. ℏ^{k}` of the expansion at 0.
    pub fn laurent_at_zero(&self, l: i64, k: i64) -> Result<HLaurent> {
        let pole = self.pole_order_at_zero() as i64;
        if l < pole {
            return Err(Error::WindowTooSmall {
                needed: -pole,
                low: -l,
                high: k,
            });
        }
        Ok(self.laurent_at(&Rational::zero(), k))
    }

    /// Expansion at 0 from its true leading term through `ℏ^high`.
    pub fn expand_at_zero(&self, high: i64) -> HLaurent {
        self.laurent_at(&Rational::zero(), high)
    }

    /// Taylor coefficient of ℏ^j at 0 for a function regular there.
    pub fn taylor_coeff_at_zero(&self, j: usize) -> Result<Rational> {
        if !self.is_regular_at_zero() {
            return Err(Error::PoleAt(Rational::zero()));
        }
        self.expand_at_zero(j as i64).coeff(j as i64)
    }

    pub fn residue_at(&self, a: &Rational) -> Rational {
        self.laurent_at(a, -1).coeff(-1).unwrap()
    }

    /// `-Res_{w=0} w^{-2} f(1/w)`.
    pub fn residue_at_infinity(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        // w^{-2} f(1/w) = w^{dd - dn - 2} rev(num)/rev(den), rev(den)(0) != 0
        let k = dn - dd + 1;
        if k < 0 {
            return Rational::zero();
        }
        let t = taylor_rational(
            self.num.reverse().coeffs(),
            self.den.reverse().coeffs(),
            k as usize,
        )
        .expect("reversed monic denominator is a unit");
        -t[k as usize].clone()
    }

    /// Roots of the denominator that are rational, found among candidates the caller supplies.
    pub fn poles_among<'a>(
        &'a self,
        candidates: &'a [Rational],
    ) -> impl Iterator<Item = &'a Rational> {
        candidates.iter().filter(|a| self.den.eval(a).is_zero())
    }
}

/// Laurent expansion of `num/den` at `a` (no reduction needed), through `(ℏ-a)^high`.
pub fn laurent_expansion(num: &Poly, den: &Poly, a: &Rational, high: i64) -> HLaurent {
    if num.is_zero() {
        return HLaurent::zero();
    }
    let n = num.taylor_shift(a);
    let d = den.taylor_shift(a);
    let vn = n.valuation().unwrap();
    let vd = d.valuation().expect("nonzero denominator");
    let ord = vn as i64 - vd as i64;
    if high < ord {
        return HLaurent::with_precision(ord, Vec::new(), high);
    }
    let n = n.shift_down(vn);
    let d = d.shift_down(vd);
    let t = taylor_rational(n.coeffs(), d.coeffs(), (high - ord) as usize)
        .expect("shifted denominator is a unit");
    HLaurent::with_precision(ord, t, high)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        // Henrici: with g = gcd(b, d), only g can share factors with the new numerator
        let g = self.den.gcd(&o.den);
        let b1 = self.den.div_exact(&g);
        let d1 = o.den.div_exact(&g);
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.degree() == Some(0) {
            (num, g)
        } else {
            (num.div_exact(&h), g.div_exact(&h))
        };
        RatFunc::normalize_lead(num, &(&b1 * &d1) * &g)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (a, d) = if g1.degree() == Some(0) {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1), o.den.div_exact(&g1))
        };
        let (c, b) = if g2.degree() == Some(0) {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        RatFunc::normalize_lead(&a * &c, &b * &d)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inverse().expect("division by the zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Coefficient for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
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

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn residues_at_points() {
        let f = rf(&[1], &[-3, 1]);
        assert_eq!(f.residue_at(&int(3)), int(1));
        assert_eq!(f.residue_at(&int(0)), int(0));
        let g = rf(&[1], &[2, -3, 1]); // 1/((ℏ-1)(ℏ-2))
                                       // oracle: 1/(a-2) at a = 1
        assert_eq!(g.residue_at(&int(1)), int(1) / (int(1) - int(2)));
        assert_eq!(g.residue_at(&int(2)), int(1));
    }

    #[test]
    fn residues_at_infinity() {
        assert_eq!(rf(&[1], &[0, 1]).residue_at_infinity(), int(-1));
        assert_eq!(RatFunc::constant(int(7)).residue_at_infinity(), int(0));
        let g = rf(&[1], &[2, -3, 1]);
        assert_eq!(g.residue_at_infinity(), int(0));
        // ℏ² has residue 0 at infinity, ℏ^2/(ℏ-1) has -1 at 1... sum rule
        let h = rf(&[0, 0, 1], &[-1, 1]);
        assert_eq!(h.residue_at(&int(1)) + h.residue_at_infinity(), int(0));
    }

    #[test]
    fn laurent_windows() {
        let f = rf(&[1, 1], &[0, 1]);
        let l = f.laurent_at_zero(1, 1).unwrap();
        assert_eq!(
            (
                l.coeff(-1).unwrap(),
                l.coeff(0).unwrap(),
                l.coeff(1).unwrap()
            ),
            (int(1), int(1), int(0))
        );
        let g = rf(&[1], &[1, -1]);
        let l = g.laurent_at_zero(0, 3).unwrap();
        assert!((0..=3).all(|k| l.coeff(k).unwrap() == int(1)));
        let h = rf(&[0, 1], &[-2, 1]);
        let l = h.laurent_at_zero(0, 2).unwrap();
        assert_eq!(
            (
                l.coeff(0).unwrap(),
                l.coeff(1).unwrap(),
                l.coeff(2).unwrap()
            ),
            (int(0), frac(-1, 2), frac(-1, 4))
        );
        assert!(matches!(
            rf(&[1], &[0, 0, 1]).laurent_at_zero(1, 2),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[1, 1]);
        let s = &a + &b; // 2ℏ/(ℏ²-1)
        assert_eq!(s, rf(&[0, 2], &[-1, 0, 1]));
        let p = &s * &rf(&[-1, 1], &[0, 1]); // cancels ℏ and ℏ-1
        assert_eq!(p, rf(&[2], &[1, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!(rf(&[0, 3], &[0, 6]), RatFunc::constant(frac(1, 2)));
    }
}
