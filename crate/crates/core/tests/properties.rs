use proptest::prelude::*;

use gw_hypersurface::rational::{frac, int};
use gw_hypersurface::residue::{check_product_residue, regularize, Poly, RatFunc, USeriesRF};
use gw_hypersurface::series::inverse_shift;
use gw_hypersurface::{QSeries, Rational, TPoly};

const D: usize = 6;

fn small() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small(), D + 1).prop_map(QSeries::new)
}

/// Constant term fixed to `c`.
fn series_with(c: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small(), D).prop_map(move |mut v| {
        v.insert(0, int(c));
        QSeries::new(v)
    })
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec(series(), 1..=3).prop_map(TPoly::new)
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 1..=max_degree + 1).prop_map(|c| Poly::from_ints(&c))
}

/// Rational functions whose denominators are products of `(x - a)^k` with known roots.
fn split_ratfunc() -> impl Strategy<Value = (RatFunc, Vec<Rational>)> {
    (prop::collection::vec((small(), 1u32..=3), 1..=3), poly(6)).prop_filter_map(
        "nonzero numerator",
        |(factors, num)| {
            let mut den = Poly::one();
            let mut roots = Vec::new();
            for (a, k) in factors {
                den = &den * &Poly::linear_root(a.clone()).pow(k);
                if !roots.contains(&a) {
                    roots.push(a);
                }
            }
            RatFunc::new(num, den).ok().map(|f| (f, roots))
        },
    )
}

/// At most a simple pole at 0.
fn simple_pole_ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), -3i64..=3, any::<bool>()).prop_map(|(num, b, pole)| {
        let mut den = Poly::from_ints(&[1, b]);
        if pole {
            den = den.shift_up(1);
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QSeries::one(D), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn series_inverse(a in series_with(1)) {
        prop_assert_eq!(&a * &a.inverse().unwrap(), QSeries::one(D));
    }

    #[test]
    fn exp_and_log_are_inverse(f in series_with(1), g in series_with(0)) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f.clone());
        prop_assert_eq!(g.exp().unwrap().log().unwrap(), g.clone());
        let (lf, lg) = (f.log().unwrap(), g.exp().unwrap().log().unwrap());
        prop_assert_eq!((&f * &g.exp().unwrap()).log().unwrap(), &lf + &lg);
    }

    #[test]
    fn powers_add(f in series_with(1), a in small(), b in small()) {
        let lhs = &f.pow(&a).unwrap() * &f.pow(&b).unwrap();
        prop_assert_eq!(lhs, f.pow(&(a + b)).unwrap());
        prop_assert_eq!(f.pow(&int(2)).unwrap(), &f * &f);
    }

    #[test]
    fn series_derivative_leibniz(f in series(), g in series()) {
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tpoly_derivative_leibniz(f in tpoly(), g in tpoly()) {
        let lhs = f.mul(&g).d_dt();
        let rhs = f.d_dt().mul(&g).add(&f.mul(&g.d_dt()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn change_of_variable_round_trip(f in series(), g in series_with(0)) {
        let there = f.change_variable_exp_t(&g).unwrap();
        let back = there.change_variable_exp_t(&inverse_shift(&g).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn residues_sum_to_zero((f, roots) in split_ratfunc()) {
        let total: Rational = roots.iter().map(|a| f.residue_at(a)).sum::<Rational>() + f.residue_at_infinity();
        prop_assert_eq!(total, Rational::default());
    }

    #[test]
    fn product_residue_expansion(fs in prop::collection::vec(simple_pole_ratfunc(), 0..=5)) {
        let report = check_product_residue(&fs).unwrap();
        prop_assert!(report.pass, "{}", report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Building `e^{η/ℏ}(1 + Z̄) - 1` from random `η` and holomorphic `Z̄` and regularizing
    /// recovers both.
    #[test]
    fn regularization_is_unique(
        eta in prop::collection::vec(small(), 4),
        zbar in prop::collection::vec(poly(2), 4),
    ) {
        let mut eta = eta;
        eta.insert(0, int(0));
        let eta = QSeries::new(eta);
        let mut coeffs = vec![RatFunc::zero()];
        coeffs.extend(zbar.into_iter().map(RatFunc::from_poly));
        let zbar = USeriesRF::new(coeffs);
        let z = zbar.twist_by_exponential(&eta);
        let reg = regularize(&z).unwrap();
        prop_assert_eq!(&reg.eta, &eta);
        prop_assert_eq!(&reg.eta_from_log, &eta);
        prop_assert!(reg.regular);
        prop_assert_eq!(reg.zbar, zbar);
    }
}
