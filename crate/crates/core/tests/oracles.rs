//! Independent low-order expansions checked against the library. The helpers here use plain
//! coefficient vectors and share no code with the series engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use gw_hypersurface::gw::{genus0_quintic, invariants_table, quintic_genus1, reduced_genus1};
use gw_hypersurface::hypergeometric::{HyperSpec, Hypergeometric};

type Q = BigRational;
type Series = Vec<Q>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn harmonic(n: u64) -> Q {
    (1..=n)
        .map(|k| Q::new(1.into(), k.into()))
        .fold(Q::zero(), |a, b| a + b)
}

fn mul(a: &Series, b: &Series) -> Series {
    let d = a.len().min(b.len());
    (0..d)
        .map(|k| {
            (0..=k)
                .map(|i| &a[i] * &b[k - i])
                .fold(Q::zero(), |x, y| x + y)
        })
        .collect()
}

/// `1/a` by long division; `a[0] != 0`.
fn inv(a: &Series) -> Series {
    let mut out: Series = vec![a[0].recip()];
    for k in 1..a.len() {
        let s = (1..=k)
            .map(|i| &a[i] * &out[k - i])
            .fold(Q::zero(), |x, y| x + y);
        out.push(-s / &a[0]);
    }
    out
}

/// `ln a` for `a[0] = 1`, from `(ln a)' = a'/a`.
fn ln(a: &Series) -> Series {
    let da: Series = a.iter().enumerate().map(|(k, c)| c * q(k as i64)).collect();
    let r = mul(&da, &inv(a));
    r.iter()
        .enumerate()
        .map(|(k, c)| if k == 0 { Q::zero() } else { c / q(k as i64) })
        .collect()
}

/// `exp a` for `a[0] = 0`, summing the exponential series directly.
fn exp(a: &Series) -> Series {
    let d = a.len();
    let mut out = vec![Q::zero(); d];
    let mut term = vec![Q::zero(); d];
    term[0] = Q::one();
    for k in 0..d {
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
        term = mul(&term, a)
            .into_iter()
            .map(|c| c / q(k as i64 + 1))
            .collect();
    }
    out
}

fn scale(a: &Series, c: &Q) -> Series {
    a.iter().map(|x| x * c).collect()
}

fn add(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Coefficients `c_k` with `f(q) = sum_k c_k Q(q)^k`, found by subtracting one power at a time.
fn in_terms_of(f: &Series, big_q: &Series) -> Series {
    let mut rest = f.clone();
    let mut power: Series = vec![Q::zero(); f.len()];
    power[0] = Q::one();
    let mut out = Vec::new();
    for k in 0..f.len() {
        // big_q = q + O(q^2), so power = q^k + O(q^{k+1})
        let c = rest[k].clone();
        rest = add(&rest, &scale(&power, &-c.clone()));
        out.push(c);
        power = mul(&power, big_q);
    }
    out
}

struct Periods {
    i0: Series,
    /// `T - t`.
    m: Series,
    /// `Q = q e^{T - t}`.
    big_q: Series,
}

fn periods(n: u64, d: usize) -> Periods {
    let a: Series = (0..=d as u64)
        .map(|k| Q::from_integer(fact(n * k) / fact(k).pow(n as u32)))
        .collect();
    let b: Series = (0..=d as u64)
        .map(|k| &a[k as usize] * q(n as i64) * (harmonic(n * k) - harmonic(k)))
        .collect();
    let m = mul(&b, &inv(&a));
    let mut shift = vec![Q::zero(); d + 1];
    shift[1] = Q::one();
    let big_q = mul(&shift, &exp(&m));
    Periods { i0: a, m, big_q }
}

#[test]
fn fundamental_period_is_a_factorial_ratio() {
    for n in 2..=8u32 {
        let h = Hypergeometric::new(HyperSpec::new(n, 6).unwrap()).unwrap();
        assert_eq!(
            h.diagonal(0).coeffs(),
            &periods(n as u64, 6).i0[..],
            "n = {n}"
        );
    }
}

#[test]
fn mirror_map_is_a_harmonic_sum_ratio() {
    for n in 2..=8u32 {
        let h = Hypergeometric::new(HyperSpec::new(n, 6).unwrap()).unwrap();
        assert_eq!(h.mirror().coeffs(), &periods(n as u64, 6).m[..], "n = {n}");
    }
}

/// `5 / ((1 - 3125q) I_0^2 (dT/dt)^3) = 5 + sum d^3 N_{0,d} Q^d`.
#[test]
fn genus0_matches_yukawa_coupling() {
    let d = 6;
    let p = periods(5, d);
    let dm: Series =
        p.m.iter()
            .enumerate()
            .map(|(k, c)| c * q(k as i64))
            .collect();
    let mut dt = dm.clone();
    dt[0] += Q::one();
    let mut conifold = vec![Q::zero(); d + 1];
    conifold[0] = Q::one();
    conifold[1] = q(-3125);
    let den = mul(
        &mul(&conifold, &mul(&p.i0, &p.i0)),
        &mul(&dt, &mul(&dt, &dt)),
    );
    let coupling = in_terms_of(&scale(&inv(&den), &q(5)), &p.big_q);
    assert_eq!(coupling[0], q(5));
    let (n0, report) = genus0_quintic(d).unwrap();
    assert!(report.pass, "{report}");
    for k in 1..=d {
        assert_eq!(
            n0[k - 1],
            &coupling[k] / q((k * k * k) as i64),
            "degree {k}"
        );
    }
}

/// `(1/2)[(25/6)(T-t) - (62/3) ln I_0 - (1/6) ln(1 - 3125q) - ln(dT/dt)]` in terms of `Q`.
#[test]
fn genus1_matches_direct_expansion() {
    let d = 6;
    let p = periods(5, d);
    let mut dt: Series =
        p.m.iter()
            .enumerate()
            .map(|(k, c)| c * q(k as i64))
            .collect();
    dt[0] += Q::one();
    let mut conifold = vec![Q::zero(); d + 1];
    conifold[0] = Q::one();
    conifold[1] = q(-3125);
    let parts = [
        scale(&p.m, &Q::new(25.into(), 6.into())),
        scale(&ln(&p.i0), &Q::new((-62).into(), 3.into())),
        scale(&ln(&conifold), &Q::new((-1).into(), 6.into())),
        scale(&ln(&dt), &q(-1)),
    ];
    let total = parts
        .iter()
        .skip(1)
        .fold(parts[0].clone(), |acc, s| add(&acc, s));
    let want = in_terms_of(&scale(&total, &Q::new(1.into(), 2.into())), &p.big_q);
    let got = quintic_genus1(d).unwrap();
    assert_eq!(&got[..], &want[1..]);
}

#[test]
fn quintic_instanton_numbers() {
    let table = invariants_table(5, 5).unwrap();
    let n0: Vec<BigInt> = table
        .rows
        .iter()
        .map(|r| r.instanton0.clone().unwrap().to_integer())
        .collect();
    let n1: Vec<BigInt> = table
        .rows
        .iter()
        .map(|r| r.instanton1.clone().unwrap().to_integer())
        .collect();
    let big = |s: &str| s.parse::<BigInt>().unwrap();
    assert_eq!(
        n0,
        [
            "2875",
            "609250",
            "317206375",
            "242467530000",
            "229305888887625"
        ]
        .map(big)
    );
    assert_eq!(
        n1,
        ["0", "0", "609250", "3721431625", "12129909700200"].map(big)
    );
    for r in &table.rows {
        assert!(
            r.instanton0.as_ref().unwrap().is_integer()
                && r.instanton1.as_ref().unwrap().is_integer()
        );
    }
}

#[test]
fn reduced_genus1_degree_one_vanishes() {
    let h = Hypergeometric::new(HyperSpec::new(5, 3).unwrap()).unwrap();
    assert_eq!(reduced_genus1(&h).unwrap()[0], Q::zero());
}
