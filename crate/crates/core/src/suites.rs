//! Named groups of identity checks, run at a given dimension `n` and truncation `D`.
//!
//! Randomized checks draw from a fixed seed, so every run prints the same lines.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gw::{
    bridge_z_report, fixed_locus_reports, genus0_multiple_covers, genus0_quintic,
    genus1_multiple_covers, invariants_table, quintic_consistency, special_case_reports,
};
use crate::hypergeometric::{
    decomposition_report, diagonal_identities, theta_identities, y_one_identity, HyperSpec,
    Hypergeometric,
};
use crate::rational::{frac, int, Rational};
use crate::report::IdentityReport;
use crate::residue::{
    check_binomial_identity, check_product_residue, check_regularizability,
    check_residue_expansion, regularizable_example, regularize, simple_pole_example,
    BinomialIdentity, Poly, RatFunc, RegularizabilityIdentity,
};

const SEED: u64 = 0x5eed_2875;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Structure of the I-series tower and the diagonal product, weighted product and symmetry.
    TowerStructure,
    /// Holomorphy of the twisted kernel at ℏ = 0 and the two expressions for μ.
    KernelExpansion,
    /// Regularizable and non-regularizable series, including the hypergeometric one.
    Regularize,
    /// Residue theorem and residue of a product on seeded random inputs.
    Residues,
    /// Exhaustive binomial sum identities.
    BinomialSums,
    /// Quintic genus-0 reconstruction, multiple covers and genus-1 consistency.
    QuinticTables,
    /// Fixed-locus decomposition and the Θ identities.
    FixedLoci,
    /// Plane cubic and quartic surface.
    Special,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::TowerStructure,
        Suite::KernelExpansion,
        Suite::Regularize,
        Suite::Residues,
        Suite::BinomialSums,
        Suite::QuinticTables,
        Suite::FixedLoci,
        Suite::Special,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TowerStructure => "props31",
            Suite::KernelExpansion => "props32",
            Suite::Regularize => "regularize",
            Suite::Residues => "residues",
            Suite::BinomialSums => "appendixA",
            Suite::QuinticTables => "appendixB",
            Suite::FixedLoci => "theorem3",
            Suite::Special => "special",
        }
    }

    pub fn run(self, n: u32, d: usize) -> Result<Vec<IdentityReport>> {
        match self {
            Suite::TowerStructure => tower_structure(n, d),
            Suite::KernelExpansion => kernel_expansion(n, d),
            Suite::Regularize => regularization(n, d),
            Suite::Residues => Ok(vec![
                residue_theorem_random(200, SEED),
                product_residue_random(200, SEED)?,
            ]),
            Suite::BinomialSums => Ok(binomial_exhaustive(d as u64)),
            Suite::QuinticTables => quintic_tables(d),
            Suite::FixedLoci => fixed_loci(n, d),
            Suite::Special => special_case_reports(d),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite {s:?}")))
    }
}

fn hyper(n: u32, d: usize) -> Result<Hypergeometric> {
    Hypergeometric::new(HyperSpec::new(n, d)?)
}

pub fn tower_structure(n: u32, d: usize) -> Result<Vec<IdentityReport>> {
    let h = hyper(n, d)?;
    Ok(vec![decomposition_report(&h)?, diagonal_identities(&h)?])
}

pub fn kernel_expansion(n: u32, d: usize) -> Result<Vec<IdentityReport>> {
    Ok(vec![hyper(n, d)?.q_hbar_report()])
}

pub fn regularization(n: u32, d: usize) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let c = frac(-3, 2);
    let z = regularizable_example(&c, d);
    for a in 0..=4 {
        out.push(check_regularizability(
            &z,
            a,
            RegularizabilityIdentity::ResidueProducts,
        )?);
    }
    for a in 0..=3 {
        out.push(check_regularizability(
            &z,
            a,
            RegularizabilityIdentity::InverseRegularPart,
        )?);
    }
    for a in -3..=3 {
        out.push(check_residue_expansion(&z, a)?);
    }

    let mut unique = IdentityReport::new("regularization is unique").param("u_truncation", d);
    let reg = regularize(&z)?;
    let again = regularize(&reg.zbar.twist_by_exponential(&reg.eta))?;
    unique.check_all(again.eta.coeffs(), reg.eta.coeffs());
    unique.check_all(again.zbar.coeffs(), reg.zbar.coeffs());
    out.push(unique);

    let mut counter =
        IdentityReport::new("u/hbar violates the residue-product identity for some a <= 4")
            .param("u_truncation", d);
    let pole = simple_pole_example(d);
    let mut detected = false;
    for a in 0..=4 {
        detected |=
            !check_regularizability(&pole, a, RegularizabilityIdentity::ResidueProducts)?.pass;
    }
    if !detected {
        counter.fail(0, "no violation found");
    }
    out.push(counter);

    if n >= 2 {
        out.extend(bridge_z_report(&hyper(n, d)?, 2)?);
    }
    Ok(out)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    Poly::new((0..=degree).map(|_| int(rng.gen_range(-9..=9))).collect())
}

/// Sum of residues at the poles and at infinity vanishes, for `count` random functions
/// whose denominators split over the rationals.
pub fn residue_theorem_random(count: usize, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        IdentityReport::new("residue theorem on random rational functions").param("samples", count);
    for i in 0..count {
        let mut roots: Vec<Rational> = Vec::new();
        let mut den = Poly::one();
        for _ in 0..rng.gen_range(1..=4) {
            let a = small_rational(&mut rng);
            den = &den * &Poly::linear_root(a.clone()).pow(rng.gen_range(1..=3));
            if !roots.contains(&a) {
                roots.push(a);
            }
        }
        let top = den.degree().unwrap_or(0) + 2;
        let num = random_poly(&mut rng, top);
        let f = RatFunc::new(num, den).expect("nonzero denominator");
        let total: Rational =
            roots.iter().map(|a| f.residue_at(a)).sum::<Rational>() + f.residue_at_infinity();
        report.check(i, &total, &Rational::default());
    }
    report
}

/// Residue at 0 of a product against the subset expansion, on `count` random tuples of up to
/// five functions with at most simple poles at 0.
pub fn product_residue_random(count: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5);
    let mut report =
        IdentityReport::new("residue of a product on random tuples").param("samples", count);
    for i in 0..count {
        let fs: Vec<RatFunc> = (0..rng.gen_range(0..=5))
            .map(|_| {
                let mut den = Poly::from_ints(&[1, rng.gen_range(-3..=3)]);
                if rng.gen_bool(0.7) {
                    den = den.shift_up(1);
                }
                let num = random_poly(&mut rng, 3);
                RatFunc::new(num, den).expect("nonzero denominator")
            })
            .collect();
        let r = check_product_residue(&fs)?;
        if !r.pass {
            report.fail(i, r.to_string());
        }
        report.max_order_checked = i;
    }
    Ok(report)
}

/// Every binomial identity with all arguments `<= bound`; tuples for the convolution have
/// length `<= 4` and entries `<= 5`.
pub fn binomial_exhaustive(bound: u64) -> Vec<IdentityReport> {
    let mut conv = IdentityReport::new("binomial convolution, exhaustive").param("bound", bound);
    let mut tuples: Vec<Vec<u64>> = vec![vec![]];
    let mut frontier = tuples.clone();
    for _ in 0..4 {
        frontier = frontier
            .iter()
            .flat_map(|t| {
                (0..=5.min(bound)).map(move |q| {
                    let mut next = t.clone();
                    next.push(q);
                    next
                })
            })
            .collect();
        tuples.extend(frontier.iter().cloned());
    }
    for b in 0..=bound {
        for qs in &tuples {
            record(
                &mut conv,
                check_binomial_identity(&BinomialIdentity::Vandermonde { b, qs: qs.clone() }),
            );
        }
    }

    let mut recip = IdentityReport::new("alternating reciprocal binomial sum, exhaustive")
        .param("bound", bound);
    let mut falling = IdentityReport::new("alternating falling-product binomial sum, exhaustive")
        .param("bound", bound);
    for q in 0..=bound {
        for a in 0..=bound {
            if a >= 1 {
                record(
                    &mut recip,
                    check_binomial_identity(&BinomialIdentity::AlternatingReciprocal { q, a }),
                );
            }
            for s in 0..=bound {
                record(
                    &mut falling,
                    check_binomial_identity(&BinomialIdentity::AlternatingFalling { q, a, s }),
                );
            }
        }
    }
    for r in [&mut conv, &mut recip, &mut falling] {
        r.max_order_checked = bound as usize;
    }
    vec![conv, recip, falling]
}

fn record(into: &mut IdentityReport, r: IdentityReport) {
    if !r.pass {
        into.fail(0, r.to_string());
    }
}

pub fn quintic_tables(d: usize) -> Result<Vec<IdentityReport>> {
    let (_, genus0) = genus0_quintic(d)?;
    let mut out = vec![genus0];

    let table = invariants_table(5, d)?;
    let column = |f: fn(&crate::gw::GWRow) -> &Option<Rational>| -> Vec<Rational> {
        table
            .rows
            .iter()
            .map(|r| f(r).clone().expect("quintic tables are complete"))
            .collect()
    };
    let (big0, big1) = (column(|r| &r.genus0), column(|r| &r.genus1));
    let (n0, n1) = (column(|r| &r.instanton0), column(|r| &r.instanton1));
    let mut covers = IdentityReport::new("multiple-cover formulas round trip").param("D", d);
    covers.check_all(&genus0_multiple_covers(&n0), &big0);
    covers.check_all(&genus1_multiple_covers(&n1, &n0), &big1);
    out.push(covers);

    out.extend(quintic_consistency(d)?);
    Ok(out)
}

pub fn fixed_loci(n: u32, d: usize) -> Result<Vec<IdentityReport>> {
    let h = hyper(n, d)?;
    let mut out = fixed_locus_reports(&h)?;
    out.push(theta_identities(&h)?);
    out.push(y_one_identity(&h)?);
    Ok(out)
}
