//! Residues of exact rational functions, the residue of a product expanded over subsets, and
//! the binomial sums behind the fixed-locus computations.

use gw_hypersurface::rational::{frac, int, Rational};
use gw_hypersurface::residue::{
    check_binomial_identity, check_product_residue, BinomialIdentity, Poly, RatFunc,
};

fn main() -> gw_hypersurface::Result<()> {
    // (1 + ℏ)^5 / (ℏ^2 (5 + ℏ))
    let num = Poly::from_ints(&[1, 1]).pow(5);
    let den = Poly::from_ints(&[5, 1]).shift_up(2);
    let f = RatFunc::new(num, den)?;
    let poles = [int(0), int(-5)];
    for a in &poles {
        println!("Res at {a:>2} = {}", f.residue_at(a));
    }
    println!("Res at oo = {}", f.residue_at_infinity());
    let total: Rational =
        poles.iter().map(|a| f.residue_at(a)).sum::<Rational>() + f.residue_at_infinity();
    println!("sum       = {total}");
    println!("Laurent at 0: {}", f.expand_at_zero(3));

    let fs = [
        RatFunc::new(Poly::from_ints(&[2, 1]), Poly::from_ints(&[0, 1, 3]))?,
        RatFunc::new(Poly::from_ints(&[-1, 0, 4]), Poly::from_ints(&[0, 1]))?,
        RatFunc::new(Poly::from_ints(&[1]), Poly::from_ints(&[1, -2]))?,
        RatFunc::constant(frac(3, 7)),
    ];
    println!("{}", check_product_residue(&fs)?);

    for kind in [
        BinomialIdentity::Vandermonde {
            b: 4,
            qs: vec![2, 3, 1],
        },
        BinomialIdentity::AlternatingReciprocal { q: 4, a: 3 },
        BinomialIdentity::AlternatingFalling { q: 5, a: 2, s: 3 },
    ] {
        println!("{}", check_binomial_identity(&kind));
    }
    Ok(())
}
