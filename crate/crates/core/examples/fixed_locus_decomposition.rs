//! The genus-1 series as a sum of effective and boundary fixed-locus contributions, with the
//! boundary part computed both in closed form and as three residues.

use gw_hypersurface::gw::{
    boundary_residues, boundary_term, effective_term, effective_term_paired, fixed_locus_reports,
    genus1_series,
};
use gw_hypersurface::hypergeometric::{HyperSpec, Hypergeometric};

fn main() -> gw_hypersurface::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let h = Hypergeometric::new(HyperSpec::new(n, 4)?)?;
    let a = effective_term(&h);
    assert_eq!(a, effective_term_paired(&h));
    let b = boundary_term(&h);
    let r = boundary_residues(&h)?;
    println!("effective     = {a}");
    println!("boundary      = {b}");
    println!("  at -n       = {}", r.at_minus_n);
    println!("  at 0        = {}", r.at_zero);
    println!("  at infinity = {}", r.at_infinity);
    println!("sum           = {}", &a + &b);
    println!("genus-1 rhs   = {}", genus1_series(&h));
    for report in fixed_locus_reports(&h)? {
        println!("{report}");
    }
    Ok(())
}
