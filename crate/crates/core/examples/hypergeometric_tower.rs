//! The hypergeometric I-series of a degree-n hypersurface in P^{n-1}: periods, mirror map,
//! the tower of derived series and the twisted kernel's expansion at ℏ = 0.

use gw_hypersurface::hypergeometric::{
    decomposition_report, diagonal_identities, HyperSpec, Hypergeometric, MuMethod,
};

fn main() -> gw_hypersurface::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let h = Hypergeometric::new(HyperSpec::new(n, 5)?)?;
    println!("n = {n}");
    println!("I_00     = {}", h.diagonal(0));
    println!("T - t    = {}", h.mirror());
    println!("mu       = {}", h.mu());
    assert_eq!(&h.mu_by(MuMethod::Residue)?, h.mu());
    println!("Phi_0    = {}", h.phi0());
    for p in 1..h.diagonals().len().min(4) {
        println!("I_{p}{p}     = {}", h.diagonal(p));
    }
    let j1 = h.i_series(0, 1)?;
    println!("I_01     = t ({}) + {}", j1.coeff(1), j1.coeff(0));
    println!("Q at q^1 = {}", h.q_hbar(1)?);
    println!("{}", decomposition_report(&h)?);
    println!("{}", diagonal_identities(&h)?);
    println!("{}", h.q_hbar_report());
    Ok(())
}
