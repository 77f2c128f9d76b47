//! Splitting `1 + Z = e^{η/ℏ}(1 + Z̄)` with `Z̄` holomorphic at ℏ = 0, on a constructed series,
//! on `u/ℏ` (which has no such splitting) and on the hypergeometric kernel.

use gw_hypersurface::gw::bridge_z;
use gw_hypersurface::hypergeometric::{HyperSpec, Hypergeometric};
use gw_hypersurface::rational::frac;
use gw_hypersurface::residue::{
    check_regularizability, regularizable_example, regularize, simple_pole_example,
    RegularizabilityIdentity,
};

fn main() -> gw_hypersurface::Result<()> {
    let z = regularizable_example(&frac(-3, 2), 4);
    println!("Z = e^(-3u/2ℏ)(1 + uℏ) - 1:\n{z}");
    let reg = regularize(&z)?;
    println!("eta = {}   (from ln(1+Z): {})", reg.eta, reg.eta_from_log);
    println!("Zbar:\n{}", reg.zbar);
    for a in 0..=2 {
        println!(
            "{}",
            check_regularizability(&z, a, RegularizabilityIdentity::ResidueProducts)?
        );
    }

    let pole = simple_pole_example(4);
    let r = regularize(&pole)?;
    println!("u/ℏ: regular part holomorphic? {}", r.regular);
    println!(
        "{}",
        check_regularizability(&pole, 1, RegularizabilityIdentity::ResidueProducts)?
    );

    let h = Hypergeometric::new(HyperSpec::new(5, 3)?)?;
    let reg = regularize(&bridge_z(&h)?)?;
    println!("quintic kernel: eta = {}", reg.eta);
    println!("                mu  = {}", h.mu());
    println!(
        "                Zbar(0) + 1 = {}",
        &reg.zbar.value_at_zero()? + &gw_hypersurface::QSeries::one(3)
    );
    Ok(())
}
