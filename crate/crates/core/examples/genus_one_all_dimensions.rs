//! Reduced genus-1 invariants of degree-n hypersurfaces for n = 2..8. They vanish for n = 2
//! and n = 4; for the plane cubic they count torus covers.

use gw_hypersurface::gw::{genus1_series, reduced_genus1};
use gw_hypersurface::hypergeometric::{HyperSpec, Hypergeometric};
use gw_hypersurface::rational::approx;

fn main() -> gw_hypersurface::Result<()> {
    let d = 6;
    for n in 2..=8u32 {
        let h = Hypergeometric::new(HyperSpec::new(n, d)?)?;
        println!("n = {n}: series {}", genus1_series(&h));
        for (k, v) in reduced_genus1(&h)?.iter().enumerate() {
            println!("    d = {}: {v}  [~{}]", k + 1, approx(v, 6));
        }
    }
    Ok(())
}
