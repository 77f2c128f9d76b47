//! Genus-0 and genus-1 invariants of the quintic threefold with their instanton numbers,
//! written as text, CSV and JSON.

use gw_hypersurface::gw::{genus0_quintic, invariants_table, quintic_genus1};

fn main() -> gw_hypersurface::Result<()> {
    let d: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let (n0, report) = genus0_quintic(d)?;
    println!("{report}");
    println!("N0_1..3 = {}, {}, {}", n0[0], n0[1], n0[2]);
    println!("N1_1    = {}", quintic_genus1(1)?[0]);

    let table = invariants_table(5, d)?;
    print!("{}", table.to_text());
    println!();
    print!("{}", table.to_csv());
    println!();
    println!("{}", table.to_json());
    Ok(())
}
