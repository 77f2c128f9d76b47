//! Every named verification suite at one dimension and truncation, as the `verify` command runs
//! them.

use gw_hypersurface::suites::Suite;

fn main() -> gw_hypersurface::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let d: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let mut failed = 0;
    for suite in Suite::ALL {
        for r in suite.run(n, d)? {
            failed += usize::from(!r.pass);
            println!("{suite}: {r}");
        }
    }
    println!("{failed} failures");
    Ok(())
}
