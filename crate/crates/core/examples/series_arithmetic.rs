//! Exact truncated power series: products, logarithms, fractional powers and the change of
//! variable `Q = q e^{g(q)}` used by mirror maps.

use gw_hypersurface::rational::{frac, int};
use gw_hypersurface::series::inverse_shift;
use gw_hypersurface::{QSeries, TPoly};

fn main() -> gw_hypersurface::Result<()> {
    let d = 6;
    let one_minus = QSeries::one_minus(int(27), d);
    println!("1 - 27q            = {one_minus}");
    println!("ln(1 - 27q)        = {}", one_minus.log()?);
    println!("(1 - 27q)^(-1/3)   = {}", one_minus.pow(&frac(-1, 3))?);

    let geometric = one_minus.inverse()?;
    println!("1/(1 - 27q)        = {geometric}");
    println!("q d/dq of that     = {}", geometric.derivative());

    // rewrite 1/(1 - q) in the variable Q = q e^{q}
    let g = QSeries::monomial(int(1), 1, d);
    let f = QSeries::one_minus(int(1), d).inverse()?;
    let in_big_q = f.change_variable_exp_t(&g)?;
    println!("1/(1 - q) in Q     = {in_big_q}");
    let back = in_big_q.change_variable_exp_t(&inverse_shift(&g)?)?;
    assert_eq!(back, f);

    // d/dt = ∂/∂t + q d/dq on polynomials in t with q-series coefficients
    let p = TPoly::t(d).mul_series(&g);
    let dp = p.d_dt();
    println!("d/dt (t q)         = {} + t ({})", dp.coeff(0), dp.coeff(1));
    Ok(())
}
