//! Lagrange-inversion expansions by pure coefficient extraction: no branch
//! is solved here, everything comes from powers of R.
//!
//! For the e branches of H^e = q R(H) and a finite Laurent polynomial phi:
//!
//!   sum_k phi(H_k) = e phi_0
//!                  + [t^{-1}]{ phi'(t) log(R(t)) }
//!                  + sum_{n != 0} (1/n) [t^{ne-1}]{ phi'(t) R(t)^n } q^n
//!
//!   log((prod_k H_k)/q) = sum_{m>0} (1/m) [t^{me}]{ R(t)^m } q^m
//!
//! The log term needs only log(R/r_0): [t^{-1}]{phi'} = 0 for any Laurent
//! polynomial, so the log(r_0) part drops out and everything stays rational.
//! Negative n treat R as a unit via inversion.

use crate::error::Result;
use crate::rational::Rat;
use crate::series::{LaurentSeries, PowerSeries};

use super::{poly_mul, LaurentPolynomial, RSpec};

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// sum_{k=1}^{e} phi(H_k) to q-order `n` (coefficients of q^{n_min}..q^n,
/// where n_min = ceil(valuation(phi)/e)).
pub fn gessel_phi_expansion(
    phi: &LaurentPolynomial,
    r: &RSpec,
    e: u32,
    n: i64,
) -> Result<LaurentSeries> {
    assert!(e >= 1 && n >= 1);
    let e64 = e as i64;
    let dphi = phi.derivative();
    let v_phi = if phi.is_zero() { 0 } else { phi.valuation() };

    let n_min = if v_phi < 0 { div_ceil(v_phi, e64) } else { 0 };
    let mut coeffs = vec![Rat::zero(); (n + 1 - n_min) as usize];
    let mut put = |exp: i64, c: Rat| coeffs[(exp - n_min) as usize] = c;

    // q^0: e phi_0 + [t^{-1}]{ phi'(t) log(R(t)/r_0) }
    let mut c0 = &Rat::from_int(e64) * &phi.constant_term();
    if !dphi.is_zero() && dphi.valuation() < -1 {
        let t_len = -v_phi + 1; // log coefficients needed up to t^{-1 - v(phi')}
        let log_r = r
            .to_power_series(t_len.max(2))
            .scalar_mul(&r.r0().recip()?)
            .log()?;
        let mut s = Rat::zero();
        for (j, d) in dphi.terms() {
            let idx = -1 - j;
            if idx >= 1 && idx < log_r.order() {
                s += &(d * &log_r.coeff(idx)?);
            }
        }
        c0 = &c0 + &s;
    }
    put(0, c0);

    // n > 0: (1/n) [t^{ne-1}]{ phi'(t) R(t)^n }
    let mut rpow: Vec<Rat> = vec![Rat::one()];
    for nn in 1..=n {
        rpow = poly_mul(&rpow, r.coeffs());
        let mut s = Rat::zero();
        for (j, d) in dphi.terms() {
            let idx = nn * e64 - 1 - j;
            if idx >= 0 && (idx as usize) < rpow.len() {
                s += &(d * &rpow[idx as usize]);
            }
        }
        if !s.is_zero() {
            put(nn, &s / &Rat::from_int(nn));
        }
    }

    // n < 0: same with R^n = invert(R)^{|n|}; dies once ne < v(phi)
    if n_min < 0 {
        let t_prec = -v_phi + 2;
        let rinv = r.to_power_series(t_prec).to_laurent().invert()?;
        let mut rp = LaurentSeries::constant(Rat::one(), t_prec);
        for nn in (n_min..=-1).rev() {
            rp = rp.mul(&rinv);
            let mut s = Rat::zero();
            for (j, d) in dphi.terms() {
                let idx = nn * e64 - 1 - j;
                if idx < rp.precision() {
                    s += &(d * &rp.coeff(idx)?);
                }
            }
            if !s.is_zero() {
                put(nn, &s / &Rat::from_int(nn));
            }
        }
    }

    Ok(LaurentSeries::new(n_min, coeffs))
}

/// log((prod_k H_k)/q) as a power series: sum_{m=1}^{n} (1/m)[t^{me}]{R^m} q^m.
pub fn log_h_over_q(r: &RSpec, e: u32, n: i64) -> PowerSeries {
    assert!(e >= 1 && n >= 1);
    let e64 = e as i64;
    let mut out = vec![Rat::zero(); (n + 1) as usize];
    let mut rpow: Vec<Rat> = vec![Rat::one()];
    for m in 1..=n {
        rpow = poly_mul(&rpow, r.coeffs());
        let idx = m * e64;
        if (idx as usize) < rpow.len() && !rpow[idx as usize].is_zero() {
            out[m as usize] = &rpow[idx as usize] / &Rat::from_int(m);
        }
    }
    PowerSeries::new(out)
}
