//! Both sides of the generating-series identity, compared exactly.
//!
//! Left side, the coefficient-extraction exponential:
//!
//!   G_e(R) = exp[ - sum_{n,m>0, j>0} j (1/m)[z^{me+j}]{R^m(z)}
//!                                     (1/n)[z^{ne-j}]{R^n(z)} q^{n+m} ]
//!
//! (j truncates at ne, beyond which [z^{ne-j}] extracts a negative exponent
//! of a power series; and at m(deg R - e), beyond which [z^{me+j}] is past
//! the degree — so deg R <= e collapses G to 1.)
//!
//! Right side, the product over the e branches H_i of H^e = q R(H):
//!
//!   prod_i (R(H_i)/R(0)) * prod_i H_i^e * prod_{i1 != i2} 1/(H_{i2}-H_{i1})
//!        * prod_i (e/H_i - R'(H_i)/R(H_i))
//!
//! The last factor has poles at H_i = 0; with A(y) = e R(y) - y R'(y) it is
//! prod_i A(H_i) / (prod_i H_i * prod_i R(H_i)), and A(0) = e r_0 != 0, so
//! every intermediate is an honest Laurent series.
//!
//! Comparison is exact rational equality; there is no tolerance anywhere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::puiseux::{
    poly_mul, solve_ramified_branch, solve_unramified, symmetric::elementary_from_table,
    symmetric::symmetric_product_from_table, symmetric::vandermonde_from_table, RSpec,
};
use crate::rational::Rat;
use crate::series::{LaurentSeries, PowerSeries};

/// Outcome of one identity check. Serializes to the report schema:
/// `{"r": [...], "e": .., "order": .., "lhs": [...], "rhs": [...],
///   "equal": .., "first_mismatch": ..}` with "p/q" coefficient strings
/// indexed by q-exponent from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub r: Vec<Rat>,
    pub e: u32,
    pub order: i64,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
    pub equal: bool,
    pub first_mismatch: Option<i64>,
}

/// G_e(R) to order n+1 (coefficients of q^0..q^n). Constant term 1 and zero
/// q^1 coefficient by construction (the sum starts at n+m = 2).
pub fn lhs_g(r: &RSpec, e: u32, n: i64) -> PowerSeries {
    assert!(e >= 1 && n >= 1);
    let e64 = e as i64;
    let d = r.degree();
    let mut inner = vec![Rat::zero(); (n + 1) as usize];
    if d > e64 {
        // rpow[k] = R^k exactly; k up to n-1 suffices since n+m <= n.
        let mut rpow: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
        for _ in 1..n {
            rpow.push(poly_mul(rpow.last().unwrap(), r.coeffs()));
        }
        let coeff = |p: &[Rat], i: i64| -> Rat {
            if i >= 0 && (i as usize) < p.len() {
                p[i as usize].clone()
            } else {
                Rat::zero()
            }
        };
        for m in 1..n {
            for nn in 1..=(n - m) {
                let j_max = (nn * e64).min(m * (d - e64));
                let mut s = Rat::zero();
                for j in 1..=j_max {
                    let a = coeff(&rpow[m as usize], m * e64 + j);
                    if a.is_zero() {
                        continue;
                    }
                    let b = coeff(&rpow[nn as usize], nn * e64 - j);
                    if b.is_zero() {
                        continue;
                    }
                    s += &(&(&Rat::from_int(j) * &a) * &b);
                }
                if !s.is_zero() {
                    inner[(nn + m) as usize] += &(&s / &Rat::from_int(nn * m));
                }
            }
        }
    }
    PowerSeries::new(inner)
        .scalar_mul(&Rat::from_int(-1))
        .exp()
        .expect("inner sum has zero constant term")
}

/// The branch-product side to order n+1, via the ramified solver and the
/// symmetric-function toolkit. Works at q-precision n + e + 2, i.e. t-order
/// e (n + e + 2); the margin is asserted by the checked extractions, not
/// assumed. A nonzero coefficient at a negative q-exponent is reported as an
/// internal-consistency error: the product is a power series.
pub fn rhs_product(r: &RSpec, e: u32, n: i64) -> Result<LaurentSeries> {
    assert!(e >= 1 && n >= 1);
    let e64 = e as i64;
    let p_work = n + e64 + 2;
    let n_t = e64 * p_work;
    let branches = solve_ramified_branch(r, e, n_t)?;

    let m_max = e64 * p_work - 1;
    let ps = crate::puiseux::power_sum_table(&branches, m_max);
    let es = elementary_from_table(&ps, e);
    let ee = &es[e as usize - 1];
    let unit_prec = {
        // q-precision carried by p_1; constants are materialized at it
        let w = branches.working_order();
        (w + e64 - 1).div_euclid(e64)
    };
    let vdm = vandermonde_from_table(&ps, e, unit_prec)?;

    // A(y) = e R(y) - y R'(y); A(0) = e r_0 != 0
    let a_coeffs: Vec<Rat> = r
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| &Rat::from_int(e64 - k as i64) * c)
        .collect();
    let order_a = m_max + 1;
    let a_series = materialize(&a_coeffs, order_a);
    let r_series = r.to_power_series(order_a);

    let sp_r = symmetric_product_from_table(&r_series, &ps, e)?;
    let sp_a = symmetric_product_from_table(&a_series, &ps, e)?;

    let factor1 = sp_r.scalar_mul(&r.r0().pow(-e64));
    let factor2 = ee.pow_i64(e64)?;
    let factor3 = vdm.invert()?;
    let factor4 = sp_a.mul(&ee.invert()?).mul(&sp_r.invert()?);

    let product = factor1.mul(&factor2).mul(&factor3).mul(&factor4);
    if product.valuation() < 0 {
        return Err(Error::InternalConsistency(format!(
            "branch product has a nonzero coefficient at negative exponent {}",
            product.valuation()
        )));
    }
    Ok(product)
}

fn materialize(coeffs: &[Rat], order: i64) -> PowerSeries {
    let mut cs = coeffs.to_vec();
    cs.resize(order.max(cs.len() as i64) as usize, Rat::zero());
    PowerSeries::new(cs).truncated(order)
}

/// The e = 1 closed form (R(H)/R(0)) (1 - R'(H) H / R(H)), equal to
/// `rhs_product(r, 1, n)`.
pub fn corollary_rhs(r: &RSpec, n: i64) -> Result<PowerSeries> {
    assert!(n >= 1);
    let h = solve_unramified(r, n).to_laurent();
    let rh = r.eval_at(&h);
    let rph = r.eval_derivative_at(&h);
    let correction = rph.mul(&h).mul(&rh.invert()?);
    let one_minus = correction.neg().add_scalar(&Rat::one());
    let out = rh.scalar_mul(&r.r0().recip()?).mul(&one_minus);
    out.to_power_series()
}

/// Run both sides and compare the coefficients of q^0..q^n exactly.
pub fn verify(r: &RSpec, e: u32, n: i64) -> Result<VerificationReport> {
    let lhs = lhs_g(r, e, n);
    let rhs = rhs_product(r, e, n)?;
    let lhs_coeffs: Vec<Rat> = (0..=n).map(|k| lhs.coeff(k)).collect::<Result<_>>()?;
    let rhs_coeffs: Vec<Rat> = (0..=n).map(|k| rhs.coeff(k)).collect::<Result<_>>()?;
    let first_mismatch = (0..=n).find(|&k| lhs_coeffs[k as usize] != rhs_coeffs[k as usize]);
    Ok(VerificationReport {
        r: r.coeffs().to_vec(),
        e,
        order: n,
        equal: first_mismatch.is_none(),
        lhs: lhs_coeffs,
        rhs: rhs_coeffs,
        first_mismatch,
    })
}
