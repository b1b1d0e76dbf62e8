//! Symmetric functions of the branches, all through the root-of-unity
//! filter; no branch is ever materialized and no cyclotomic numbers appear.
//!
//! Power sums: p_m(q) = sum_k H_k(q)^m = e * sum_{e | s} [t^s]{g^m} q^{s/e}.
//! Elementary symmetric functions come from Newton's identities, the
//! Vandermonde product from the Hankel determinant of power sums, and
//! products prod_k A(H_k) from exponentiating sum_m c_m p_m with
//! log(A/a_0) = sum_m c_m y^m (q-adically convergent because p_m has
//! valuation >= ceil(m/e)).

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::series::{LaurentSeries, PowerSeries};

use super::PuiseuxBranchSet;

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    (a + b - 1).div_euclid(b)
}

/// Extract every e-th t-coefficient of g^m into a q-series, scaled by e.
fn filter_to_q(gm: &LaurentSeries, e: u32) -> LaurentSeries {
    let e = e as i64;
    let q_prec = div_ceil(gm.precision(), e);
    let q_lo = div_ceil(gm.valuation(), e);
    let coeffs = (q_lo..q_prec)
        .map(|j| {
            let c = gm.coeff(j * e).expect("within t-precision");
            &Rat::from_int(e) * &c
        })
        .collect();
    LaurentSeries::new(q_lo, coeffs)
}

/// p_m(q) = sum_{k=1}^{e} H_k(q)^m. Only integer powers of q survive the
/// filter; the valuation is at least ceil(m/e). Reads past the q-precision
/// supported by the working order fail at extraction time.
pub fn power_sum(branches: &PuiseuxBranchSet, m: i64) -> LaurentSeries {
    assert!(m >= 1, "power sum index must be >= 1");
    power_sum_table(branches, m).pop().expect("m >= 1")
}

/// p_1 .. p_m_max, sharing one running power of g.
pub fn power_sum_table(branches: &PuiseuxBranchSet, m_max: i64) -> Vec<LaurentSeries> {
    let g = branches.branch_series().to_laurent();
    let mut out = Vec::with_capacity(m_max.max(0) as usize);
    let mut pw = g.clone();
    for m in 1..=m_max {
        out.push(filter_to_q(&pw, branches.ramification()));
        if m < m_max {
            pw = pw.mul(&g);
        }
    }
    out
}

/// e_1 .. e_e with prod_k (y - H_k) = y^e - e_1 y^{e-1} + ... + (-1)^e e_e.
/// In particular prod_k H_k = e_e.
pub fn elementary_symmetric(branches: &PuiseuxBranchSet) -> Vec<LaurentSeries> {
    let e = branches.ramification();
    let ps = power_sum_table(branches, e as i64);
    elementary_from_table(&ps, e)
}

/// Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
pub(crate) fn elementary_from_table(ps: &[LaurentSeries], e: u32) -> Vec<LaurentSeries> {
    let mut es: Vec<LaurentSeries> = Vec::with_capacity(e as usize);
    for k in 1..=e as usize {
        // i = k term uses e_0 = 1, handled as a scalar.
        let mut acc = ps[k - 1].clone();
        if k % 2 == 0 {
            acc = acc.neg();
        }
        for i in 1..k {
            let term = es[k - i - 1].mul(&ps[i - 1]);
            acc = if i % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
        }
        es.push(acc.scalar_mul(&Rat::new(1, k as i64)));
    }
    es
}

/// prod_{i1 != i2} (H_{i2} - H_{i1}) = (-1)^{e(e-1)/2} det[p_{i+j}] with
/// p_0 = e, the Hankel-determinant form of the branch discriminant.
/// The empty product for e = 1 is 1. Its q-valuation is e - 1.
pub fn vandermonde_product(branches: &PuiseuxBranchSet) -> Result<LaurentSeries> {
    let e = branches.ramification();
    let ps = power_sum_table(branches, (2 * e - 2) as i64);
    let unit_prec = div_ceil(branches.working_order(), e as i64);
    vandermonde_from_table(&ps, e, unit_prec)
}

pub(crate) fn vandermonde_from_table(
    ps: &[LaurentSeries],
    e: u32,
    unit_prec: i64,
) -> Result<LaurentSeries> {
    let n = e as usize;
    let entry = |i: usize, j: usize| -> LaurentSeries {
        if i + j == 0 {
            LaurentSeries::constant(Rat::from_int(e as i64), unit_prec)
        } else {
            ps[i + j - 1].clone()
        }
    };
    let mat: Vec<Vec<LaurentSeries>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let det = det_bareiss(mat)?;
    let sign = (e as i64) * (e as i64 - 1) / 2;
    Ok(if sign % 2 == 1 { det.neg() } else { det })
}

/// Fraction-free Gaussian elimination (Bareiss), pivoting on the
/// lowest-valuation entry of each column to minimize precision loss.
/// Divisions by the previous pivot are exact by the Bareiss identity.
fn det_bareiss(mut m: Vec<Vec<LaurentSeries>>) -> Result<LaurentSeries> {
    let n = m.len();
    if n == 1 {
        return Ok(m.pop().unwrap().pop().unwrap());
    }
    let mut negate = false;
    let mut prev_pivot_inv: Option<LaurentSeries> = None;
    for k in 0..n - 1 {
        let pivot_row = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].valuation());
        let Some(pivot_row) = pivot_row else {
            // Column is zero to its precision, so the determinant is too.
            let p = (k..n).map(|i| m[i][k].precision()).min().unwrap();
            return Ok(LaurentSeries::zero(p));
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = match &prev_pivot_inv {
                    None => num,
                    Some(inv) => num.mul(inv),
                };
            }
        }
        prev_pivot_inv = Some(m[k][k].invert()?);
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// prod_{k=1}^{e} A(H_k) for a series A with A(0) = a_0 != 0, computed as
/// a_0^e * exp(sum_m c_m p_m). A's order bounds how many c_m exist, which
/// caps the claimed q-precision at ceil(order(A)/e).
pub fn symmetric_product(a: &PowerSeries, branches: &PuiseuxBranchSet) -> Result<LaurentSeries> {
    let m_max = (a.order() - 1).min(branches.working_order() * 2);
    let ps = power_sum_table(branches, m_max.max(0));
    symmetric_product_from_table(a, &ps, branches.ramification())
}

pub(crate) fn symmetric_product_from_table(
    a: &PowerSeries,
    ps: &[LaurentSeries],
    e: u32,
) -> Result<LaurentSeries> {
    if a.order() < 1 {
        return Err(Error::PrecisionExceeded {
            requested: 0,
            precision: 0,
        });
    }
    let a0 = a.coeff(0).expect("order checked");
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let c = a.scalar_mul(&a0.recip()?).log()?;
    let m_max = (c.order() - 1).min(ps.len() as i64);
    let cap = div_ceil(c.order(), e as i64);
    let mut acc = LaurentSeries::zero(cap);
    for m in 1..=m_max {
        let cm = c.coeff(m).expect("within order");
        if !cm.is_zero() {
            acc = acc.add(&ps[(m - 1) as usize].scalar_mul(&cm));
        }
    }
    let exp = acc.to_power_series()?.exp()?;
    Ok(exp.scalar_mul(&a0.pow(e as i64)).to_laurent())
}
