//! Functional-equation solvers and the branch toolkit.
//!
//! Unramified: the unique H(q) with H = q R(H), H(0) = 0.
//! Ramified: the e solutions of H^e = q R(H) are the conjugates
//! H_k(q) = g(zeta^k t) with t = q^{1/e}, zeta a primitive e-th root of
//! unity, and g the unique series with g = t * rho * (R/r_0)^{1/e}(g) for a
//! designated root rho of r_0. The conjugates are never materialized: every
//! consumer is a symmetric function of the branches and goes through the
//! root-of-unity filter sum_k zeta^{ks} = e * [e | s], which keeps all
//! arithmetic inside the rationals.

mod gessel;
pub(crate) mod symmetric;

pub use gessel::{gessel_phi_expansion, log_h_over_q};
pub use symmetric::{
    elementary_symmetric, power_sum, power_sum_table, symmetric_product, vandermonde_product,
};

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::series::{LaurentSeries, PowerSeries};

/// The right-hand-side series R of the functional equation, as a polynomial
/// `r_0 + r_1 y + ... + r_d y^d` with `r_0 != 0`, plus an optional designated
/// e-th root of r_0 for the ramified solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSpec {
    coeffs: Vec<Rat>,
    root: Option<Rat>,
}

impl RSpec {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.first().is_none_or(Rat::is_zero) {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(RSpec { coeffs, root: None })
    }

    pub fn with_root(coeffs: Vec<Rat>, root: Rat) -> Result<Self> {
        let mut r = Self::new(coeffs)?;
        r.root = Some(root);
        Ok(r)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn r0(&self) -> &Rat {
        &self.coeffs[0]
    }

    /// Degree ignoring trailing zero coefficients.
    pub fn degree(&self) -> i64 {
        let mut d = self.coeffs.len() - 1;
        while d > 0 && self.coeffs[d].is_zero() {
            d -= 1;
        }
        d as i64
    }

    /// Coefficients of R'.
    pub fn derivative_coeffs(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &Rat::from_int(k as i64) * c)
            .collect()
    }

    /// Resolve the designated root rho with rho^e = r_0. When none was
    /// given: e = 1 forces rho = r_0, and r_0 = 1 defaults to rho = 1.
    pub fn designated_root(&self, e: u32) -> Result<Rat> {
        let r0 = self.r0();
        match &self.root {
            Some(rho) => {
                if &rho.pow(e as i64) == r0 {
                    Ok(rho.clone())
                } else {
                    Err(Error::RootMismatch {
                        root: rho.clone(),
                        e,
                        r0: r0.clone(),
                    })
                }
            }
            None if e == 1 => Ok(r0.clone()),
            None if r0.is_one() => Ok(Rat::one()),
            None => Err(Error::RootRequired { r0: r0.clone(), e }),
        }
    }

    /// Evaluate R at a series argument (exact finite sum, no truncation).
    pub fn eval_at(&self, x: &LaurentSeries) -> LaurentSeries {
        eval_poly(&self.coeffs, x)
    }

    /// Evaluate R' at a series argument.
    pub fn eval_derivative_at(&self, x: &LaurentSeries) -> LaurentSeries {
        eval_poly(&self.derivative_coeffs(), x)
    }

    /// Materialize as a power series of the given order (known zeros beyond
    /// the degree).
    pub fn to_power_series(&self, order: i64) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(coeffs.len() as i64) as usize, Rat::zero());
        PowerSeries::new(coeffs).truncated(order)
    }
}

/// sum_k p_k x^k for a finite coefficient list; precision comes from the
/// series operations, with no truncation error since the sum is finite.
/// (The initial cap only matters when the polynomial is constant: scalars
/// are exact, so any claim on them is sound.)
pub(crate) fn eval_poly(poly: &[Rat], x: &LaurentSeries) -> LaurentSeries {
    let cap = x.precision() + x.valuation().abs() + 2;
    let mut acc = LaurentSeries::zero(cap);
    if let Some(c0) = poly.first() {
        acc = acc.add_scalar(c0);
    }
    let mut pw: Option<LaurentSeries> = None;
    for c in poly.iter().skip(1) {
        let next = match &pw {
            None => x.clone(),
            Some(p) => p.mul(x),
        };
        if !c.is_zero() {
            acc = acc.add(&next.scalar_mul(c));
        }
        pw = Some(next);
    }
    acc
}

/// Exact polynomial product (coefficient lists from exponent 0).
pub(crate) fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

/// A finite Laurent polynomial, exact (no truncation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    valuation: i64,
    coeffs: Vec<Rat>,
}

impl LaurentPolynomial {
    /// Coefficients of `z^valuation, z^{valuation+1}, ...`; zeros at both
    /// ends are stripped.
    pub fn new(valuation: i64, coeffs: Vec<Rat>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            None => LaurentPolynomial {
                valuation: 0,
                coeffs: Vec::new(),
            },
            Some(lo) => {
                let hi = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                LaurentPolynomial {
                    valuation: valuation + lo as i64,
                    coeffs: coeffs[lo..=hi].to_vec(),
                }
            }
        }
    }

    pub fn zero() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn monomial(c: Rat, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent carrying a nonzero coefficient (0 for the zero
    /// polynomial).
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn max_exponent(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64 - 1
    }

    /// Total access: zero outside the stored window.
    pub fn coeff(&self, n: i64) -> Rat {
        if n < self.valuation || n > self.max_exponent() {
            Rat::zero()
        } else {
            self.coeffs[(n - self.valuation) as usize].clone()
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        let v = self.valuation;
        self.coeffs.iter().enumerate().filter_map(move |(i, c)| {
            (!c.is_zero()).then_some((v + i as i64, c))
        })
    }

    pub fn derivative(&self) -> LaurentPolynomial {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| &Rat::from_int(self.valuation + i as i64) * c)
            .collect();
        Self::new(self.valuation - 1, out)
    }

    /// Materialize at a chosen precision (exactness becomes known zeros).
    pub fn to_series(&self, precision: i64) -> LaurentSeries {
        let val = self.valuation.min(0).min(precision);
        let mut coeffs = vec![Rat::zero(); (precision - val).max(0) as usize];
        for (n, c) in self.terms() {
            if n < precision {
                coeffs[(n - val) as usize] = c.clone();
            }
        }
        LaurentSeries::new(val, coeffs)
    }
}

/// The e branches of H^e = q R(H), held as the single series g in the
/// ramified variable t = q^{1/e}.
#[derive(Clone, Debug)]
pub struct PuiseuxBranchSet {
    e: u32,
    g: PowerSeries,
}

impl PuiseuxBranchSet {
    pub fn ramification(&self) -> u32 {
        self.e
    }

    /// g in the variable t; the branches are g(zeta^k t), k = 1..e.
    pub fn branch_series(&self) -> &PowerSeries {
        &self.g
    }

    /// Truncation order of g in t.
    pub fn working_order(&self) -> i64 {
        self.g.order()
    }
}

/// Unique solution of H = q R(H): returns H with zero constant term and
/// linear coefficient r_0, correct to order n+1 (coefficients of q^0..q^n).
///
/// Order-by-order fixed-point iteration H <- q R(H); each pass gains at
/// least one correct order.
pub fn solve_unramified(r: &RSpec, n: i64) -> PowerSeries {
    assert!(n >= 1, "order must be >= 1");
    let prec = n + 1;
    let mut h = PowerSeries::zero(1);
    for ord in 2..=prec {
        let rh = r.eval_at(&h.to_laurent());
        h = rh
            .shift(1)
            .truncated(ord)
            .to_power_series()
            .expect("q R(H) has nonnegative exponents");
    }
    debug_assert!({
        let res = h.to_laurent().sub(&r.eval_at(&h.to_laurent()).shift(1));
        res.is_zero() && res.precision() >= prec
    });
    h
}

/// Solve g = t * rho * (R/r_0)^{1/e}(g) to t-order `n_t`. For e = 1 this
/// coincides with [`solve_unramified`]. The residual identity
/// g^e - t^e R(g) = 0 is checked to the working order before returning.
pub fn solve_ramified_branch(r: &RSpec, e: u32, n_t: i64) -> Result<PuiseuxBranchSet> {
    assert!(e >= 1, "ramification index must be >= 1");
    assert!(n_t >= 2, "working order must be >= 2");
    let rho = r.designated_root(e)?;
    let r0_inv = r.r0().recip().expect("r_0 nonzero by construction");
    let normalized = r.to_power_series(n_t).scalar_mul(&r0_inv);
    let s = normalized
        .pow_rational(&Rat::new(1, e as i64))?
        .scalar_mul(&rho);
    let s_l = s.to_laurent();

    let mut g = PowerSeries::zero(1);
    for ord in 2..=n_t {
        g = s_l
            .compose(&g)?
            .shift(1)
            .truncated(ord)
            .to_power_series()
            .expect("t S(g) has nonnegative exponents");
    }

    // Assert the root-free residual, not the fixed-point form: this is what
    // downstream symmetric functions actually rely on.
    let gl = g.to_laurent();
    let residual = gl.pow_i64(e as i64)?.sub(&r.eval_at(&gl).shift(e as i64));
    if !(residual.is_zero() && residual.precision() >= n_t) {
        return Err(Error::InternalConsistency(format!(
            "branch residual g^{e} - t^{e} R(g) does not vanish to order {n_t}: {}",
            residual.to_pretty("t")
        )));
    }
    Ok(PuiseuxBranchSet { e, g })
}
