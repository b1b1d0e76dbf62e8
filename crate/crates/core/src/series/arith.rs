//! Ring arithmetic, inversion, differentiation and composition.
//!
//! Precision propagation per operation (v = valuation, p = precision):
//! - add/sub:  p = min(p_a, p_b)
//! - mul:      p = min(p_a + v_b, p_b + v_a), v = v_a + v_b
//! - invert:   p = p_a - 2 v_a, v = -v_a
//! - derivative: p = p_a - 1
//! - compose(a, b) with w = v_b >= 1: p = min(w * p_a, term precisions),
//!   where b^n carries p_b + (n-1) w for n > 0 and p_b - (n+1) w for n < 0
//!
//! Scalars are exact and never lower precision.

use crate::error::{Error, Result};
use crate::rational::Rat;

use super::{LaurentSeries, PowerSeries};

impl LaurentSeries {
    pub fn add(&self, other: &Self) -> Self {
        let prec = self.precision.min(other.precision);
        let val = self.valuation.min(other.valuation).min(prec);
        let mut out = vec![Rat::zero(); (prec - val) as usize];
        for (n, c) in self.terms() {
            if n < prec {
                out[(n - val) as usize] += c;
            }
        }
        for (n, c) in other.terms() {
            if n < prec {
                out[(n - val) as usize] += c;
            }
        }
        Self::new(val, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = (self.precision + other.valuation).min(other.precision + self.valuation);
        let val = (self.valuation + other.valuation).min(prec);
        let mut out = vec![Rat::zero(); (prec - val) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ea = self.valuation + i as i64;
            if ea + other.valuation >= prec {
                break;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                let e = ea + other.valuation + j as i64;
                if e >= prec {
                    break;
                }
                if !y.is_zero() {
                    out[(e - val) as usize] += &(x * y);
                }
            }
        }
        Self::new(val, out)
    }

    pub fn scalar_mul(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.precision);
        }
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            precision: self.precision,
        }
    }

    pub fn add_scalar(&self, c: &Rat) -> Self {
        self.add(&Self::constant(c.clone(), self.precision))
    }

    /// Multiplicative inverse. The result satisfies
    /// `a * a.invert() = 1` to precision `p - 2v`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rel = self.coeffs.len();
        let inv0 = self.coeffs[0].recip()?;
        let mut out = vec![Rat::zero(); rel];
        out[0] = inv0.clone();
        for n in 1..rel {
            let mut s = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    s += &(&self.coeffs[k] * &out[n - k]);
                }
            }
            out[n] = -(&inv0 * &s);
        }
        Ok(Self::new(-self.valuation, out))
    }

    /// Termwise derivative; precision drops by one.
    pub fn derivative(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| &Rat::from_int(self.valuation + i as i64) * c)
            .collect();
        Self::new(self.valuation - 1, out)
    }

    /// Integer power; negative exponents go through [`Self::invert`].
    pub fn pow_i64(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::constant(Rat::one(), self.precision - self.valuation));
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = base.clone();
        for _ in 1..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Composition `self(inner)`. The inner series must have zero constant
    /// term; when `self` has negative valuation the inner series must also be
    /// nonzero so its negative powers exist.
    pub fn compose(&self, inner: &PowerSeries) -> Result<LaurentSeries> {
        let b = inner.to_laurent();
        if !b.is_zero() && b.valuation < 1 {
            return Err(Error::CompositionDomain {
                found: b.coeffs[0].clone(),
            });
        }
        if b.is_zero() {
            if self.valuation < 0 {
                return Err(Error::DivisionByZero);
            }
            if self.precision <= 0 {
                return Ok(Self::zero(self.precision.min(b.precision)));
            }
            let a0 = self.coeff(0).expect("precision checked");
            return Ok(Self::constant(a0, b.precision));
        }
        let w = b.valuation;
        // Dropping the unknown tail of `self` costs O(z^{w * p_a}).
        let cap = w.saturating_mul(self.precision);
        let mut acc = Self::zero(cap);

        if self.valuation < 0 {
            let binv = b.invert()?;
            let mut pw = binv.clone();
            for n in 1..=(-self.valuation) {
                // exponents at or beyond the precision are unknown; their
                // contribution is already covered by the truncation cap
                if -n < self.precision {
                    let c = self.coeff(-n).expect("stored range");
                    if !c.is_zero() {
                        acc = acc.add(&pw.scalar_mul(&c));
                    }
                }
                if n < -self.valuation {
                    pw = pw.mul(&binv);
                }
            }
        }
        if self.valuation <= 0 && self.precision > 0 {
            let a0 = self.coeff(0).expect("stored range");
            acc = acc.add_scalar(&a0);
        }
        if self.precision > 1 {
            let mut pw = b.clone();
            for n in 1..self.precision {
                if n >= self.valuation {
                    let c = self.coeff(n).expect("stored range");
                    if !c.is_zero() {
                        acc = acc.add(&pw.scalar_mul(&c));
                    }
                }
                if n + 1 < self.precision {
                    if pw.valuation >= acc.precision() && pw.precision >= acc.precision() {
                        break;
                    }
                    pw = pw.mul(&b);
                }
            }
        }
        Ok(acc)
    }
}

impl std::ops::Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}

impl PowerSeries {
    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order()) as usize;
        let coeffs = (0..n)
            .map(|i| &self.coeffs()[i] + &other.coeffs()[i])
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order()) as usize;
        let coeffs = (0..n)
            .map(|i| &self.coeffs()[i] - &other.coeffs()[i])
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.to_laurent()
            .mul(&other.to_laurent())
            .to_power_series()
            .expect("product of power series has no pole")
    }

    pub fn scalar_mul(&self, c: &Rat) -> Self {
        Self::new(self.coeffs().iter().map(|x| x * c).collect())
    }

    /// Multiply by `z^k`, k >= 0; order grows by k.
    pub fn shift_up(&self, k: i64) -> Self {
        let mut coeffs = vec![Rat::zero(); k as usize];
        coeffs.extend_from_slice(self.coeffs());
        Self::new(coeffs)
    }
}
