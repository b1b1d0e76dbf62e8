//! log, exp and rational powers by the standard exact recurrences.
//!
//! With f = log(a), a_0 = 1:       n f_n = n a_n - sum_{k<n} k f_k a_{n-k}
//! With f = exp(a), a_0 = 0:       n f_n = sum_{k<=n} k a_k f_{n-k}
//! With f = a^r,    a_0 = 1:       n f_n = sum_{k<=n} ((r+1)k - n) a_k f_{n-k}
//!
//! All three preserve the input precision and stay inside the rationals.

use crate::error::{Error, Result};
use crate::rational::Rat;

use super::{LaurentSeries, PowerSeries};

impl LaurentSeries {
    /// Natural logarithm of a unit series with constant term 1.
    /// Satisfies `exp(log(a)) = a` to the same precision.
    pub fn log(&self) -> Result<PowerSeries> {
        if self.precision() < 1 {
            return Err(Error::PrecisionExceeded {
                requested: 0,
                precision: self.precision(),
            });
        }
        let a0 = self.coeff(0).expect("precision checked");
        if self.valuation() != 0 || !a0.is_one() {
            return Err(Error::ConstantTermNotOne { found: a0 });
        }
        let p = self.precision() as usize;
        let a = |k: usize| self.coeff(k as i64).expect("within precision");
        let mut f = vec![Rat::zero(); p];
        for n in 1..p {
            let mut s = Rat::zero();
            for k in 1..n {
                if !f[k].is_zero() {
                    s += &(&(&Rat::from_int(k as i64) * &f[k]) * &a(n - k));
                }
            }
            f[n] = &a(n) - &(&s / &Rat::from_int(n as i64));
        }
        Ok(PowerSeries::new(f))
    }
}

impl PowerSeries {
    /// Exponential of a series with zero constant term; the result has
    /// constant term 1 and the same order.
    pub fn exp(&self) -> Result<PowerSeries> {
        if self.order() < 1 {
            return Err(Error::PrecisionExceeded {
                requested: 0,
                precision: 0,
            });
        }
        let a0 = &self.coeffs()[0];
        if !a0.is_zero() {
            return Err(Error::ConstantTermNotZero { found: a0.clone() });
        }
        let p = self.order() as usize;
        let a = self.coeffs();
        let mut f = vec![Rat::zero(); p];
        f[0] = Rat::one();
        for n in 1..p {
            let mut s = Rat::zero();
            for k in 1..=n {
                if !a[k].is_zero() && !f[n - k].is_zero() {
                    s += &(&(&Rat::from_int(k as i64) * &a[k]) * &f[n - k]);
                }
            }
            f[n] = &s / &Rat::from_int(n as i64);
        }
        Ok(PowerSeries::new(f))
    }

    /// `a^r` for a series with constant term 1 and any rational exponent.
    /// Agrees with `exp(r * log(a))` and, for integer `r`, with repeated
    /// multiplication.
    pub fn pow_rational(&self, r: &Rat) -> Result<PowerSeries> {
        if self.order() < 1 {
            return Err(Error::PrecisionExceeded {
                requested: 0,
                precision: 0,
            });
        }
        let a0 = &self.coeffs()[0];
        if !a0.is_one() {
            return Err(Error::ConstantTermNotOne { found: a0.clone() });
        }
        let p = self.order() as usize;
        let a = self.coeffs();
        let r1 = r + &Rat::one();
        let mut f = vec![Rat::zero(); p];
        f[0] = Rat::one();
        for n in 1..p {
            let nn = Rat::from_int(n as i64);
            let mut s = Rat::zero();
            for k in 1..=n {
                if a[k].is_zero() || f[n - k].is_zero() {
                    continue;
                }
                let w = &(&r1 * &Rat::from_int(k as i64)) - &nn;
                s += &(&(&w * &a[k]) * &f[n - k]);
            }
            f[n] = &s / &nn;
        }
        Ok(PowerSeries::new(f))
    }

    /// Logarithm via the Laurent view (valuation 0, constant term 1).
    pub fn log(&self) -> Result<PowerSeries> {
        self.to_laurent().log()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn ps(cs: &[(i64, i64)]) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|&(n, d)| r(n, d)).collect())
    }

    #[test]
    fn log_mercator() {
        // log(1+z) = z - z^2/2 + z^3/3 - ...
        let a = ps(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1)]);
        let l = a.log().unwrap();
        assert_eq!(l.coeff(1).unwrap(), r(1, 1));
        assert_eq!(l.coeff(2).unwrap(), r(-1, 2));
        assert_eq!(l.coeff(3).unwrap(), r(1, 3));
        assert_eq!(l.coeff(4).unwrap(), r(-1, 4));
    }

    #[test]
    fn log_of_one_is_zero() {
        assert!(PowerSeries::one(5).log().unwrap().is_zero());
    }

    #[test]
    fn log_exp_round_trips() {
        // log(exp(z)) = z
        let z = ps(&[(0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let e = z.exp().unwrap();
        assert_eq!(e.coeff(2).unwrap(), r(1, 2));
        assert_eq!(e.coeff(3).unwrap(), r(1, 6));
        assert!(e.log().unwrap().agrees_to(&z, 6));

        // exp(-log(1-q)) = 1/(1-q)
        let a = ps(&[(1, 1), (-1, 1), (0, 1), (0, 1), (0, 1)]);
        let e = a.log().unwrap().scalar_mul(&r(-1, 1)).exp().unwrap();
        for n in 0..5 {
            assert_eq!(e.coeff(n).unwrap(), Rat::one());
        }
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert!(PowerSeries::zero(4).exp().unwrap().agrees_to(&PowerSeries::one(4), 4));
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        let a = ps(&[(1, 1), (1, 1)]);
        assert_eq!(a.exp(), Err(Error::ConstantTermNotZero { found: r(1, 1) }));
    }

    #[test]
    fn sqrt_of_one_plus_z() {
        // (1+z)^{1/2} = 1 + z/2 - z^2/8 + z^3/16 - ...; squaring recovers 1+z
        let a = ps(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let s = a.pow_rational(&r(1, 2)).unwrap();
        assert_eq!(s.coeff(1).unwrap(), r(1, 2));
        assert_eq!(s.coeff(2).unwrap(), r(-1, 8));
        assert_eq!(s.coeff(3).unwrap(), r(1, 16));
        assert!(s.mul(&s).agrees_to(&a, 6));
    }

    #[test]
    fn pow_one_is_identity_and_minus_one_is_invert() {
        let a = ps(&[(1, 1), (3, 1), (-1, 2), (0, 1)]);
        assert_eq!(a.pow_rational(&Rat::one()).unwrap(), a);
        let pm1 = a.pow_rational(&r(-1, 1)).unwrap();
        let inv = a.to_laurent().invert().unwrap().to_power_series().unwrap();
        assert!(pm1.agrees_to(&inv, 4));
    }

    #[test]
    fn pow_rejects_constant_not_one() {
        let a = ps(&[(2, 1), (1, 1)]);
        assert_eq!(
            a.pow_rational(&r(1, 2)),
            Err(Error::ConstantTermNotOne { found: r(2, 1) })
        );
        let pole = LaurentSeries::monomial(Rat::one(), -1, 2);
        assert!(pole.log().is_err());
    }
}
