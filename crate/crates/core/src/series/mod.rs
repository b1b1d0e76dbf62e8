//! Truncated formal power and Laurent series over exact rationals.
//!
//! Truncation is *absolute*: a series tracks an explicit precision bound, and
//! coefficients at or beyond that bound are UNKNOWN, not zero. Reading one is
//! an error ([`crate::Error::PrecisionExceeded`]), never a fabricated zero.
//!
//! [`PowerSeries`] stores coefficients of `z^0 .. z^{order-1}`; `order` is the
//! precision. [`LaurentSeries`] additionally has an integer `valuation` (the
//! exponent of its lowest stored term) and stores `valuation .. precision-1`.
//!
//! Invariants:
//! - the stored coefficient at `valuation` is nonzero, unless the series is
//!   zero to its precision, in which case `valuation == precision` and
//!   nothing is stored
//! - every operation propagates precision conservatively; the rule is stated
//!   on each operation

mod arith;
mod transcend;

use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Truncated series with integer valuation: coefficients of
/// `z^valuation .. z^{precision-1}` are known, later ones are not.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<Rat>,
    precision: i64,
}

impl LaurentSeries {
    /// Build from the coefficients of `z^valuation, z^{valuation+1}, ...`.
    /// The precision is `valuation + coeffs.len()`. Leading zeros are
    /// stripped into the valuation; an all-zero list yields the zero series.
    pub fn new(valuation: i64, coeffs: Vec<Rat>) -> Self {
        let precision = valuation + coeffs.len() as i64;
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => LaurentSeries {
                valuation: precision,
                coeffs: Vec::new(),
                precision,
            },
            Some(0) => LaurentSeries {
                valuation,
                coeffs,
                precision,
            },
            Some(k) => LaurentSeries {
                valuation: valuation + k as i64,
                coeffs: coeffs[k..].to_vec(),
                precision,
            },
        }
    }

    /// The zero series, known to be zero below `precision`.
    pub fn zero(precision: i64) -> Self {
        LaurentSeries {
            valuation: precision,
            coeffs: Vec::new(),
            precision,
        }
    }

    /// Constant `c + O(z^precision)`. With `precision <= 0` the constant
    /// term itself is unknown, so this degenerates to the zero series.
    pub fn constant(c: Rat, precision: i64) -> Self {
        if precision <= 0 || c.is_zero() {
            return Self::zero(precision);
        }
        let mut coeffs = vec![Rat::zero(); precision as usize];
        coeffs[0] = c;
        LaurentSeries {
            valuation: 0,
            coeffs,
            precision,
        }
    }

    /// `c * z^exponent + O(z^precision)`.
    pub fn monomial(c: Rat, exponent: i64, precision: i64) -> Self {
        if exponent >= precision || c.is_zero() {
            return Self::zero(precision);
        }
        let mut coeffs = vec![Rat::zero(); (precision - exponent) as usize];
        coeffs[0] = c;
        LaurentSeries {
            valuation: exponent,
            coeffs,
            precision,
        }
    }

    /// Exponent of the lowest known nonzero term. For the zero series this
    /// equals `precision` by convention.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Coefficients are known exactly for exponents below this bound.
    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// True if every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^n`. Zero below the valuation; an exponent at or
    /// beyond the precision is a `PrecisionExceeded` error.
    pub fn coeff(&self, n: i64) -> Result<Rat> {
        if n >= self.precision {
            return Err(Error::PrecisionExceeded {
                requested: n,
                precision: self.precision,
            });
        }
        if n < self.valuation {
            return Ok(Rat::zero());
        }
        Ok(self.coeffs[(n - self.valuation) as usize].clone())
    }

    /// Stored (exponent, coefficient) pairs, ascending, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        let v = self.valuation;
        self.coeffs.iter().enumerate().map(move |(i, c)| (v + i as i64, c))
    }

    /// Forget knowledge beyond `precision` (no-op if already coarser).
    pub fn truncated(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        let keep = (precision - self.valuation).max(0) as usize;
        Self::new(self.valuation.min(precision), self.coeffs[..keep].to_vec())
    }

    /// Multiply by `z^k`: shifts valuation and precision alike.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            precision: self.precision + k,
        }
    }

    /// Reinterpret as a power series. Fails if a nonzero coefficient sits at
    /// a negative exponent; pads known zeros between exponent 0 and the
    /// valuation otherwise.
    pub fn to_power_series(&self) -> Result<PowerSeries> {
        if self.valuation < 0 && !self.is_zero() {
            return Err(Error::InternalConsistency(format!(
                "nonzero coefficient at negative exponent {}",
                self.valuation
            )));
        }
        if self.precision <= 0 {
            return Ok(PowerSeries::new(Vec::new()));
        }
        let mut coeffs = vec![Rat::zero(); self.precision as usize];
        for (n, c) in self.terms() {
            coeffs[n as usize] = c.clone();
        }
        Ok(PowerSeries::new(coeffs))
    }

    /// Render as e.g. `1 - 1/2 q^2 + q^3 + O(q^8)`.
    pub fn to_pretty(&self, var: &str) -> String {
        pretty(self.terms(), self.precision, var)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pretty("z"))
    }
}

/// Truncated power series: coefficients of `z^0 .. z^{order-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zero(order: i64) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order.max(0) as usize],
        }
    }

    pub fn one(order: i64) -> Self {
        let mut s = Self::zero(order);
        if !s.coeffs.is_empty() {
            s.coeffs[0] = Rat::one();
        }
        s
    }

    /// Number of known coefficients; exponents `>= order` are unknown.
    pub fn order(&self) -> i64 {
        self.coeffs.len() as i64
    }

    /// Coefficient of `z^n`; `PrecisionExceeded` at or beyond the order.
    pub fn coeff(&self, n: i64) -> Result<Rat> {
        if n < 0 {
            return Ok(Rat::zero());
        }
        if n >= self.order() {
            return Err(Error::PrecisionExceeded {
                requested: n,
                precision: self.order(),
            });
        }
        Ok(self.coeffs[n as usize].clone())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Series agree to order `k`: both known at least that far and the
    /// coefficients of `z^0 .. z^{k-1}` coincide.
    pub fn agrees_to(&self, other: &Self, k: i64) -> bool {
        if self.order() < k || other.order() < k {
            return false;
        }
        (0..k as usize).all(|i| self.coeffs[i] == other.coeffs[i])
    }

    pub fn truncated(&self, order: i64) -> Self {
        let keep = (order.max(0) as usize).min(self.coeffs.len());
        PowerSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn to_laurent(&self) -> LaurentSeries {
        LaurentSeries::new(0, self.coeffs.clone())
    }

    pub fn to_pretty(&self, var: &str) -> String {
        pretty(
            self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c)),
            self.order(),
            var,
        )
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pretty("z"))
    }
}

fn pretty<'a>(terms: impl Iterator<Item = (i64, &'a Rat)>, precision: i64, var: &str) -> String {
    let mut out = String::new();
    for (n, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.numer().sign() == num::bigint::Sign::Minus;
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit_coeff = mag.is_one() && n != 0;
        if !unit_coeff {
            out.push_str(&mag.to_string());
        }
        if n != 0 {
            if !unit_coeff {
                out.push(' ');
            }
            out.push_str(var);
            if n != 1 {
                out.push_str(&format!("^{n}"));
            }
        }
    }
    if out.is_empty() {
        format!("O({var}^{precision})")
    } else {
        format!("{out} + O({var}^{precision})")
    }
}

// JSON form: power series are bare arrays of "p/q" strings ascending by
// exponent; Laurent series carry explicit valuation and precision.

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(PowerSeries::new(Vec::<Rat>::deserialize(deserializer)?))
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    valuation: i64,
    precision: i64,
    coeffs: Vec<Rat>,
}

impl Serialize for LaurentSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentRepr {
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(deserializer)?;
        if repr.valuation + repr.coeffs.len() as i64 != repr.precision {
            return Err(de::Error::custom(
                "laurent series: coeffs length must equal precision - valuation",
            ));
        }
        Ok(LaurentSeries::new(repr.valuation, repr.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let s = LaurentSeries::new(-1, vec![Rat::zero(), Rat::zero(), r(3, 1)]);
        assert_eq!(s.valuation(), 1);
        assert_eq!(s.precision(), 2);
        assert_eq!(s.coeff(0).unwrap(), Rat::zero());
        assert_eq!(s.coeff(1).unwrap(), r(3, 1));
    }

    #[test]
    fn zero_series_valuation_equals_precision() {
        let s = LaurentSeries::new(2, vec![Rat::zero(), Rat::zero()]);
        assert!(s.is_zero());
        assert_eq!(s.valuation(), 4);
        assert_eq!(s.precision(), 4);
    }

    #[test]
    fn reads_past_precision_error() {
        let s = LaurentSeries::new(0, vec![Rat::one()]);
        assert_eq!(
            s.coeff(1),
            Err(Error::PrecisionExceeded { requested: 1, precision: 1 })
        );
        let p = PowerSeries::one(3);
        assert!(p.coeff(2).is_ok());
        assert_eq!(
            p.coeff(3),
            Err(Error::PrecisionExceeded { requested: 3, precision: 3 })
        );
    }

    #[test]
    fn reads_below_valuation_are_known_zeros() {
        let s = LaurentSeries::monomial(r(1, 2), 3, 6);
        assert_eq!(s.coeff(-5).unwrap(), Rat::zero());
        assert_eq!(s.coeff(3).unwrap(), r(1, 2));
    }

    #[test]
    fn coefficient_extraction_examples() {
        // [z^2]{(1+z)^3} = 3
        let one_plus_z = LaurentSeries::new(0, vec![r(1, 1), r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)]);
        let cube = one_plus_z.mul(&one_plus_z).mul(&one_plus_z);
        assert_eq!(cube.coeff(2).unwrap(), r(3, 1));
        // [z^0]{R} is the constant term
        let rr = LaurentSeries::new(0, vec![r(5, 2), r(-1, 1), r(0, 1)]);
        assert_eq!(rr.coeff(0).unwrap(), r(5, 2));
        // [z^5]{(1+z)^2} = 0 by degree
        let square = one_plus_z.mul(&one_plus_z);
        assert_eq!(square.coeff(5).unwrap(), Rat::zero());
    }

    #[test]
    fn pretty_rendering() {
        let s = LaurentSeries::new(-1, vec![r(1, 1), r(0, 1), r(-1, 2), r(1, 1)]);
        assert_eq!(s.to_pretty("q"), "q^-1 - 1/2 q + q^2 + O(q^3)");
        assert_eq!(LaurentSeries::zero(4).to_pretty("q"), "O(q^4)");
        assert_eq!(PowerSeries::one(2).to_pretty("t"), "1 + O(t^2)");
    }

    #[test]
    fn laurent_json_round_trip() {
        let s = LaurentSeries::new(-2, vec![r(1, 1), r(-1, 3), Rat::zero()]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"valuation":-2,"precision":1,"coeffs":["1","-1/3","0"]}"#);
        let back: LaurentSeries = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn power_series_json_is_bare_array() {
        let p = PowerSeries::new(vec![r(1, 1), r(-1, 2)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1","-1/2"]"#);
    }
}
