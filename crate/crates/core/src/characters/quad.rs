use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact number `(a + b·√D)/2` with `D` square-free (or `0` when `b = 0`).
/// For `D < 0` the root is `i·√|D|`.
///
/// Alternating group character values all have this shape: split values live
/// in `Q(√D)` with `D ≡ 1 (mod 4)`, every other value is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadValue {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "D")]
    pub d: i64,
}

impl QuadValue {
    pub fn integer(v: i64) -> Self {
        QuadValue {
            a: 2 * v,
            b: 0,
            d: 0,
        }
    }

    /// `v / 2`, kept exact even when `v` is odd.
    pub fn half(v: i64) -> Self {
        QuadValue { a: v, b: 0, d: 0 }
    }

    /// `(a + b·√d)/2`; `d = 1` or `b = 0` fold into the rational part.
    pub fn new(a: i64, b: i64, d: i64) -> Self {
        if b == 0 || d == 0 {
            QuadValue { a, b: 0, d: 0 }
        } else if d == 1 {
            QuadValue {
                a: a + b,
                b: 0,
                d: 0,
            }
        } else {
            QuadValue { a, b, d }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn rational_part(&self) -> Ratio<i64> {
        Ratio::new(self.a, 2)
    }

    /// The integer value, when the number is one.
    pub fn as_integer(&self) -> Option<i64> {
        (self.b == 0 && self.a % 2 == 0).then_some(self.a / 2)
    }

    /// Galois conjugate `(a - b√D)/2`; complex conjugation when `D < 0`.
    pub fn conjugate(&self) -> Self {
        QuadValue {
            a: self.a,
            b: -self.b,
            d: self.d,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let root = if self.d < 0 {
            Complex64::new(0.0, (-self.d as f64).sqrt())
        } else {
            Complex64::new((self.d as f64).sqrt(), 0.0)
        };
        (Complex64::new(self.a as f64, 0.0) + root * self.b as f64) / 2.0
    }

    fn common_field(&self, other: &QuadValue) -> Result<i64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::NotApplicable(format!(
                "values in Q(√{d}) and Q(√{e}) cannot be combined"
            ))),
        }
    }

    pub fn checked_add(&self, other: &QuadValue) -> Result<QuadValue> {
        let d = self.common_field(other)?;
        Ok(QuadValue::new(self.a + other.a, self.b + other.b, d))
    }

    /// Product within one quadratic field. Fails when the result leaves the
    /// `(a + b√D)/2` lattice, which cannot happen for algebraic integers with
    /// `D ≡ 1 (mod 4)`.
    pub fn checked_mul(&self, other: &QuadValue) -> Result<QuadValue> {
        let d = self.common_field(other)?;
        let ra = self.a * other.a + self.b * other.b * d;
        let rb = self.a * other.b + self.b * other.a;
        if ra % 2 != 0 || rb % 2 != 0 {
            return Err(Error::NotApplicable(format!(
                "product of {self} and {other} is not of the form (a + b√D)/2"
            )));
        }
        Ok(QuadValue::new(ra / 2, rb / 2, d))
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        if self.b == 0 {
            return write!(f, "{}/2", self.a);
        }
        let sign = if self.b < 0 { '-' } else { '+' };
        let b = self.b.abs();
        if b == 1 {
            write!(f, "({} {sign} √{})/2", self.a, self.d)
        } else {
            write!(f, "({} {sign} {b}√{})/2", self.a, self.d)
        }
    }
}

/// A sum of [`QuadValue`]s from possibly different quadratic fields.
///
/// Square roots of distinct square-free integers are linearly independent
/// over the rationals, so a rational total has every irrational coefficient
/// equal to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadSum {
    /// Twice the rational part.
    rational_halves: i128,
    /// Twice the coefficient of each `√D`.
    irrational_halves: BTreeMap<i64, i128>,
}

impl QuadSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_scaled(&mut self, v: &QuadValue, k: i128) {
        self.rational_halves += k * v.a as i128;
        if v.b != 0 {
            *self.irrational_halves.entry(v.d).or_insert(0) += k * v.b as i128;
        }
    }

    pub fn add(&mut self, v: &QuadValue) {
        self.add_scaled(v, 1);
    }

    /// The rational value, failing if some `√D` survives.
    pub fn rational(&self) -> Result<Ratio<i128>> {
        if let Some((d, c)) = self.irrational_halves.iter().find(|(_, c)| **c != 0) {
            return Err(Error::Internal(format!(
                "irrational residue {c}/2·√{d} in a sum expected to be rational"
            )));
        }
        Ok(Ratio::new(self.rational_halves, 2))
    }
}
