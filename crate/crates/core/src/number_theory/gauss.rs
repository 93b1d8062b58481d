use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{is_prime, square_split};
use crate::error::{Error, Result};

/// An exact number `r · i^k · √q` with `r` rational, `k` mod 4 and `q` a
/// positive square-free integer.
///
/// Products of such numbers stay in the same form, which is all the bias
/// formula needs: it is a product of Gauss sums, square roots and rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussPhase {
    radicand: u64,
    quarter_turns: u8,
    rational_factor: Ratio<i128>,
}

impl GaussPhase {
    pub fn zero() -> Self {
        GaussPhase {
            radicand: 1,
            quarter_turns: 0,
            rational_factor: Ratio::zero(),
        }
    }

    pub fn one() -> Self {
        Self::rational(Ratio::one())
    }

    pub fn rational(r: Ratio<i128>) -> Self {
        GaussPhase {
            radicand: 1,
            quarter_turns: 0,
            rational_factor: r,
        }
        .normalized()
    }

    pub fn integer(v: i128) -> Self {
        Self::rational(Ratio::from_integer(v))
    }

    /// `r · i^k · √q` for an arbitrary positive `q`; square factors of `q` are
    /// pulled into `r`.
    pub fn new(rational_factor: Ratio<i128>, quarter_turns: i64, radicand: u64) -> Result<Self> {
        if radicand == 0 {
            return Ok(Self::zero());
        }
        let (s, q) = square_split(radicand);
        Ok(GaussPhase {
            radicand: q,
            quarter_turns: quarter_turns.rem_euclid(4) as u8,
            rational_factor: rational_factor * Ratio::from_integer(s as i128),
        }
        .normalized())
    }

    /// Principal square root of a signed integer: `√x` for `x >= 0` and
    /// `i·√|x|` for `x < 0`.
    pub fn sqrt(x: i128) -> Self {
        let turns = if x < 0 { 1 } else { 0 };
        Self::new(Ratio::one(), turns, x.unsigned_abs() as u64).expect("positive radicand")
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn quarter_turns(&self) -> u8 {
        self.quarter_turns
    }

    pub fn rational_factor(&self) -> &Ratio<i128> {
        &self.rational_factor
    }

    pub fn is_zero(&self) -> bool {
        self.rational_factor.is_zero()
    }

    fn normalized(mut self) -> Self {
        if self.rational_factor.is_zero() {
            return Self {
                radicand: 1,
                quarter_turns: 0,
                rational_factor: Ratio::zero(),
            };
        }
        // i^2 = -1 moves into the rational factor.
        if self.quarter_turns >= 2 {
            self.quarter_turns -= 2;
            self.rational_factor = -self.rational_factor;
        }
        self
    }

    pub fn mul(&self, other: &GaussPhase) -> GaussPhase {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // √a·√b = g·√((a/g)(b/g)) with g = gcd(a, b); both inputs square-free
        // keeps the result square-free.
        let g = self.radicand.gcd(&other.radicand);
        let radicand = (self.radicand / g) * (other.radicand / g);
        GaussPhase {
            radicand,
            quarter_turns: self.quarter_turns + other.quarter_turns,
            rational_factor: self.rational_factor
                * other.rational_factor
                * Ratio::from_integer(g as i128),
        }
        .normalized()
    }

    /// Absolute value `|r|·√q` as a float.
    pub fn abs_f64(&self) -> f64 {
        self.rational_factor.abs().to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }

    pub fn to_complex(&self) -> Complex64 {
        let mag = self.rational_factor.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt();
        match self.quarter_turns {
            0 => Complex64::new(mag, 0.0),
            _ => Complex64::new(0.0, mag),
        }
    }
}

impl fmt::Display for GaussPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational_factor)?;
        if self.quarter_turns == 1 {
            f.write_str("·i")?;
        }
        if self.radicand != 1 {
            write!(f, "·√{}", self.radicand)?;
        }
        Ok(())
    }
}

/// The quadratic Gauss sum `g(p) = Σ_l (l|p) ζ_p^l`: `√p` for `p ≡ 1 (mod 4)`
/// and `i√p` for `p ≡ 3 (mod 4)`.
pub fn gauss_sum(p: u64) -> Result<GaussPhase> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotApplicable(format!("{p} is not an odd prime")));
    }
    let turns = if p % 4 == 1 { 0 } else { 1 };
    GaussPhase::new(Ratio::one(), turns, p)
}

pub fn phase_product<'a, I>(factors: I) -> GaussPhase
where
    I: IntoIterator<Item = &'a GaussPhase>,
{
    factors
        .into_iter()
        .fold(GaussPhase::one(), |acc, x| acc.mul(x))
}

/// Reads off an integer value; fails when a non-real factor, a surviving
/// square root, or a fractional part remains.
pub fn phase_to_integer(x: &GaussPhase) -> Result<i128> {
    if x.is_zero() {
        return Ok(0);
    }
    if x.radicand != 1 || x.quarter_turns != 0 || !x.rational_factor.is_integer() {
        return Err(Error::Internal(format!(
            "non-real or irrational residue {x}"
        )));
    }
    Ok(x.rational_factor.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::TAU;

    fn numeric_gauss(p: u64) -> Complex64 {
        (1..p)
            .map(|l| {
                let t = TAU * l as f64 / p as f64;
                Complex64::new(t.cos(), t.sin())
                    * super::super::jacobi(l as i64, p as i64).unwrap() as f64
            })
            .sum()
    }

    #[test]
    fn squares_of_gauss_sums() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let g = gauss_sum(p).unwrap();
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(phase_to_integer(&g.mul(&g)).unwrap(), sign * p as i128);
            assert!((g.to_complex() - numeric_gauss(p)).norm() < 1e-9, "g({p})");
        }
    }

    #[test]
    fn product_examples() {
        let i3 = gauss_sum(3).unwrap();
        let r5 = gauss_sum(5).unwrap();
        assert_eq!(phase_to_integer(&phase_product([&i3, &i3])).unwrap(), -3);
        assert_eq!(phase_to_integer(&phase_product([&r5, &r5])).unwrap(), 5);
        let mixed = phase_product([&i3, &r5]);
        assert!(phase_to_integer(&mixed).unwrap_err().is_internal());
        assert_eq!(mixed.radicand(), 15);
    }

    #[test]
    fn sqrt_extracts_squares() {
        let s = GaussPhase::sqrt(-405);
        assert_eq!(s.radicand(), 5);
        assert_eq!(s.quarter_turns(), 1);
        assert_eq!(*s.rational_factor(), Ratio::from_integer(9));
        assert_eq!(phase_to_integer(&GaussPhase::sqrt(225)).unwrap(), 15);
        let half = GaussPhase::rational(Ratio::new(1, 2));
        assert!(phase_to_integer(&half).is_err());
    }
}
