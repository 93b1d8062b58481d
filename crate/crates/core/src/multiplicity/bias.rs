//! The bias `d = a⁺ − a⁻` between the two halves of a split representation
//! `V_{φ(μ)} = V⁺ ⊕ V⁻`, evaluated at the standard representative of the
//! cycle type `μ` (distinct odd parts).
//!
//! Writing the defining sum through the Jacobi symbol gives
//!
//! ```text
//! d = √(εM)/m · Σ_{l ∈ (Z/m)^*} (l | M) ζ_m^{-il}
//! ```
//!
//! which factors over the primes of `m` into Gauss sums and Ramanujan sums.
//! Replacing `l` by `-l` turns `ζ^{-il}` into `ζ^{il}` at the cost of a
//! factor `(-1 | p)` per odd-exponent prime; the closed form below carries it
//! as `(-u·h | p)`.

use num_complex::Complex64;
use num_rational::Ratio;
use serde::Serialize;
use std::f64::consts::TAU;

use crate::combinatorics::{CycleTypeData, Partition};
use crate::error::{Error, Result};
use crate::number_theory::{
    gauss_sum, jacobi, local_shape, phase_product, phase_to_integer, square_split, GaussPhase,
};

/// How `i` sits modulo `p^f` for one prime of the order: `i ≡ u·p^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeCondition {
    pub p: u64,
    /// Exponent of `p` in the product of the parts.
    pub e: u32,
    /// Exponent of `p` in the order.
    pub f: u32,
    pub d: u32,
    pub u: u64,
    /// Whether `d` meets the non-vanishing condition for this prime:
    /// `d = f - 1` for odd `e`, `d ∈ {f - 1, f}` for even `e`.
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiasResult {
    pub mu: Partition,
    pub i: i64,
    /// Signed bias `a⁺ − a⁻` at the `Plus` class.
    pub value: i128,
    /// `|d|` from the magnitude formula, computed separately from `value`.
    pub abs_formula: u128,
    pub conditions: Vec<PrimeCondition>,
}

impl BiasResult {
    pub fn nonzero(&self) -> bool {
        self.conditions.iter().all(|c| c.satisfied)
    }
}

fn require_distinct_odd(mu: &Partition) -> Result<CycleTypeData> {
    if mu.is_empty() || !mu.has_distinct_odd_parts() {
        return Err(Error::NotApplicable(format!(
            "bias needs a cycle type with distinct odd parts, got ({mu})"
        )));
    }
    Ok(CycleTypeData::new(mu))
}

fn conditions(data: &CycleTypeData, i: i64) -> Vec<PrimeCondition> {
    data.primes
        .iter()
        .enumerate()
        .map(|(j, pd)| {
            let (d, u) = local_shape(pd.p, pd.f, i);
            let odd = j < data.odd_count;
            let satisfied = if odd {
                d + 1 == pd.f
            } else {
                d + 1 == pd.f || d == pd.f
            };
            PrimeCondition {
                p: pd.p,
                e: pd.e,
                f: pd.f,
                d,
                u,
                satisfied,
            }
        })
        .collect()
}

/// `√(M / Π_{odd e} p) · Π_{d = f}(p − 1) / Π_{even e} p`, or 0 when some
/// prime fails its condition.
fn magnitude(data: &CycleTypeData, conds: &[PrimeCondition]) -> Result<u128> {
    if !conds.iter().all(|c| c.satisfied) {
        return Ok(0);
    }
    let odd_radical: u64 = data.odd_primes().iter().map(|p| p.p).product();
    let (root, rest) = square_split(data.product / odd_radical);
    if rest != 1 {
        return Err(Error::Internal(format!(
            "M / Πp = {} is not a square",
            data.product / odd_radical
        )));
    }
    let mut num = root as u128;
    let mut den = 1u128;
    for (j, c) in conds.iter().enumerate() {
        if j >= data.odd_count {
            den *= c.p as u128;
            if c.d == c.f {
                num *= (c.p - 1) as u128;
            }
        }
    }
    if !num.is_multiple_of(den) {
        return Err(Error::Internal(format!(
            "|d| = {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

/// Closed-form bias for cycle type `mu` (distinct odd parts) at exponent `i`.
pub fn bias(mu: &Partition, i: i64) -> Result<BiasResult> {
    let data = require_distinct_odd(mu)?;
    let conds = conditions(&data, i);
    let abs_formula = magnitude(&data, &conds)?;
    let value = if conds.iter().all(|c| c.satisfied) {
        let eps = data.epsilon.expect("distinct odd parts") as i128;
        let m = data.order as i128;
        let mut factors = vec![
            GaussPhase::sqrt(eps * data.product as i128),
            GaussPhase::rational(Ratio::new(1, m)),
        ];
        for (j, c) in conds.iter().enumerate() {
            let pf1 = c.p.pow(c.f - 1) as i128;
            if j < data.odd_count {
                let h = data.order / c.p.pow(c.f);
                let residue = (c.u as i128 * h as i128) % c.p as i128;
                let chi = jacobi(-(residue as i64), c.p as i64)? as i128;
                factors.push(GaussPhase::integer(pf1 * chi));
                factors.push(gauss_sum(c.p)?);
            } else {
                factors.push(GaussPhase::integer(-pf1));
                if c.d == c.f {
                    factors.push(GaussPhase::integer(1 - c.p as i128));
                }
            }
        }
        phase_to_integer(&phase_product(&factors))?
    } else {
        0
    };
    if value.unsigned_abs() != abs_formula {
        return Err(Error::Internal(format!(
            "bias {value} disagrees with magnitude formula {abs_formula} for ({mu}), i = {i}"
        )));
    }
    Ok(BiasResult {
        mu: mu.clone(),
        i,
        value,
        abs_formula,
        conditions: conds,
    })
}

/// Biases for every `i` in `0..m`.
pub fn bias_vector(mu: &Partition) -> Result<Vec<BiasResult>> {
    let data = require_distinct_odd(mu)?;
    (0..data.order as i64).map(|i| bias(mu, i)).collect()
}

pub const ORACLE_TOLERANCE: f64 = 1e-6;

/// Floating-point evaluation of `√(εM)/m · Σ_{l ∈ Z/m} (l | M) ζ_m^{-il}`.
pub fn bias_oracle(mu: &Partition, i: i64) -> Result<i64> {
    let data = require_distinct_odd(mu)?;
    let m = data.order as i64;
    let big_m = data.product as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 0..m {
        let s = jacobi(l, big_m)?;
        if s == 0 {
            continue;
        }
        let angle = -TAU * ((i * l).rem_euclid(m) as f64) / m as f64;
        sum += Complex64::from_polar(s as f64, angle);
    }
    let eps = data.epsilon.expect("distinct odd parts");
    let root = if eps > 0 {
        Complex64::new((big_m as f64).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (big_m as f64).sqrt())
    };
    let value = root * sum / m as f64;
    let rounded = value.re.round();
    if value.im.abs() > ORACLE_TOLERANCE || (value.re - rounded).abs() > ORACLE_TOLERANCE {
        return Err(Error::Internal(format!(
            "bias oracle for ({mu}), i = {i} is not near an integer: {value}"
        )));
    }
    Ok(rounded as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let mu = p("15,9,3");
        for i in [0, 1, 15] {
            assert_eq!(bias(&mu, i).unwrap().value, 0);
        }
        assert_eq!(bias(&mu, 3).unwrap().value.abs(), 3);
        assert_eq!(bias(&mu, 9).unwrap().value.abs(), 6);
        assert_eq!(bias_oracle(&mu, 0).unwrap(), 0);
    }

    #[test]
    fn three_cycle() {
        let v: Vec<i128> = (0..3).map(|i| bias(&p("3"), i).unwrap().value).collect();
        assert_eq!(v, vec![0, 1, -1]);
        let o: Vec<i64> = (0..3).map(|i| bias_oracle(&p("3"), i).unwrap()).collect();
        assert_eq!(o, vec![0, 1, -1]);
    }

    #[test]
    fn five_three() {
        for i in 0..15i64 {
            let d = bias(&p("5,3"), i).unwrap();
            let coprime = i % 3 != 0 && i % 5 != 0;
            assert_eq!(d.value.abs(), if coprime { 1 } else { 0 }, "i = {i}");
            assert_eq!(d.value as i64, bias_oracle(&p("5,3"), i).unwrap());
        }
    }

    #[test]
    fn rejects_bad_cycle_types() {
        assert!(bias(&p("3,3"), 0).is_err());
        assert!(bias(&p("4"), 0).is_err());
        assert!(bias_oracle(&p("5,2"), 0).is_err());
        assert!(bias(&Partition::empty(), 0).is_err());
    }

    #[test]
    fn conditions_recorded() {
        let r = bias(&p("15,9,3"), 9).unwrap();
        assert!(r.nonzero());
        let five = r.conditions.iter().find(|c| c.p == 5).unwrap();
        assert_eq!((five.e, five.f, five.d), (1, 1, 0));
        let three = r.conditions.iter().find(|c| c.p == 3).unwrap();
        assert_eq!((three.e, three.f, three.d), (4, 2, 2));
        let r = bias(&p("15,9,3"), 1).unwrap();
        assert!(!r.nonzero());
        assert_eq!(r.abs_formula, 0);
    }
}
