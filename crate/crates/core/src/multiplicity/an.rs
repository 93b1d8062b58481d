//! Eigenvalue multiplicities for alternating groups.
//!
//! A `Whole` irrep restricts from `S_n`, so its multiplicities are those of
//! `V_λ`. A split pair `V⁺ ⊕ V⁻ = V_λ` shares `a^λ` evenly except when the
//! class splits and `λ = φ(μ)`; there the two halves differ by the bias.

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;
use std::f64::consts::TAU;

use super::bias::bias;
use super::sn::{sn_multiplicities, sn_multiplicity};
use crate::characters::{an_character, AnClass, AnIrrep, ClassTag, IrrepTag};
use crate::combinatorics::{cycle_order, phi, CycleTypeData, Partition, Permutation};
use crate::error::{Error, Result};
use crate::number_theory::jacobi;

/// Multiplicities of `ζ_m^i`, `i = 0..m`, for one (representation, class)
/// pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityVector {
    pub irrep: String,
    pub class: String,
    pub order: u64,
    pub entries: Vec<u64>,
}

impl MultiplicityVector {
    pub fn dimension(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// `Σ a_i ζ_m^i`, the character value at the class.
    pub fn trace(&self) -> Complex64 {
        let m = self.order as f64;
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| Complex64::from_polar(a as f64, TAU * i as f64 / m))
            .sum()
    }

    /// Whether every `m`-th root of unity occurs.
    pub fn is_full(&self) -> bool {
        self.entries.iter().all(|&a| a > 0)
    }
}

pub fn sn_multiplicity_vector(lambda: &Partition, mu: &Partition) -> Result<MultiplicityVector> {
    Ok(MultiplicityVector {
        irrep: lambda.to_string(),
        class: mu.to_string(),
        order: cycle_order(mu),
        entries: sn_multiplicities(lambda, mu)?,
    })
}

fn check_sizes(v: &AnIrrep, c: &AnClass) -> Result<()> {
    if v.degree() != c.degree() {
        return Err(Error::SizeMismatch {
            left: v.degree(),
            right: c.degree(),
        });
    }
    Ok(())
}

fn halve(a: u64, what: &str) -> Result<u64> {
    if a.is_odd() {
        return Err(Error::Internal(format!(
            "{what} = {a} is odd and cannot be halved"
        )));
    }
    Ok(a / 2)
}

/// Whether `(V, C)` is the case where the two halves of `V_λ` see different
/// multiplicities: `V` split, `C` split and `λ = φ(μ)`.
pub fn is_biased_pair(v: &AnIrrep, c: &AnClass) -> Result<bool> {
    Ok(v.is_split() && c.tag() != ClassTag::Unsplit && phi(c.mu())? == *v.lambda())
}

/// Multiplicity of `ζ_m^i` as an eigenvalue of the elements of `C` acting
/// on `V`.
pub fn an_multiplicity(v: &AnIrrep, c: &AnClass, i: i64) -> Result<u64> {
    check_sizes(v, c)?;
    let a = sn_multiplicity(v.lambda(), c.mu(), i)?;
    if v.tag() == IrrepTag::Whole {
        return Ok(a);
    }
    if is_biased_pair(v, c)? {
        // Conjugating by an odd permutation swaps both V± and C±, so the bias
        // seen by (V, C) is the Plus/Plus bias times both tag signs.
        let d = bias(c.mu(), i)?.value * (v.tag().sign() * c.tag().sign()) as i128;
        let total = a as i128 + d;
        if total < 0 || total % 2 != 0 {
            return Err(Error::Internal(format!(
                "a + d = {a} + {d} is not a non-negative even number"
            )));
        }
        return Ok((total / 2) as u64);
    }
    halve(a, "a^λ")
}

pub fn an_multiplicity_vector(v: &AnIrrep, c: &AnClass) -> Result<MultiplicityVector> {
    check_sizes(v, c)?;
    let m = cycle_order(c.mu());
    let entries = (0..m as i64)
        .map(|i| an_multiplicity(v, c, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityVector {
        irrep: v.to_string(),
        class: c.to_string(),
        order: m,
        entries,
    })
}

pub const ORACLE_TOLERANCE: f64 = 1e-6;

/// Independent evaluation of `(1/m) Σ_j χ_V(σ^j) ζ_m^{-ij}` with `σ` an
/// explicit representative of `C`: the class of every power is located by
/// permutation arithmetic and its character value taken from the table
/// entry, then the sum is done in floating point.
pub fn an_multiplicity_oracle(v: &AnIrrep, c: &AnClass, i: i64) -> Result<u64> {
    check_sizes(v, c)?;
    let sigma = c.representative();
    let m = cycle_order(c.mu()) as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let class = AnClass::containing(&sigma.pow(j as u64))?;
        let chi = an_character(v, &class)?.to_complex();
        let angle = -TAU * ((i * j).rem_euclid(m)) as f64 / m as f64;
        sum += chi * Complex64::from_polar(1.0, angle);
    }
    let value = sum / m as f64;
    let rounded = value.re.round();
    if value.im.abs() > ORACLE_TOLERANCE
        || (value.re - rounded).abs() > ORACLE_TOLERANCE
        || rounded < 0.0
    {
        return Err(Error::Internal(format!(
            "multiplicity oracle for {v} at {c}, i = {i} is not a non-negative integer: {value}"
        )));
    }
    Ok(rounded as u64)
}

/// Whether `w^i` lies in the same `A_n`-class as `w`, for `w` of cycle type
/// with distinct odd parts and `i` a unit modulo its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PowerClass {
    Same,
    Swapped,
}

fn check_power(mu: &Partition, i: i64) -> Result<CycleTypeData> {
    if mu.is_empty() || !mu.has_distinct_odd_parts() {
        return Err(Error::NotApplicable(format!(
            "power conjugacy needs a cycle type with distinct odd parts, got ({mu})"
        )));
    }
    let data = CycleTypeData::new(mu);
    if i.unsigned_abs().gcd(&data.order) != 1 {
        return Err(Error::NotApplicable(format!(
            "gcd({i}, {}) ≠ 1, so the power has a different cycle type",
            data.order
        )));
    }
    Ok(data)
}

/// Decides the class of `w^i` from the Jacobi symbol `(i | M)`.
pub fn power_conjugacy(mu: &Partition, i: i64) -> Result<PowerClass> {
    let data = check_power(mu, i)?;
    Ok(if jacobi(i, data.product as i64)? == 1 {
        PowerClass::Same
    } else {
        PowerClass::Swapped
    })
}

/// Decides the class of `w^i` from the parity of an explicit conjugator.
pub fn power_conjugacy_oracle(mu: &Partition, i: i64) -> Result<PowerClass> {
    let data = check_power(mu, i)?;
    let w = Permutation::standard_rep(mu);
    let e = i.rem_euclid(data.order as i64) as u64;
    let rho = w
        .conjugator(&w.pow(e))?
        .ok_or_else(|| Error::Internal("a unit power changed the cycle type".into()))?;
    Ok(if rho.is_even() {
        PowerClass::Same
    } else {
        PowerClass::Swapped
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{an_classes, an_irreps};
    use crate::multiplicity::bias::bias_oracle;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn irrep(s: &str) -> AnIrrep {
        s.parse().unwrap()
    }
    fn class(s: &str) -> AnClass {
        s.parse().unwrap()
    }

    #[test]
    fn alternating_three() {
        for v in ["2,1:+", "2,1:-"] {
            for c in ["3:+", "3:-"] {
                assert_eq!(an_multiplicity(&irrep(v), &class(c), 0).unwrap(), 0);
            }
        }
        let v = an_multiplicity_vector(&irrep("2,1:+"), &class("3:+")).unwrap();
        assert_eq!(v.entries, vec![0, 1, 0]);
        let v = an_multiplicity_vector(&irrep("2,1:-"), &class("3:+")).unwrap();
        assert_eq!(v.entries, vec![0, 0, 1]);
    }

    #[test]
    fn four_four_at_five_three() {
        assert_eq!(
            an_multiplicity(&irrep("4,4"), &class("5,3:+"), 0).unwrap(),
            0
        );
        assert_eq!(
            an_multiplicity(&irrep("4,4"), &class("5,3:-"), 0).unwrap(),
            0
        );
    }

    #[test]
    fn case_three_halves() {
        let a = sn_multiplicities(&p("3,3,2"), &p("7,1")).unwrap();
        for tag in ["+", "-"] {
            let v =
                an_multiplicity_vector(&irrep(&format!("3,3,2:{tag}")), &class("7,1:+")).unwrap();
            let halves: Vec<u64> = a.iter().map(|x| x / 2).collect();
            assert_eq!(v.entries, halves);
        }
    }

    #[test]
    fn closed_form_matches_oracle_up_to_eight() {
        for n in 2..=8 {
            for v in an_irreps(n) {
                for c in an_classes(n) {
                    let vec = an_multiplicity_vector(&v, &c).unwrap();
                    for (i, &a) in vec.entries.iter().enumerate() {
                        let o = an_multiplicity_oracle(&v, &c, i as i64).unwrap();
                        assert_eq!(a, o, "{v} at {c}, i = {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn bias_is_difference_of_halves() {
        for mu in ["3", "5", "5,1", "7", "5,3", "7,1", "9", "5,3,1"] {
            let mu = p(mu);
            let lam = phi(&mu).unwrap();
            let plus = AnIrrep::new(lam.clone(), IrrepTag::Plus).unwrap();
            let minus = AnIrrep::new(lam, IrrepTag::Minus).unwrap();
            let c = AnClass::new(mu.clone(), ClassTag::Plus).unwrap();
            for i in 0..cycle_order(&mu) as i64 {
                let d = an_multiplicity_oracle(&plus, &c, i).unwrap() as i64
                    - an_multiplicity_oracle(&minus, &c, i).unwrap() as i64;
                assert_eq!(d, bias_oracle(&mu, i).unwrap(), "({mu}), i = {i}");
            }
        }
    }

    #[test]
    fn power_conjugacy_examples() {
        assert_eq!(power_conjugacy(&p("5,3"), 2).unwrap(), PowerClass::Same);
        assert_eq!(power_conjugacy(&p("3"), 2).unwrap(), PowerClass::Swapped);
        assert_eq!(power_conjugacy(&p("7,5,1"), 1).unwrap(), PowerClass::Same);
        assert_eq!(
            power_conjugacy_oracle(&p("5,3"), 2).unwrap(),
            PowerClass::Same
        );
        assert_eq!(
            power_conjugacy_oracle(&p("3"), 2).unwrap(),
            PowerClass::Swapped
        );
        assert!(power_conjugacy(&p("5,3"), 3).is_err());
        assert!(power_conjugacy(&p("3,3"), 1).is_err());
    }

    #[test]
    fn reconstructs_trace() {
        let v = irrep("3,3,2:+");
        let c = class("5,3:-");
        let vec = an_multiplicity_vector(&v, &c).unwrap();
        let chi = an_character(&v, &c).unwrap().to_complex();
        assert!((vec.trace() - chi).norm() < 1e-8);
        assert_eq!(vec.dimension(), 21);
    }
}
