//! Eigenvalue multiplicities for symmetric groups.

use num_integer::Integer;

use crate::characters::mn_character;
use crate::combinatorics::{cycle_order, power_cycle_type, Partition, Permutation};
use crate::error::{Error, Result};
use crate::number_theory::ramanujan;

fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(())
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// `χ_λ(w^d)` for each divisor `d` of the order of `w = w_μ`.
fn divisor_characters(lambda: &Partition, mu: &Partition) -> Result<Vec<(u64, i64)>> {
    let m = cycle_order(mu);
    divisors(m)
        .into_iter()
        .map(|d| Ok((d, mn_character(lambda, &power_cycle_type(mu, d))?)))
        .collect()
}

fn multiplicity_from(m: u64, chars: &[(u64, i64)], i: i64) -> Result<u64> {
    // Terms j with gcd(j, m) = d contribute χ(w^d)·c_{m/d}(i).
    let total: i128 = chars
        .iter()
        .map(|&(d, chi)| chi as i128 * ramanujan(m / d, i) as i128)
        .sum();
    let (q, r) = total.div_rem(&(m as i128));
    if r != 0 || q < 0 {
        return Err(Error::Internal(format!(
            "multiplicity sum {total} is not a non-negative multiple of {m}"
        )));
    }
    Ok(q as u64)
}

/// Multiplicity of `ζ_m^i` as an eigenvalue of `w_μ` in `V_λ`, where `m` is
/// the order of `w_μ`.
pub fn sn_multiplicity(lambda: &Partition, mu: &Partition, i: i64) -> Result<u64> {
    check_sizes(lambda, mu)?;
    let chars = divisor_characters(lambda, mu)?;
    multiplicity_from(cycle_order(mu), &chars, i)
}

/// All multiplicities `a_0, …, a_{m-1}`.
pub fn sn_multiplicities(lambda: &Partition, mu: &Partition) -> Result<Vec<u64>> {
    check_sizes(lambda, mu)?;
    let m = cycle_order(mu);
    let chars = divisor_characters(lambda, mu)?;
    (0..m as i64)
        .map(|i| multiplicity_from(m, &chars, i))
        .collect()
}

/// Integer polynomial, coefficients from the constant term up.
type Poly = Vec<i128>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Remainder of `p` modulo the monic polynomial `q`.
fn poly_rem(p: &Poly, q: &Poly) -> Poly {
    let mut r = p.clone();
    let dq = q.len() - 1;
    assert_eq!(q[dq], 1, "divisor must be monic");
    while r.len() > dq && r.len() > 1 {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dq;
        for (k, &c) in q.iter().enumerate() {
            r[shift + k] -= lead * c;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

/// Exact quotient of `p` by the monic polynomial `q`.
fn poly_div_exact(p: &Poly, q: &Poly) -> Poly {
    let dq = q.len() - 1;
    let mut r = p.clone();
    let mut quot = vec![0i128; r.len() - dq];
    for shift in (0..quot.len()).rev() {
        let lead = r[shift + dq];
        quot[shift] = lead;
        for (k, &c) in q.iter().enumerate() {
            r[shift + k] -= lead * c;
        }
    }
    assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// The `m`-th cyclotomic polynomial, from `x^m - 1 = Π_{d | m} Φ_d`.
pub fn cyclotomic(m: u64) -> Vec<i128> {
    let mut p: Poly = vec![0; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        p = poly_div_exact(&p, &cyclotomic(d));
    }
    p
}

/// Independent evaluation of the multiplicity: builds
/// `P(x) = Σ_j χ_λ(w^j)·x^{(-ij mod m)}` using explicit permutation powers and
/// reduces it modulo `Φ_m`. Since `P(ζ)` takes the same rational value at
/// every primitive `m`-th root `ζ`, the remainder is the constant `m·a_i`.
pub fn sn_multiplicity_oracle(lambda: &Partition, mu: &Partition, i: i64) -> Result<u64> {
    check_sizes(lambda, mu)?;
    let w = Permutation::standard_rep(mu);
    let m = cycle_order(mu);
    let mut p: Poly = vec![0; m as usize];
    for j in 0..m {
        let chi = mn_character(lambda, &w.pow(j).cycle_type())?;
        let exp = (-(i as i128) * j as i128).rem_euclid(m as i128) as usize;
        p[exp] += chi as i128;
    }
    trim(&mut p);
    let rem = poly_rem(&p, &cyclotomic(m));
    if rem.len() != 1 {
        return Err(Error::Internal(format!(
            "cyclotomic remainder {rem:?} is not constant"
        )));
    }
    let (q, r) = rem[0].div_rem(&(m as i128));
    if r != 0 || q < 0 {
        return Err(Error::Internal(format!(
            "cyclotomic remainder {} is not a non-negative multiple of {m}",
            rem[0]
        )));
    }
    Ok(q as u64)
}
