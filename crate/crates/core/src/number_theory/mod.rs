//! Elementary number theory: factorization, Jacobi symbols, and the
//! root-of-unity sums behind the bias formula.
//!
//! Inputs here are tiny (cycle lengths, element orders), so trial division
//! and machine integers are adequate throughout.

mod gauss;

pub use gauss::{gauss_sum, phase_product, phase_to_integer, GaussPhase};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exponent of `p` in `x`; `None` for `x = 0`.
pub fn valuation(p: u64, x: u64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut x = x;
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Splits `n = s² · q` with `q` square-free, returning `(s, q)`.
pub fn square_split(n: u64) -> (u64, u64) {
    factorize(n).into_iter().fold((1, 1), |(s, q), (p, e)| {
        (s * p.pow(e / 2), if e % 2 == 1 { q * p } else { q })
    })
}

pub fn is_square(n: u64) -> bool {
    square_split(n).1 == 1
}

pub fn is_square_free(n: u64) -> bool {
    square_split(n).0 == 1
}

/// Jacobi symbol `(a | n)` for odd positive `n`.
pub fn jacobi(a: i64, n: i64) -> Result<i8> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::NotApplicable(format!(
            "Jacobi symbol needs an odd positive modulus, got {n}"
        )));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

fn check_odd_prime(p: u64, f: u32) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotApplicable(format!("{p} is not an odd prime")));
    }
    if f == 0 {
        return Err(Error::NotApplicable("exponent must be positive".into()));
    }
    Ok(())
}

/// Writes `i ≡ u·p^d (mod p^f)` with `p ∤ u`. Returns `(d, u)`, where
/// `d = f` (and `u = 1`) when `p^f | i`.
pub fn local_shape(p: u64, f: u32, i: i64) -> (u32, u64) {
    let q = p.pow(f);
    let r = i.rem_euclid(q as i64) as u64;
    match valuation(p, r) {
        None => (f, 1),
        Some(d) => (d, r / p.pow(d)),
    }
}

/// `Σ_{l ∈ (Z/p^f)^*} ζ_{p^f}^{il}` for an odd prime `p`.
pub fn unit_sum(p: u64, f: u32, i: i64) -> Result<i64> {
    check_odd_prime(p, f)?;
    let (d, _) = local_shape(p, f, i);
    let pf = p.pow(f) as i64;
    let pf1 = p.pow(f - 1) as i64;
    Ok(if d == f {
        pf - pf1
    } else if d + 1 == f {
        -pf1
    } else {
        0
    })
}

/// `Σ_{l ∈ (Z/p^f)^*} (l | p) ζ_{p^f}^{il}` for an odd prime `p`, as an exact
/// multiple of the Gauss sum `g(p)`.
pub fn twisted_sum(p: u64, f: u32, i: i64) -> Result<GaussPhase> {
    check_odd_prime(p, f)?;
    let (d, u) = local_shape(p, f, i);
    if d + 1 != f {
        return Ok(GaussPhase::zero());
    }
    let sign = jacobi(u as i64, p as i64)? as i128;
    let scale = GaussPhase::rational(Ratio::from_integer(sign * p.pow(d) as i128));
    Ok(scale.mul(&gauss_sum(p)?))
}

/// Ramanujan sum `c_q(i) = Σ_{l ∈ (Z/q)^*} ζ_q^{il}`, by von Sterneck's
/// formula `μ(q/g)·φ(q)/φ(q/g)` with `g = gcd(q, i)`.
pub fn ramanujan(q: u64, i: i64) -> i64 {
    assert!(q >= 1, "ramanujan sum needs q >= 1");
    let g = i.unsigned_abs().gcd(&q);
    let r = q / g;
    mobius(r) * (totient(q) / totient(r)) as i64
}
