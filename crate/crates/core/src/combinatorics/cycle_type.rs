use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::Partition;
use crate::number_theory::factorize;

/// One prime in the factorization of the product of the parts, together with
/// its exponent in the lcm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeData {
    pub p: u64,
    /// Exponent in the product of the parts.
    pub e: u32,
    /// Exponent in the lcm of the parts.
    pub f: u32,
}

/// Arithmetic data attached to a cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleTypeData {
    pub mu: Partition,
    /// Product of the parts.
    pub product: u64,
    /// Lcm of the parts, i.e. the order of the element.
    pub order: u64,
    /// Odd-exponent primes first (ascending), then even-exponent primes
    /// (ascending).
    pub primes: Vec<PrimeData>,
    /// Number of leading entries of `primes` with odd exponent.
    pub odd_count: usize,
    /// `(-1)^{Σ (μ_j - 1)/2}`, present only for distinct odd parts.
    pub epsilon: Option<i8>,
}

impl CycleTypeData {
    pub fn new(mu: &Partition) -> Self {
        let product: u64 = mu.parts().iter().map(|&p| p as u64).product();
        let order = cycle_order(mu);
        let lcm_factors = factorize(order);
        let mut primes: Vec<PrimeData> = factorize(product)
            .into_iter()
            .map(|(p, e)| {
                let f = lcm_factors
                    .iter()
                    .find(|(q, _)| *q == p)
                    .map(|&(_, f)| f)
                    .unwrap_or(0);
                PrimeData { p, e, f }
            })
            .collect();
        primes.sort_by_key(|d| (d.e % 2 == 0, d.p));
        let odd_count = primes.iter().filter(|d| d.e % 2 == 1).count();
        let epsilon = mu.has_distinct_odd_parts().then(|| {
            let half: usize = mu.parts().iter().map(|p| (p - 1) / 2).sum();
            if half.is_multiple_of(2) {
                1
            } else {
                -1
            }
        });
        CycleTypeData {
            mu: mu.clone(),
            product,
            order,
            primes,
            odd_count,
            epsilon,
        }
    }

    pub fn odd_primes(&self) -> &[PrimeData] {
        &self.primes[..self.odd_count]
    }

    pub fn even_primes(&self) -> &[PrimeData] {
        &self.primes[self.odd_count..]
    }
}

/// Lcm of the parts (1 for the empty partition).
pub fn cycle_order(mu: &Partition) -> u64 {
    mu.parts().iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
}

/// Cycle type of the `d`-th power of an element of cycle type `mu`: a part `k`
/// breaks into `gcd(k, d)` cycles of length `k / gcd(k, d)`.
pub fn power_cycle_type(mu: &Partition, d: u64) -> Partition {
    let mut parts = Vec::with_capacity(mu.size());
    for &k in mu.parts() {
        let g = if d == 0 { k } else { k.gcd(&(d as usize)) };
        parts.extend(std::iter::repeat_n(k / g, g));
    }
    Partition::from_unsorted(parts)
}

/// `z_μ = Π k^{m_k} · m_k!`, the centralizer order in the symmetric group.
pub fn centralizer_order_sn(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (k, m) in mu.multiplicities() {
        for j in 1..=m {
            z *= k;
            z *= j;
        }
    }
    z
}
