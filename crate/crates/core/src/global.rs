//! Global conjugacy classes: classes whose conjugation action contains every
//! irreducible representation, equivalently `Ind_Z^G 1 ≥ V` for every irrep
//! `V`, where `Z` is the centralizer of a class element.
//!
//! The closed-form rule covers cycle types with at least two parts, all odd,
//! none repeated more than twice. The brute-force path enumerates the
//! centralizer of the standard representative symbolically and computes
//! `⟨Ind_Z^G 1, χ⟩ = (1/|Z|) Σ_{x ∈ Z} χ(x)` exactly.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    an_character, an_irreps, class_splits, mn_character, split_tag_of, AnClass, ClassTag, QuadSum,
};
use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DEGREE: usize = 11;
pub const DEFAULT_MAX_CENTRALIZER: u64 = 4_000_000;

/// Size guards for the brute-force routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceLimits {
    pub max_degree: usize,
    /// Largest symmetric-group centralizer that will be enumerated.
    pub max_centralizer: u64,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        BruteForceLimits {
            max_degree: DEFAULT_MAX_DEGREE,
            max_centralizer: DEFAULT_MAX_CENTRALIZER,
        }
    }
}

impl BruteForceLimits {
    pub fn unbounded() -> Self {
        BruteForceLimits {
            max_degree: usize::MAX,
            max_centralizer: u64::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub irrep: String,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalVerdict {
    pub class: AnClass,
    /// `None` when the deciding rule does not apply to this cycle type.
    pub is_global: Option<bool>,
    pub rule: &'static str,
    /// For brute force: the irrep of least multiplicity in `Ind_Z^G 1`.
    pub witness: Option<Witness>,
}

fn class_of(mu: &Partition) -> Result<AnClass> {
    let tag = if class_splits(mu) {
        ClassTag::Plus
    } else {
        ClassTag::Unsplit
    };
    AnClass::new(mu.clone(), tag)
}

/// At least two parts, all odd, no part more than twice.
pub fn in_classified_family(mu: &Partition) -> bool {
    mu.len() >= 2 && mu.all_parts_odd() && mu.max_multiplicity() <= 2
}

pub const GLOBAL_RULE: &str =
    "cycle types with >= 2 parts, all odd, none thrice are global except (3,1), (3,3), (5,3), (3,3,1,1)";
pub const OUT_OF_SCOPE: &str = "undecided: outside the classified family of cycle types";

/// The closed-form verdict. For split cycle types both classes behave alike
/// (they are swapped by an outer automorphism); the `Plus` class is reported.
pub fn is_global_class(mu: &Partition) -> Result<GlobalVerdict> {
    let class = class_of(mu)?;
    if !in_classified_family(mu) {
        return Ok(GlobalVerdict {
            class,
            is_global: None,
            rule: OUT_OF_SCOPE,
            witness: None,
        });
    }
    let exception = matches!(mu.parts(), [3, 1] | [3, 3] | [5, 3] | [3, 3, 1, 1]);
    Ok(GlobalVerdict {
        class,
        is_global: Some(!exception),
        rule: GLOBAL_RULE,
        witness: None,
    })
}

/// `Plus` or `Minus`: which of the two classes of its cycle type `sigma`
/// lies in.
pub fn split_class_of(sigma: &Permutation) -> Result<ClassTag> {
    let mu = sigma.cycle_type();
    if !class_splits(&mu) {
        return Err(Error::NotApplicable(format!(
            "cycle type ({mu}) does not split in the alternating group"
        )));
    }
    split_tag_of(sigma, &mu)
}

/// One block of equal cycle lengths in the standard representative.
struct Block {
    len: usize,
    starts: Vec<usize>,
    /// `c! · len^c` for `c` cycles.
    radix: u64,
}

/// The centralizer of `standard_rep(mu)` in `S_n`: a product over cycle
/// lengths `k` of `C_k ≀ S_c`, indexed in mixed radix so that elements can be
/// decoded independently.
struct Centralizer {
    degree: usize,
    blocks: Vec<Block>,
    order: u64,
}

fn factorial(c: usize) -> Option<u64> {
    (1..=c as u64).try_fold(1u64, |acc, x| acc.checked_mul(x))
}

impl Centralizer {
    fn new(mu: &Partition, limit: u64) -> Result<Self> {
        let mut by_len: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut start = 0;
        for &k in mu.parts() {
            by_len.entry(k).or_default().push(start);
            start += k;
        }
        let overflow = || Error::BoundExceeded {
            what: "centralizer order",
            n: mu.size(),
            bound: limit as usize,
        };
        let mut blocks = Vec::new();
        let mut order = 1u64;
        for (len, starts) in by_len {
            let c = starts.len();
            let radix = factorial(c)
                .and_then(|f| {
                    (len as u64)
                        .checked_pow(c as u32)
                        .and_then(|p| p.checked_mul(f))
                })
                .ok_or_else(overflow)?;
            order = order.checked_mul(radix).ok_or_else(overflow)?;
            blocks.push(Block { len, starts, radix });
        }
        if order > limit {
            return Err(Error::BoundExceeded {
                what: "centralizer order",
                n: order.min(usize::MAX as u64) as usize,
                bound: limit.min(usize::MAX as u64) as usize,
            });
        }
        Ok(Centralizer {
            degree: mu.size(),
            blocks,
            order,
        })
    }

    fn element(&self, mut index: u64) -> Permutation {
        let mut images = vec![0; self.degree];
        for b in &self.blocks {
            let c = b.starts.len();
            let mut r = index % b.radix;
            index /= b.radix;
            let rotations_count = b.radix / factorial(c).expect("checked in new");
            let mut rotations = r % rotations_count;
            r /= rotations_count;
            // Lehmer decoding of the block permutation.
            let mut free: Vec<usize> = (0..c).collect();
            for t in 0..c {
                let f = factorial(c - 1 - t).expect("checked in new");
                let target = free.remove((r / f) as usize);
                r %= f;
                let rot = (rotations % b.len as u64) as usize;
                rotations /= b.len as u64;
                for j in 0..b.len {
                    images[b.starts[t] + j] = b.starts[target] + (j + rot) % b.len;
                }
            }
        }
        Permutation::from_images_unchecked(images)
    }
}

/// Number of centralizer elements in each `A_n`-class (only even elements).
fn an_class_counts(mu: &Partition, limits: BruteForceLimits) -> Result<HashMap<AnClass, u64>> {
    let z = Centralizer::new(mu, limits.max_centralizer)?;
    (0..z.order)
        .into_par_iter()
        .try_fold(HashMap::new, |mut acc: HashMap<AnClass, u64>, idx| {
            let x = z.element(idx);
            if x.is_even() {
                *acc.entry(AnClass::containing(&x)?).or_insert(0) += 1;
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })
}

fn sn_class_counts(mu: &Partition, limits: BruteForceLimits) -> Result<HashMap<Partition, u64>> {
    let z = Centralizer::new(mu, limits.max_centralizer)?;
    Ok((0..z.order)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Partition, u64>, idx| {
            *acc.entry(z.element(idx).cycle_type()).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        }))
}

fn exact_quotient(total: num_rational::Ratio<i128>, order: u64, what: &str) -> Result<u64> {
    let q = total / num_rational::Ratio::from_integer(order as i128);
    if !q.is_integer() || *q.numer() < 0 {
        return Err(Error::Internal(format!(
            "inner product for {what} is {q}, not a non-negative integer"
        )));
    }
    Ok(q.to_integer() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerProduct {
    pub irrep: String,
    pub multiplicity: u64,
}

/// Full brute-force output for one cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub verdict: GlobalVerdict,
    pub centralizer_order: u64,
    pub inner_products: Vec<InnerProduct>,
}

fn check_degree(n: usize, limits: BruteForceLimits) -> Result<()> {
    if n > limits.max_degree {
        return Err(Error::BoundExceeded {
            what: "degree for brute-force global check",
            n,
            bound: limits.max_degree,
        });
    }
    Ok(())
}

fn min_witness(products: &[InnerProduct]) -> Option<Witness> {
    products
        .iter()
        .min_by_key(|p| p.multiplicity)
        .map(|p| Witness {
            irrep: p.irrep.clone(),
            multiplicity: p.multiplicity,
        })
}

pub const BRUTE_FORCE_RULE: &str =
    "brute force: Frobenius reciprocity over the enumerated centralizer";

/// Decides globality of the class of `standard_rep(mu)` in `A_n` by
/// computing every multiplicity in `Ind_Z^{A_n} 1`.
pub fn global_brute_force_report(
    mu: &Partition,
    limits: BruteForceLimits,
) -> Result<BruteForceReport> {
    let class = class_of(mu)?;
    check_degree(mu.size(), limits)?;
    let counts = an_class_counts(mu, limits)?;
    let order: u64 = counts.values().sum();
    let inner_products = an_irreps(mu.size())
        .par_iter()
        .map(|v| {
            let mut sum = QuadSum::new();
            for (c, &k) in &counts {
                sum.add_scaled(&an_character(v, c)?, k as i128);
            }
            Ok(InnerProduct {
                irrep: v.to_string(),
                multiplicity: exact_quotient(sum.rational()?, order, &v.to_string())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = min_witness(&inner_products);
    Ok(BruteForceReport {
        verdict: GlobalVerdict {
            class,
            is_global: Some(inner_products.iter().all(|p| p.multiplicity >= 1)),
            rule: BRUTE_FORCE_RULE,
            witness,
        },
        centralizer_order: order,
        inner_products,
    })
}

pub fn global_brute_force(mu: &Partition) -> Result<GlobalVerdict> {
    Ok(global_brute_force_report(mu, BruteForceLimits::default())?.verdict)
}

/// Symmetric-group counterpart: multiplicities of every `V_λ` in
/// `Ind_Z^{S_n} 1` for the full `S_n`-centralizer of `w_μ`.
pub fn sn_global_brute_force(
    mu: &Partition,
    limits: BruteForceLimits,
) -> Result<(bool, Vec<InnerProduct>)> {
    check_degree(mu.size(), limits)?;
    let counts = sn_class_counts(mu, limits)?;
    let order: u64 = counts.values().sum();
    let products = Partition::all(mu.size())
        .par_iter()
        .map(|lam| {
            let mut total = 0i128;
            for (nu, &k) in &counts {
                total += mn_character(lam, nu)? as i128 * k as i128;
            }
            Ok(InnerProduct {
                irrep: lam.to_string(),
                multiplicity: exact_quotient(total.into(), order, &lam.to_string())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((products.iter().all(|p| p.multiplicity >= 1), products))
}

/// The symmetric-group classification for `n ≠ 4, 8`: at least two parts,
/// all odd and distinct.
pub fn sn_global_rule(mu: &Partition) -> bool {
    mu.len() >= 2 && mu.has_distinct_odd_parts()
}

/// Odd-part cycle types of size at most `max_n` whose brute-force verdict is
/// global, then every pair `(λ, ν)` of them with `λ ∪ ν` of size `≤ max_n`
/// and no part thrice whose union is not global. Empty when closure holds.
pub fn union_closure_failures(
    max_n: usize,
    limits: BruteForceLimits,
) -> Result<Vec<(Partition, Partition)>> {
    let mut verdicts: BTreeMap<Partition, bool> = BTreeMap::new();
    for n in 1..=max_n {
        for mu in Partition::all(n).into_iter().filter(|m| m.all_parts_odd()) {
            if mu.max_multiplicity() > 2 {
                continue;
            }
            let g = global_brute_force_report(&mu, limits)?.verdict.is_global == Some(true);
            verdicts.insert(mu, g);
        }
    }
    let global: Vec<&Partition> = verdicts
        .iter()
        .filter(|(_, &g)| g)
        .map(|(m, _)| m)
        .collect();
    let mut failures = Vec::new();
    for (a, lam) in global.iter().enumerate() {
        for nu in &global[a..] {
            if lam.size() + nu.size() > max_n {
                continue;
            }
            let u = lam.union(nu);
            if u.max_multiplicity() <= 2 && verdicts.get(&u) != Some(&true) {
                failures.push(((*lam).clone(), (*nu).clone()));
            }
        }
    }
    Ok(failures)
}

/// Whether the `A_n`-centralizer of `w_{λ∪ν}` is `Z_λ × Z_ν`, for odd-part
/// `λ`, `ν` whose union has no part thrice. Swapping two equal odd cycles is
/// an odd permutation, so the centralizer contains every even product of
/// such swaps; it stays a direct product only when the doubled parts all lie
/// on one side, or there is a single doubled part shared across both.
pub fn centralizer_is_product(lambda: &Partition, nu: &Partition) -> bool {
    let u = lambda.union(nu);
    let count = |p: &Partition, k: usize| p.parts().iter().filter(|&&x| x == k).count();
    let (mut inner_l, mut inner_n, mut cross) = (0, 0, 0);
    for (k, m) in u.multiplicities() {
        if m < 2 {
            continue;
        }
        match (count(lambda, k), count(nu, k)) {
            (2, _) => inner_l += 1,
            (_, 2) => inner_n += 1,
            _ => cross += 1,
        }
    }
    match cross {
        0 => inner_l == 0 || inner_n == 0,
        1 => inner_l == 0 && inner_n == 0,
        _ => false,
    }
}

/// Every cycle type of size `n` in the classified family.
pub fn classified_family(n: usize) -> Vec<Partition> {
    Partition::all(n)
        .into_iter()
        .filter(in_classified_family)
        .collect()
}

impl BruteForceReport {
    pub fn multiplicity_of(&self, irrep: &str) -> Option<u64> {
        self.inner_products
            .iter()
            .find(|p| p.irrep == irrep)
            .map(|p| p.multiplicity)
    }
}
