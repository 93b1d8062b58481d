//! End-to-end checks of every closed form against its oracle, packaged so
//! that both the test suite and the `selftest` command can run them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::characters::{an_classes, an_irreps, character_table_an, irrep_splits, mn_character};
use crate::classification::{
    an_invariant_exceptions, swanson_exceptions, swanson_exceptions_as_printed,
};
use crate::combinatorics::{cycle_order, phi, CycleTypeData, Partition};
use crate::error::Result;
use crate::global::{
    classified_family, global_brute_force_report, is_global_class, BruteForceLimits,
};
use crate::multiplicity::{
    an_multiplicity, an_multiplicity_oracle, bias, bias_oracle, power_conjugacy,
    power_conjugacy_oracle, sn_multiplicity_oracle, sn_multiplicity_vector,
};
use crate::number_theory::{is_square, is_square_free};

/// How much of each check to run. `Full` uses the acceptance bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tier {
    Quick,
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({} ms, budget {} ms) — {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.budget_ms,
            self.detail
        )
    }
}

fn run<F>(id: u32, name: &'static str, budget: Duration, check: F) -> CriterionReport
where
    F: FnOnce() -> Result<(bool, String)>,
{
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let within = elapsed <= budget;
    let detail = if within {
        detail
    } else {
        format!("{detail}; over time budget")
    };
    CriterionReport {
        id,
        name,
        passed: ok && within,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
    }
}

fn pick(tier: Tier, quick: usize, full: usize) -> usize {
    match tier {
        Tier::Quick => quick,
        Tier::Full => full,
    }
}

fn distinct_odd_up_to(max: usize) -> Vec<Partition> {
    (1..=max)
        .flat_map(Partition::all)
        .filter(|m| m.has_distinct_odd_parts())
        .collect()
}

/// Bias values for the worked example `(15,9,3)`.
pub fn worked_example() -> CriterionReport {
    run(1, "worked example (15,9,3)", Duration::from_secs(1), || {
        let mu: Partition = "15,9,3".parse().expect("literal");
        let d = |i| bias(&mu, i).map(|r| r.value);
        let zeros = [d(0)?, d(1)?, d(15)?];
        let (d3, d9) = (d(3)?, d(9)?);
        let ok = zeros == [0, 0, 0] && d3.abs() == 3 && d9.abs() == 6;
        Ok((
            ok,
            format!("d(0,1,15) = {zeros:?}, d(3) = {d3}, d(9) = {d9}"),
        ))
    })
}

/// Closed-form bias against the numeric oracle, with the magnitude bound and
/// the `i = 0`, `i = 1` characterizations.
pub fn bias_equivalence(tier: Tier) -> CriterionReport {
    let max = pick(tier, 15, 25);
    run(
        2,
        "bias closed form = oracle",
        Duration::from_secs(120),
        move || {
            let mut checked = 0usize;
            for mu in distinct_odd_up_to(max) {
                let data = CycleTypeData::new(&mu);
                for i in 0..data.order as i64 {
                    let closed = bias(&mu, i)?.value;
                    let oracle = bias_oracle(&mu, i)?;
                    if closed != oracle as i128 {
                        return Ok((
                            false,
                            format!("({mu}), i = {i}: closed {closed}, oracle {oracle}"),
                        ));
                    }
                    if mu.size() > 1 && closed * closed >= data.product as i128 {
                        return Ok((
                            false,
                            format!("({mu}), i = {i}: |d| = {closed} not below √M"),
                        ));
                    }
                    checked += 1;
                }
                let d0 = bias(&mu, 0)?.value != 0;
                if d0 != is_square(data.product) {
                    return Ok((
                        false,
                        format!("({mu}): d(0) ≠ 0 is {d0} but M = {}", data.product),
                    ));
                }
                let d1 = bias(&mu, 1)?.value != 0;
                if d1 != is_square_free(data.order) {
                    return Ok((
                        false,
                        format!("({mu}): d(1) ≠ 0 is {d1} but m = {}", data.order),
                    ));
                }
            }
            Ok((true, format!("{checked} (μ, i) pairs with |μ| ≤ {max}")))
        },
    )
}

/// The symmetric-group multiplicity engine against the cyclotomic oracle.
pub fn sn_engine(tier: Tier) -> CriterionReport {
    let max = pick(tier, 7, 9);
    run(
        3,
        "symmetric-group multiplicities",
        Duration::from_secs(300),
        move || {
            let mut checked = 0usize;
            for n in 1..=max {
                let parts = Partition::all(n);
                for lam in &parts {
                    let dim = lam.dimension();
                    for mu in &parts {
                        let v = sn_multiplicity_vector(lam, mu)?;
                        for (i, &a) in v.entries.iter().enumerate() {
                            if a != sn_multiplicity_oracle(lam, mu, i as i64)? {
                                return Ok((false, format!("({lam}) at ({mu}), i = {i}")));
                            }
                            checked += 1;
                        }
                        if BigUint::from(v.dimension()) != dim {
                            return Ok((
                                false,
                                format!("({lam}) at ({mu}): entries do not sum to f^λ"),
                            ));
                        }
                        let chi = mn_character(lam, mu)? as f64;
                        let err = (v.trace() - num_complex::Complex64::new(chi, 0.0)).norm();
                        if err > 1e-8 {
                            return Ok((false, format!("({lam}) at ({mu}): trace off by {err:e}")));
                        }
                    }
                }
            }
            Ok((true, format!("{checked} multiplicities for n ≤ {max}")))
        },
    )
}

/// Zero multiplicities of an `n`-cycle against the exception list.
pub fn swanson(tier: Tier) -> CriterionReport {
    let max = pick(tier, 8, 12);
    run(
        4,
        "n-cycle exception list",
        Duration::from_secs(120),
        move || {
            let mut printed_differs = Vec::new();
            for n in 2..=max {
                let cycle = Partition::row(n);
                let mut computed = BTreeSet::new();
                for lam in Partition::all(n) {
                    for (i, a) in sn_multiplicity_vector(&lam, &cycle)?
                        .entries
                        .into_iter()
                        .enumerate()
                    {
                        if a == 0 {
                            computed.insert((lam.clone(), i as u64));
                        }
                    }
                }
                let listed: BTreeSet<_> = swanson_exceptions(n)
                    .into_iter()
                    .map(|e| (e.lambda, e.i))
                    .collect();
                if listed != computed {
                    let extra: Vec<_> = listed.difference(&computed).collect();
                    let missing: Vec<_> = computed.difference(&listed).collect();
                    return Ok((
                        false,
                        format!("n = {n}: listed only {extra:?}, computed only {missing:?}"),
                    ));
                }
                let printed: BTreeSet<_> = swanson_exceptions_as_printed(n)
                    .into_iter()
                    .map(|e| (e.lambda, e.i))
                    .collect();
                if printed != computed {
                    printed_differs.push(n);
                }
            }
            Ok((
                true,
                format!(
                "2 ≤ n ≤ {max} exact; literal printed reading differs at n ∈ {printed_differs:?} \
                 (trivial/sign entries swapped, (n-1,1) missing)"
            ),
            ))
        },
    )
}

/// Pairs `(V, C)` of `A_n` with no invariant vector against the exception
/// list.
pub fn alternating_invariants(tier: Tier) -> CriterionReport {
    let max = pick(tier, 9, 12);
    run(
        5,
        "alternating invariant-vector exceptions",
        Duration::from_secs(600),
        move || {
            let mut total = 0usize;
            for n in 3..=max {
                let mut computed = BTreeSet::new();
                for v in an_irreps(n) {
                    for c in an_classes(n) {
                        if an_multiplicity(&v, &c, 0)? == 0 {
                            computed.insert((v.to_string(), c.to_string()));
                        }
                    }
                }
                let listed: BTreeSet<_> = an_invariant_exceptions(n)
                    .entries
                    .into_iter()
                    .map(|e| (e.irrep, e.class))
                    .collect();
                if listed != computed {
                    return Ok((
                        false,
                        format!("n = {n}: listed {listed:?}, computed {computed:?}"),
                    ));
                }
                total += computed.len();
            }
            Ok((
                true,
                format!("{total} exceptional pairs for 3 ≤ n ≤ {max}, all listed"),
            ))
        },
    )
}

/// Jacobi-symbol power conjugacy against explicit conjugator parity.
pub fn power_conjugacy_check(tier: Tier) -> CriterionReport {
    let max = pick(tier, 8, 10);
    run(6, "power conjugacy", Duration::from_secs(60), move || {
        let mut checked = 0usize;
        for mu in distinct_odd_up_to(max) {
            let m = cycle_order(&mu);
            for i in (1..m as i64).filter(|i| i.gcd(&(m as i64)) == 1) {
                if power_conjugacy(&mu, i)? != power_conjugacy_oracle(&mu, i)? {
                    return Ok((false, format!("({mu}), i = {i}")));
                }
                checked += 1;
            }
        }
        Ok((true, format!("{checked} (μ, i) pairs with |μ| ≤ {max}")))
    })
}

/// The closed-form global-class rule against brute force, plus the named
/// examples.
pub fn global_classes(tier: Tier) -> CriterionReport {
    let max = pick(tier, 9, 11);
    run(
        7,
        "global conjugacy classes",
        Duration::from_secs(600),
        move || {
            let limits = BruteForceLimits::default();
            let mut checked = 0usize;
            for n in 2..=max {
                for mu in classified_family(n) {
                    let closed = is_global_class(&mu)?.is_global;
                    let brute = global_brute_force_report(&mu, limits)?.verdict.is_global;
                    if closed != brute {
                        return Ok((
                            false,
                            format!("({mu}): closed {closed:?}, brute force {brute:?}"),
                        ));
                    }
                    checked += 1;
                }
            }
            let verdict = |s: &str| -> Result<_> {
                let mu: Partition = s.parse().expect("literal");
                Ok(global_brute_force_report(&mu, limits)?.verdict)
            };
            for s in ["3,1", "3,3", "3,3,1,1"] {
                if verdict(s)?.is_global != Some(false) {
                    return Ok((false, format!("({s}) should not be global")));
                }
            }
            let v = verdict("5,3")?;
            let zero_witness = v.witness.as_ref().is_some_and(|w| w.multiplicity == 0);
            if v.is_global != Some(false) || !zero_witness {
                return Ok((
                    false,
                    "(5,3) should fail with a zero-multiplicity witness".into(),
                ));
            }
            let mut named = vec!["7,1", "5,5", "5,3,1"];
            if max >= 11 {
                named.push("7,3,1");
            }
            for s in named {
                if verdict(s)?.is_global != Some(true) {
                    return Ok((false, format!("({s}) should be global")));
                }
            }
            let witness = v.witness.expect("checked");
            Ok((
                true,
                format!(
                    "{checked} cycle types with n ≤ {max}; (5,3) witness {} at multiplicity 0",
                    witness.irrep
                ),
            ))
        },
    )
}

/// Orthogonality and dimension sums of the alternating character tables.
pub fn character_tables(tier: Tier) -> CriterionReport {
    let max = pick(tier, 9, 12);
    run(
        8,
        "alternating character tables",
        Duration::from_secs(120),
        move || {
            let mut worst: f64 = 0.0;
            for n in 1..=max {
                let table = character_table_an(n)?;
                let o = table.orthogonality();
                worst = worst.max(o.row_error).max(o.column_error);
                if o.row_error > 1e-8 || o.column_error > 1e-8 {
                    return Ok((false, format!("n = {n}: orthogonality error {o:?}")));
                }
                let dims: BigUint = table
                    .irreps
                    .iter()
                    .map(|e| &e.dimension * &e.dimension)
                    .sum();
                if dims != table.group_order() {
                    return Ok((false, format!("n = {n}: Σ dim² = {dims}")));
                }
            }
            Ok((true, format!("n ≤ {max}; worst relative error {worst:.2e}")))
        },
    )
}

/// Away from the biased pairs, each half of a split irrep carries exactly
/// half of every symmetric-group multiplicity. Checked with the character
/// oracle, not the dispatcher that assumes it.
pub fn split_halving(tier: Tier) -> CriterionReport {
    let max = pick(tier, 8, 12);
    run(
        9,
        "split irreps halve multiplicities",
        Duration::from_secs(300),
        move || {
            let mut checked = 0usize;
            for n in 2..=max {
                let irreps: Vec<_> = an_irreps(n)
                    .into_iter()
                    .filter(|v| irrep_splits(v.lambda()))
                    .collect();
                for c in an_classes(n) {
                    let special = c.mu().has_distinct_odd_parts() && c.mu().size() > 1;
                    for v in &irreps {
                        if special && phi(c.mu())? == *v.lambda() {
                            continue;
                        }
                        let a = sn_multiplicity_vector(v.lambda(), c.mu())?;
                        for (i, &full) in a.entries.iter().enumerate() {
                            let half = an_multiplicity_oracle(v, &c, i as i64)?;
                            if 2 * half != full {
                                return Ok((
                                    false,
                                    format!("{v} at {c}, i = {i}: {half} vs {full}/2"),
                                ));
                            }
                            checked += 1;
                        }
                    }
                }
            }
            Ok((true, format!("{checked} (V, C, i) triples for n ≤ {max}")))
        },
    )
}

/// Every criterion, in order.
pub fn run_all(tier: Tier) -> Vec<CriterionReport> {
    vec![
        worked_example(),
        bias_equivalence(tier),
        sn_engine(tier),
        swanson(tier),
        alternating_invariants(tier),
        power_conjugacy_check(tier),
        global_classes(tier),
        character_tables(tier),
        split_halving(tier),
    ]
}
