//! Which elements fix a non-zero vector in which irreducible representations,
//! and which eigenvalues an `n`-cycle misses.
//!
//! The predicates here are written out from the known classification lists,
//! not computed; the multiplicity engine checks them in the tests.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::{an_classes, an_irreps, AnClass, AnIrrep, IrrepTag};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::multiplicity::{an_multiplicity_vector, sn_multiplicity_vector};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// `(k^r, 1^s)`: `r` parts equal to `k` followed by `s` ones.
fn block(k: usize, r: usize, s: usize) -> Partition {
    let mut parts = vec![k; r];
    parts.extend(std::iter::repeat_n(1, s));
    Partition::new(parts).expect("block partition")
}

fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

/// The reason `w_μ` fixes no non-zero vector of `V_λ` in `S_n`, or `None`
/// when it does fix one.
pub fn sn_invariant_obstruction(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Option<&'static str>> {
    check_sizes(lambda.size(), mu.size())?;
    let n = lambda.size();
    if n >= 2 && *lambda == Partition::column(n) && mu.sign() == -1 {
        return Ok(Some("sign representation at an odd permutation"));
    }
    if n >= 2 && *lambda == block(n - 1, 1, 1) && *mu == Partition::row(n) {
        return Ok(Some("standard representation (n-1,1) at an n-cycle"));
    }
    if n >= 3 && n % 2 == 1 && *lambda == block(2, 1, n - 2) && *mu == Partition::row(n) {
        return Ok(Some("(2,1^(n-2)) at an n-cycle, n odd"));
    }
    if n >= 5 && n % 2 == 1 && *lambda == block(2, 2, n - 4) && *mu == p(&[n - 2, 2]) {
        return Ok(Some("(2^2,1^(n-4)) at cycle type (n-2,2), n odd"));
    }
    const SPORADIC: [(&[usize], &[usize], &str); 5] = [
        (&[2, 2], &[3, 1], "sporadic: (2,2) at (3,1)"),
        (&[2, 2, 2], &[3, 2, 1], "sporadic: (2^3) at (3,2,1)"),
        (&[2, 2, 2, 2], &[5, 3], "sporadic: (2^4) at (5,3)"),
        (&[4, 4], &[5, 3], "sporadic: (4,4) at (5,3)"),
        (&[2, 2, 2, 2, 2], &[5, 3, 2], "sporadic: (2^5) at (5,3,2)"),
    ];
    Ok(SPORADIC
        .iter()
        .find(|(l, m, _)| lambda.parts() == *l && mu.parts() == *m)
        .map(|&(_, _, why)| why))
}

/// Whether `w_μ` fixes a non-zero vector in the `S_n`-irrep `V_λ`.
pub fn has_invariant_sn(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(sn_invariant_obstruction(lambda, mu)?.is_none())
}

/// The reason elements of `C` fix no non-zero vector of `V`, or `None`.
/// Split tags never matter.
pub fn an_invariant_obstruction(v: &AnIrrep, c: &AnClass) -> Result<Option<&'static str>> {
    check_sizes(v.degree(), c.degree())?;
    let n = v.degree();
    let (lam, mu) = (v.lambda().parts(), c.mu().parts());
    let split = v.tag() != IrrepTag::Whole;
    Ok(if split && lam == [2, 1] && mu == [3] {
        Some("V_(2,1)± at a 3-cycle")
    } else if split && lam == [2, 2] && mu == [3, 1] {
        Some("V_(2,2)± at cycle type (3,1)")
    } else if !split && lam == [4, 4] && mu == [5, 3] {
        Some("V_(4,4) at cycle type (5,3)")
    } else if n > 3 && n % 2 == 1 && lam == [n - 1, 1] && mu == [n] {
        Some("V_(n-1,1) at an n-cycle, n > 3 odd")
    } else {
        None
    })
}

/// Whether elements of `C` fix a non-zero vector in the `A_n`-irrep `V`.
pub fn has_invariant_an(v: &AnIrrep, c: &AnClass) -> Result<bool> {
    Ok(an_invariant_obstruction(v, c)?.is_none())
}

/// Whether every element of `S_n` fixes a non-zero vector of `V_λ`.
pub fn unisingular_sn(lambda: &Partition) -> bool {
    let n = lambda.size();
    if n < 2 {
        return true;
    }
    let families = *lambda == Partition::column(n)
        || *lambda == block(n - 1, 1, 1)
        || (n % 2 == 1 && *lambda == block(2, 1, n - 2))
        || (n >= 5 && n % 2 == 1 && *lambda == block(2, 2, n - 4));
    let sporadic = matches!(
        lambda.parts(),
        [2, 2] | [2, 2, 2] | [2, 2, 2, 2] | [4, 4] | [2, 2, 2, 2, 2]
    );
    !(families || sporadic)
}

/// Whether every element of `A_n` fixes a non-zero vector of `V`.
pub fn unisingular_an(v: &AnIrrep) -> bool {
    let n = v.degree();
    let split = v.tag() != IrrepTag::Whole;
    !match v.lambda().parts() {
        [2, 1] | [2, 2] => split,
        [4, 4] => true,
        lam => n > 3 && n % 2 == 1 && lam == [n - 1, 1],
    }
}

/// One `(λ, i)` with `ζ_n^i` not an eigenvalue of an `n`-cycle in `V_λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CycleException {
    pub lambda: Partition,
    pub i: u64,
    pub rule: &'static str,
}

fn collect(entries: Vec<(Partition, u64, &'static str)>) -> Vec<CycleException> {
    let mut seen: BTreeMap<(Partition, u64), &'static str> = BTreeMap::new();
    for (lambda, i, rule) in entries {
        seen.entry((lambda, i)).or_insert(rule);
    }
    seen.into_iter()
        .map(|((lambda, i), rule)| CycleException { lambda, i, rule })
        .collect()
}

fn sporadic_cycle_exceptions(n: usize, out: &mut Vec<(Partition, u64, &'static str)>) {
    let sporadic: [(&[usize], &[u64], &str); 3] = [
        (&[2, 2], &[1, 3], "sporadic: (2,2)"),
        (&[2, 2, 2], &[1, 5], "sporadic: (2^3)"),
        (&[3, 3], &[2, 4], "sporadic: (3,3)"),
    ];
    for (lam, is, rule) in sporadic {
        if lam.iter().sum::<usize>() == n {
            out.extend(is.iter().map(|&i| (p(lam), i, rule)));
        }
    }
}

/// All `(λ, i)` such that `ζ_n^i` is not an eigenvalue of an `n`-cycle in
/// `V_λ`, sorted.
///
/// The trivial representation only has eigenvalue 1; the sign
/// representation only `(-1)^{n-1}`; `(n-1,1)` misses exactly 1 and
/// `(2,1^{n-2})` misses exactly `(-1)^{n-1}`. Three sporadic shapes complete
/// the list.
pub fn swanson_exceptions(n: usize) -> Vec<CycleException> {
    let mut out = Vec::new();
    if n == 0 {
        return Vec::new();
    }
    let nn = n as u64;
    let sign_exponent = if n % 2 == 1 { 0 } else { nn / 2 };
    for i in 1..nn {
        out.push((
            Partition::row(n),
            i,
            "trivial representation: only eigenvalue 1",
        ));
    }
    for i in (0..nn).filter(|&i| i != sign_exponent) {
        out.push((
            Partition::column(n),
            i,
            "sign representation: only eigenvalue sign(w)",
        ));
    }
    if n >= 2 {
        out.push((block(n - 1, 1, 1), 0, "(n-1,1): eigenvalue 1 absent"));
        out.push((
            block(2, 1, n - 2),
            sign_exponent,
            "(2,1^(n-2)): eigenvalue sign(w) absent",
        ));
    }
    sporadic_cycle_exceptions(n, &mut out);
    collect(out)
}

/// The exception list read literally from its usual printed statement, in
/// which the trivial-representation entry carries the sign representation's
/// condition and `(n-1,1)` is absent. Kept for comparison; it disagrees with
/// direct computation for every `n ≥ 2`.
pub fn swanson_exceptions_as_printed(n: usize) -> Vec<CycleException> {
    let mut out = Vec::new();
    if n < 2 {
        return Vec::new();
    }
    let nn = n as u64;
    let special = if n % 2 == 1 { 0 } else { nn / 2 };
    out.push((block(2, 1, n - 2), special, "(2,1^(n-2)) as printed"));
    for i in (0..nn).filter(|&i| i != special) {
        out.push((Partition::row(n), i, "(n) as printed"));
    }
    sporadic_cycle_exceptions(n, &mut out);
    collect(out)
}

/// Whether every `m`-th root of unity is an eigenvalue of `w_μ` on `V_λ`,
/// i.e. the minimal polynomial is `x^m - 1`.
pub fn full_minimal_polynomial_sn(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(sn_multiplicity_vector(lambda, mu)?.is_full())
}

pub fn full_minimal_polynomial_an(v: &AnIrrep, c: &AnClass) -> Result<bool> {
    Ok(an_multiplicity_vector(v, c)?.is_full())
}

/// A flat, labelled exception list for export.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionList {
    pub kind: &'static str,
    pub n: usize,
    pub entries: Vec<ExceptionEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionEntry {
    pub irrep: String,
    pub class: String,
    /// Missing eigenvalue exponents; for invariant-vector lists this is `[0]`.
    pub exponents: Vec<u64>,
    pub rule: &'static str,
}

pub fn sn_invariant_exceptions(n: usize) -> ExceptionList {
    let mut entries = Vec::new();
    for lam in Partition::all(n) {
        for mu in Partition::all(n) {
            if let Some(rule) = sn_invariant_obstruction(&lam, &mu).expect("same size") {
                entries.push(ExceptionEntry {
                    irrep: lam.to_string(),
                    class: mu.to_string(),
                    exponents: vec![0],
                    rule,
                });
            }
        }
    }
    ExceptionList {
        kind: "symmetric group: no invariant vector",
        n,
        entries,
    }
}

pub fn an_invariant_exceptions(n: usize) -> ExceptionList {
    let mut entries = Vec::new();
    for v in an_irreps(n) {
        for c in an_classes(n) {
            if let Some(rule) = an_invariant_obstruction(&v, &c).expect("same size") {
                entries.push(ExceptionEntry {
                    irrep: v.to_string(),
                    class: c.to_string(),
                    exponents: vec![0],
                    rule,
                });
            }
        }
    }
    ExceptionList {
        kind: "alternating group: no invariant vector",
        n,
        entries,
    }
}

pub fn swanson_exception_list(n: usize) -> ExceptionList {
    let mut grouped: BTreeMap<Partition, (Vec<u64>, &'static str)> = BTreeMap::new();
    for e in swanson_exceptions(n) {
        grouped
            .entry(e.lambda)
            .or_insert((Vec::new(), e.rule))
            .0
            .push(e.i);
    }
    ExceptionList {
        kind: "n-cycle: missing eigenvalues",
        n,
        entries: grouped
            .into_iter()
            .rev()
            .map(|(lam, (exponents, rule))| ExceptionEntry {
                irrep: lam.to_string(),
                class: n.to_string(),
                exponents,
                rule,
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::{an_multiplicity, sn_multiplicities, sn_multiplicity};

    fn q(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn invariant_examples() {
        assert!(!has_invariant_sn(&q("4,4"), &q("5,3")).unwrap());
        assert!(has_invariant_sn(&q("3,2"), &q("5")).unwrap());
        for mu in Partition::all(6) {
            assert!(has_invariant_sn(&Partition::row(6), &mu).unwrap());
        }
        let v: AnIrrep = "2,2:+".parse().unwrap();
        assert!(!has_invariant_an(&v, &"3,1:-".parse().unwrap()).unwrap());
        let v: AnIrrep = "6,1".parse().unwrap();
        assert!(!has_invariant_an(&v, &"7:-".parse().unwrap()).unwrap());
        let v: AnIrrep = "3,3,2:-".parse().unwrap();
        assert!(has_invariant_an(&v, &"5,3:+".parse().unwrap()).unwrap());
        assert!(has_invariant_sn(&q("2"), &q("1")).is_err());
    }

    #[test]
    fn unisingular_examples() {
        assert!(!unisingular_an(&"2,2:+".parse().unwrap()));
        assert!(unisingular_sn(&q("3,2,1")));
        assert!(unisingular_an(&"5,1".parse().unwrap()));
        assert!(!unisingular_an(&"6,1".parse().unwrap()));
        assert!(!unisingular_an(&"4,4".parse().unwrap()));
        assert!(!unisingular_sn(&q("1,1")));
    }

    #[test]
    fn sn_predicate_matches_engine() {
        for n in 1..=10 {
            for lam in Partition::all(n) {
                let mut all = true;
                for mu in Partition::all(n) {
                    let computed = sn_multiplicity(&lam, &mu, 0).unwrap() > 0;
                    assert_eq!(
                        has_invariant_sn(&lam, &mu).unwrap(),
                        computed,
                        "{lam} at {mu}"
                    );
                    all &= computed;
                }
                assert_eq!(unisingular_sn(&lam), all, "{lam}");
            }
        }
    }

    #[test]
    fn an_predicate_matches_engine() {
        for n in 1..=10 {
            for v in an_irreps(n) {
                let mut all = true;
                for c in an_classes(n) {
                    let computed = an_multiplicity(&v, &c, 0).unwrap() > 0;
                    assert_eq!(has_invariant_an(&v, &c).unwrap(), computed, "{v} at {c}");
                    all &= computed;
                }
                assert_eq!(unisingular_an(&v), all, "{v}");
            }
        }
    }

    fn computed_zero_set(n: usize) -> Vec<(Partition, u64)> {
        let mut out = Vec::new();
        for lam in Partition::all(n) {
            for (i, a) in sn_multiplicities(&lam, &Partition::row(n))
                .unwrap()
                .into_iter()
                .enumerate()
            {
                if a == 0 {
                    out.push((lam.clone(), i as u64));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn swanson_matches_engine() {
        for n in 2..=10 {
            let listed: Vec<_> = swanson_exceptions(n)
                .into_iter()
                .map(|e| (e.lambda, e.i))
                .collect();
            assert_eq!(listed, computed_zero_set(n), "n = {n}");
        }
    }

    #[test]
    fn printed_reading_disagrees() {
        for n in 2..=10 {
            let printed: Vec<_> = swanson_exceptions_as_printed(n)
                .into_iter()
                .map(|e| (e.lambda, e.i))
                .collect();
            assert_ne!(printed, computed_zero_set(n), "n = {n}");
        }
    }

    #[test]
    fn swanson_examples() {
        let six: Vec<_> = swanson_exceptions(6)
            .into_iter()
            .map(|e| (e.lambda.to_string(), e.i))
            .collect();
        for (l, i) in [("2,2,2", 1), ("2,2,2", 5), ("3,3", 2), ("3,3", 4)] {
            assert!(six.contains(&(l.to_string(), i)));
        }
        let four: Vec<_> = swanson_exceptions(4)
            .into_iter()
            .map(|e| (e.lambda.to_string(), e.i))
            .collect();
        assert!(four.contains(&("2,2".into(), 1)) && four.contains(&("2,2".into(), 3)));
        assert!(four.contains(&("2,1,1".into(), 2)));
        let five: Vec<_> = swanson_exceptions(5)
            .into_iter()
            .map(|e| (e.lambda.to_string(), e.i))
            .collect();
        assert!(five.contains(&("2,1,1,1".into(), 0)));
        assert!(five.contains(&("4,1".into(), 0)));
        assert!((1..5).all(|i| five.contains(&("5".into(), i))));
    }

    #[test]
    fn minimal_polynomials() {
        for n in 2..=7 {
            assert!(!full_minimal_polynomial_sn(&Partition::row(n), &Partition::row(n)).unwrap());
        }
        assert!(!full_minimal_polynomial_sn(&q("2,2"), &q("4")).unwrap());
        assert!(full_minimal_polynomial_sn(&q("3,2"), &q("5")).unwrap());
        let v: AnIrrep = "3,3,2:+".parse().unwrap();
        assert!(full_minimal_polynomial_an(&v, &"7,1:+".parse().unwrap()).unwrap());
    }

    #[test]
    fn exception_lists_export() {
        let l = an_invariant_exceptions(8);
        assert_eq!(l.entries.len(), 2);
        assert!(l.entries.iter().all(|e| e.irrep == "4,4"));
        let l = sn_invariant_exceptions(4);
        assert!(l
            .entries
            .iter()
            .any(|e| e.irrep == "2,2" && e.class == "3,1"));
        let s = swanson_exception_list(4);
        assert_eq!(s.entries[0].irrep, "4");
        assert_eq!(s.entries[0].exponents, vec![1, 2, 3]);
    }
}
