use altchar::combinatorics::Partition;
use altchar::global::{
    centralizer_is_product, global_brute_force_report, is_global_class, sn_global_brute_force,
    sn_global_rule, union_closure_failures, BruteForceLimits,
};

/// The symmetric-group rule (≥ 2 parts, distinct odd) against brute force.
#[test]
fn symmetric_group_rule_matches_brute_force() {
    for n in (2..=10).filter(|&n| n != 4 && n != 8) {
        for mu in Partition::all(n) {
            let (global, _) = sn_global_brute_force(&mu, BruteForceLimits::default()).unwrap();
            assert_eq!(global, sn_global_rule(&mu), "({mu})");
        }
    }
}

/// The union-closure statement, read literally, has exactly one failure at
/// n ≤ 11: (1) ∪ (3,3,1) = (3,3,1,1). There the A_8-centralizer contains the
/// even product of the two pair swaps, so it is not Z_(1) × Z_(3,3,1); every
/// failure lies outside the pairs where the centralizer splits.
#[test]
fn global_classes_closed_under_union() {
    let failures = union_closure_failures(11, BruteForceLimits::default()).unwrap();
    let expected = (Partition::row(1), Partition::new(vec![3, 3, 1]).unwrap());
    assert_eq!(failures, vec![expected]);
    for (lam, nu) in &failures {
        assert!(!centralizer_is_product(lam, nu));
    }
}

/// `centralizer_is_product` against centralizer orders from enumeration.
#[test]
fn centralizer_product_criterion() {
    let odd: Vec<Partition> = (1..=10)
        .flat_map(Partition::all)
        .filter(|m| m.all_parts_odd() && m.max_multiplicity() <= 2)
        .collect();
    let order = |m: &Partition| {
        global_brute_force_report(m, BruteForceLimits::default())
            .unwrap()
            .centralizer_order
    };
    let mut seen = [0usize; 2];
    for lam in &odd {
        for nu in &odd {
            let u = lam.union(nu);
            if u.size() > 11 || u.max_multiplicity() > 2 {
                continue;
            }
            let product = order(lam) * order(nu) == order(&u);
            assert_eq!(centralizer_is_product(lam, nu), product, "({lam}) ∪ ({nu})");
            seen[product as usize] += 1;
        }
    }
    assert!(
        seen[0] > 0 && seen[1] > 0 && seen[0] + seen[1] >= 70,
        "{seen:?}"
    );
}

/// Every even cycle type with n ≤ 10: the closed form, where it decides,
/// agrees with brute force.
#[test]
fn closed_form_agrees_where_defined() {
    for n in 2..=10 {
        for mu in Partition::all(n)
            .into_iter()
            .filter(Partition::is_even_class)
        {
            let closed = is_global_class(&mu).unwrap();
            let brute = global_brute_force_report(&mu, BruteForceLimits::default()).unwrap();
            if let Some(g) = closed.is_global {
                assert_eq!(Some(g), brute.verdict.is_global, "({mu})");
            }
            assert_eq!(closed.class, brute.verdict.class);
        }
    }
}
