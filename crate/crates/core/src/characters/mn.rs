//! Symmetric group characters by the Murnaghan–Nakayama rule.
//!
//! Shapes are handled as beta-sets (first-column hook lengths): removing a
//! border strip of length `k` moves one bead from `b` to `b - k`, with sign
//! `(-1)^{beads strictly between}`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_λ(w_μ)`, the value of the irreducible character `λ` on cycle type `μ`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(chi(lambda.parts(), mu.parts()))
}

fn chi(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    // One-row and one-column shapes are the trivial and sign characters.
    if lambda.len() == 1 {
        return 1;
    }
    if lambda[0] == 1 {
        let odd = mu.iter().filter(|&&p| p % 2 == 0).count() % 2 == 1;
        return if odd { -1 } else { 1 };
    }

    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().expect("memo poisoned").get(&key) {
        return v;
    }

    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let v = chi(&shape, rest);
        total += if between % 2 == 0 { v } else { -v };
    }

    memo().write().expect("memo poisoned").insert(key, total);
    total
}
