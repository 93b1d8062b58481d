use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition, stored as a weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the parts, so `(3) > (2,1) > (1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be positive"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row length `i` (0-indexed), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_distinct_odd_parts(&self) -> bool {
        self.has_distinct_parts() && self.all_parts_odd()
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|p| *p % 2 == 0).count()
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Whether permutations of this cycle type are even.
    pub fn is_even_class(&self) -> bool {
        self.sign() == 1
    }

    /// Largest multiplicity of any part.
    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities()
            .into_iter()
            .map(|(_, c)| c)
            .max()
            .unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-indexed).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Number of cells on the main diagonal.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Hook lengths of the diagonal cells, top to bottom.
    pub fn diagonal_hooks(&self) -> Vec<usize> {
        (0..self.durfee()).map(|i| self.hook(i, i)).collect()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dimension(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigUint::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                den *= self.hook(i, j);
            }
        }
        num / den
    }

    /// Union of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated decreasing integers, e.g. `"5,3"`. The empty
    /// string (and `"0"`) give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Frobenius coordinates `(a_1 > … > a_d | b_1 > … > b_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "arms {arms:?} and legs {legs:?} differ in length"
            )));
        }
        for (name, seq) in [("arms", &arms), ("legs", &legs)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFrobenius(format!(
                    "{name} {seq:?} not strictly decreasing"
                )));
            }
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

pub fn to_frobenius(lambda: &Partition) -> FrobeniusCoords {
    let conj = lambda.conjugate();
    let d = lambda.durfee();
    FrobeniusCoords {
        arms: (0..d).map(|i| lambda.part(i) - i - 1).collect(),
        legs: (0..d).map(|i| conj.part(i) - i - 1).collect(),
    }
}

pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Partition> {
    let coords = FrobeniusCoords::new(coords.arms.clone(), coords.legs.clone())?;
    let d = coords.rank();
    if d == 0 {
        return Ok(Partition::empty());
    }
    // Row i < d has length a_i + i + 1. Rows below the diagonal block are read
    // off from the legs: row r >= d has length #{i : b_i + i >= r}.
    let rows = coords.legs[0] + 1;
    let parts = (0..rows)
        .map(|r| {
            if r < d {
                coords.arms[r] + r + 1
            } else {
                coords
                    .legs
                    .iter()
                    .enumerate()
                    .filter(|(i, &b)| b + i >= r)
                    .count()
            }
        })
        .collect();
    Partition::new(parts)
        .map_err(|_| Error::InvalidFrobenius(format!("{coords} does not describe a partition")))
}

/// The bijection from partitions with distinct odd parts onto self-conjugate
/// partitions: part `2a+1` becomes a diagonal hook with arm and leg `a`.
pub fn phi(mu: &Partition) -> Result<Partition> {
    if !mu.has_distinct_odd_parts() {
        return Err(Error::NotApplicable(format!(
            "phi requires distinct odd parts, got ({mu})"
        )));
    }
    let arms: Vec<usize> = mu.parts().iter().map(|p| (p - 1) / 2).collect();
    from_frobenius(&FrobeniusCoords {
        arms: arms.clone(),
        legs: arms,
    })
}

/// Inverse of [`phi`]: reads the diagonal hook lengths of a self-conjugate
/// partition.
pub fn phi_inverse(lambda: &Partition) -> Result<Partition> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotApplicable(format!(
            "({lambda}) is not self-conjugate"
        )));
    }
    Partition::new(lambda.diagonal_hooks())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    // Corner-removal recursion f(λ) = Σ f(λ − corner).
    fn dim_by_corners(lambda: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
        if lambda.size() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(lambda) {
            return v;
        }
        let parts = lambda.parts();
        let mut total = 0;
        for i in 0..parts.len() {
            if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                total += dim_by_corners(&Partition::from_unsorted(smaller), memo);
            }
        }
        memo.insert(lambda.clone(), total);
        total
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,3,1").conjugate(), p("3,2,2"));
        assert_eq!(p("6").conjugate(), Partition::column(6));
        assert_eq!(p("3,3,2").conjugate(), p("3,3,2"));
    }

    #[test]
    fn frobenius_examples() {
        let c = to_frobenius(&p("3,3,1"));
        assert_eq!(
            (c.arms.as_slice(), c.legs.as_slice()),
            (&[2, 1][..], &[2, 0][..])
        );
        let c = to_frobenius(&p("3,2,2"));
        assert_eq!(
            (c.arms.as_slice(), c.legs.as_slice()),
            (&[2, 0][..], &[2, 1][..])
        );
        let c = to_frobenius(&p("2,1"));
        assert_eq!((c.arms.as_slice(), c.legs.as_slice()), (&[1][..], &[1][..]));
    }

    #[test]
    fn from_frobenius_rejects_bad_input() {
        let bad = FrobeniusCoords {
            arms: vec![1, 1],
            legs: vec![2, 0],
        };
        assert!(from_frobenius(&bad).is_err());
        let bad = FrobeniusCoords {
            arms: vec![2, 1],
            legs: vec![0],
        };
        assert!(from_frobenius(&bad).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p("3")).unwrap(), p("2,1"));
        assert_eq!(phi(&p("5,3")).unwrap(), p("3,3,2"));
        let big = phi(&p("15,9,3")).unwrap();
        assert_eq!(big, p("8,6,4,3,2,2,1,1"));
        assert_eq!(big.diagonal_hooks(), vec![15, 9, 3]);
        assert!(phi(&p("3,3")).is_err());
        assert!(phi(&p("4,1")).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(p("2,1").dimension().to_u64(), Some(2));
        assert_eq!(p("3,3,2").dimension().to_u64(), Some(42));
        let mut memo = HashMap::new();
        assert_eq!(dim_by_corners(&p("3,3,2"), &mut memo), 42);
        for n in 2..10 {
            let lam = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(lam.dimension().to_u64(), Some(n as u64 - 1));
        }
    }

    #[test]
    fn dimension_matches_corner_recursion() {
        let mut memo = HashMap::new();
        for n in 1..=12 {
            for lam in Partition::all(n) {
                assert_eq!(
                    lam.dimension().to_u64().unwrap(),
                    dim_by_corners(&lam, &mut memo),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions_is_factorial() {
        for n in 1..=10usize {
            let total: BigUint = Partition::all(n)
                .iter()
                .map(|l| {
                    let d = l.dimension();
                    &d * &d
                })
                .sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5, 3").to_string(), "5,3");
        assert!("3,5".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn small_partitions_round_trip() {
        for n in 0..=12 {
            for lam in Partition::all(n) {
                let c = to_frobenius(&lam);
                assert_eq!(from_frobenius(&c).unwrap(), lam);
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.is_self_conjugate(), c.arms == c.legs);
            }
        }
    }

    #[test]
    fn phi_is_bijection_onto_self_conjugates() {
        for n in 1..=30 {
            let all = Partition::all(n);
            let mut images: Vec<Partition> = all
                .iter()
                .filter(|m| m.has_distinct_odd_parts())
                .map(|m| {
                    let l = phi(m).unwrap();
                    assert_eq!(l, l.conjugate());
                    assert_eq!(l.diagonal_hooks(), m.parts());
                    assert_eq!(phi_inverse(&l).unwrap(), *m);
                    l
                })
                .collect();
            images.sort();
            let mut selfc: Vec<Partition> =
                all.into_iter().filter(|l| l.is_self_conjugate()).collect();
            selfc.sort();
            assert_eq!(images, selfc, "n = {n}");
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..9, 0..9).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn frobenius_round_trip(lam in arb_partition()) {
            prop_assert_eq!(from_frobenius(&to_frobenius(&lam)).unwrap(), lam.clone());
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn serde_round_trip(lam in arb_partition()) {
            let back: Partition = lam.to_string().parse().unwrap();
            prop_assert_eq!(back, lam);
        }
    }
}
