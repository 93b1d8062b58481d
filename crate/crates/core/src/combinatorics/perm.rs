use std::fmt;

use super::Partition;
use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`, stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({a} {b}) outside 0..{n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint in 0..{n}"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The element of cycle type `mu` whose cycles occupy consecutive blocks
    /// in part order: `(0 1 … μ_1-1)(μ_1 … μ_1+μ_2-1)…`.
    pub fn standard_rep(mu: &Partition) -> Self {
        let mut images = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &k in mu.parts() {
            for j in 0..k {
                images.push(start + (j + 1) % k);
            }
            start += k;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let n = self.degree();
        let mut images = vec![0; n];
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (k % len as u64) as usize;
            for (j, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(j + shift) % len];
            }
        }
        Permutation { images }
    }

    /// `ρ σ ρ⁻¹` for `self = σ`.
    pub fn conjugate_by(&self, rho: &Permutation) -> Result<Permutation> {
        rho.compose(self)?.compose(&rho.inverse())
    }

    /// Cycles including fixed points, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths())
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let even_cycles = self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && self
                .images
                .iter()
                .enumerate()
                .all(|(x, &y)| other.images[y] == self.images[other.images[x]])
    }

    /// Some `ρ` with `ρ σ ρ⁻¹ = τ` (`self = σ`), or `None` when the cycle
    /// types differ.
    pub fn conjugator(&self, tau: &Permutation) -> Result<Option<Permutation>> {
        self.check_degree(tau)?;
        let mut from = self.cycles();
        let mut to = tau.cycles();
        from.sort_by_key(|c| std::cmp::Reverse(c.len()));
        to.sort_by_key(|c| std::cmp::Reverse(c.len()));
        if from.iter().map(Vec::len).ne(to.iter().map(Vec::len)) {
            return Ok(None);
        }
        let mut images = vec![0; self.degree()];
        for (a, b) in from.iter().zip(&to) {
            for (&x, &y) in a.iter().zip(b) {
                images[x] = y;
            }
        }
        Ok(Some(Permutation { images }))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Every permutation of `0..n` in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: cur.clone(),
    }];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation {
            images: cur.clone(),
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    use crate::combinatorics::centralizer_order_sn;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sign_examples() {
        let c3 = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(c3.sign(), 1);
        assert_eq!(Permutation::transposition(4, 1, 3).unwrap().sign(), -1);
        assert_eq!(Permutation::identity(0).sign(), 1);
    }

    #[test]
    fn standard_rep_round_trip() {
        assert_eq!(Permutation::standard_rep(&p("5,3")).cycle_type(), p("5,3"));
        for n in 0..=9 {
            for mu in Partition::all(n) {
                let w = Permutation::standard_rep(&mu);
                assert_eq!(w.cycle_type(), mu);
                assert_eq!(w.sign() as i64, mu.sign());
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::SizeMismatch { .. })));
        assert!(a.conjugator(&b).is_err());
    }

    #[test]
    fn conjugators_for_five_cycles() {
        let all = all_permutations(5);
        assert_eq!(all.len(), 120);
        let five: Vec<&Permutation> = all.iter().filter(|s| s.cycle_type() == p("5")).collect();
        assert_eq!(five.len(), 24);
        let sigma = five[0];
        for tau in &five {
            let rho = sigma.conjugator(tau).unwrap().unwrap();
            assert_eq!(sigma.conjugate_by(&rho).unwrap(), **tau);
            // Exhaustive search agrees that a conjugator exists.
            assert!(all.iter().any(|r| sigma.conjugate_by(r).unwrap() == **tau));
        }
        let other = Permutation::standard_rep(&p("3,2"));
        assert!(sigma.conjugator(&other).unwrap().is_none());
    }

    #[test]
    fn centralizer_orders_match_brute_force() {
        for n in 1..=8 {
            let all = all_permutations(n);
            for mu in Partition::all(n) {
                let w = Permutation::standard_rep(&mu);
                let count = all.iter().filter(|s| s.commutes_with(&w)).count();
                assert_eq!(centralizer_order_sn(&mu).to_usize(), Some(count), "{mu}");
            }
        }
    }

    #[test]
    fn powers() {
        let w = Permutation::standard_rep(&p("4,3"));
        let mut acc = Permutation::identity(7);
        for k in 0..15u64 {
            assert_eq!(w.pow(k), acc);
            acc = w.compose(&acc).unwrap();
        }
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn sign_is_multiplicative(a in arb_perm(9), b in arb_perm(9)) {
            let ab = a.compose(&b).unwrap();
            prop_assert_eq!(ab.sign(), a.sign() * b.sign());
            prop_assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(9));
        }

        #[test]
        fn conjugator_property(a in arb_perm(8), r in arb_perm(8)) {
            let b = a.conjugate_by(&r).unwrap();
            prop_assert_eq!(a.cycle_type(), b.cycle_type());
            let rho = a.conjugator(&b).unwrap().unwrap();
            prop_assert_eq!(a.conjugate_by(&rho).unwrap(), b);
        }
    }
}
