//! Conjugacy classes, irreducible representations and characters of `A_n`,
//! read off from the symmetric group via Frobenius' description.
//!
//! Split labels follow one fixed convention. The `Plus` class of a cycle type
//! with distinct odd parts contains [`Permutation::standard_rep`]; the `Minus`
//! class is its conjugate by the transposition `(0 1)`. For a self-conjugate
//! `λ = φ(μ)`, `χ⁺` is the constituent taking the value `(ε + √(εM))/2` on the
//! `Plus` class, with the principal branch of the square root.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{mn_character, QuadValue};
use crate::combinatorics::{centralizer_order_sn, phi, CycleTypeData, Partition, Permutation};
use crate::error::{Error, Result};
use crate::number_theory::square_split;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    Unsplit,
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepTag {
    Whole,
    Plus,
    Minus,
}

impl ClassTag {
    pub fn sign(self) -> i64 {
        match self {
            ClassTag::Minus => -1,
            _ => 1,
        }
    }
}

impl IrrepTag {
    pub fn sign(self) -> i64 {
        match self {
            IrrepTag::Minus => -1,
            _ => 1,
        }
    }
}

/// Whether permutations of cycle type `mu` form two classes in `A_n`.
pub fn class_splits(mu: &Partition) -> bool {
    mu.size() > 1 && mu.has_distinct_odd_parts()
}

/// Whether the irreducible `λ` of `S_n` restricts to a sum of two `A_n`
/// irreducibles.
pub fn irrep_splits(lambda: &Partition) -> bool {
    lambda.size() > 1 && lambda.is_self_conjugate()
}

/// A conjugacy class of an alternating group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnClass {
    mu: Partition,
    tag: ClassTag,
}

impl AnClass {
    pub fn new(mu: Partition, tag: ClassTag) -> Result<Self> {
        if !mu.is_even_class() {
            return Err(Error::InvalidLabel(format!(
                "cycle type ({mu}) is odd and not in the alternating group"
            )));
        }
        match (class_splits(&mu), tag) {
            (true, ClassTag::Unsplit) => Err(Error::InvalidLabel(format!(
                "cycle type ({mu}) splits in A_n; a :+ or :- tag is required"
            ))),
            (false, ClassTag::Plus | ClassTag::Minus) => Err(Error::InvalidLabel(format!(
                "cycle type ({mu}) does not split in A_n; drop the tag"
            ))),
            _ => Ok(AnClass { mu, tag }),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn tag(&self) -> ClassTag {
        self.tag
    }

    pub fn degree(&self) -> usize {
        self.mu.size()
    }

    pub fn size(&self) -> BigUint {
        let n = self.mu.size();
        let fact: BigUint = (1..=n).map(BigUint::from).product::<BigUint>();
        let full = fact / centralizer_order_sn(&self.mu);
        match self.tag {
            ClassTag::Unsplit => full,
            _ => full / 2u32,
        }
    }

    /// A concrete element: the standard representative, conjugated by `(0 1)`
    /// for the `Minus` class.
    pub fn representative(&self) -> Permutation {
        let w = Permutation::standard_rep(&self.mu);
        match self.tag {
            ClassTag::Minus => {
                let t = Permutation::transposition(w.degree(), 0, 1).expect("degree >= 2");
                w.conjugate_by(&t).expect("same degree")
            }
            _ => w,
        }
    }

    /// The class of an even permutation.
    pub fn containing(sigma: &Permutation) -> Result<AnClass> {
        let mu = sigma.cycle_type();
        if !class_splits(&mu) {
            return AnClass::new(mu, ClassTag::Unsplit);
        }
        let tag = split_tag_of(sigma, &mu)?;
        AnClass::new(mu, tag)
    }
}

/// `Plus` iff an even permutation conjugates the standard representative of
/// `mu` to `sigma`. Conjugators differ by centralizer elements, which are all
/// even for distinct odd cycle lengths, so any conjugator decides.
pub(crate) fn split_tag_of(sigma: &Permutation, mu: &Partition) -> Result<ClassTag> {
    let w = Permutation::standard_rep(mu);
    let rho = w
        .conjugator(sigma)?
        .ok_or_else(|| Error::NotApplicable(format!("{sigma} does not have cycle type ({mu})")))?;
    Ok(if rho.is_even() {
        ClassTag::Plus
    } else {
        ClassTag::Minus
    })
}

/// An irreducible representation of an alternating group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnIrrep {
    lambda: Partition,
    tag: IrrepTag,
}

impl AnIrrep {
    /// For `Whole`, either of `λ`, `λ'` may be given; the lexicographically
    /// larger one is stored.
    pub fn new(lambda: Partition, tag: IrrepTag) -> Result<Self> {
        match (irrep_splits(&lambda), tag) {
            (true, IrrepTag::Whole) => Err(Error::InvalidLabel(format!(
                "({lambda}) is self-conjugate; a :+ or :- tag is required"
            ))),
            (false, IrrepTag::Plus | IrrepTag::Minus) => Err(Error::InvalidLabel(format!(
                "({lambda}) is not self-conjugate; drop the tag"
            ))),
            (false, IrrepTag::Whole) => {
                let conj = lambda.conjugate();
                Ok(AnIrrep {
                    lambda: lambda.max(conj),
                    tag,
                })
            }
            (true, _) => Ok(AnIrrep { lambda, tag }),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn tag(&self) -> IrrepTag {
        self.tag
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn dimension(&self) -> BigUint {
        let f = self.lambda.dimension();
        match self.tag {
            IrrepTag::Whole => f,
            _ => f / 2u32,
        }
    }

    pub fn is_split(&self) -> bool {
        self.tag != IrrepTag::Whole
    }
}

fn tag_suffix(plus: bool) -> &'static str {
    if plus {
        ":+"
    } else {
        ":-"
    }
}

impl fmt::Display for AnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mu)?;
        if self.tag != ClassTag::Unsplit {
            f.write_str(tag_suffix(self.tag == ClassTag::Plus))?;
        }
        Ok(())
    }
}

impl fmt::Display for AnIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if self.tag != IrrepTag::Whole {
            f.write_str(tag_suffix(self.tag == IrrepTag::Plus))?;
        }
        Ok(())
    }
}

/// Splits `"5,3:+"` into the partition and an optional sign.
pub fn parse_tagged(s: &str) -> Result<(Partition, Option<bool>)> {
    let s = s.trim();
    let (body, sign) = match s.rsplit_once(':') {
        Some((b, "+")) => (b, Some(true)),
        Some((b, "-")) => (b, Some(false)),
        Some((_, t)) => {
            return Err(Error::InvalidLabel(format!(
                "unknown tag {t:?} in {s:?}; expected :+ or :-"
            )))
        }
        None => (s, None),
    };
    let mu: Partition = body.parse()?;
    if mu.is_empty() {
        return Err(Error::InvalidLabel(format!("empty partition in {s:?}")));
    }
    Ok((mu, sign))
}

impl FromStr for AnClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mu, sign) = parse_tagged(s)?;
        let tag = match sign {
            None => ClassTag::Unsplit,
            Some(true) => ClassTag::Plus,
            Some(false) => ClassTag::Minus,
        };
        AnClass::new(mu, tag)
    }
}

impl FromStr for AnIrrep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lambda, sign) = parse_tagged(s)?;
        let tag = match sign {
            None => IrrepTag::Whole,
            Some(true) => IrrepTag::Plus,
            Some(false) => IrrepTag::Minus,
        };
        AnIrrep::new(lambda, tag)
    }
}

macro_rules! label_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

label_serde!(AnClass);
label_serde!(AnIrrep);

/// All conjugacy classes of `A_n`, cycle types in decreasing lexicographic
/// order, `Plus` before `Minus`.
pub fn an_classes(n: usize) -> Vec<AnClass> {
    let mut out = Vec::new();
    for mu in Partition::all(n) {
        if !mu.is_even_class() {
            continue;
        }
        if class_splits(&mu) {
            out.push(AnClass {
                mu: mu.clone(),
                tag: ClassTag::Plus,
            });
            out.push(AnClass {
                mu,
                tag: ClassTag::Minus,
            });
        } else {
            out.push(AnClass {
                mu,
                tag: ClassTag::Unsplit,
            });
        }
    }
    out
}

/// All irreducible representations of `A_n`, in decreasing lexicographic
/// order of the stored partition, `Plus` before `Minus`.
pub fn an_irreps(n: usize) -> Vec<AnIrrep> {
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        if irrep_splits(&lambda) {
            out.push(AnIrrep {
                lambda: lambda.clone(),
                tag: IrrepTag::Plus,
            });
            out.push(AnIrrep {
                lambda,
                tag: IrrepTag::Minus,
            });
        } else if lambda >= lambda.conjugate() {
            out.push(AnIrrep {
                lambda,
                tag: IrrepTag::Whole,
            });
        }
    }
    out
}

/// `√(εM)` as `(0 + b√D)/2`-style pieces: returns `(b, D)` with
/// `√(εM) = b·√D` for square-free `D`, or `D = 1` when the root is rational.
fn signed_root(eps: i64, product: u64) -> (i64, i64) {
    let (s, q) = square_split(product);
    (s as i64, eps * q as i64)
}

/// Exact character value `χ_V(C)`.
pub fn an_character(v: &AnIrrep, c: &AnClass) -> Result<QuadValue> {
    if v.degree() != c.degree() {
        return Err(Error::SizeMismatch {
            left: v.degree(),
            right: c.degree(),
        });
    }
    let chi = mn_character(&v.lambda, &c.mu)?;
    if !v.is_split() {
        return Ok(QuadValue::integer(chi));
    }
    if c.tag != ClassTag::Unsplit && phi(&c.mu)? == v.lambda {
        let data = CycleTypeData::new(&c.mu);
        let eps = data.epsilon.expect("distinct odd parts") as i64;
        let (b, d) = signed_root(eps, data.product);
        let sign = v.tag.sign() * c.tag.sign();
        return Ok(QuadValue::new(eps, sign * b, d));
    }
    Ok(QuadValue::half(chi))
}

/// The full character table of `A_n`.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<ClassEntry>,
    pub irreps: Vec<IrrepEntry>,
    /// `values[r][c]` is the value of irrep `r` on class `c`.
    pub values: Vec<Vec<QuadValue>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassEntry {
    pub label: AnClass,
    #[serde(serialize_with = "big_as_string")]
    pub size: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepEntry {
    pub label: AnIrrep,
    #[serde(serialize_with = "big_as_string")]
    pub dimension: BigUint,
}

pub(crate) fn big_as_string<S: Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub const DEFAULT_TABLE_BOUND: usize = 14;

/// Character table of `A_n` for `n` up to [`DEFAULT_TABLE_BOUND`].
pub fn character_table_an(n: usize) -> Result<CharacterTable> {
    character_table_an_bounded(n, DEFAULT_TABLE_BOUND)
}

pub fn character_table_an_bounded(n: usize, bound: usize) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::NotApplicable("character table needs n >= 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "character table",
            n,
            bound,
        });
    }
    let classes = an_classes(n);
    let irreps = an_irreps(n);
    let values = irreps
        .par_iter()
        .map(|v| {
            classes
                .iter()
                .map(|c| an_character(v, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        n,
        classes: classes
            .into_iter()
            .map(|c| ClassEntry {
                size: c.size(),
                label: c,
            })
            .collect(),
        irreps: irreps
            .into_iter()
            .map(|v| IrrepEntry {
                dimension: v.dimension(),
                label: v,
            })
            .collect(),
        values,
    })
}

/// Worst deviations from the row and column orthogonality relations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthogonalityReport {
    pub row_error: f64,
    pub column_error: f64,
}

impl CharacterTable {
    pub fn group_order(&self) -> BigUint {
        let fact: BigUint = (1..=self.n).map(BigUint::from).product::<BigUint>();
        if self.n >= 2 {
            fact / 2u32
        } else {
            BigUint::one()
        }
    }

    /// Numeric check of `Σ_C |C| χ(C) conj(χ'(C)) = |G| δ` and
    /// `Σ_V χ_V(C) conj(χ_V(C')) = |G|/|C| δ`; row errors are relative to
    /// `|G|`, column errors to `√(z_C z_C')` with `z = |G|/|C|`.
    pub fn orthogonality(&self) -> OrthogonalityReport {
        let order = self.group_order().to_f64().unwrap_or(f64::INFINITY);
        let sizes: Vec<f64> = self
            .classes
            .iter()
            .map(|c| c.size.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        let z: Vec<Vec<_>> = self
            .values
            .iter()
            .map(|row| row.iter().map(QuadValue::to_complex).collect())
            .collect();
        let mut row_error: f64 = 0.0;
        for (r, x) in z.iter().enumerate() {
            for (s, y) in z.iter().enumerate() {
                let ip: num_complex::Complex64 = x
                    .iter()
                    .zip(y)
                    .zip(&sizes)
                    .map(|((a, b), k)| a * b.conj() * *k)
                    .sum();
                let expect = if r == s { order } else { 0.0 };
                row_error = row_error.max((ip - expect).norm() / order);
            }
        }
        let mut column_error: f64 = 0.0;
        for c in 0..self.classes.len() {
            for d in 0..self.classes.len() {
                let ip: num_complex::Complex64 = z.iter().map(|row| row[c] * row[d].conj()).sum();
                let (zc, zd) = (order / sizes[c], order / sizes[d]);
                let expect = if c == d { zc } else { 0.0 };
                column_error = column_error.max((ip - expect).norm() / (zc * zd).sqrt());
            }
        }
        OrthogonalityReport {
            row_error,
            column_error,
        }
    }
}
