//! Eigenvalue multiplicities of elements of symmetric and alternating groups
//! in their irreducible complex representations.
//!
//! The crate computes, exactly:
//!
//! * symmetric group characters by the Murnaghan–Nakayama rule and the
//!   alternating group characters obtained from them by Frobenius' splitting;
//! * the multiplicity of each `ζ_m^i` as an eigenvalue of an element of order
//!   `m`, for both groups, with the split-irrep bias given in closed form;
//! * invariant-vector, unisingularity and global-class predicates.
//!
//! Every closed form has an independent oracle alongside it (`*_oracle`
//! functions and the brute-force routines in [`global`]), and [`verify`]
//! bundles the end-to-end checks.

pub mod characters;
pub mod classification;
pub mod combinatorics;
pub mod error;
pub mod global;
pub mod multiplicity;
pub mod number_theory;
pub mod verify;

pub use characters::{AnClass, AnIrrep, ClassTag, IrrepTag, QuadValue};
pub use combinatorics::{CycleTypeData, Partition, Permutation};
pub use error::{Error, Result};
