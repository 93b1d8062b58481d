//! Partitions, Frobenius coordinates, cycle types and permutations.

mod cycle_type;
mod partition;
mod perm;

pub use cycle_type::{
    centralizer_order_sn, cycle_order, power_cycle_type, CycleTypeData, PrimeData,
};
pub use partition::{from_frobenius, phi, phi_inverse, to_frobenius, FrobeniusCoords, Partition};
pub use perm::{all_permutations, Permutation};
