//! Eigenvalue multiplicities `a_i` of `ζ_m^i` for an element of order `m`,
//! from `a_i = (1/m) Σ_j χ(w^j) ζ_m^{-ij}`.

mod an;
mod bias;
mod sn;

pub use an::{
    an_multiplicity, an_multiplicity_oracle, an_multiplicity_vector, is_biased_pair,
    power_conjugacy, power_conjugacy_oracle, sn_multiplicity_vector, MultiplicityVector,
    PowerClass,
};
pub use bias::{bias, bias_oracle, bias_vector, BiasResult, PrimeCondition};
pub use sn::{cyclotomic, sn_multiplicities, sn_multiplicity, sn_multiplicity_oracle};
