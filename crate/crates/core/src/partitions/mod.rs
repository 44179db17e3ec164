//! Partitions, Littlewood-Richardson calculus and the Schur-functor decompositions
//! (Cauchy, direct sums, Schur complexes) used by the vanishing checks.

mod lr;
mod multiset;
mod partition;

pub use lr::{
    cauchy_wedge, lr_coefficient, schur_complex_terms, schur_of_double, skew_decompose,
    tensor_schur,
};
pub use multiset::Multiset;
pub use partition::{partitions_of, partitions_up_to, subpartitions, Partition};
