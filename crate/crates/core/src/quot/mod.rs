//! Tautological bundles on `Quot^{r,d}(O^N)` over P^1 through the Stromme embedding into two
//! Grassmannians, and the vanishing bound for the Koszul summands.

mod embedding;
mod vbundle;
mod verify;

pub use embedding::{taut_rank, QuotEmbedding};
pub use vbundle::{
    gamma_pairs, koszul_summands, schur_of_doubled_space, second_factor_decomposition,
    v_cohomology, v_cohomology_terms, CohomologyReport, SecondFactorTerm, VCohomology,
};
pub use verify::{
    degree_lower_bound, schur_complex_step, verify_vanishing, Coverage, VanishingCase,
    VanishingReport,
};
