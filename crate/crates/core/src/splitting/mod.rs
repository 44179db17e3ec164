//! Splitting types on P^1 and their numerical invariants.

mod cohomology;
mod dominance;
mod hn;
mod subsheaf;
mod tangent;
mod types;

pub use cohomology::{chi_hom, ext1, h0, h1, hom, u};
pub use dominance::{dominates, dominates_via_flag, dominates_via_h1};
pub use hn::{admissible_sets, hn_data, is_admissible, HnData};
pub use subsheaf::{admits_subsheaf, eb, flag_stratum_dim, gap, stratum_codim, FlagChain};
pub use tangent::tangent_check;
pub use types::{gp_type, SplittingType};
