//! Combinatorial generators, modified Bell polynomials, and the symmetric
//! function evaluations of `zeta({s}^n)` and `zeta*({s}^n)`.

mod bell;
mod combinatorics;
mod hoffman;

pub use bell::{
    modified_bell, modified_bell_recurrence, zeta_repeated, zeta_star_repeated, BellRing,
};
pub use combinatorics::{
    compositions, integer_partitions, set_partitions, weak_composition_count, Composition,
    Compositions, SetPartition,
};
pub use hoffman::{hoffman_rhs, HoffmanSum, HoffmanTerm, Variant};
