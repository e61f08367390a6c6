//! Verma modules over the Virasoro algebra: normal ordering, Gram matrices
//! and graded ranks over Q and F_p.
//!
//! Monomials `L_{-a1} L_{-a2} ... L_{-ak} v` with `a1 >= a2 >= ... >= ak`
//! form the PBW basis and are indexed by [`Partition`]s.

mod gram;
mod partition;
mod pbw;
mod probe;
mod verma;

pub use gram::{graded_rank, gram_matrix, GramReport, LevelRank};
pub use partition::{partition_count, partitions, Partition};
pub use pbw::PbwVector;
pub use probe::{
    irreducibility_probe, kac_vanishing_check, KacLevel, KacReport, ProbeLevel, ProbeVerdict,
    Verdict, DEFAULT_MAX_LEVEL,
};
pub use verma::{VermaModule, VermaParams};
