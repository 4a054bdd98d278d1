//! Double covers of surfaces: canonical even resolution of the branch
//! divisor, invariants of the smooth cover, (−1)-curve bookkeeping and the
//! Hurwitz formula for double covers of curves.

mod invariants;
mod resolve;

pub use invariants::{
    branch_component_halving, contract_minus_one, cover_chi_k2, hurwitz_double_cover_genus, smooth_cover_invariants, CoverInvariants,
    Halved,
};
pub use resolve::{even_resolution, even_resolution_in_order, BranchComponent, CoverData, ResolutionStep, MAX_DEPTH};

use crate::arrangement::ArrangementError;
use crate::piclattice::LatticeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("resolving {0} needs infinitely near points deeper than level {MAX_DEPTH}")]
    UnresolvableAtDepth(String),
    #[error("branch class is not twice delta ({0})")]
    OddBranchClass(String),
    #[error("branch divisor has not been resolved")]
    BranchNotSmooth,
    #[error("branch component has odd self-intersection {0}")]
    OddSelfIntersection(i64),
    #[error("odd number of branch points: {0}")]
    OddBranchCount(u64),
    #[error("branch component {0} is not reduced")]
    NotReduced(String),
    #[error("negative irregularity: chi = {chi}, pg = {pg}")]
    NegativeIrregularity { chi: i64, pg: u64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}
