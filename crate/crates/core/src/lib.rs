//! Exact verification engine for double-cover constructions of canonically
//! fibred 3-folds: number fields and polynomials, curve arrangements on ℙ²
//! and ℙ¹×ℙ¹, Picard lattices of blow-ups, double-cover invariants, the
//! standard and variant 3-fold constructions, and the numeric bounds.

pub mod algebra;
pub mod arrangement;
pub mod bounds;
pub mod constructions;
pub mod doublecover;
pub mod par;
pub mod piclattice;
pub mod pipeline;
