//! Exact 1-planarity toolkit: planarity with embeddings, a branch-and-bound
//! 1-planarity solver with certified witnesses, small crossing numbers, and
//! decision procedures for 1-planar graph joins.

pub mod codec;
pub mod crossing;
pub mod families;
pub mod graph;
pub mod join;
pub mod planarity;
pub mod plan;
pub mod solver;
pub mod verify;
