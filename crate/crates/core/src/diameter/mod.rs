//! Reconfiguration under "diameter at most d".
//!
//! A spanning tree has diameter at most `d` iff some vertex or edge midpoint
//! is within half-distance `d` of every vertex. Reachability is decided in an
//! auxiliary graph on all vertices and midpoints whose edges are witnessed by
//! good pseudotrees that have both endpoints as centers.

mod aux_graph;
mod good;
mod search;
mod sequence;

pub use aux_graph::{
    build_center_aux_graph, decide_small_diameter, sequence_small_diameter, CenterAuxEdge,
    CenterAuxGraph, SmallDiameterSolver,
};
pub use good::{good_triple_labels, is_good_triple, lambda_labels, GoodTriple, LambdaLabels};
pub use search::{find_good_cyclic_pseudotree, find_good_tree, CandidateCycle, GoodTripleSearch};
pub use sequence::{same_center_sequence, split_pseudotree};
