//! Instance generators for the two hardness constructions, with the maps
//! between solutions of the source problem and reconfiguration sequences.

pub mod hampath;
pub mod ncl;

use crate::graph::{EdgeId, Graph, Vertex};

pub use hampath::{
    check_diameter_domination, extract_hampath, hampath_certificate_sequence, hampath_to_rst,
    HamLayout, HamPathInstance, HamReduction,
};
pub use ncl::{
    build_connector_tree, check_degree_structure, ncl_step_sequence, ncl_to_rst,
    orientation_of_tree, tree_of_orientation, validate_ncl, NclEdge, NclGadget, NclGraph,
    NclKind, NclLayout, NclOrientation, NclReduction,
};

/// Accumulates vertices and edges of a generated graph.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    pub(crate) fn with_vertices(n: usize) -> Self {
        Builder { n, edges: Vec::new() }
    }

    pub(crate) fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub(crate) fn edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        self.edges.push((u, v));
        self.edges.len()
    }

    pub(crate) fn finish(self) -> crate::Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}
