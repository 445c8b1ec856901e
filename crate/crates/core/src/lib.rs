//! Spanning-tree reconfiguration under degree and diameter constraints.

pub mod degree;
pub mod diameter;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod lex;
pub mod oracle;
pub mod point;
pub mod reductions;
pub mod sequence;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
pub use lex::LexLen;
pub use point::{HalfDist, Point};
pub use sequence::{Constraint, ReconfSequence, Step};
pub use tree::{Pseudotree, SpanningTree};
