//! Good triples `(r1, r2, Q)`: a pseudotree with both points as centers whose
//! λ labels are consistent with every edge of the host graph.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lex::{lex_point_distances, LexLen};
use crate::point::{is_center, Point};
use crate::tree::{unique_cycle, validate_pseudotree, Pseudotree};

/// `λ_v = max(d_ℓ(r1, v; Q), d_ℓ(r2, v; Q))` for every vertex.
pub type LambdaLabels = Vec<LexLen>;

/// A pseudotree witnessing that `r1` and `r2` are joined in the center
/// auxiliary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodTriple {
    pub r1: Point,
    pub r2: Point,
    pub q: Pseudotree,
    pub labels: LambdaLabels,
}

/// Perturbed distances inside `q` from each point, then the per-vertex maximum.
pub fn lambda_labels(g: &Graph, q: &[EdgeId], r1: Point, r2: Point) -> Result<LambdaLabels> {
    let in_q = g.edge_mask(q);
    for r in [r1, r2] {
        if !r.lies_on(g, &in_q) {
            return Err(Error::Precondition(format!("point {r} is not on the pseudotree")));
        }
    }
    let d1 = lex_point_distances(g, q, r1);
    let d2 = lex_point_distances(g, q, r2);
    d1.into_iter()
        .zip(d2)
        .map(|(a, b)| match (a, b) {
            (Some(a), Some(b)) => Ok(a.max(b)),
            _ => Err(Error::Disconnected),
        })
        .collect()
}

fn on_cycle(r: Point, cycle_vertices: &[Vertex], cycle_edges: &[EdgeId]) -> bool {
    match r {
        Point::Vertex(v) => cycle_vertices.contains(&v),
        Point::Mid(e) => cycle_edges.contains(&e),
    }
}

/// λ labels of a good triple, or `None` when `(r1, r2, q)` is not good.
pub fn good_triple_labels(
    g: &Graph,
    d: usize,
    r1: Point,
    r2: Point,
    q: &[EdgeId],
) -> Option<LambdaLabels> {
    if r1 == r2 || !validate_pseudotree(g, q) {
        return None;
    }
    if !is_center(g, q, d, r1) || !is_center(g, q, d, r2) {
        return None;
    }
    let labels = lambda_labels(g, q, r1, r2).ok()?;
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let len = LexLen::edge(e);
        if labels[v] > &labels[u] + &len || labels[u] > &labels[v] + &len {
            return None;
        }
    }
    if let Some(c) = unique_cycle(g, q) {
        if !on_cycle(r1, &c.vertices, &c.edges) || !on_cycle(r2, &c.vertices, &c.edges) {
            return None;
        }
    }
    Some(labels)
}

/// Whether `r1 ≠ r2` are centers of the pseudotree `q` and the triple
/// satisfies both goodness conditions (edge consistency over all of `g`, and
/// both points on the cycle if there is one).
pub fn is_good_triple(g: &Graph, d: usize, r1: Point, r2: Point, q: &[EdgeId]) -> bool {
    good_triple_labels(g, d, r1, r2, q).is_some()
}

impl GoodTriple {
    pub fn new(g: &Graph, d: usize, r1: Point, r2: Point, q: &[EdgeId]) -> Option<Self> {
        let labels = good_triple_labels(g, d, r1, r2, q)?;
        Some(GoodTriple {
            r1,
            r2,
            q: Pseudotree::new(g, q).ok()?,
            labels,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn labels_with_equal_points_are_distances() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = Point::Vertex(0);
        let labels = lambda_labels(&g, &[1, 2], r, r).unwrap();
        assert_eq!(labels[2], LexLen::edge(1) + LexLen::edge(2));
    }

    #[test]
    fn labels_on_p3_take_the_longer_side() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let labels = lambda_labels(&g, &[1, 2], Point::Vertex(0), Point::Vertex(2)).unwrap();
        // Equal hop counts; the nonzero e1 coordinate makes ℓ(e1) the larger.
        assert_eq!(labels[1], LexLen::edge(1));
    }

    #[test]
    fn c4_opposite_midpoints() {
        let g = c4();
        let all = [1, 2, 3, 4];
        let labels = lambda_labels(&g, &all, Point::Mid(1), Point::Mid(3)).unwrap();
        assert!(labels.iter().all(|l| l.total2() == 3));
        assert!(is_good_triple(&g, 3, Point::Mid(1), Point::Mid(3), &all));
        assert!(is_good_triple(&g, 3, Point::Mid(1), Point::Mid(2), &all));
        assert!(!is_good_triple(&g, 3, Point::Mid(1), Point::Mid(1), &all));
    }

    #[test]
    fn centers_are_required() {
        let g = c4();
        // Path 1-0-3-2 has centers p4 only for d = 3.
        assert!(!is_good_triple(&g, 3, Point::Vertex(0), Point::Mid(4), &[1, 3, 4]));
    }

    #[test]
    fn cyclic_witness_needs_points_on_cycle() {
        // Triangle 0-1-2 with pendant 3 at 0.
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let q = [1, 2, 3, 4];
        assert!(is_center(&g, &q, 4, Point::Mid(4)));
        assert!(!is_good_triple(&g, 4, Point::Mid(4), Point::Vertex(0), &q));
    }
}
