//! Points (vertices and edge midpoints) and distances on the subdivided graph.
//!
//! Every distance here is stored in half-edge units: two vertices at true
//! distance `k` are `2k` apart, a midpoint is `1` away from both endpoints.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::tree::SpanningTree;

/// Distance in half-edge units.
pub type HalfDist = u32;

/// Sentinel for unreachable points.
pub const UNREACHABLE: HalfDist = HalfDist::MAX;

/// A vertex or the midpoint of an edge. Vertices order before midpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    Vertex(Vertex),
    Mid(EdgeId),
}

impl Point {
    /// All points of `g`: vertices by id, then midpoints by edge id.
    pub fn all(g: &Graph) -> Vec<Point> {
        (0..g.n())
            .map(Point::Vertex)
            .chain(g.edge_ids().map(Point::Mid))
            .collect()
    }

    /// Dense index: vertices `0..n`, then midpoint of edge `e` at `n + e - 1`.
    pub fn index(&self, g: &Graph) -> usize {
        match *self {
            Point::Vertex(v) => v,
            Point::Mid(e) => g.n() + e - 1,
        }
    }

    pub fn from_index(g: &Graph, i: usize) -> Point {
        if i < g.n() {
            Point::Vertex(i)
        } else {
            Point::Mid(i - g.n() + 1)
        }
    }

    /// Whether `p` names a vertex or an edge of `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        match *self {
            Point::Vertex(v) => v < g.n(),
            Point::Mid(e) => e >= 1 && e <= g.m(),
        }
    }

    /// Whether the point lies on the subgraph with membership mask `in_sub`.
    pub fn lies_on(&self, g: &Graph, in_sub: &[bool]) -> bool {
        match *self {
            Point::Vertex(v) => v < g.n(),
            Point::Mid(e) => e < in_sub.len() && in_sub[e],
        }
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Point::Vertex(v) => write!(f, "v{v}"),
            Point::Mid(e) => write!(f, "p{e}"),
        }
    }
}

/// Half-unit distances from one point to every vertex and midpoint of a subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDistances {
    source: Point,
    vertex: Vec<HalfDist>,
    mid: Vec<HalfDist>,
}

impl HalfDistances {
    pub fn vertex(&self, v: Vertex) -> HalfDist {
        self.vertex[v]
    }

    pub fn vertices(&self) -> &[HalfDist] {
        &self.vertex
    }

    /// Distance to `p`; midpoints of edges outside the subgraph are unreachable.
    pub fn get(&self, p: Point) -> HalfDist {
        match p {
            Point::Vertex(v) => self.vertex[v],
            Point::Mid(e) => self.mid[e],
        }
    }

    pub fn source(&self) -> Point {
        self.source
    }

    pub fn eccentricity(&self) -> HalfDist {
        self.vertex.iter().copied().max().unwrap_or(0)
    }
}

/// BFS from `p` on the subdivided subgraph given by `ids`.
///
/// A midpoint source starts both endpoints at distance 1.
pub fn point_distances_half(g: &Graph, ids: &[EdgeId], p: Point) -> Result<HalfDistances> {
    let in_sub = g.edge_mask(ids);
    if !p.lies_on(g, &in_sub) {
        return Err(Error::Precondition(format!("point {p} is not on the subgraph")));
    }
    let adj = g.sub_adjacency(ids);
    let mut vertex = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    match p {
        Point::Vertex(v) => {
            vertex[v] = 0;
            queue.push_back(v);
        }
        Point::Mid(e) => {
            let (a, b) = g.endpoints(e);
            vertex[a] = 1;
            vertex[b] = 1;
            queue.push_back(a);
            queue.push_back(b);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, _) in &adj[u] {
            if vertex[w] == UNREACHABLE {
                vertex[w] = vertex[u] + 2;
                queue.push_back(w);
            }
        }
    }
    let mut mid = vec![UNREACHABLE; g.m() + 1];
    for &e in ids {
        let (a, b) = g.endpoints(e);
        let near = vertex[a].min(vertex[b]);
        mid[e] = if p == Point::Mid(e) {
            0
        } else if near == UNREACHABLE {
            UNREACHABLE
        } else {
            near + 1
        };
    }
    Ok(HalfDistances {
        source: p,
        vertex,
        mid,
    })
}

/// Largest half-unit distance from `p` to a vertex of the subgraph.
pub fn eccentricity_half(g: &Graph, ids: &[EdgeId], p: Point) -> Result<HalfDist> {
    Ok(point_distances_half(g, ids, p)?.eccentricity())
}

/// Twice the diameter of the subgraph (unreachable pairs give [`UNREACHABLE`]).
pub fn diameter_half(g: &Graph, ids: &[EdgeId]) -> HalfDist {
    (0..g.n())
        .map(|v| {
            point_distances_half(g, ids, Point::Vertex(v))
                .expect("vertices lie on every spanning subgraph")
                .eccentricity()
        })
        .max()
        .unwrap_or(0)
}

/// Diameter of a spanning tree in ordinary edge units, via two sweeps.
pub fn tree_diameter(g: &Graph, t: &SpanningTree) -> usize {
    if g.n() <= 1 {
        return 0;
    }
    let far = |src: Vertex| {
        let d = point_distances_half(g, t.edges(), Point::Vertex(src))
            .expect("vertex source")
            .vertex;
        let (v, &dist) = d
            .iter()
            .enumerate()
            .max_by_key(|&(v, &dist)| (dist, std::cmp::Reverse(v)))
            .expect("nonempty");
        (v, dist)
    };
    let (a, _) = far(0);
    let (_, dist) = far(a);
    (dist / 2) as usize
}

/// Center points of a (pseudo)tree: points of `V ∪ R(q)` whose half-unit
/// eccentricity is at most `d`, i.e. true eccentricity at most `d / 2`.
pub fn center_points(g: &Graph, ids: &[EdgeId], d: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = (0..g.n())
        .map(Point::Vertex)
        .chain(ids.iter().copied().map(Point::Mid))
        .filter(|&p| is_center(g, ids, d, p))
        .collect();
    pts.sort_unstable();
    pts
}

/// Whether `p` is a center point of the subgraph for bound `d`.
pub fn is_center(g: &Graph, ids: &[EdgeId], d: usize, p: Point) -> bool {
    match eccentricity_half(g, ids, p) {
        Ok(ecc) => ecc != UNREACHABLE && u64::from(ecc) <= d as u64,
        Err(_) => false,
    }
}

/// Breadth-first spanning tree of the subgraph `ids` rooted at `p`.
///
/// A midpoint root keeps its edge and grows from both endpoints. Ties are
/// broken by smaller edge id, so the result is deterministic.
pub fn bfs_tree_from_point(g: &Graph, ids: &[EdgeId], p: Point) -> Result<SpanningTree> {
    let in_sub = g.edge_mask(ids);
    if !p.lies_on(g, &in_sub) {
        return Err(Error::Precondition(format!("point {p} is not on the subgraph")));
    }
    let adj = g.sub_adjacency(ids);
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    let mut tree = Vec::with_capacity(g.n().saturating_sub(1));
    match p {
        Point::Vertex(v) => {
            seen[v] = true;
            queue.push_back(v);
        }
        Point::Mid(e) => {
            let (a, b) = g.endpoints(e);
            seen[a] = true;
            seen[b] = true;
            tree.push(e);
            queue.push_back(a.min(b));
            queue.push_back(a.max(b));
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                tree.push(e);
                queue.push_back(w);
            }
        }
    }
    SpanningTree::new(g, &tree).map_err(|_| Error::Disconnected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn midpoint_distances_on_p3() {
        let g = p3();
        let d = point_distances_half(&g, &[1, 2], Point::Mid(1)).unwrap();
        assert_eq!(d.vertices(), &[1, 1, 3]);
        assert_eq!(d.get(Point::Mid(1)), 0);
        assert_eq!(d.get(Point::Mid(2)), 2);
        let d = point_distances_half(&g, &[1, 2], Point::Vertex(1)).unwrap();
        assert_eq!(d.vertex(1), 0);
    }

    #[test]
    fn point_must_lie_on_subgraph() {
        let g = p3();
        assert!(point_distances_half(&g, &[1], Point::Mid(2)).is_err());
    }

    #[test]
    fn eccentricities() {
        let g = star3();
        assert_eq!(eccentricity_half(&g, &[1, 2, 3], Point::Vertex(0)).unwrap(), 2);
        assert_eq!(eccentricity_half(&g, &[1, 2, 3], Point::Vertex(1)).unwrap(), 4);
        let g = c4();
        // Hand BFS on the subdivided 4-cycle from the midpoint of 0-1:
        // 0 and 1 at 1, then 3 and 2 at 3.
        assert_eq!(eccentricity_half(&g, &[1, 2, 3, 4], Point::Mid(1)).unwrap(), 3);
        assert_eq!(eccentricity_half(&g, &[1, 2, 3, 4], Point::Vertex(0)).unwrap(), 4);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter_half(&p3(), &[1, 2]), 4);
        assert_eq!(diameter_half(&star3(), &[1, 2, 3]), 4);
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(diameter_half(&g, &[1]), UNREACHABLE);
    }

    #[test]
    fn centers() {
        assert_eq!(center_points(&star3(), &[1, 2, 3], 2), vec![Point::Vertex(0)]);
        assert_eq!(center_points(&p3(), &[1, 2], 2), vec![Point::Vertex(1)]);
        // Vertex eccentricity 4, midpoint eccentricity 3.
        assert_eq!(
            center_points(&c4(), &[1, 2, 3, 4], 3),
            vec![Point::Mid(1), Point::Mid(2), Point::Mid(3), Point::Mid(4)]
        );
        assert_eq!(center_points(&p3(), &[1, 2], 3).len(), 3);
    }

    #[test]
    fn bfs_tree_keeps_midpoint_edge() {
        let g = c4();
        let t = bfs_tree_from_point(&g, &[1, 2, 3, 4], Point::Mid(3)).unwrap();
        assert!(t.contains(3));
        assert_eq!(eccentricity_half(&g, t.edges(), Point::Mid(3)).unwrap(), 3);
    }

    #[test]
    fn two_sweep_diameter_matches_bfs() {
        let g = star3();
        let t = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        assert_eq!(tree_diameter(&g, &t), 2);
    }
}
