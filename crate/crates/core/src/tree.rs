//! Spanning trees and pseudotrees as sorted edge-id sets over a host graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, UnionFind, Vertex};

/// True iff `ids` is the edge set of a spanning tree of `g`.
pub fn validate_spanning_tree(g: &Graph, ids: &[EdgeId]) -> bool {
    let n = g.n();
    if n == 0 {
        return ids.is_empty();
    }
    if ids.len() != n - 1 {
        return false;
    }
    let mut uf = UnionFind::new(n);
    let mut seen = vec![false; g.m() + 1];
    for &e in ids {
        if e == 0 || e > g.m() || seen[e] {
            return false;
        }
        seen[e] = true;
        let (u, v) = g.endpoints(e);
        if !uf.union(u, v) {
            return false;
        }
    }
    true
}

/// True iff `ids` spans `g`, is connected and contains at most one cycle.
pub fn validate_pseudotree(g: &Graph, ids: &[EdgeId]) -> bool {
    let n = g.n();
    if n == 0 {
        return ids.is_empty();
    }
    if ids.len() != n - 1 && ids.len() != n {
        return false;
    }
    let mut uf = UnionFind::new(n);
    let mut seen = vec![false; g.m() + 1];
    let mut merges = 0;
    for &e in ids {
        if e == 0 || e > g.m() || seen[e] {
            return false;
        }
        seen[e] = true;
        let (u, v) = g.endpoints(e);
        if uf.union(u, v) {
            merges += 1;
        }
    }
    merges == n - 1
}

fn sorted_ids(ids: &[EdgeId]) -> Vec<EdgeId> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpanningTree {
    #[serde(skip)]
    host: u64,
    edges: Vec<EdgeId>,
}

impl SpanningTree {
    pub fn new(g: &Graph, ids: &[EdgeId]) -> Result<Self> {
        if !validate_spanning_tree(g, ids) {
            return Err(Error::NotSpanningTree);
        }
        Ok(SpanningTree {
            host: g.fingerprint(),
            edges: sorted_ids(ids),
        })
    }

    pub(crate) fn new_unchecked(g: &Graph, mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        debug_assert!(validate_spanning_tree(g, &ids));
        SpanningTree {
            host: g.fingerprint(),
            edges: ids,
        }
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn host(&self) -> u64 {
        self.host
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self, g: &Graph) -> Vec<usize> {
        g.sub_degrees(&self.edges)
    }

    pub fn max_degree(&self, g: &Graph) -> usize {
        self.degrees(g).into_iter().max().unwrap_or(0)
    }

    /// Edges of `self` missing from `other`.
    pub fn difference(&self, other: &SpanningTree) -> Vec<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .collect()
    }

    /// Unique path between `a` and `b`, as edge ids from `a` to `b`.
    pub fn path(&self, g: &Graph, a: Vertex, b: Vertex) -> Vec<EdgeId> {
        forest_path(g, &self.edges, a, b).expect("tree is connected")
    }
}

/// Path between `a` and `b` inside the forest given by `ids`, if they are connected.
pub fn forest_path(g: &Graph, ids: &[EdgeId], a: Vertex, b: Vertex) -> Option<Vec<EdgeId>> {
    let adj = g.sub_adjacency(ids);
    let mut via: Vec<Option<(Vertex, EdgeId)>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some((u, e));
                queue.push_back(w);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = b;
    while cur != a {
        let (prev, e) = via[cur].expect("reached vertex has a predecessor");
        path.push(e);
        cur = prev;
    }
    path.reverse();
    Some(path)
}

/// True iff the trees are equal or differ by a single flip.
pub fn are_flip_adjacent(t1: &SpanningTree, t2: &SpanningTree) -> Result<bool> {
    if t1.host != t2.host {
        return Err(Error::HostMismatch);
    }
    Ok(t1.difference(t2).len() <= 1)
}

/// Removes `remove` and adds `add`, failing unless the result is a spanning tree.
pub fn apply_flip(
    g: &Graph,
    t: &SpanningTree,
    remove: EdgeId,
    add: EdgeId,
) -> Result<SpanningTree> {
    if t.host != g.fingerprint() {
        return Err(Error::HostMismatch);
    }
    g.try_endpoints(add)?;
    if !t.contains(remove) {
        return Err(Error::InvalidFlip(format!("edge {remove} is not in the tree")));
    }
    if t.contains(add) {
        return Err(Error::InvalidFlip(format!("edge {add} is already in the tree")));
    }
    let mut ids: Vec<EdgeId> = t.edges.iter().copied().filter(|&e| e != remove).collect();
    ids.push(add);
    if !validate_spanning_tree(g, &ids) {
        return Err(Error::InvalidFlip(format!(
            "removing {remove} and adding {add} does not give a spanning tree"
        )));
    }
    Ok(SpanningTree::new_unchecked(g, ids))
}

/// Completes an acyclic edge set to a spanning tree, adding edges in id order.
pub fn extend_to_spanning_tree(g: &Graph, forced: &[EdgeId]) -> Result<SpanningTree> {
    let mut uf = UnionFind::new(g.n());
    let mut ids = Vec::with_capacity(g.n().saturating_sub(1));
    for &e in forced {
        let (u, v) = g.try_endpoints(e)?;
        if !uf.union(u, v) {
            return Err(Error::Precondition("forced edges contain a cycle".into()));
        }
        ids.push(e);
    }
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        if uf.union(u, v) {
            ids.push(e);
        }
    }
    SpanningTree::new(g, &ids)
}

/// Vertices and edges of a cycle in traversal order: `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pseudotree {
    #[serde(skip)]
    host: u64,
    edges: Vec<EdgeId>,
}

impl Pseudotree {
    pub fn new(g: &Graph, ids: &[EdgeId]) -> Result<Self> {
        if !validate_pseudotree(g, ids) {
            return Err(Error::NotPseudotree);
        }
        Ok(Pseudotree {
            host: g.fingerprint(),
            edges: sorted_ids(ids),
        })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_tree(&self, g: &Graph) -> bool {
        self.edges.len() + 1 == g.n()
    }

    pub fn as_tree(&self, g: &Graph) -> Option<SpanningTree> {
        self.is_tree(g)
            .then(|| SpanningTree::new_unchecked(g, self.edges.clone()))
    }

    pub fn unique_cycle(&self, g: &Graph) -> Option<Cycle> {
        unique_cycle(g, &self.edges)
    }
}

impl From<SpanningTree> for Pseudotree {
    fn from(t: SpanningTree) -> Self {
        Pseudotree {
            host: t.host,
            edges: t.edges,
        }
    }
}

/// The cycle of a connected unicyclic edge set, or `None` for a forest.
///
/// Leaves are peeled until only the cycle remains; the cycle is reported
/// starting at its smallest vertex, continuing through the smaller-id edge.
pub fn unique_cycle(g: &Graph, ids: &[EdgeId]) -> Option<Cycle> {
    let adj = g.sub_adjacency(ids);
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n()];
    let mut stack: Vec<Vertex> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &(w, _) in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..g.n()).find(|&v| !removed[v])?;
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut prev_edge = 0;
    let mut cur = start;
    loop {
        let &(next, e) = adj[cur]
            .iter()
            .find(|&&(w, e)| !removed[w] && e != prev_edge)
            .expect("cycle vertex has two cycle edges");
        edges.push(e);
        if next == start {
            break;
        }
        vertices.push(next);
        prev_edge = e;
        cur = next;
    }
    Some(Cycle { vertices, edges })
}
