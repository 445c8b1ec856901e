//! Simple undirected graphs with stable 1-based edge ids.
//!
//! Edge ids follow insertion order: the `i`-th edge passed to [`Graph::new`]
//! gets id `i + 1`. All tree and pseudotree types refer to edges by id.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    lookup: HashMap<(Vertex, Vertex), EdgeId>,
    fingerprint: u64,
}

impl Graph {
    /// Builds a simple graph. Loops and parallel edges are rejected.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut lookup = HashMap::with_capacity(edges.len());
        let mut stored = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if lookup.insert(key, i + 1).is_some() {
                return Err(Error::ParallelEdge(key.0, key.1));
            }
            adj[u].push((v, i + 1));
            adj[v].push((u, i + 1));
            stored.push((u, v));
        }
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        stored.hash(&mut hasher);
        Ok(Graph {
            n,
            edges: stored,
            adj,
            lookup,
            fingerprint: hasher.finish(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hash of the vertex count and edge list; trees remember it to detect host mismatches.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        1..=self.edges.len()
    }

    /// Endpoints of edge `id` in input order.
    pub fn endpoints(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id - 1]
    }

    pub fn try_endpoints(&self, id: EdgeId) -> Result<(Vertex, Vertex)> {
        if id == 0 || id > self.edges.len() {
            return Err(Error::UnknownEdge(id));
        }
        Ok(self.edges[id - 1])
    }

    pub fn other_end(&self, id: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.endpoints(id);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbors of `v` together with the connecting edge id.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Membership mask indexed by edge id (index 0 unused).
    pub fn edge_mask(&self, ids: &[EdgeId]) -> Vec<bool> {
        let mut mask = vec![false; self.m() + 1];
        for &e in ids {
            mask[e] = true;
        }
        mask
    }

    /// Adjacency lists restricted to the given edge ids.
    pub fn sub_adjacency(&self, ids: &[EdgeId]) -> Vec<Vec<(Vertex, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &e in ids {
            let (u, v) = self.endpoints(e);
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(_, e)| e);
        }
        adj
    }

    /// Degree of every vertex in the subgraph induced by `ids`.
    pub fn sub_degrees(&self, ids: &[EdgeId]) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &e in ids {
            let (u, v) = self.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }
}

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
