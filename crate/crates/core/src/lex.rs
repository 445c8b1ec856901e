//! Perturbed edge lengths and lexicographic shortest paths.
//!
//! Edge `e` has length `(1, u_e)` where `u_e` is the unit vector of its id.
//! Lengths are compared lexicographically, so distinct paths never tie and
//! every shortest path between two vertices is unique. Values are kept in
//! doubled units so half an edge is still an integer.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::ops::Add;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::point::Point;

/// A perturbed length: `total2` is twice the hop count, `coeff2` holds twice
/// each perturbation coordinate, sorted by edge id with zeros omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LexLen {
    total2: i64,
    coeff2: Vec<(EdgeId, i64)>,
}

impl LexLen {
    pub fn zero() -> Self {
        LexLen::default()
    }

    /// `ℓ(e) = (1, u_e)`.
    pub fn edge(e: EdgeId) -> Self {
        LexLen {
            total2: 2,
            coeff2: vec![(e, 2)],
        }
    }

    /// Half of `ℓ(e)`.
    pub fn half_edge(e: EdgeId) -> Self {
        LexLen {
            total2: 1,
            coeff2: vec![(e, 1)],
        }
    }

    pub fn from_parts(total2: i64, mut coeff2: Vec<(EdgeId, i64)>) -> Self {
        coeff2.sort_unstable_by_key(|&(e, _)| e);
        let mut merged: Vec<(EdgeId, i64)> = Vec::with_capacity(coeff2.len());
        for (e, c) in coeff2 {
            match merged.last_mut() {
                Some((last, acc)) if *last == e => *acc += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        LexLen {
            total2,
            coeff2: merged,
        }
    }

    /// Twice the unperturbed length.
    pub fn total2(&self) -> i64 {
        self.total2
    }

    pub fn coeff2(&self) -> &[(EdgeId, i64)] {
        &self.coeff2
    }

    /// Twice the perturbation coordinate of edge `e`.
    pub fn coeff(&self, e: EdgeId) -> i64 {
        self.coeff2
            .binary_search_by_key(&e, |&(id, _)| id)
            .map(|i| self.coeff2[i].1)
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.total2 == 0 && self.coeff2.is_empty()
    }
}

impl Add for &LexLen {
    type Output = LexLen;

    fn add(self, rhs: &LexLen) -> LexLen {
        let (a, b) = (&self.coeff2, &rhs.coeff2);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                out.push(b[j]);
                j += 1;
            } else {
                let c = a[i].1 + b[j].1;
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LexLen {
            total2: self.total2 + rhs.total2,
            coeff2: out,
        }
    }
}

impl Add for LexLen {
    type Output = LexLen;

    fn add(self, rhs: LexLen) -> LexLen {
        &self + &rhs
    }
}

impl Ord for LexLen {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total2.cmp(&other.total2) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.coeff2, &other.coeff2);
        let (mut i, mut j) = (0, 0);
        loop {
            let ka = a.get(i).map(|x| x.0);
            let kb = b.get(j).map(|x| x.0);
            let (va, vb) = match (ka, kb) {
                (None, None) => return Ordering::Equal,
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                    (a[i - 1].1, b[j - 1].1)
                }
                (Some(x), Some(y)) if x < y => {
                    i += 1;
                    (a[i - 1].1, 0)
                }
                (Some(_), None) => {
                    i += 1;
                    (a[i - 1].1, 0)
                }
                _ => {
                    j += 1;
                    (0, b[j - 1].1)
                }
            };
            match va.cmp(&vb) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for LexLen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for LexLen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}/2", self.total2)?;
        for (e, c) in &self.coeff2 {
            write!(f, ", e{e}:{c}/2")?;
        }
        write!(f, ")")
    }
}

/// A multigraph with explicit perturbed lengths; edge ids start at 1.
#[derive(Debug, Clone)]
pub struct LexGraph {
    ends: Vec<(Vertex, Vertex)>,
    lens: Vec<LexLen>,
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl LexGraph {
    pub fn with_vertices(n: usize) -> Self {
        LexGraph {
            ends: vec![(0, 0)],
            lens: vec![LexLen::zero()],
            adj: vec![Vec::new(); n],
        }
    }

    /// `g` with `ℓ(e)` on every edge; ids coincide with those of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut lg = LexGraph::with_vertices(g.n());
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            lg.add_edge(u, v, LexLen::edge(e));
        }
        lg
    }

    /// The subgraph `ids` of `g`. Edges keep their ids from `g`; absent ids
    /// are placeholders with no adjacency.
    pub fn from_subgraph(g: &Graph, ids: &[EdgeId]) -> Self {
        let in_sub = g.edge_mask(ids);
        let mut lg = LexGraph::with_vertices(g.n());
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            if in_sub[e] {
                lg.add_edge(u, v, LexLen::edge(e));
            } else {
                lg.ends.push((u, v));
                lg.lens.push(LexLen::edge(e));
            }
        }
        lg
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edge ids handed out so far.
    pub fn edge_count(&self) -> usize {
        self.ends.len() - 1
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, len: LexLen) -> usize {
        let id = self.ends.len();
        self.ends.push((u, v));
        self.lens.push(len);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        id
    }

    pub fn len_of(&self, id: usize) -> &LexLen {
        &self.lens[id]
    }

    pub fn endpoints(&self, id: usize) -> (Vertex, Vertex) {
        self.ends[id]
    }

    /// Dijkstra under the lexicographic order from the given seeds.
    ///
    /// When two relaxations reach a vertex with equal length, the smaller
    /// incoming edge id wins; such events are counted in [`LexTree::ties`].
    pub fn shortest_tree(&self, seeds: &[(Vertex, LexLen)]) -> LexTree {
        let seeds: Vec<(Vertex, LexLen, Option<usize>)> =
            seeds.iter().map(|(v, l)| (*v, l.clone(), None)).collect();
        self.run(&seeds)
    }

    /// Shortest-path tree from an extra hub vertex joined to `spokes[i].0` by
    /// an edge of length `spokes[i].1`. The spoke edges get ids
    /// `edge_count() + 1 + i`, as if they had been added with [`Self::add_edge`].
    pub fn shortest_tree_from_hub(&self, spokes: &[(Vertex, LexLen)]) -> LexTree {
        let base = self.edge_count() + 1;
        let seeds: Vec<(Vertex, LexLen, Option<usize>)> = spokes
            .iter()
            .enumerate()
            .map(|(i, (v, l))| (*v, l.clone(), Some(base + i)))
            .collect();
        self.run(&seeds)
    }

    fn run(&self, seeds: &[(Vertex, LexLen, Option<usize>)]) -> LexTree {
        let n = self.n();
        let mut dist: Vec<Option<LexLen>> = vec![None; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut done = vec![false; n];
        let mut ties = 0;
        let mut heap = BinaryHeap::new();
        for (v, len, via) in seeds {
            match dist[*v].as_ref().map(|cur| len.cmp(cur)) {
                None | Some(Ordering::Less) => {
                    dist[*v] = Some(len.clone());
                    parent[*v] = *via;
                    heap.push(Reverse((len.clone(), *v)));
                }
                Some(Ordering::Equal) => {
                    ties += 1;
                    if let (Some(new), Some(old)) = (via, parent[*v]) {
                        parent[*v] = Some(old.min(*new));
                    }
                }
                Some(Ordering::Greater) => {}
            }
        }
        while let Some(Reverse((d, u))) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for &(w, id) in &self.adj[u] {
                if done[w] {
                    continue;
                }
                let nd = &d + &self.lens[id];
                match dist[w].as_ref().map(|cur| nd.cmp(cur)) {
                    None | Some(Ordering::Less) => {
                        dist[w] = Some(nd.clone());
                        parent[w] = Some(id);
                        heap.push(Reverse((nd, w)));
                    }
                    Some(Ordering::Equal) => {
                        ties += 1;
                        if parent[w].is_some_and(|p| id < p) {
                            parent[w] = Some(id);
                        }
                    }
                    Some(Ordering::Greater) => {}
                }
            }
        }
        LexTree { dist, parent, ties }
    }
}

/// Result of [`LexGraph::shortest_tree`].
#[derive(Debug, Clone)]
pub struct LexTree {
    pub dist: Vec<Option<LexLen>>,
    /// Incoming edge id of every reached non-seed vertex.
    pub parent: Vec<Option<usize>>,
    /// Number of equal-length relaxations seen.
    pub ties: usize,
}

impl LexTree {
    /// Edge ids of the tree path from the seed set to `v`, seed side first.
    pub fn path_to(&self, lg: &LexGraph, v: Vertex) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(id) = self.parent[cur] {
            path.push(id);
            let (a, b) = lg.endpoints(id);
            cur = if a == cur { b } else { a };
        }
        path.reverse();
        path
    }

    /// All parent edge ids.
    pub fn tree_edges(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.parent.iter().flatten().copied().collect();
        ids.sort_unstable();
        ids
    }
}

/// Seeds for a search from `p`: a vertex at zero, or both endpoints of a
/// midpoint's edge at `½ℓ(e)`.
pub fn point_seeds(g: &Graph, p: Point) -> Vec<(Vertex, LexLen)> {
    match p {
        Point::Vertex(v) => vec![(v, LexLen::zero())],
        Point::Mid(e) => {
            let (a, b) = g.endpoints(e);
            vec![(a, LexLen::half_edge(e)), (b, LexLen::half_edge(e))]
        }
    }
}

/// Perturbed distances from `p` to every vertex inside the subgraph `ids`.
pub fn lex_point_distances(g: &Graph, ids: &[EdgeId], p: Point) -> Vec<Option<LexLen>> {
    LexGraph::from_subgraph(g, ids)
        .shortest_tree(&point_seeds(g, p))
        .dist
}

/// Perturbed distance from the source of `from` (vertex distances) to point `q`.
pub fn distance_to_point(g: &Graph, from: &[Option<LexLen>], src: Point, q: Point) -> Option<LexLen> {
    if src == q {
        return Some(LexLen::zero());
    }
    match q {
        Point::Vertex(v) => from[v].clone(),
        Point::Mid(e) => {
            let (a, b) = g.endpoints(e);
            let near = match (&from[a], &from[b]) {
                (Some(x), Some(y)) => Some(x.min(y).clone()),
                (Some(x), None) | (None, Some(x)) => Some(x.clone()),
                (None, None) => None,
            };
            near.map(|d| &d + &LexLen::half_edge(e))
        }
    }
}

/// Perturbed distance between two points inside the subgraph `ids`.
pub fn lex_point_distance(g: &Graph, ids: &[EdgeId], p: Point, q: Point) -> Option<LexLen> {
    let from = lex_point_distances(g, ids, p);
    distance_to_point(g, &from, p, q)
}

/// Perturbed shortest-path tree of `g` from `p` with per-vertex distances.
///
/// For a midpoint source the tree contains the midpoint's edge. Vertices not
/// reachable get `None` and are left out of the tree.
pub fn lex_shortest_tree(g: &Graph, p: Point) -> (Vec<EdgeId>, Vec<Option<LexLen>>) {
    let lg = LexGraph::from_graph(g);
    let t = lg.shortest_tree(&point_seeds(g, p));
    let mut edges = t.tree_edges();
    if let Point::Mid(e) = p {
        edges.push(e);
        edges.sort_unstable();
    }
    (edges, t.dist)
}

/// The unique perturbed shortest paths between all vertex pairs of `g`.
#[derive(Debug, Clone)]
pub struct AllPairsPaths {
    /// `vertices[a][b]`: vertex sequence of the path from `a` to `b`.
    vertices: Vec<Vec<Vec<Vertex>>>,
    /// `edges[a][b]`: edge ids of the path from `a` to `b`.
    edges: Vec<Vec<Vec<EdgeId>>>,
    dist: Vec<Vec<Option<LexLen>>>,
}

impl AllPairsPaths {
    pub fn new(g: &Graph) -> Self {
        let lg = LexGraph::from_graph(g);
        let n = g.n();
        let mut vertices = vec![vec![Vec::new(); n]; n];
        let mut edges = vec![vec![Vec::new(); n]; n];
        let mut dist = Vec::with_capacity(n);
        for a in 0..n {
            let t = lg.shortest_tree(&[(a, LexLen::zero())]);
            for b in 0..n {
                if t.dist[b].is_none() {
                    continue;
                }
                let path = t.path_to(&lg, b);
                let mut vs = vec![a];
                let mut cur = a;
                for &e in &path {
                    cur = g.other_end(e, cur);
                    vs.push(cur);
                }
                vertices[a][b] = vs;
                edges[a][b] = path;
            }
            dist.push(t.dist);
        }
        AllPairsPaths {
            vertices,
            edges,
            dist,
        }
    }

    pub fn path_vertices(&self, a: Vertex, b: Vertex) -> &[Vertex] {
        &self.vertices[a][b]
    }

    pub fn path_edges(&self, a: Vertex, b: Vertex) -> &[EdgeId] {
        &self.edges[a][b]
    }

    pub fn dist(&self, a: Vertex, b: Vertex) -> Option<&LexLen> {
        self.dist[a][b].as_ref()
    }
}
