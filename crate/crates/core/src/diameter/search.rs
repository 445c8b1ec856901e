//! Polynomial search for a good triple `(r1, r2, Q)` given two points.
//!
//! A tree witness is found by guessing the edge `e = v1v2` that contains the
//! midpoint between `r1` and `r2`: a hub `r` is attached to `v1` and `v2` with
//! lengths that reproduce the λ labels, and the shortest-path tree from `r`
//! reveals `Q`. A cyclic witness is found the same way after guessing the
//! cycle, which is assembled from unique shortest paths and one extra edge per
//! side.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::lex::{point_seeds, AllPairsPaths, LexGraph, LexLen};
use crate::point::{eccentricity_half, HalfDist, Point};
use crate::tree::{Pseudotree, SpanningTree};

use super::good::is_good_triple;

/// A simple path given by its vertex sequence and edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Walk {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

/// A candidate cycle `J1 ∘ e' ∘ rev(J2) ∘ e`.
#[derive(Debug, Clone)]
pub struct CandidateCycle {
    /// Cyclic vertex order; `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    /// Guesses `(e, e', v1)` with `e < e'` that produce this cycle, where `v1`
    /// is the endpoint of `e` on the `J1` side.
    generators: HashSet<(EdgeId, EdgeId, Vertex)>,
}

impl CandidateCycle {
    fn contains(&self, p: Point) -> bool {
        match p {
            Point::Vertex(v) => self.vertices.contains(&v),
            Point::Mid(e) => self.edges.contains(&e),
        }
    }
}

/// Search state for one graph and one diameter bound.
///
/// Holds the perturbed-length graph, distances from every point, the unique
/// shortest paths and the candidate cycles, all of which are shared by every
/// pair of points.
#[derive(Debug)]
pub struct GoodTripleSearch<'g> {
    g: &'g Graph,
    d: usize,
    base: LexGraph,
    point_dist: Vec<Vec<LexLen>>,
    ecc: Vec<HalfDist>,
    cycles: Vec<CandidateCycle>,
    ties: AtomicUsize,
}

impl<'g> GoodTripleSearch<'g> {
    pub fn new(g: &'g Graph, d: usize) -> Result<Self> {
        g.require_connected()?;
        let base = LexGraph::from_graph(g);
        let all: Vec<EdgeId> = g.edge_ids().collect();
        let points = g.n() + g.m();
        let mut point_dist = Vec::with_capacity(points);
        let mut ecc = Vec::with_capacity(points);
        for i in 0..points {
            let p = Point::from_index(g, i);
            let t = base.shortest_tree(&point_seeds(g, p));
            point_dist.push(
                t.dist
                    .into_iter()
                    .map(|x| x.expect("graph is connected"))
                    .collect(),
            );
            ecc.push(eccentricity_half(g, &all, p)?);
        }
        let paths = AllPairsPaths::new(g);
        let cycles = candidate_cycles(g, &paths, d);
        Ok(GoodTripleSearch {
            g,
            d,
            base,
            point_dist,
            ecc,
            cycles,
            ties: AtomicUsize::new(0),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Equal-length relaxations seen so far in augmented graphs.
    pub fn ties(&self) -> usize {
        self.ties.load(Ordering::Relaxed)
    }

    pub fn candidate_cycles(&self) -> &[CandidateCycle] {
        &self.cycles
    }

    /// Whether `p` is within half-distance `d` of every vertex of `g`; no
    /// pseudotree can have `p` as a center otherwise.
    pub fn may_be_center(&self, p: Point) -> bool {
        u64::from(self.ecc[p.index(self.g)]) <= self.d as u64
    }

    fn dist(&self, p: Point, v: Vertex) -> &LexLen {
        &self.point_dist[p.index(self.g)][v]
    }

    fn check_points(&self, r1: Point, r2: Point) -> Result<()> {
        for r in [r1, r2] {
            if !r.is_valid(self.g) {
                return Err(Error::Precondition(format!("point {r} is not in the graph")));
            }
        }
        if r1 == r2 {
            return Err(Error::Precondition("the two points must differ".into()));
        }
        Ok(())
    }

    fn hub_tree(&self, spokes: &[(Vertex, LexLen)]) -> Vec<EdgeId> {
        let t = self.base.shortest_tree_from_hub(spokes);
        if t.ties > 0 {
            self.ties.fetch_add(t.ties, Ordering::Relaxed);
        }
        t.tree_edges()
    }

    /// Spanning tree `Q` with `(r1, r2, Q)` good, if one exists.
    pub fn find_good_tree(&self, r1: Point, r2: Point) -> Result<Option<SpanningTree>> {
        self.check_points(r1, r2)?;
        if !self.may_be_center(r1) || !self.may_be_center(r2) {
            return Ok(None);
        }
        let g = self.g;
        let m = g.m();
        let mut tried: HashSet<Vec<EdgeId>> = HashSet::new();
        for e in g.edge_ids() {
            let (a, b) = g.endpoints(e);
            for (v1, v2) in [(a, b), (b, a)] {
                let l1 = if r2 == Point::Mid(e) {
                    LexLen::half_edge(e)
                } else {
                    self.dist(r2, v2) + &LexLen::edge(e)
                };
                let l2 = if r1 == Point::Mid(e) {
                    LexLen::half_edge(e)
                } else {
                    self.dist(r1, v1) + &LexLen::edge(e)
                };
                let t = self.hub_tree(&[(v1, l1), (v2, l2)]);
                let mut q: Vec<EdgeId> = t.into_iter().filter(|&id| id <= m).collect();
                if !q.contains(&e) {
                    q.push(e);
                }
                q.sort_unstable();
                if q.len() + 1 != g.n() || !tried.insert(q.clone()) {
                    continue;
                }
                if is_good_triple(g, self.d, r1, r2, &q) {
                    return Ok(Some(SpanningTree::new_unchecked(g, q)));
                }
            }
        }
        Ok(None)
    }

    /// Pseudotree `Q` with a cycle and `(r1, r2, Q)` good, if one exists.
    pub fn find_good_cyclic_pseudotree(&self, r1: Point, r2: Point) -> Result<Option<Pseudotree>> {
        self.check_points(r1, r2)?;
        if !self.may_be_center(r1) || !self.may_be_center(r2) {
            return Ok(None);
        }
        let g = self.g;
        let m = g.m();
        let mut tried: HashSet<Vec<EdgeId>> = HashSet::new();
        for c in &self.cycles {
            if !c.contains(r1) || !c.contains(r2) {
                continue;
            }
            let sub = LexGraph::from_subgraph(g, &c.edges);
            let d1 = sub.shortest_tree(&point_seeds(g, r1)).dist;
            let d2 = sub.shortest_tree(&point_seeds(g, r2)).dist;
            let closer_to_r1 = |v: Vertex| d1[v] < d2[v];
            // The two cycle edges where the nearer center switches, oriented
            // from the r1 side to the r2 side.
            let mut middles: Vec<(EdgeId, Vertex, Vertex)> = Vec::with_capacity(2);
            for &e in &c.edges {
                let (a, b) = g.endpoints(e);
                if closer_to_r1(a) && !closer_to_r1(b) {
                    middles.push((e, a, b));
                } else if closer_to_r1(b) && !closer_to_r1(a) {
                    middles.push((e, b, a));
                }
            }
            let [(e, v1, v2), (f, w1, w2)] = middles[..] else {
                continue;
            };
            let key = if e < f { (e, f, v1) } else { (f, e, w1) };
            if !c.generators.contains(&key) {
                continue;
            }
            let arm = |edge: EdgeId, near: Vertex, far_r: Point, far_d: &[Option<LexLen>]| {
                if far_r == Point::Mid(edge) {
                    LexLen::half_edge(edge)
                } else {
                    far_d[near].as_ref().expect("cycle vertex") + &LexLen::edge(edge)
                }
            };
            let spokes = [
                (v1, arm(e, v2, r2, &d2)),
                (v2, arm(e, v1, r1, &d1)),
                (w1, arm(f, w2, r2, &d2)),
                (w2, arm(f, w1, r1, &d1)),
            ];
            let t = self.hub_tree(&spokes);
            let mut q: Vec<EdgeId> = t.into_iter().filter(|&id| id <= m).collect();
            q.extend_from_slice(&c.edges);
            q.sort_unstable();
            q.dedup();
            if q.len() != g.n() || !tried.insert(q.clone()) {
                continue;
            }
            if is_good_triple(g, self.d, r1, r2, &q) {
                return Ok(Some(Pseudotree::new(g, &q)?));
            }
        }
        Ok(None)
    }

    /// A tree witness if one exists, otherwise a cyclic one.
    pub fn find_witness(&self, r1: Point, r2: Point) -> Result<Option<Pseudotree>> {
        if let Some(t) = self.find_good_tree(r1, r2)? {
            return Ok(Some(t.into()));
        }
        self.find_good_cyclic_pseudotree(r1, r2)
    }
}

/// Unique shortest path plus every simple detour through one extra edge,
/// for each ordered vertex pair.
fn detour_walks(g: &Graph, paths: &AllPairsPaths, a: Vertex, b: Vertex) -> Vec<Walk> {
    let mut out: Vec<Walk> = Vec::new();
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    let mut push = |w: Walk, out: &mut Vec<Walk>| {
        if seen.insert(w.edges.clone()) {
            out.push(w);
        }
    };
    push(
        Walk {
            vertices: paths.path_vertices(a, b).to_vec(),
            edges: paths.path_edges(a, b).to_vec(),
        },
        &mut out,
    );
    let mut mark = vec![false; g.n()];
    for f in g.edge_ids() {
        let (x, y) = g.endpoints(f);
        for (u, u2) in [(x, y), (y, x)] {
            let head = paths.path_vertices(a, u);
            let tail = paths.path_vertices(u2, b);
            mark.iter_mut().for_each(|m| *m = false);
            let mut simple = true;
            for &v in head.iter().chain(tail) {
                if mark[v] {
                    simple = false;
                    break;
                }
                mark[v] = true;
            }
            if !simple {
                continue;
            }
            let mut vertices = head.to_vec();
            vertices.extend_from_slice(tail);
            let mut edges = paths.path_edges(a, u).to_vec();
            edges.push(f);
            edges.extend_from_slice(paths.path_edges(u2, b));
            push(Walk { vertices, edges }, &mut out);
        }
    }
    out.sort_by_key(|w| w.edges.len());
    out
}

/// All simple cycles `J1 ∘ e' ∘ rev(J2) ∘ e` of length at most `d + 1`.
///
/// A point on a cycle of length `k` has half-unit eccentricity at least
/// `k - 1` in any pseudotree containing that cycle, so longer cycles cannot
/// hold two centers.
fn candidate_cycles(g: &Graph, paths: &AllPairsPaths, d: usize) -> Vec<CandidateCycle> {
    let n = g.n();
    let max_len = d + 1;
    if max_len < 3 {
        return Vec::new();
    }
    let mut walks: HashMap<(Vertex, Vertex), Vec<Walk>> = HashMap::new();
    let mut walks_for = |a: Vertex, b: Vertex| -> Vec<Walk> {
        walks
            .entry((a, b))
            .or_insert_with(|| detour_walks(g, paths, a, b))
            .clone()
    };
    let mut index: HashMap<Vec<EdgeId>, usize> = HashMap::new();
    let mut cycles: Vec<CandidateCycle> = Vec::new();
    let mut mark = vec![false; n];
    for e in g.edge_ids() {
        for f in e + 1..=g.m() {
            let (a, b) = g.endpoints(e);
            let (x, y) = g.endpoints(f);
            for (v1, v2) in [(a, b), (b, a)] {
                for (w1, w2) in [(x, y), (y, x)] {
                    let side1 = walks_for(v1, w1);
                    let side2 = walks_for(v2, w2);
                    for j1 in &side1 {
                        if j1.edges.len() + 2 > max_len {
                            break;
                        }
                        for j2 in &side2 {
                            if j1.edges.len() + j2.edges.len() + 2 > max_len {
                                break;
                            }
                            mark.iter_mut().for_each(|m| *m = false);
                            let mut disjoint = true;
                            for &v in j1.vertices.iter().chain(&j2.vertices) {
                                if mark[v] {
                                    disjoint = false;
                                    break;
                                }
                                mark[v] = true;
                            }
                            if !disjoint {
                                continue;
                            }
                            let mut key: Vec<EdgeId> =
                                j1.edges.iter().chain(&j2.edges).copied().collect();
                            key.push(e);
                            key.push(f);
                            key.sort_unstable();
                            let slot = *index.entry(key).or_insert_with(|| {
                                let mut vertices = j1.vertices.clone();
                                vertices.extend(j2.vertices.iter().rev());
                                let mut edges = j1.edges.clone();
                                edges.push(f);
                                edges.extend(j2.edges.iter().rev());
                                edges.push(e);
                                cycles.push(CandidateCycle {
                                    vertices,
                                    edges,
                                    generators: HashSet::new(),
                                });
                                cycles.len() - 1
                            });
                            cycles[slot].generators.insert((e, f, v1));
                        }
                    }
                }
            }
        }
    }
    cycles
}

/// Search for a tree witness on a fresh search state.
pub fn find_good_tree(g: &Graph, d: usize, r1: Point, r2: Point) -> Result<Option<SpanningTree>> {
    GoodTripleSearch::new(g, d)?.find_good_tree(r1, r2)
}

/// Search for a cyclic witness on a fresh search state.
pub fn find_good_cyclic_pseudotree(
    g: &Graph,
    d: usize,
    r1: Point,
    r2: Point,
) -> Result<Option<Pseudotree>> {
    GoodTripleSearch::new(g, d)?.find_good_cyclic_pseudotree(r1, r2)
}
