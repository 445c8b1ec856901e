//! Hamiltonian s-t path to spanning-tree reconfiguration with diameter at
//! least `d`.
//!
//! Long pendant paths `P_x` at `s'` and `P_z` behind a diamond at `t'` force
//! every tree's diameter to run from `x_{3n'}` to `z_{3n'}`. Rerouting the
//! diamond costs one unit of length, which only a Hamiltonian `s'`-`t'` path
//! can make up.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::point::{point_distances_half, tree_diameter, Point};
use crate::sequence::{unconstrained_sequence, Constraint, ReconfSequence};
use crate::tree::SpanningTree;

use super::Builder;

/// A Hamiltonian path question: is there one from `s` to `t` in `g`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPathInstance {
    pub g: Graph,
    pub s: Vertex,
    pub t: Vertex,
}

/// The five edges of the diamond on `{t', t1, t2, t3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiamondEdges {
    pub t_t1: EdgeId,
    pub t_t2: EdgeId,
    pub t1_t2: EdgeId,
    pub t1_t3: EdgeId,
    pub t2_t3: EdgeId,
}

impl DiamondEdges {
    /// Diamond edges of the initial tree, sorted.
    fn initial(&self) -> [EdgeId; 3] {
        let mut ids = [self.t_t1, self.t1_t2, self.t2_t3];
        ids.sort_unstable();
        ids
    }

    fn target(&self) -> [EdgeId; 3] {
        [self.t_t2, self.t1_t2, self.t1_t3]
    }

    fn all(&self) -> [EdgeId; 5] {
        [self.t_t1, self.t_t2, self.t1_t2, self.t1_t3, self.t2_t3]
    }
}

/// Names of the generated vertices and edges. Source vertices keep their ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamLayout {
    pub n_prime: usize,
    pub s: Vertex,
    pub t: Vertex,
    pub t1: Vertex,
    pub t2: Vertex,
    pub t3: Vertex,
    /// `x[i]` is `x_{i+1}`; likewise for `y` and `z`.
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub z: Vec<Vertex>,
    pub diamond: DiamondEdges,
    /// Path edges from `s'` outwards to `x_{3n'}`.
    pub px: Vec<EdgeId>,
    /// Path edges from `s'` to `t'`.
    pub py: Vec<EdgeId>,
    /// Path edges from `t3` outwards to `z_{3n'}`.
    pub pz: Vec<EdgeId>,
    /// Two-tree spanning forest of the source graph separating `s'` and `t'`.
    pub forest: Vec<EdgeId>,
    /// Source edges are `1..=base_edges`.
    pub base_edges: usize,
}

#[derive(Debug, Clone)]
pub struct HamReduction {
    pub source: HamPathInstance,
    pub g: Graph,
    pub d: usize,
    pub layout: HamLayout,
    pub t_ini: SpanningTree,
    pub t_tar: SpanningTree,
}

impl HamReduction {
    pub fn constraint(&self) -> Constraint {
        Constraint::DiamGe(self.d)
    }

    /// The far ends `x_{3n'}` and `z_{3n'}`.
    pub fn far_ends(&self) -> (Vertex, Vertex) {
        let lay = &self.layout;
        (*lay.x.last().expect("nonempty"), *lay.z.last().expect("nonempty"))
    }

    fn tree_with(&self, parts: &[&[EdgeId]]) -> Result<SpanningTree> {
        let ids: Vec<EdgeId> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        SpanningTree::new(&self.g, &ids)
    }
}

/// Breadth-first forest of `g`: a tree from `s` avoiding `t`, then a tree
/// from `t` over whatever is left.
fn separating_forest(g: &Graph, s: Vertex, t: Vertex) -> Vec<EdgeId> {
    let mut seen = vec![false; g.n()];
    let mut forest = Vec::new();
    seen[t] = true;
    for root in [s, t] {
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    forest.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    forest
}

/// Builds the reduced instance with `d = 7n' + 1`.
pub fn hampath_to_rst(inst: &HamPathInstance) -> Result<HamReduction> {
    let src = &inst.g;
    let n = src.n();
    let (s, t) = (inst.s, inst.t);
    if s >= n || t >= n || s == t {
        return Err(Error::Precondition("s' and t' must be distinct vertices".into()));
    }
    src.require_connected()?;
    if n < 3 {
        return Err(Error::Reduction("the construction needs at least three vertices".into()));
    }
    if n == 3 && src.has_edge(s, t) {
        return Err(Error::Reduction(
            "with three vertices the path P_y would duplicate the edge s't'".into(),
        ));
    }
    let mut b = Builder::with_vertices(n);
    for &(u, v) in src.edges() {
        b.edge(u, v);
    }
    let base_edges = src.m();
    let (t1, t2, t3) = (b.vertex(), b.vertex(), b.vertex());
    let diamond = DiamondEdges {
        t_t1: b.edge(t, t1),
        t_t2: b.edge(t, t2),
        t1_t2: b.edge(t1, t2),
        t1_t3: b.edge(t1, t3),
        t2_t3: b.edge(t2, t3),
    };
    let chain = |b: &mut Builder, from: Vertex, len: usize, to: Option<Vertex>| {
        let inner: Vec<Vertex> = (0..len).map(|_| b.vertex()).collect();
        let mut stops = vec![from];
        stops.extend(&inner);
        stops.extend(to);
        let edges = stops.windows(2).map(|w| b.edge(w[0], w[1])).collect::<Vec<_>>();
        (inner, edges)
    };
    let (x, px) = chain(&mut b, s, 3 * n, None);
    let (y, py) = chain(&mut b, s, n - 3, Some(t));
    let (z, pz) = chain(&mut b, t3, 3 * n, None);
    let g = b.finish()?;
    let layout = HamLayout {
        n_prime: n,
        s,
        t,
        t1,
        t2,
        t3,
        x,
        y,
        z,
        diamond,
        px,
        py,
        pz,
        forest: separating_forest(src, s, t),
        base_edges,
    };
    let spine: Vec<EdgeId> = [&layout.px[..], &layout.py, &layout.pz, &layout.forest].concat();
    let t_ini = SpanningTree::new(&g, &[&spine[..], &layout.diamond.initial()].concat())?;
    let t_tar = SpanningTree::new(&g, &[&spine[..], &layout.diamond.target()].concat())?;
    Ok(HamReduction {
        source: inst.clone(),
        g,
        d: 7 * n + 1,
        layout,
        t_ini,
        t_tar,
    })
}

/// Edge ids of `path` in the source graph, checking that it is a
/// Hamiltonian path from `s'` to `t'`.
fn hamiltonian_edges(red: &HamReduction, path: &[Vertex]) -> Result<Vec<EdgeId>> {
    let src = &red.source;
    let n = src.g.n();
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition("path repeats or leaves the source graph".into()));
        }
    }
    if path.len() != n || path.first() != Some(&src.s) || path.last() != Some(&src.t) {
        return Err(Error::Precondition("path is not a Hamiltonian s'-t' path".into()));
    }
    path.windows(2)
        .map(|w| {
            src.g
                .edge_between(w[0], w[1])
                .ok_or_else(|| Error::Precondition(format!("{} and {} are not adjacent", w[0], w[1])))
        })
        .collect()
}

/// A sequence of trees with diameter at least `d` from the initial to the
/// target tree, built from a Hamiltonian `s'`-`t'` path.
pub fn hampath_certificate_sequence(red: &HamReduction, path: &[Vertex]) -> Result<ReconfSequence> {
    let ham = hamiltonian_edges(red, path)?;
    let lay = &red.layout;
    let dia = &lay.diamond;
    let (e_star, e_y) = (ham[0], lay.py[0]);
    let ham_cut: Vec<EdgeId> = ham[1..].to_vec();
    let py_cut: Vec<EdgeId> = lay.py[1..].to_vec();
    let outer: Vec<EdgeId> = [&lay.px[..], &lay.pz].concat();
    let d1 = [dia.t_t1, dia.t1_t2, dia.t2_t3];
    let d3 = [dia.t_t2, dia.t1_t2, dia.t2_t3];
    let d4 = dia.target();
    let stages = [
        red.tree_with(&[&outer, &lay.py, &ham_cut, &d1])?,
        red.tree_with(&[&outer, &py_cut, &ham, &d1])?,
        red.tree_with(&[&outer, &py_cut, &ham, &d3])?,
        red.tree_with(&[&outer, &py_cut, &ham, &d4])?,
        red.tree_with(&[&outer, &lay.py, &ham_cut, &d4])?,
    ];
    debug_assert!(!ham_cut.contains(&e_star) && !py_cut.contains(&e_y));
    let mut seq = unconstrained_sequence(&red.g, &red.t_ini, &stages[0]);
    seq.set_constraint(red.constraint());
    for t in &stages[1..] {
        seq.push_tree(t.clone())?;
    }
    let mut tail = unconstrained_sequence(&red.g, &stages[4], &red.t_tar);
    tail.set_constraint(red.constraint());
    seq.append(&tail)?;
    crate::sequence::validate_sequence(&red.g, &seq)
        .map_err(|v| Error::Reduction(format!("certificate sequence fails: {v}")))?;
    Ok(seq)
}

/// The `s'`-`t'` path in the first tree whose diamond edges differ from the
/// initial tree's; for a valid sequence it is a Hamiltonian path.
pub fn extract_hampath(red: &HamReduction, seq: &ReconfSequence) -> Result<Vec<Vertex>> {
    let dia = &red.layout.diamond;
    let initial = dia.initial();
    let diamond_part = |t: &SpanningTree| -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = dia.all().into_iter().filter(|&e| t.contains(e)).collect();
        ids.sort_unstable();
        ids
    };
    let t = seq
        .trees()
        .iter()
        .find(|t| diamond_part(t) != initial)
        .ok_or_else(|| Error::Reduction("the sequence never changes the diamond".into()))?;
    let (s, target) = (red.layout.s, red.layout.t);
    let mut path = vec![s];
    for e in t.path(&red.g, s, target) {
        let next = red.g.other_end(e, *path.last().expect("nonempty"));
        path.push(next);
    }
    hamiltonian_edges(red, &path)
        .map_err(|e| Error::Reduction(format!("extracted path is not Hamiltonian: {e}")))?;
    Ok(path)
}

/// Whether the diameter of `t` equals the distance between the far ends.
pub fn check_diameter_domination(red: &HamReduction, t: &SpanningTree) -> bool {
    let (a, b) = red.far_ends();
    let dist = point_distances_half(&red.g, t.edges(), Point::Vertex(a))
        .expect("vertex source")
        .vertex(b)
        / 2;
    tree_diameter(&red.g, t) == dist as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::tree_diameter;

    fn c4_instance() -> HamPathInstance {
        HamPathInstance {
            g: Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            s: 0,
            t: 1,
        }
    }

    #[test]
    fn construction_sizes() {
        let red = hampath_to_rst(&c4_instance()).unwrap();
        let lay = &red.layout;
        assert_eq!(red.d, 29);
        assert_eq!(lay.px.len(), 12);
        assert_eq!(lay.pz.len(), 12);
        assert_eq!(lay.py.len(), 2);
        assert_eq!(lay.forest.len(), 2);
        let dia = lay.diamond;
        let mut in_d: Vec<EdgeId> = dia.all().into_iter().filter(|&e| red.t_ini.contains(e)).collect();
        in_d.sort_unstable();
        assert_eq!(in_d, dia.initial().to_vec());
        assert!(tree_diameter(&red.g, &red.t_ini) >= red.d);
        assert!(tree_diameter(&red.g, &red.t_tar) >= red.d);
    }

    #[test]
    fn certificate_round_trip() {
        let red = hampath_to_rst(&c4_instance()).unwrap();
        let seq = hampath_certificate_sequence(&red, &[0, 3, 2, 1]).unwrap();
        assert_eq!(seq.first(), &red.t_ini);
        assert_eq!(seq.last(), &red.t_tar);
        assert_eq!(extract_hampath(&red, &seq).unwrap(), vec![0, 3, 2, 1]);
        assert!(hampath_certificate_sequence(&red, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let inst = HamPathInstance { g: tri, s: 0, t: 1 };
        assert!(hampath_to_rst(&inst).is_err());
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = HamPathInstance { g: p3, s: 0, t: 2 };
        let red = hampath_to_rst(&inst).unwrap();
        assert!(red.layout.y.is_empty());
        assert!(check_diameter_domination(&red, &red.t_ini));
    }
}
