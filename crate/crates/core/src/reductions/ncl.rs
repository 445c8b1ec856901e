//! NCL reconfiguration to spanning-tree reconfiguration with maximum degree
//! at most `d`.
//!
//! Every NCL edge `e = uu'` becomes a vertex `v_e` joined to per-incidence
//! vertices `v_{u,e}` and `v_{u',e}`; which of the two links a tree keeps
//! encodes the direction of `e`. OR and AND vertices get small gadgets, a
//! connector tree `T*` glues the gadgets together, and pendant vertices use up
//! the degree budget of every gadget vertex so that only `b(v)` gadget edges
//! may meet `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::sequence::{Constraint, ReconfSequence};
use crate::tree::SpanningTree;

use super::Builder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum NclKind {
    And,
    Or,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NclEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u8,
}

/// A cubic AND/OR constraint graph; parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NclGraph {
    kinds: Vec<NclKind>,
    edges: Vec<NclEdge>,
    #[serde(skip)]
    incident: Vec<Vec<usize>>,
}

impl NclGraph {
    pub fn new(kinds: Vec<NclKind>, edges: Vec<NclEdge>) -> Result<Self> {
        let n = kinds.len();
        let mut incident = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidNcl(format!("edge {i} has an endpoint out of range")));
            }
            if e.u == e.v {
                return Err(Error::InvalidNcl(format!("edge {i} is a loop")));
            }
            if e.weight != 1 && e.weight != 2 {
                return Err(Error::InvalidNcl(format!("edge {i} has weight {}", e.weight)));
            }
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        for (u, inc) in incident.iter().enumerate() {
            if inc.len() != 3 {
                return Err(Error::InvalidNcl(format!("vertex {u} has degree {}", inc.len())));
            }
            let heavy = inc.iter().filter(|&&e| edges[e].weight == 2).count();
            let ok = match kinds[u] {
                NclKind::Or => heavy == 3,
                NclKind::And => heavy == 1,
            };
            if !ok {
                return Err(Error::InvalidNcl(format!(
                    "vertex {u} has the wrong weights for {:?}",
                    kinds[u]
                )));
            }
        }
        Ok(NclGraph {
            kinds,
            edges,
            incident,
        })
    }

    pub fn n(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, u: usize) -> NclKind {
        self.kinds[u]
    }

    pub fn kinds(&self) -> &[NclKind] {
        &self.kinds
    }

    pub fn edges(&self) -> &[NclEdge] {
        &self.edges
    }

    /// Indices of the three edges at `u`, increasing.
    pub fn incident(&self, u: usize) -> &[usize] {
        &self.incident[u]
    }

    /// Every valid orientation, by brute force over all `2^m` choices.
    pub fn valid_orientations(&self) -> Vec<NclOrientation> {
        let m = self.edges.len();
        assert!(m < 24, "brute force is limited to tiny NCL graphs");
        (0u32..1 << m)
            .map(|mask| {
                let heads = self
                    .edges
                    .iter()
                    .enumerate()
                    .map(|(i, e)| if mask >> i & 1 == 1 { e.v } else { e.u })
                    .collect();
                NclOrientation { heads }
            })
            .filter(|s| validate_ncl(self, s))
            .collect()
    }
}

/// Direction of every NCL edge, given by the vertex it points into.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NclOrientation {
    heads: Vec<usize>,
}

impl NclOrientation {
    pub fn new(heads: Vec<usize>) -> Self {
        NclOrientation { heads }
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    pub fn is_inward(&self, e: usize, u: usize) -> bool {
        self.heads[e] == u
    }

    /// The same orientation with edge `e` reversed.
    pub fn flipped(&self, h: &NclGraph, e: usize) -> NclOrientation {
        let mut heads = self.heads.clone();
        let edge = h.edges[e];
        heads[e] = if heads[e] == edge.u { edge.v } else { edge.u };
        NclOrientation { heads }
    }

    /// Edges whose directions differ.
    pub fn differences(&self, other: &NclOrientation) -> Vec<usize> {
        (0..self.heads.len())
            .filter(|&e| self.heads[e] != other.heads[e])
            .collect()
    }
}

/// Whether every vertex receives incoming weight at least 2.
pub fn validate_ncl(h: &NclGraph, sigma: &NclOrientation) -> bool {
    if sigma.heads.len() != h.edges.len() {
        return false;
    }
    let mut inflow = vec![0u32; h.n()];
    for (e, &head) in h.edges.iter().zip(&sigma.heads) {
        if head != e.u && head != e.v {
            return false;
        }
        inflow[head] += u32::from(e.weight);
    }
    inflow.iter().all(|&w| w >= 2)
}

/// Gadget of one NCL vertex inside the generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "UPPERCASE")]
pub enum NclGadget {
    /// `spokes[i]` joins the root to the incidence vertex of the `i`-th incident edge.
    Or { root: Vertex, spokes: [EdgeId; 3] },
    And {
        root: Vertex,
        w: Vertex,
        x: Vertex,
        y: Vertex,
        /// NCL edges: the weight-2 edge, then the two weight-1 edges.
        e0: usize,
        e1: usize,
        e2: usize,
        root_e0: EdgeId,
        root_w: EdgeId,
        w_x: EdgeId,
        w_y: EdgeId,
        x_e1: EdgeId,
        y_e2: EdgeId,
        e1_e2: EdgeId,
    },
}

impl NclGadget {
    fn root_edges(&self) -> Vec<EdgeId> {
        match self {
            NclGadget::Or { spokes, .. } => spokes.to_vec(),
            NclGadget::And { root_e0, root_w, .. } => vec![*root_e0, *root_w],
        }
    }

    fn edges(&self) -> Vec<EdgeId> {
        match *self {
            NclGadget::Or { spokes, .. } => spokes.to_vec(),
            NclGadget::And {
                root_e0,
                root_w,
                w_x,
                w_y,
                x_e1,
                y_e2,
                e1_e2,
                ..
            } => vec![root_e0, root_w, w_x, w_y, x_e1, y_e2, e1_e2],
        }
    }
}

/// Names of the generated vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NclLayout {
    /// Per NCL edge `e = (u, u')`: `[v_{u,e}, v_{u',e}]`.
    pub incidence: Vec<[Vertex; 2]>,
    /// Per NCL edge: `v_e`.
    pub edge_vertex: Vec<Vertex>,
    /// Per NCL edge: `[v_e v_{u,e}, v_e v_{u',e}]`.
    pub links: Vec<[EdgeId; 2]>,
    pub gadgets: Vec<NclGadget>,
    /// Gadget vertices are `0..base_order`; `budget[v]` is `b(v)`.
    pub base_order: usize,
    pub budget: Vec<usize>,
    /// Gadget edges are `1..=base_edges`.
    pub base_edges: usize,
    pub leaves: Vec<Vertex>,
    pub connector: Vec<EdgeId>,
    pub pendants: Vec<EdgeId>,
}

/// A generated instance together with its source.
#[derive(Debug, Clone)]
pub struct NclReduction {
    pub ncl: NclGraph,
    pub g: Graph,
    pub d: usize,
    pub layout: NclLayout,
    pub t_ini: SpanningTree,
    pub t_tar: SpanningTree,
}

impl NclReduction {
    pub fn constraint(&self) -> Constraint {
        Constraint::MaxDegLe(self.d)
    }

}

/// Position of `v_{u,e}` within `incidence[e]`.
fn incidence_slot(h: &NclGraph, u: usize, e: usize) -> usize {
    if h.edges[e].u == u {
        0
    } else {
        1
    }
}

/// Edges of a caterpillar whose leaves are exactly `leaves`, with internal
/// vertices numbered from `first_fresh`. Returns the edges and the number of
/// internal vertices; every internal vertex has degree at most 3.
pub fn build_connector_tree(
    leaves: &[Vertex],
    first_fresh: Vertex,
) -> Result<(Vec<(Vertex, Vertex)>, usize)> {
    let k = leaves.len();
    if k < 2 {
        return Err(Error::Reduction("a connector needs at least two leaves".into()));
    }
    let spine = k.saturating_sub(2).max(1);
    let mut edges: Vec<(Vertex, Vertex)> = (0..spine - 1)
        .map(|i| (first_fresh + i, first_fresh + i + 1))
        .collect();
    for (j, &leaf) in leaves.iter().enumerate() {
        let slot = if j == 0 {
            0
        } else if j == k - 1 {
            spine - 1
        } else {
            (j - 1).min(spine - 1)
        };
        edges.push((first_fresh + slot, leaf));
    }
    Ok((edges, spine))
}

/// Builds the reduced instance for bound `d ≥ 3`.
pub fn ncl_to_rst(
    h: &NclGraph,
    sigma_ini: &NclOrientation,
    sigma_tar: &NclOrientation,
    d: usize,
) -> Result<NclReduction> {
    if d < 3 {
        return Err(Error::Precondition("the degree bound must be at least 3".into()));
    }
    for s in [sigma_ini, sigma_tar] {
        if !validate_ncl(h, s) {
            return Err(Error::InvalidNcl("orientation is not a valid configuration".into()));
        }
    }
    let mut b = Builder::default();
    let mut budget = Vec::new();
    let mut new_vertex = |b: &mut Builder, cap: usize| {
        budget.push(cap);
        b.vertex()
    };
    let incidence: Vec<[Vertex; 2]> = h
        .edges
        .iter()
        .map(|_| [new_vertex(&mut b, 2), new_vertex(&mut b, 2)])
        .collect();
    let edge_vertex: Vec<Vertex> = h.edges.iter().map(|_| new_vertex(&mut b, 1)).collect();
    struct AndVertices {
        root: Vertex,
        w: Vertex,
        x: Vertex,
        y: Vertex,
    }
    let gadget_vertices: Vec<AndVertices> = (0..h.n())
        .map(|u| match h.kind(u) {
            NclKind::Or => {
                let root = new_vertex(&mut b, 1);
                AndVertices { root, w: root, x: root, y: root }
            }
            NclKind::And => AndVertices {
                root: new_vertex(&mut b, 1),
                w: new_vertex(&mut b, 3),
                x: new_vertex(&mut b, 2),
                y: new_vertex(&mut b, 2),
            },
        })
        .collect();
    let base_order = b.n;

    let links: Vec<[EdgeId; 2]> = incidence
        .iter()
        .zip(&edge_vertex)
        .map(|(inc, &ve)| [b.edge(ve, inc[0]), b.edge(ve, inc[1])])
        .collect();
    let mut leaves = Vec::new();
    let mut gadgets = Vec::with_capacity(h.n());
    for (u, gv) in gadget_vertices.iter().enumerate() {
        let inc = h.incident(u);
        let at = |e: usize| incidence[e][incidence_slot(h, u, e)];
        match h.kind(u) {
            NclKind::Or => {
                let spokes = [0, 1, 2].map(|i| b.edge(gv.root, at(inc[i])));
                leaves.extend(inc.iter().map(|&e| at(e)));
                gadgets.push(NclGadget::Or { root: gv.root, spokes });
            }
            NclKind::And => {
                let e0 = *inc
                    .iter()
                    .find(|&&e| h.edges[e].weight == 2)
                    .expect("validated AND vertex");
                let light: Vec<usize> = inc.iter().copied().filter(|&e| e != e0).collect();
                let (e1, e2) = (light[0], light[1]);
                let (v0, v1, v2) = (at(e0), at(e1), at(e2));
                let root_e0 = b.edge(v0, gv.root);
                let root_w = b.edge(gv.root, gv.w);
                let w_x = b.edge(gv.w, gv.x);
                let w_y = b.edge(gv.w, gv.y);
                let x_e1 = b.edge(gv.x, v1);
                let y_e2 = b.edge(gv.y, v2);
                let e1_e2 = b.edge(v1, v2);
                leaves.extend([v0, gv.w]);
                gadgets.push(NclGadget::And {
                    root: gv.root,
                    w: gv.w,
                    x: gv.x,
                    y: gv.y,
                    e0,
                    e1,
                    e2,
                    root_e0,
                    root_w,
                    w_x,
                    w_y,
                    x_e1,
                    y_e2,
                    e1_e2,
                });
            }
        }
    }
    let base_edges = b.edges.len();

    let (connector_edges, fresh) = build_connector_tree(&leaves, b.n)?;
    for _ in 0..fresh {
        b.vertex();
    }
    let connector = connector_edges.iter().map(|&(x, y)| b.edge(x, y)).collect();
    let mut pendants = Vec::new();
    for (v, &cap) in budget.iter().enumerate() {
        for _ in cap..d {
            let p = b.vertex();
            pendants.push(b.edge(v, p));
        }
    }
    let g = b.finish()?;
    let layout = NclLayout {
        incidence,
        edge_vertex,
        links,
        gadgets,
        base_order,
        budget,
        base_edges,
        leaves,
        connector,
        pendants,
    };
    let t_ini = orientation_tree(h, &g, &layout, sigma_ini)?;
    let t_tar = orientation_tree(h, &g, &layout, sigma_tar)?;
    Ok(NclReduction {
        ncl: h.clone(),
        g,
        d,
        layout,
        t_ini,
        t_tar,
    })
}

/// The tree built from `sigma`: connector, pendants, one link per NCL edge and
/// the gadget edges. OR gadgets use the smallest inward edge.
pub fn tree_of_orientation(red: &NclReduction, sigma: &NclOrientation) -> Result<SpanningTree> {
    orientation_tree(&red.ncl, &red.g, &red.layout, sigma)
}

fn orientation_tree(
    h: &NclGraph,
    g: &Graph,
    lay: &NclLayout,
    sigma: &NclOrientation,
) -> Result<SpanningTree> {
    if !validate_ncl(h, sigma) {
        return Err(Error::InvalidNcl("orientation is not a valid configuration".into()));
    }
    let mut ids: Vec<EdgeId> = lay.connector.iter().chain(&lay.pendants).copied().collect();
    for (e, edge) in h.edges.iter().enumerate() {
        let tail = if sigma.head(e) == edge.u { edge.v } else { edge.u };
        ids.push(lay.links[e][incidence_slot(h, tail, e)]);
    }
    for (u, gadget) in lay.gadgets.iter().enumerate() {
        match *gadget {
            NclGadget::Or { spokes, .. } => {
                let i = (0..3)
                    .find(|&i| sigma.is_inward(h.incident(u)[i], u))
                    .expect("valid OR vertex has an inward edge");
                ids.push(spokes[i]);
            }
            NclGadget::And {
                e0,
                root_e0,
                root_w,
                w_x,
                w_y,
                x_e1,
                y_e2,
                e1_e2,
                ..
            } => {
                if sigma.is_inward(e0, u) {
                    ids.extend([root_e0, w_x, w_y, x_e1, y_e2]);
                } else {
                    ids.extend([root_w, w_x, x_e1, y_e2, e1_e2]);
                }
            }
        }
    }
    SpanningTree::new(g, &ids)
}

/// Checks the structure every tree of maximum degree at most `d` has:
/// (a) all pendant edges, (b) at most `b(v)` gadget or connector edges at each
/// gadget vertex, (c) exactly one link per NCL edge, (d) the whole connector.
pub fn check_degree_structure(red: &NclReduction, t: &SpanningTree) -> std::result::Result<(), String> {
    let lay = &red.layout;
    if let Some(e) = lay.pendants.iter().find(|&&e| !t.contains(e)) {
        return Err(format!("(a) pendant edge {e} missing"));
    }
    let mut used = vec![0usize; lay.base_order];
    for &e in t.edges() {
        if e <= lay.base_edges || lay.connector.contains(&e) {
            let (x, y) = red.g.endpoints(e);
            for v in [x, y] {
                if v < lay.base_order {
                    used[v] += 1;
                }
            }
        }
    }
    if let Some(v) = (0..lay.base_order).find(|&v| used[v] > lay.budget[v]) {
        return Err(format!("(b) vertex {v} uses {} of {}", used[v], lay.budget[v]));
    }
    for (e, pair) in lay.links.iter().enumerate() {
        if t.contains(pair[0]) == t.contains(pair[1]) {
            return Err(format!("(c) NCL edge {e} has {} links", if t.contains(pair[0]) { 2 } else { 0 }));
        }
    }
    if let Some(e) = lay.connector.iter().find(|&&e| !t.contains(e)) {
        return Err(format!("(d) connector edge {e} missing"));
    }
    Ok(())
}

/// Reads the NCL configuration encoded by a tree: `e = uu'` points into `u`
/// when the tree links `v_e` to `v_{u',e}`.
pub fn orientation_of_tree(red: &NclReduction, t: &SpanningTree) -> Result<NclOrientation> {
    if t.max_degree(&red.g) > red.d {
        return Err(Error::Precondition(format!("tree has maximum degree above {}", red.d)));
    }
    let heads = red
        .ncl
        .edges
        .iter()
        .zip(&red.layout.links)
        .enumerate()
        .map(|(e, (edge, pair))| match (t.contains(pair[0]), t.contains(pair[1])) {
            (true, false) => Ok(edge.v),
            (false, true) => Ok(edge.u),
            _ => Err(Error::Reduction(format!("NCL edge {e} does not have exactly one link"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let sigma = NclOrientation { heads };
    if !validate_ncl(&red.ncl, &sigma) {
        return Err(Error::Reduction("tree encodes an invalid configuration".into()));
    }
    Ok(sigma)
}

/// Sequence of maximum degree at most `d` between two trees whose
/// configurations are equal or differ in one edge. Gadgets are aligned one at
/// a time from whichever side keeps the changed NCL edge legal.
pub fn ncl_step_sequence(
    red: &NclReduction,
    t1: &SpanningTree,
    t2: &SpanningTree,
) -> Result<ReconfSequence> {
    let h = &red.ncl;
    let s1 = orientation_of_tree(red, t1)?;
    let s2 = orientation_of_tree(red, t2)?;
    let changed = s1.differences(&s2);
    if changed.len() > 1 {
        return Err(Error::Precondition("configurations are not adjacent".into()));
    }
    let star = changed.first().copied();
    // Whether the forward side may realign gadget `u` without breaking it.
    let forward_ok = |u: usize| match star {
        None => true,
        Some(e) => !h.incident(u).contains(&e) || s1.is_inward(e, u),
    };
    let g = &red.g;
    let mut fwd = ReconfSequence::new(t1.clone(), red.constraint());
    let mut bwd = ReconfSequence::new(t2.clone(), red.constraint());
    loop {
        let a = fwd.last().clone();
        let b = bwd.last().clone();
        if a.difference(&b).len() <= 1 {
            fwd.push_tree(b)?;
            break;
        }
        let (u, gadget) = red
            .layout
            .gadgets
            .iter()
            .enumerate()
            .find(|(_, gd)| gd.edges().iter().any(|&e| a.contains(e) != b.contains(e)))
            .ok_or_else(|| Error::Reduction("trees differ outside the gadgets".into()))?;
        let only = |x: &SpanningTree, y: &SpanningTree, pool: &[EdgeId]| -> Vec<EdgeId> {
            pool.iter().copied().filter(|&e| x.contains(e) && !y.contains(e)).collect()
        };
        let all = gadget.edges();
        let (out_a, out_b) = (only(&a, &b, &all), only(&b, &a, &all));
        if out_a.len() == 1 {
            if forward_ok(u) {
                fwd.push_flip(g, out_a[0], out_b[0])?;
            } else {
                bwd.push_flip(g, out_b[0], out_a[0])?;
            }
            continue;
        }
        let NclGadget::And { e0, root_e0, root_w, .. } = *gadget else {
            return Err(Error::Reduction(format!("OR gadget {u} differs in several edges")));
        };
        let roots = gadget.root_edges();
        let rest: Vec<EdgeId> = all.iter().copied().filter(|e| !roots.contains(e)).collect();
        let (side_e0, side_w, sigma_w) = if a.contains(root_e0) {
            (&mut fwd, &mut bwd, &s2)
        } else {
            (&mut bwd, &mut fwd, &s1)
        };
        if sigma_w.is_inward(e0, u) {
            side_w.push_flip(g, root_w, root_e0)?;
        } else {
            let x = side_e0.last().clone();
            let y = side_w.last().clone();
            let (drop, take) = (only(&x, &y, &rest), only(&y, &x, &rest));
            if drop.len() != 1 || take.len() != 1 {
                return Err(Error::Reduction(format!("AND gadget {u} is not aligned")));
            }
            side_e0.push_flip(g, drop[0], take[0])?;
        }
    }
    fwd.append(&bwd.reversed())?;
    Ok(fwd)
}
