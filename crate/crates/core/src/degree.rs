//! Reconfiguration under maximum-degree constraints.
//!
//! For "maximum degree at least d" the problem reduces to reachability in an
//! auxiliary graph on `V` whose edges join vertices that can both be hubs of
//! degree `≥ d` in two equal or adjacent spanning trees. For "maximum degree
//! at most d" only the relaxed case where one tree already has maximum degree
//! `≤ d - 1` is handled; there a shortest sequence always exists.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::sequence::{exchange_into, Constraint, ReconfSequence};
use crate::tree::{apply_flip, extend_to_spanning_tree, SpanningTree};

/// `V_d(t)`: vertices of degree at least `d` in `t`.
pub fn high_degree_set(g: &Graph, t: &SpanningTree, d: usize) -> Vec<Vertex> {
    t.degrees(g)
        .into_iter()
        .enumerate()
        .filter(|&(_, deg)| deg >= d)
        .map(|(v, _)| v)
        .collect()
}

fn neighbor_union_size(g: &Graph, u: Vertex, v: Vertex) -> usize {
    let mut mark = vec![false; g.n()];
    for &(w, _) in g.neighbors(u) {
        mark[w] = true;
    }
    let common = g.neighbors(v).iter().filter(|&&(w, _)| mark[w]).count();
    g.degree(u) + g.degree(v) - common
}

/// Whether `u` and `v` are adjacent in the auxiliary graph, by the degree
/// counting criterion.
pub fn degree_aux_edge(g: &Graph, d: usize, u: Vertex, v: Vertex) -> bool {
    if u == v || g.degree(u) < d || g.degree(v) < d {
        return false;
    }
    let union = neighbor_union_size(g, u, v);
    let need = if g.has_edge(u, v) {
        (2 * d).saturating_sub(1)
    } else {
        (2 * d).saturating_sub(2)
    };
    union >= need
}

/// Picks `size` vertices of `nu`, preferring those outside `nv`.
fn pick_private_first(nu: &[Vertex], nv: &[Vertex], size: usize) -> Vec<Vertex> {
    let (private, shared): (Vec<Vertex>, Vec<Vertex>) =
        nu.iter().partition(|w| !nv.contains(w));
    private.into_iter().chain(shared).take(size).collect()
}

/// Picks `size` vertices of `nv`, preferring those outside `su`.
fn pick_avoiding(nv: &[Vertex], su: &[Vertex], size: usize) -> Vec<Vertex> {
    let (fresh, reused): (Vec<Vertex>, Vec<Vertex>) = nv.iter().partition(|w| !su.contains(w));
    fresh.into_iter().chain(reused).take(size).collect()
}

/// Two equal or adjacent trees `(t, t2)` with `u ∈ V_d(t)` and `v ∈ V_d(t2)`,
/// or `None` when the pair fails [`degree_aux_edge`].
pub fn degree_aux_witness(
    g: &Graph,
    d: usize,
    u: Vertex,
    v: Vertex,
) -> Option<(SpanningTree, SpanningTree)> {
    if !degree_aux_edge(g, d, u, v) || !g.is_connected() {
        return None;
    }
    if d <= 1 {
        // Every spanning tree of a connected graph with n ≥ 2 has no isolated vertex.
        let t = extend_to_spanning_tree(g, &[]).ok()?;
        return Some((t.clone(), t));
    }
    let sorted_neighbors = |x: Vertex, skip: Option<Vertex>| {
        let mut ns: Vec<Vertex> = g
            .neighbors(x)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| Some(w) != skip)
            .collect();
        ns.sort_unstable();
        ns
    };
    let adjacent = g.has_edge(u, v);
    let (nu, nv) = if adjacent {
        (sorted_neighbors(u, Some(v)), sorted_neighbors(v, Some(u)))
    } else {
        (sorted_neighbors(u, None), sorted_neighbors(v, None))
    };
    let (ku, kv) = if adjacent { (d - 1, d - 2) } else { (d, d - 1) };
    let su = pick_private_first(&nu, &nv, ku);
    let sv = pick_avoiding(&nv, &su, kv);
    debug_assert!(su.len() == ku && sv.len() == kv);
    let mut forced: Vec<EdgeId> = su
        .iter()
        .map(|&w| g.edge_between(u, w).expect("neighbor"))
        .chain(sv.iter().map(|&w| g.edge_between(v, w).expect("neighbor")))
        .collect();
    if adjacent {
        forced.push(g.edge_between(u, v).expect("adjacent"));
    }
    let t = extend_to_spanning_tree(g, &forced).ok()?;
    let deg = t.degrees(g);
    if deg[v] >= d {
        return Some((t.clone(), t));
    }
    let add = g
        .neighbors(v)
        .iter()
        .map(|&(_, e)| e)
        .filter(|&e| !t.contains(e))
        .min()?;
    let (a, b) = g.endpoints(add);
    let remove = t
        .path(g, a, b)
        .into_iter()
        .filter(|&f| {
            let (x, y) = g.endpoints(f);
            x != v && y != v
        })
        .min()?;
    let t2 = apply_flip(g, &t, remove, add).ok()?;
    Some((t, t2))
}

/// The auxiliary graph on `V` for "maximum degree at least d".
#[derive(Debug, Clone)]
pub struct DegreeAuxGraph {
    d: usize,
    adj: Vec<Vec<Vertex>>,
    component: Vec<usize>,
}

impl DegreeAuxGraph {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u]
    }

    pub fn component(&self, u: Vertex) -> usize {
        self.component[u]
    }

    /// A shortest path from any vertex of `from` to any vertex of `to`.
    pub fn path(&self, from: &[Vertex], to: &[Vertex]) -> Option<Vec<Vertex>> {
        bfs_path(&self.adj, from, to)
    }
}

pub(crate) fn bfs_path(adj: &[Vec<usize>], from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let mut target = vec![false; adj.len()];
    for &t in to {
        target[t] = true;
    }
    let mut prev: Vec<Option<usize>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::new();
    let mut sources = from.to_vec();
    sources.sort_unstable();
    for s in sources {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if target[x] {
            let mut path = vec![x];
            let mut cur = x;
            while let Some(p) = prev[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    None
}

pub(crate) fn components(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut comp = vec![usize::MAX; adj.len()];
    let mut next = 0;
    for s in 0..adj.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Applies [`degree_aux_edge`] to every vertex pair.
pub fn build_degree_aux_graph(g: &Graph, d: usize) -> DegreeAuxGraph {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if degree_aux_edge(g, d, u, v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    let component = components(&adj);
    DegreeAuxGraph { d, adj, component }
}

/// Sequence from `t1` to `t2` keeping `u` at degree `≥ d` throughout.
pub fn shared_hub_sequence(
    g: &Graph,
    t1: &SpanningTree,
    t2: &SpanningTree,
    u: Vertex,
    d: usize,
) -> Result<ReconfSequence> {
    let at_u = |t: &SpanningTree| -> Vec<EdgeId> {
        g.neighbors(u)
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| t.contains(e))
            .collect()
    };
    if at_u(t1).len() < d || at_u(t2).len() < d {
        return Err(Error::Precondition(format!(
            "vertex {u} does not have degree at least {d} in both trees"
        )));
    }
    let mut seq = ReconfSequence::new(t1.clone(), Constraint::MaxDegGe(d));
    loop {
        let cur = seq.last().clone();
        let shared = at_u(&cur).into_iter().filter(|&e| t2.contains(e)).count();
        if shared >= d {
            break;
        }
        let add = at_u(t2)
            .into_iter()
            .filter(|&e| !cur.contains(e))
            .min()
            .expect("fewer than d shared edges leaves one to add");
        let (a, b) = g.endpoints(add);
        let remove = cur
            .path(g, a, b)
            .into_iter()
            .filter(|&f| !t2.contains(f))
            .min()
            .expect("cycle leaves the target tree");
        seq.push_flip(g, remove, add)?;
    }
    exchange_into(g, &mut seq, t2);
    Ok(seq)
}

/// Decision and sequence construction for "maximum degree at least d" on a
/// fixed graph, with the auxiliary graph built once.
#[derive(Debug, Clone)]
pub struct LargeDegreeSolver<'g> {
    g: &'g Graph,
    aux: DegreeAuxGraph,
}

impl<'g> LargeDegreeSolver<'g> {
    pub fn new(g: &'g Graph, d: usize) -> Result<Self> {
        g.require_connected()?;
        Ok(LargeDegreeSolver {
            g,
            aux: build_degree_aux_graph(g, d),
        })
    }

    pub fn aux(&self) -> &DegreeAuxGraph {
        &self.aux
    }

    fn hubs(&self, t: &SpanningTree) -> Result<Vec<Vertex>> {
        let d = self.aux.d;
        let hubs = high_degree_set(self.g, t, d);
        if hubs.is_empty() {
            return Err(Error::Precondition(format!("tree has maximum degree below {d}")));
        }
        Ok(hubs)
    }

    pub fn decide(&self, t_ini: &SpanningTree, t_tar: &SpanningTree) -> Result<bool> {
        let from = self.hubs(t_ini)?;
        let to = self.hubs(t_tar)?;
        Ok(from
            .iter()
            .any(|&u| to.iter().any(|&v| self.aux.component(u) == self.aux.component(v))))
    }

    pub fn sequence(
        &self,
        t_ini: &SpanningTree,
        t_tar: &SpanningTree,
    ) -> Result<Option<ReconfSequence>> {
        let d = self.aux.d;
        let from = self.hubs(t_ini)?;
        let to = self.hubs(t_tar)?;
        let Some(path) = self.aux.path(&from, &to) else {
            return Ok(None);
        };
        let mut seq = ReconfSequence::new(t_ini.clone(), Constraint::MaxDegGe(d));
        for hop in path.windows(2) {
            let (t, t2) = degree_aux_witness(self.g, d, hop[0], hop[1]).ok_or_else(|| {
                Error::Reduction(format!("no witness for auxiliary edge {}-{}", hop[0], hop[1]))
            })?;
            let part = shared_hub_sequence(self.g, seq.last(), &t, hop[0], d)?;
            seq.append(&part)?;
            seq.push_tree(t2)?;
        }
        let hub = *path.last().expect("path is nonempty");
        let part = shared_hub_sequence(self.g, seq.last(), t_tar, hub, d)?;
        seq.append(&part)?;
        Ok(Some(seq))
    }
}

/// Whether `t_ini` reaches `t_tar` through trees of maximum degree `≥ d`.
pub fn decide_large_max_degree(
    g: &Graph,
    d: usize,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
) -> Result<bool> {
    LargeDegreeSolver::new(g, d)?.decide(t_ini, t_tar)
}

/// A sequence through trees of maximum degree `≥ d`, if one exists.
pub fn sequence_large_max_degree(
    g: &Graph,
    d: usize,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
) -> Result<Option<ReconfSequence>> {
    LargeDegreeSolver::new(g, d)?.sequence(t_ini, t_tar)
}

/// An edge `xy ∈ E(t_tar) \ E(t_ini)` whose endpoints both have degree at
/// most `d - 1` in `t_ini` (smallest such id).
pub fn find_swap_edge(
    g: &Graph,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
    d: usize,
) -> Result<EdgeId> {
    if t_ini == t_tar {
        return Err(Error::Precondition("trees are identical".into()));
    }
    if t_tar.max_degree(g) + 1 > d || t_ini.max_degree(g) > d {
        return Err(Error::Precondition(format!(
            "need max degree ≤ {} for the target and ≤ {d} for the initial tree",
            d.saturating_sub(1)
        )));
    }
    let deg = t_ini.degrees(g);
    t_tar
        .difference(t_ini)
        .into_iter()
        .find(|&e| {
            let (x, y) = g.endpoints(e);
            deg[x] < d && deg[y] < d
        })
        .ok_or_else(|| Error::Precondition("no swap edge exists".into()))
}

/// Shortest sequence through trees of maximum degree `≤ d`, for trees of
/// maximum degree `≤ d` where at least one is `≤ d - 1`.
pub fn relaxed_small_degree_sequence(
    g: &Graph,
    d: usize,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
) -> Result<ReconfSequence> {
    let (di, dt) = (t_ini.max_degree(g), t_tar.max_degree(g));
    if di > d || dt > d {
        return Err(Error::Precondition(format!("a tree has maximum degree above {d}")));
    }
    if dt < d {
        let mut seq = ReconfSequence::new(t_ini.clone(), Constraint::MaxDegLe(d));
        while seq.last() != t_tar {
            let cur = seq.last().clone();
            let add = find_swap_edge(g, &cur, t_tar, d)?;
            let (x, y) = g.endpoints(add);
            let remove = cur
                .path(g, x, y)
                .into_iter()
                .filter(|&f| !t_tar.contains(f))
                .min()
                .expect("cycle leaves the target tree");
            seq.push_flip(g, remove, add)?;
        }
        Ok(seq)
    } else if di < d {
        Ok(relaxed_small_degree_sequence(g, d, t_tar, t_ini)?.reversed())
    } else {
        Err(Error::Precondition(format!(
            "neither tree has maximum degree at most {}",
            d.saturating_sub(1)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::validate_sequence;
    use crate::tree::are_flip_adjacent;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn double_hub() -> Graph {
        Graph::new(
            8,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)],
        )
        .unwrap()
    }

    #[test]
    fn high_degree_sets() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = SpanningTree::new(&star, &[1, 2, 3]).unwrap();
        assert_eq!(high_degree_set(&star, &t, 3), vec![0]);
        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = SpanningTree::new(&path, &[1, 2, 3]).unwrap();
        assert!(high_degree_set(&path, &t, 3).is_empty());
        assert_eq!(high_degree_set(&path, &t, 2), vec![1, 2]);
    }

    #[test]
    fn aux_edge_examples() {
        // K4 with d = 3: |N(u) ∪ N(v)| = 4 < 5.
        assert!(!degree_aux_edge(&k4(), 3, 0, 1));
        let k14 = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!degree_aux_edge(&k14, 2, 0, 1));
        assert!(degree_aux_edge(&double_hub(), 3, 0, 1));
        assert!(!degree_aux_edge(&double_hub(), 3, 0, 0));
    }

    #[test]
    fn witness_on_double_hub() {
        let g = double_hub();
        let (t, t2) = degree_aux_witness(&g, 3, 0, 1).unwrap();
        assert!(are_flip_adjacent(&t, &t2).unwrap());
        assert!(t.degrees(&g)[0] >= 3);
        assert!(t2.degrees(&g)[1] >= 3);
        assert!(degree_aux_witness(&k4(), 3, 0, 1).is_none());
    }

    #[test]
    fn witness_needs_the_extra_flip() {
        // u = 0 and v = 1 are non-adjacent and share neighbors 2, 3; for d = 3
        // the forced edges give v degree 2 only.
        let g = Graph::new(
            6,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (4, 5)],
        )
        .unwrap();
        assert!(degree_aux_edge(&g, 3, 0, 1));
        let (t, t2) = degree_aux_witness(&g, 3, 0, 1).unwrap();
        assert!(are_flip_adjacent(&t, &t2).unwrap());
        assert!(t.degrees(&g)[0] >= 3);
        assert!(t2.degrees(&g)[1] >= 3);
    }

    #[test]
    fn k4_stars_are_stuck_at_degree_three() {
        let g = k4();
        let star0 = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        let star1 = SpanningTree::new(&g, &[1, 4, 5]).unwrap();
        assert!(!decide_large_max_degree(&g, 3, &star0, &star1).unwrap());
        assert!(decide_large_max_degree(&g, 3, &star0, &star0).unwrap());
        assert!(sequence_large_max_degree(&g, 3, &star0, &star1).unwrap().is_none());
    }

    #[test]
    fn shared_hub_sequence_validates() {
        // K_{1,3} plus chord 1-2.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let t1 = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        let t2 = SpanningTree::new(&g, &[1, 3, 4]).unwrap();
        let seq = shared_hub_sequence(&g, &t1, &t2, 0, 2).unwrap();
        assert!(seq.len() <= t1.difference(&t2).len());
        assert_eq!(validate_sequence(&g, &seq), Ok(()));
        assert!(shared_hub_sequence(&g, &t1, &t2, 0, 3).is_err());
    }

    #[test]
    fn stitched_sequence_across_hubs() {
        let g = double_hub();
        let t = SpanningTree::new(&g, &[1, 2, 3, 4, 5, 6, 7]).unwrap();
        let seq = sequence_large_max_degree(&g, 3, &t, &t).unwrap().unwrap();
        assert!(seq.is_empty());
    }

    #[test]
    fn relaxed_small_degree_on_c4() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        let b = SpanningTree::new(&g, &[1, 2, 4]).unwrap();
        assert_eq!(find_swap_edge(&g, &a, &b, 3).unwrap(), 4);
        let seq = relaxed_small_degree_sequence(&g, 3, &a, &b).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(validate_sequence(&g, &seq), Ok(()));
        assert!(find_swap_edge(&g, &a, &a, 3).is_err());
        assert!(relaxed_small_degree_sequence(&g, 2, &a, &b).is_err());
    }
}
