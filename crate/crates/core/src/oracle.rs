//! Brute-force ground truth for small instances.

use std::collections::{HashMap, VecDeque};

use crate::degree::{components, high_degree_set};
use crate::diameter::is_good_triple;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::point::{is_center, Point};
use crate::sequence::{Constraint, ReconfSequence};
use crate::tree::{validate_pseudotree, SpanningTree};

/// Default limit on the number of enumerated spanning trees.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Union-find without path compression so that unions can be undone.
struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push((ra, rb));
        true
    }

    fn undo(&mut self) {
        let (ra, rb) = self.history.pop().expect("undo without union");
        self.parent[rb] = rb;
        self.size[ra] -= self.size[rb];
    }
}

/// Every spanning tree of `g` exactly once, by branching on each edge
/// (contract it or delete it). Fails with [`Error::CapExceeded`] past `cap`.
pub fn enumerate_spanning_trees(g: &Graph, cap: usize) -> Result<Vec<SpanningTree>> {
    g.require_connected()?;
    let n = g.n();
    let mut out = Vec::new();
    if n <= 1 {
        out.push(SpanningTree::new_unchecked(g, Vec::new()));
        return Ok(out);
    }
    let mut uf = RollbackUnionFind::new(n);
    let mut chosen = Vec::with_capacity(n - 1);
    branch(g, 1, &mut uf, &mut chosen, &mut out, cap)?;
    Ok(out)
}

/// Whether the chosen edges plus all edges from `from` on connect `g`.
fn still_connectable(g: &Graph, uf: &RollbackUnionFind, from: EdgeId) -> bool {
    let n = g.n();
    let mut roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    let mut parts = roots.iter().enumerate().filter(|&(v, &r)| v == r).count();
    fn root(roots: &mut [usize], mut x: usize) -> usize {
        while roots[x] != x {
            roots[x] = roots[roots[x]];
            x = roots[x];
        }
        x
    }
    for e in from..=g.m() {
        let (u, v) = g.endpoints(e);
        let (a, b) = (root(&mut roots, u), root(&mut roots, v));
        if a != b {
            roots[a] = b;
            parts -= 1;
            if parts == 1 {
                return true;
            }
        }
    }
    parts == 1
}

fn branch(
    g: &Graph,
    e: EdgeId,
    uf: &mut RollbackUnionFind,
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<SpanningTree>,
    cap: usize,
) -> Result<()> {
    if chosen.len() + 1 == g.n() {
        if out.len() == cap {
            return Err(Error::CapExceeded(cap));
        }
        out.push(SpanningTree::new_unchecked(g, chosen.clone()));
        return Ok(());
    }
    if e > g.m() {
        return Ok(());
    }
    let (u, v) = g.endpoints(e);
    if uf.union(u, v) {
        chosen.push(e);
        branch(g, e + 1, uf, chosen, out, cap)?;
        chosen.pop();
        uf.undo();
    }
    if still_connectable(g, uf, e + 1) {
        branch(g, e + 1, uf, chosen, out, cap)?;
    }
    Ok(())
}

/// Number of spanning trees by the matrix-tree theorem, using fraction-free
/// Gaussian elimination on a reduced Laplacian.
pub fn kirchhoff_count(g: &Graph) -> u128 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for &(u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            if x < k {
                a[x][x] += 1;
                if y < k {
                    a[x][y] -= 1;
                }
            }
        }
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..k).find(|&r| a[r][i] != 0) else {
                return 0;
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
        }
        prev = a[i][i];
    }
    (sign * a[k - 1][k - 1]) as u128
}

/// Sorted edge ids of `t` minus its `skip`-th edge.
fn drop_key(t: &SpanningTree, skip: usize) -> Vec<EdgeId> {
    t.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &e)| e)
        .collect()
}

/// Groups of tree indices sharing all but one edge; trees within a group
/// are pairwise adjacent and every adjacent pair shares a group.
fn adjacency_groups(trees: &[SpanningTree]) -> Vec<Vec<usize>> {
    let mut groups: HashMap<Vec<EdgeId>, Vec<usize>> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        for skip in 0..t.edges().len() {
            groups.entry(drop_key(t, skip)).or_default().push(i);
        }
    }
    groups.into_values().filter(|g| g.len() > 1).collect()
}

/// The flip graph restricted to trees satisfying a constraint.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    constraint: Constraint,
    trees: Vec<SpanningTree>,
    index: HashMap<Vec<EdgeId>, usize>,
    adj: Vec<Vec<usize>>,
    component: Vec<usize>,
}

impl FlipGraph {
    pub fn new(g: &Graph, constraint: Constraint, cap: usize) -> Result<Self> {
        Ok(Self::from_trees(g, constraint, enumerate_spanning_trees(g, cap)?))
    }

    /// Flip graph over the members of `all` that satisfy the constraint.
    pub fn from_trees(g: &Graph, constraint: Constraint, all: Vec<SpanningTree>) -> Self {
        let trees: Vec<SpanningTree> = all
            .into_iter()
            .filter(|t| constraint.satisfied(g, t))
            .collect();
        let index = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.edges().to_vec(), i))
            .collect();
        let mut adj = vec![Vec::new(); trees.len()];
        for group in adjacency_groups(&trees) {
            for &a in &group {
                for &b in &group {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let component = components(&adj);
        FlipGraph {
            constraint,
            trees,
            index,
            adj,
            component,
        }
    }

    /// Trees satisfying the constraint, in enumeration order.
    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn index_of(&self, t: &SpanningTree) -> Option<usize> {
        self.index.get(t.edges()).copied()
    }

    pub fn component(&self, i: usize) -> usize {
        self.component[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// A shortest sequence between two trees of the graph, if connected.
    pub fn shortest_sequence(&self, g: &Graph, a: usize, b: usize) -> Option<ReconfSequence> {
        if self.component[a] != self.component[b] {
            return None;
        }
        let mut prev = vec![usize::MAX; self.trees.len()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![b];
        while *path.last().expect("nonempty") != a {
            path.push(prev[*path.last().expect("nonempty")]);
        }
        path.reverse();
        let mut seq = ReconfSequence::new(self.trees[a].clone(), self.constraint);
        for &i in &path[1..] {
            seq.push_tree(self.trees[i].clone())
                .expect("flip-graph neighbors are adjacent");
        }
        debug_assert!(g.n() == 0 || seq.last().edges().len() + 1 == g.n());
        Some(seq)
    }
}

/// Reachability by breadth-first search over the constrained flip graph,
/// with a shortest sequence when reachable.
pub fn oracle_decide(
    g: &Graph,
    c: Constraint,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
    cap: usize,
) -> Result<(bool, Option<ReconfSequence>)> {
    for t in [t_ini, t_tar] {
        if !c.satisfied(g, t) {
            return Err(Error::Precondition(format!("a tree violates {c}")));
        }
    }
    let fg = FlipGraph::new(g, c, cap)?;
    let a = fg.index_of(t_ini).ok_or(Error::NotSpanningTree)?;
    let b = fg.index_of(t_tar).ok_or(Error::NotSpanningTree)?;
    let seq = fg.shortest_sequence(g, a, b);
    Ok((seq.is_some(), seq))
}

/// Calls `f` on every `k`-subset of edge ids `1..=m` in lexicographic order;
/// stops early when `f` returns true.
pub fn any_edge_subset(m: usize, k: usize, mut f: impl FnMut(&[EdgeId]) -> bool) -> bool {
    fn rec(
        next: EdgeId,
        m: usize,
        k: usize,
        cur: &mut Vec<EdgeId>,
        f: &mut dyn FnMut(&[EdgeId]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for e in next..=m {
            if m - e + 1 < need {
                break;
            }
            cur.push(e);
            if rec(e + 1, m, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(1, m, k, &mut Vec::with_capacity(k), &mut f)
}

fn any_pseudotree(g: &Graph, mut f: impl FnMut(&[EdgeId]) -> bool) -> bool {
    if g.n() == 0 {
        return false;
    }
    let sizes = [g.n() - 1, g.n()];
    sizes.iter().any(|&k| {
        k <= g.m()
            && any_edge_subset(g.m(), k, |ids| validate_pseudotree(g, ids) && f(ids))
    })
}

/// Whether some pseudotree has both `r1` and `r2` as centers.
pub fn oracle_center_pair(g: &Graph, d: usize, r1: Point, r2: Point) -> bool {
    any_pseudotree(g, |ids| is_center(g, ids, d, r1) && is_center(g, ids, d, r2))
}

/// A pseudotree `Q` (sorted edge ids) making `(r1, r2, Q)` good, by exhaustive search.
pub fn oracle_good_triple(g: &Graph, d: usize, r1: Point, r2: Point) -> Option<Vec<EdgeId>> {
    let mut found = None;
    any_pseudotree(g, |ids| {
        if is_good_triple(g, d, r1, r2, ids) {
            found = Some(ids.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Whether two equal or adjacent trees have `u` and `v` respectively at
/// degree at least `d`.
pub fn oracle_degree_pair(g: &Graph, d: usize, u: Vertex, v: Vertex, cap: usize) -> Result<bool> {
    let trees = enumerate_spanning_trees(g, cap)?;
    Ok(degree_pair_in(g, &trees, d, u, v))
}

/// [`oracle_degree_pair`] on a precomputed list of all spanning trees.
pub fn degree_pair_in(g: &Graph, trees: &[SpanningTree], d: usize, u: Vertex, v: Vertex) -> bool {
    let flags: Vec<(bool, bool)> = trees
        .iter()
        .map(|t| {
            let hubs = high_degree_set(g, t, d);
            (hubs.contains(&u), hubs.contains(&v))
        })
        .collect();
    if flags.iter().any(|&(a, b)| a && b) {
        return true;
    }
    adjacency_groups(trees).iter().any(|group| {
        group.iter().any(|&i| flags[i].0) && group.iter().any(|&j| flags[j].1)
    })
}

/// A Hamiltonian path from `s` to `t` by backtracking.
pub fn oracle_hampath(g: &Graph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    if s >= n || t >= n || (s == t && n > 1) {
        return None;
    }
    fn extend(g: &Graph, t: Vertex, path: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let cur = *path.last().expect("path starts at s");
        if path.len() == g.n() {
            return cur == t;
        }
        if cur == t {
            return false;
        }
        let mut next: Vec<Vertex> = g.neighbors(cur).iter().map(|&(w, _)| w).collect();
        next.sort_unstable();
        for w in next {
            if used[w] {
                continue;
            }
            used[w] = true;
            path.push(w);
            if extend(g, t, path, used) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
        false
    }
    let mut used = vec![false; n];
    used[s] = true;
    let mut path = vec![s];
    extend(g, t, &mut path, &mut used).then_some(path)
}
