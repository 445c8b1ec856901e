//! Test-graph families: all small connected graphs up to isomorphism and
//! seeded random instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, UnionFind, Vertex};
use crate::tree::SpanningTree;

/// Vertex pairs `(i, j)` with `i < j`, in lexicographic order.
fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn mask_connected(n: usize, pairs: &[(Vertex, Vertex)], mask: u32) -> bool {
    let mut uf = UnionFind::new(n);
    let mut parts = n;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 && uf.union(u, v) {
            parts -= 1;
        }
    }
    parts <= 1
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices (`n ≤ 7`). Each representative is the class member
/// with the smallest edge mask; edges are listed in lexicographic order.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive generation is limited to n ≤ 7");
    let pairs = pairs(n);
    let slot = |a: Vertex, b: Vertex| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    let perms = permutations(n);
    // For each permutation, the image slot of every pair slot.
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| slot(p[a], p[b])).collect())
        .collect();
    let mut reps = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        if !mask_connected(n, &pairs, mask) {
            continue;
        }
        let canon = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .expect("at least the identity");
        reps.insert(canon);
    }
    reps.into_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, &edges).expect("generated graphs are simple")
        })
        .collect()
}

/// Connected graphs up to isomorphism for every order `1..=max_n`.
pub fn small_connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs_up_to_iso).collect()
}

/// A random connected graph: a random recursive tree plus each remaining
/// pair independently with probability `p`, edges in shuffled order.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for pair in pairs(n) {
        if !edges.contains(&pair) && rng.gen_bool(p) {
            edges.insert(pair);
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.shuffle(rng);
    Graph::new(n, &edges).expect("generated graphs are simple")
}

/// A random spanning tree of a connected graph: Kruskal over shuffled edges.
pub fn random_spanning_tree<R: Rng>(g: &Graph, rng: &mut R) -> SpanningTree {
    let mut ids: Vec<_> = g.edge_ids().collect();
    ids.shuffle(rng);
    let mut uf = UnionFind::new(g.n());
    let chosen: Vec<_> = ids
        .into_iter()
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            uf.union(u, v)
        })
        .collect();
    SpanningTree::new(g, &chosen).expect("input graph is connected")
}
