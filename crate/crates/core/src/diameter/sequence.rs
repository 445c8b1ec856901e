//! Sequences between trees that share a center, and splitting a witness
//! pseudotree into two adjacent trees.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::point::{bfs_tree_from_point, is_center, point_distances_half, Point};
use crate::sequence::{Constraint, ReconfSequence};
use crate::tree::{Pseudotree, SpanningTree};

/// Parent edge of every vertex when `t` is rooted at point `r`.
fn parents_from_point(g: &Graph, t: &SpanningTree, r: Point) -> Vec<Option<EdgeId>> {
    let adj = g.sub_adjacency(t.edges());
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    match r {
        Point::Vertex(v) => {
            seen[v] = true;
            queue.push_back(v);
        }
        Point::Mid(e) => {
            let (a, b) = g.endpoints(e);
            seen[a] = true;
            seen[b] = true;
            queue.extend([a, b]);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Flips `t` towards the breadth-first tree `target` from `r`, fixing the
/// shallowest wrong edge first.
fn towards_bfs_tree(
    g: &Graph,
    d: usize,
    t: &SpanningTree,
    target: &SpanningTree,
    r: Point,
    depth: &[u32],
) -> Result<ReconfSequence> {
    let mut seq = ReconfSequence::new(t.clone(), Constraint::DiamLe(d));
    loop {
        let cur = seq.last().clone();
        let pick = target
            .difference(&cur)
            .into_iter()
            .map(|e| {
                let (a, b) = g.endpoints(e);
                (depth[a].min(depth[b]), e)
            })
            .min();
        let Some((_, add)) = pick else {
            return Ok(seq);
        };
        let (a, b) = g.endpoints(add);
        let y = if depth[a] < depth[b] { b } else { a };
        let remove = parents_from_point(g, &cur, r)[y].ok_or_else(|| {
            Error::Precondition(format!("vertex {y} has no parent below center {r}"))
        })?;
        seq.push_flip(g, remove, add)?;
    }
}

/// Sequence from `t1` to `t2` through trees that all keep `r` as a center.
pub fn same_center_sequence(
    g: &Graph,
    d: usize,
    t1: &SpanningTree,
    t2: &SpanningTree,
    r: Point,
) -> Result<ReconfSequence> {
    for t in [t1, t2] {
        if !is_center(g, t.edges(), d, r) {
            return Err(Error::Precondition(format!("{r} is not a center of both trees")));
        }
    }
    let all: Vec<EdgeId> = g.edge_ids().collect();
    let target = bfs_tree_from_point(g, &all, r)?;
    let depth = point_distances_half(g, &all, r)?;
    let mut seq = towards_bfs_tree(g, d, t1, &target, r, depth.vertices())?;
    let back = towards_bfs_tree(g, d, t2, &target, r, depth.vertices())?;
    seq.append(&back.reversed())?;
    Ok(seq)
}

/// Breadth-first trees of `q` from `r1` and from `r2`; they are equal or
/// adjacent and keep `r1` resp. `r2` as a center.
pub fn split_pseudotree(
    g: &Graph,
    d: usize,
    q: &Pseudotree,
    r1: Point,
    r2: Point,
) -> Result<(SpanningTree, SpanningTree)> {
    for r in [r1, r2] {
        if !is_center(g, q.edges(), d, r) {
            return Err(Error::Precondition(format!("{r} is not a center of the pseudotree")));
        }
    }
    Ok((
        bfs_tree_from_point(g, q.edges(), r1)?,
        bfs_tree_from_point(g, q.edges(), r2)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::eccentricity_half;
    use crate::sequence::validate_sequence;
    use crate::tree::are_flip_adjacent;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn identical_trees() {
        let g = c4();
        let t = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        let seq = same_center_sequence(&g, 3, &t, &t, Point::Mid(2)).unwrap();
        assert_eq!(seq.last(), &t);
        assert_eq!(validate_sequence(&g, &seq), Ok(()));
    }

    #[test]
    fn c4_path_centered_at_a_midpoint() {
        let g = c4();
        // 3-0-1-2 is the only path of C4 centered at p1.
        let t1 = SpanningTree::new(&g, &[1, 2, 4]).unwrap();
        let seq = same_center_sequence(&g, 3, &t1, &t1, Point::Mid(1)).unwrap();
        assert_eq!(validate_sequence(&g, &seq), Ok(()));
        assert!(same_center_sequence(&g, 3, &t1, &t1, Point::Mid(3)).is_err());
    }

    #[test]
    fn eccentricity_never_increases() {
        // Wheel-like graph: hub 0 joined to a 5-cycle.
        let g = Graph::new(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
        )
        .unwrap();
        let t1 = SpanningTree::new(&g, &[1, 6, 7, 8, 9]).unwrap();
        let t2 = SpanningTree::new(&g, &[2, 3, 6, 9, 10]).unwrap();
        let r = Point::Vertex(2);
        let seq = same_center_sequence(&g, 6, &t1, &t2, r).unwrap();
        assert_eq!(validate_sequence(&g, &seq), Ok(()));
        assert!(seq.len() <= 2 * g.n());
        for t in seq.trees() {
            assert!(eccentricity_half(&g, t.edges(), r).unwrap() <= 6);
        }
    }

    #[test]
    fn split_c4() {
        let g = c4();
        let q = Pseudotree::new(&g, &[1, 2, 3, 4]).unwrap();
        let (a, b) = split_pseudotree(&g, 3, &q, Point::Mid(1), Point::Mid(3)).unwrap();
        assert!(a.contains(1) && b.contains(3));
        assert!(are_flip_adjacent(&a, &b).unwrap());
        let t = SpanningTree::new(&g, &[1, 2, 3]).unwrap();
        let (x, y) = split_pseudotree(&g, 3, &t.clone().into(), Point::Mid(2), Point::Mid(2)).unwrap();
        assert_eq!((x, y), (t.clone(), t));
    }
}
