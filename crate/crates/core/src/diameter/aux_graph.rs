//! The center auxiliary graph on `V ∪ R` and the solver built on it.

use std::collections::VecDeque;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::degree::components;
use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};
use crate::point::{center_points, Point};
use crate::sequence::{validate_sequence, Constraint, ReconfSequence};
use crate::tree::{Pseudotree, SpanningTree};

use super::search::GoodTripleSearch;
use super::sequence::{same_center_sequence, split_pseudotree};

/// Edge `r1 r2` of the center auxiliary graph with its witness pseudotree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterAuxEdge {
    pub r1: Point,
    pub r2: Point,
    pub witness: Pseudotree,
}

/// The full center auxiliary graph.
#[derive(Debug, Clone)]
pub struct CenterAuxGraph {
    points: Vec<Point>,
    edges: Vec<CenterAuxEdge>,
    component: Vec<usize>,
}

impl CenterAuxGraph {
    /// All points, vertices first.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Edges in pair-enumeration order.
    pub fn edges(&self) -> &[CenterAuxEdge] {
        &self.edges
    }

    pub fn component(&self, g: &Graph, p: Point) -> usize {
        self.component[p.index(g)]
    }

    /// DOT rendering with witness edge sets as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph centers {\n");
        for p in &self.points {
            out.push_str(&format!("  \"{p}\";\n"));
        }
        for e in &self.edges {
            let ids: Vec<String> = e.witness.edges().iter().map(|id| id.to_string()).collect();
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                e.r1,
                e.r2,
                ids.join(" ")
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "points": self.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "r1": e.r1.to_string(),
                "r2": e.r2.to_string(),
                "witness": e.witness.edges(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Tests every pair of distinct points for a good triple, in parallel.
pub fn build_center_aux_graph(g: &Graph, d: usize) -> Result<CenterAuxGraph> {
    let search = GoodTripleSearch::new(g, d)?;
    let points: Vec<Point> = (0..g.n() + g.m()).map(|i| Point::from_index(g, i)).collect();
    let pairs: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|i| (i + 1..points.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| search.may_be_center(points[i]) && search.may_be_center(points[j]))
        .collect();
    let found: Vec<Option<CenterAuxEdge>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (r1, r2) = (points[i], points[j]);
            search
                .find_witness(r1, r2)
                .map(|w| w.map(|witness| CenterAuxEdge { r1, r2, witness }))
        })
        .collect::<Result<_>>()?;
    let edges: Vec<CenterAuxEdge> = found.into_iter().flatten().collect();
    let mut adj = vec![Vec::new(); points.len()];
    for e in &edges {
        let (a, b) = (e.r1.index(g), e.r2.index(g));
        adj[a].push(b);
        adj[b].push(a);
    }
    Ok(CenterAuxGraph {
        points,
        edges,
        component: components(&adj),
    })
}

/// Decision and sequence construction for "diameter at most d" on a fixed
/// graph. Connectivity of the auxiliary graph is computed once, skipping
/// pairs that are already known to be connected.
#[derive(Debug)]
pub struct SmallDiameterSolver<'g> {
    search: GoodTripleSearch<'g>,
    component: OnceLock<Result<Vec<usize>>>,
}

impl<'g> SmallDiameterSolver<'g> {
    pub fn new(g: &'g Graph, d: usize) -> Result<Self> {
        Ok(SmallDiameterSolver {
            search: GoodTripleSearch::new(g, d)?,
            component: OnceLock::new(),
        })
    }

    pub fn search(&self) -> &GoodTripleSearch<'g> {
        &self.search
    }

    fn graph(&self) -> &'g Graph {
        self.search.graph()
    }

    fn compute_components(&self) -> Result<Vec<usize>> {
        let g = self.graph();
        let total = g.n() + g.m();
        let mut uf = UnionFind::new(total);
        let live: Vec<Point> = (0..total)
            .map(|i| Point::from_index(g, i))
            .filter(|&p| self.search.may_be_center(p))
            .collect();
        for (i, &r1) in live.iter().enumerate() {
            for &r2 in &live[i + 1..] {
                let (a, b) = (r1.index(g), r2.index(g));
                if uf.find(a) == uf.find(b) {
                    continue;
                }
                if self.search.find_witness(r1, r2)?.is_some() {
                    uf.union(a, b);
                }
            }
        }
        Ok((0..total).map(|i| uf.find(i)).collect())
    }

    /// Component label of every point index.
    pub fn components(&self) -> Result<&[usize]> {
        match self.component.get_or_init(|| self.compute_components()) {
            Ok(c) => Ok(c),
            Err(e) => Err(e.clone()),
        }
    }

    fn centers(&self, t: &SpanningTree) -> Result<Vec<Point>> {
        let z = center_points(self.graph(), t.edges(), self.search.d());
        if z.is_empty() {
            return Err(Error::Precondition(format!(
                "tree has diameter above {}",
                self.search.d()
            )));
        }
        Ok(z)
    }

    /// Sorted auxiliary-graph components containing a center of `t`; two
    /// trees are reconfigurable into each other iff these sets intersect.
    pub fn center_components(&self, t: &SpanningTree) -> Result<Vec<usize>> {
        let g = self.graph();
        let comp = self.components()?;
        let mut labels: Vec<usize> = self
            .centers(t)?
            .iter()
            .map(|p| comp[p.index(g)])
            .collect();
        labels.sort_unstable();
        labels.dedup();
        Ok(labels)
    }

    pub fn decide(&self, t_ini: &SpanningTree, t_tar: &SpanningTree) -> Result<bool> {
        let a = self.center_components(t_ini)?;
        let b = self.center_components(t_tar)?;
        Ok(a.iter().any(|x| b.binary_search(x).is_ok()))
    }

    /// Breadth-first search in the auxiliary graph from `from` to `to`,
    /// testing pairs on demand. Returns the points and the witnesses between
    /// consecutive points.
    fn center_path(
        &self,
        from: &[Point],
        to: &[Point],
    ) -> Result<Option<(Vec<Point>, Vec<Pseudotree>)>> {
        let g = self.graph();
        let total = g.n() + g.m();
        let mut target = vec![false; total];
        for p in to {
            target[p.index(g)] = true;
        }
        let mut prev: Vec<Option<(usize, Pseudotree)>> = vec![None; total];
        let mut seen = vec![false; total];
        let mut queue = VecDeque::new();
        for p in from {
            seen[p.index(g)] = true;
            queue.push_back(p.index(g));
        }
        let live: Vec<usize> = (0..total)
            .filter(|&i| self.search.may_be_center(Point::from_index(g, i)))
            .collect();
        while let Some(x) = queue.pop_front() {
            if target[x] {
                let mut points = vec![Point::from_index(g, x)];
                let mut witnesses = Vec::new();
                let mut cur = x;
                while let Some((p, w)) = prev[cur].take() {
                    points.push(Point::from_index(g, p));
                    witnesses.push(w);
                    cur = p;
                }
                points.reverse();
                witnesses.reverse();
                return Ok(Some((points, witnesses)));
            }
            for &y in &live {
                if seen[y] {
                    continue;
                }
                let (r1, r2) = (Point::from_index(g, x), Point::from_index(g, y));
                if let Some(w) = self.search.find_witness(r1, r2)? {
                    seen[y] = true;
                    prev[y] = Some((x, w));
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    pub fn sequence(
        &self,
        t_ini: &SpanningTree,
        t_tar: &SpanningTree,
    ) -> Result<Option<ReconfSequence>> {
        let g = self.graph();
        let d = self.search.d();
        let from = self.centers(t_ini)?;
        let to = self.centers(t_tar)?;
        let Some((points, witnesses)) = self.center_path(&from, &to)? else {
            return Ok(None);
        };
        let mut seq = ReconfSequence::new(t_ini.clone(), Constraint::DiamLe(d));
        for (i, q) in witnesses.iter().enumerate() {
            let (plus, minus) = split_pseudotree(g, d, q, points[i], points[i + 1])?;
            let part = same_center_sequence(g, d, seq.last(), &plus, points[i])?;
            seq.append(&part)?;
            seq.push_tree(minus)?;
        }
        let last = *points.last().expect("path is nonempty");
        let part = same_center_sequence(g, d, seq.last(), t_tar, last)?;
        seq.append(&part)?;
        validate_sequence(g, &seq).map_err(|v| Error::Reduction(v.to_string()))?;
        Ok(Some(seq))
    }
}

/// Whether `t_ini` reaches `t_tar` through trees of diameter `≤ d`.
pub fn decide_small_diameter(
    g: &Graph,
    d: usize,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
) -> Result<bool> {
    SmallDiameterSolver::new(g, d)?.decide(t_ini, t_tar)
}

/// A sequence through trees of diameter `≤ d`, if one exists.
pub fn sequence_small_diameter(
    g: &Graph,
    d: usize,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
) -> Result<Option<ReconfSequence>> {
    SmallDiameterSolver::new(g, d)?.sequence(t_ini, t_tar)
}
