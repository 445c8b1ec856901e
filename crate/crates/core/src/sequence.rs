//! Constraints, reconfiguration sequences and the unconstrained exchange walk.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::point::tree_diameter;
use crate::tree::{apply_flip, validate_spanning_tree, SpanningTree};

/// Predicate every tree of a sequence must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", content = "d", rename_all = "kebab-case")]
pub enum Constraint {
    None,
    MaxDegLe(usize),
    MaxDegGe(usize),
    DiamLe(usize),
    DiamGe(usize),
}

impl Constraint {
    pub fn satisfied(&self, g: &Graph, t: &SpanningTree) -> bool {
        match *self {
            Constraint::None => true,
            Constraint::MaxDegLe(d) => t.max_degree(g) <= d,
            Constraint::MaxDegGe(d) => t.max_degree(g) >= d,
            Constraint::DiamLe(d) => tree_diameter(g, t) <= d,
            Constraint::DiamGe(d) => tree_diameter(g, t) >= d,
        }
    }

    pub fn d(&self) -> Option<usize> {
        match *self {
            Constraint::None => None,
            Constraint::MaxDegLe(d)
            | Constraint::MaxDegGe(d)
            | Constraint::DiamLe(d)
            | Constraint::DiamGe(d) => Some(d),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::None => write!(f, "none"),
            Constraint::MaxDegLe(d) => write!(f, "max-deg-le {d}"),
            Constraint::MaxDegGe(d) => write!(f, "max-deg-ge {d}"),
            Constraint::DiamLe(d) => write!(f, "diam-le {d}"),
            Constraint::DiamGe(d) => write!(f, "diam-ge {d}"),
        }
    }
}

/// One flip: `remove` leaves the tree, `add` enters it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub remove: EdgeId,
    pub add: EdgeId,
}

/// Trees `trees[0..=k]` with `steps[i]` turning `trees[i]` into `trees[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfSequence {
    trees: Vec<SpanningTree>,
    steps: Vec<Step>,
    constraint: Constraint,
}

impl ReconfSequence {
    pub fn new(start: SpanningTree, constraint: Constraint) -> Self {
        ReconfSequence {
            trees: vec![start],
            steps: Vec::new(),
            constraint,
        }
    }

    /// Rebuilds a sequence from a start tree and a list of flips.
    pub fn from_steps(
        g: &Graph,
        start: SpanningTree,
        steps: &[Step],
        constraint: Constraint,
    ) -> Result<Self> {
        let mut seq = ReconfSequence::new(start, constraint);
        for s in steps {
            seq.push_flip(g, s.remove, s.add)?;
        }
        Ok(seq)
    }

    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn constraint(&self) -> Constraint {
        self.constraint
    }

    pub fn set_constraint(&mut self, c: Constraint) {
        self.constraint = c;
    }

    /// Number of flips.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> &SpanningTree {
        &self.trees[0]
    }

    pub fn last(&self) -> &SpanningTree {
        self.trees.last().expect("a sequence holds at least one tree")
    }

    pub fn push_flip(&mut self, g: &Graph, remove: EdgeId, add: EdgeId) -> Result<()> {
        let next = apply_flip(g, self.last(), remove, add)?;
        self.trees.push(next);
        self.steps.push(Step { remove, add });
        Ok(())
    }

    /// Appends `t`, which must equal or be adjacent to the current last tree.
    pub fn push_tree(&mut self, t: SpanningTree) -> Result<()> {
        let last = self.last();
        if last.host() != t.host() {
            return Err(Error::HostMismatch);
        }
        let removed = last.difference(&t);
        let added = t.difference(last);
        match (removed.as_slice(), added.as_slice()) {
            ([], []) => Ok(()),
            ([remove], [add]) => {
                self.steps.push(Step {
                    remove: *remove,
                    add: *add,
                });
                self.trees.push(t);
                Ok(())
            }
            _ => Err(Error::InvalidFlip("trees are not adjacent".into())),
        }
    }

    /// Appends `other`, whose first tree must equal the current last tree.
    pub fn append(&mut self, other: &ReconfSequence) -> Result<()> {
        if other.first() != self.last() {
            return Err(Error::InvalidFlip("sequences do not meet".into()));
        }
        self.trees.extend(other.trees[1..].iter().cloned());
        self.steps.extend_from_slice(&other.steps);
        Ok(())
    }

    pub fn reversed(&self) -> ReconfSequence {
        ReconfSequence {
            trees: self.trees.iter().rev().cloned().collect(),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    remove: s.add,
                    add: s.remove,
                })
                .collect(),
            constraint: self.constraint,
        }
    }

    /// JSON export: one `{remove, add, edges}` object per flip, where `edges`
    /// is the tree after the flip.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .steps
            .iter()
            .zip(&self.trees[1..])
            .map(|(s, t)| {
                serde_json::json!({
                    "remove": s.remove,
                    "add": s.add,
                    "edges": t.edges(),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

/// First problem found by [`validate_sequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending tree.
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tree {}: {}", self.index, self.reason)
    }
}

/// Checks that every tree spans `g`, each step is the recorded flip and the
/// constraint holds throughout.
pub fn validate_sequence(g: &Graph, seq: &ReconfSequence) -> std::result::Result<(), Violation> {
    let fail = |index: usize, reason: String| Err(Violation { index, reason });
    if seq.trees.len() != seq.steps.len() + 1 {
        return fail(0, "tree and step counts disagree".into());
    }
    for (i, t) in seq.trees.iter().enumerate() {
        if t.host() != g.fingerprint() || !validate_spanning_tree(g, t.edges()) {
            return fail(i, "not a spanning tree of the host graph".into());
        }
        if !seq.constraint.satisfied(g, t) {
            return fail(i, format!("violates {}", seq.constraint));
        }
        if i > 0 {
            let s = seq.steps[i - 1];
            let prev = &seq.trees[i - 1];
            let removed = prev.difference(t);
            let added = t.difference(prev);
            if removed != [s.remove] || added != [s.add] {
                return fail(
                    i,
                    format!("step does not match flip -{} +{}", s.remove, s.add),
                );
            }
        }
    }
    Ok(())
}

/// One exchange from `cur` towards `target`: adds the smallest edge of
/// `target` missing from `cur` and removes the smallest edge of the created
/// cycle that is not in `target`.
pub(crate) fn exchange_step(
    g: &Graph,
    cur: &SpanningTree,
    target: &SpanningTree,
) -> Option<(EdgeId, EdgeId)> {
    let add = *target.difference(cur).first()?;
    let (u, v) = g.endpoints(add);
    let remove = cur
        .path(g, u, v)
        .into_iter()
        .filter(|&f| !target.contains(f))
        .min()
        .expect("a cycle through a missing target edge leaves the target");
    Some((remove, add))
}

/// Exchanges edges one at a time until `target` is reached.
pub(crate) fn exchange_into(g: &Graph, seq: &mut ReconfSequence, target: &SpanningTree) {
    while let Some((remove, add)) = exchange_step(g, seq.last(), target) {
        seq.push_flip(g, remove, add)
            .expect("exchange keeps a spanning tree");
    }
}

/// Flip sequence of length `|E(t) \ E(t2)|` keeping `E(t) ∩ E(t2)` throughout.
pub fn unconstrained_sequence(g: &Graph, t: &SpanningTree, t2: &SpanningTree) -> ReconfSequence {
    let mut seq = ReconfSequence::new(t.clone(), Constraint::None);
    exchange_into(g, &mut seq, t2);
    seq
}
