//! Text formats for graphs, trees, sequences, NCL graphs and orientations.
//!
//! Graph: a header `n m`, then `m` lines `u v`. Tree: whitespace-separated
//! edge ids. NCL graph: `v AND|OR` lines and `u v w` edge lines. Orientation:
//! one `u->v` line per NCL edge, in edge order. In every text format, `#`
//! starts a comment and blank lines are skipped.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::reductions::{NclEdge, NclGraph, NclKind, NclOrientation};
use crate::sequence::{Constraint, ReconfSequence, Step};
use crate::tree::SpanningTree;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, found {token:?}"),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head[..] else {
        return Err(Error::Parse { line: hline, msg: "header must be `n m`".into() });
    };
    let (n, m) = (number(hline, n)?, number(hline, m)?);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(Error::Parse { line, msg: "edge lines must be `u v`".into() });
        };
        edges.push((number(line, u)?, number(line, v)?));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_tree(g: &Graph, text: &str) -> Result<SpanningTree> {
    let mut ids = Vec::new();
    for (line, content) in content_lines(text) {
        for token in content.split_whitespace() {
            ids.push(number(line, token)?);
        }
    }
    SpanningTree::new(g, &ids)
}

pub fn format_tree(t: &SpanningTree) -> String {
    let ids: Vec<String> = t.edges().iter().map(ToString::to_string).collect();
    format!("{}\n", ids.join(" "))
}

/// On-disk sequence: the start tree and each flip with the tree it yields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub constraint: Constraint,
    pub start: Vec<EdgeId>,
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub remove: EdgeId,
    pub add: EdgeId,
    /// Tree after the flip; optional on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeId>>,
}

pub fn format_sequence(seq: &ReconfSequence) -> String {
    let file = SequenceFile {
        constraint: seq.constraint(),
        start: seq.first().edges().to_vec(),
        steps: seq
            .steps()
            .iter()
            .zip(&seq.trees()[1..])
            .map(|(s, t)| StepRecord {
                remove: s.remove,
                add: s.add,
                edges: Some(t.edges().to_vec()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("sequence serializes") + "\n"
}

/// Rebuilds a sequence by replaying its flips; recorded trees must match.
pub fn parse_sequence(g: &Graph, text: &str) -> Result<ReconfSequence> {
    let file: SequenceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let start = SpanningTree::new(g, &file.start)?;
    let steps: Vec<Step> = file
        .steps
        .iter()
        .map(|s| Step { remove: s.remove, add: s.add })
        .collect();
    let seq = ReconfSequence::from_steps(g, start, &steps, file.constraint)?;
    for (i, (rec, t)) in file.steps.iter().zip(&seq.trees()[1..]).enumerate() {
        if let Some(edges) = &rec.edges {
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            if sorted != t.edges() {
                return Err(Error::InvalidFlip(format!(
                    "step {} records a tree that its flip does not produce",
                    i + 1
                )));
            }
        }
    }
    Ok(seq)
}

pub fn parse_ncl(text: &str) -> Result<NclGraph> {
    let mut kinds: Vec<Option<NclKind>> = Vec::new();
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let parts: Vec<&str> = content.split_whitespace().collect();
        match parts[..] {
            [v, kind] => {
                let v = number(line, v)?;
                let kind = match kind.to_ascii_uppercase().as_str() {
                    "AND" => NclKind::And,
                    "OR" => NclKind::Or,
                    other => {
                        return Err(Error::Parse { line, msg: format!("unknown vertex kind {other:?}") })
                    }
                };
                if kinds.len() <= v {
                    kinds.resize(v + 1, None);
                }
                if kinds[v].replace(kind).is_some() {
                    return Err(Error::Parse { line, msg: format!("vertex {v} declared twice") });
                }
            }
            [u, v, w] => {
                let weight = number(line, w)?;
                edges.push(NclEdge {
                    u: number(line, u)?,
                    v: number(line, v)?,
                    weight: u8::try_from(weight).unwrap_or(u8::MAX),
                });
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: "expected `v AND|OR` or `u v w`".into(),
                })
            }
        }
    }
    let kinds = kinds
        .into_iter()
        .enumerate()
        .map(|(v, k)| k.ok_or_else(|| Error::InvalidNcl(format!("vertex {v} has no kind"))))
        .collect::<Result<Vec<_>>>()?;
    NclGraph::new(kinds, edges)
}

pub fn format_ncl(h: &NclGraph) -> String {
    let mut out = String::new();
    for (v, k) in h.kinds().iter().enumerate() {
        let name = match k {
            NclKind::And => "AND",
            NclKind::Or => "OR",
        };
        out.push_str(&format!("{v} {name}\n"));
    }
    for e in h.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
    }
    out
}

pub fn parse_orientation(h: &NclGraph, text: &str) -> Result<NclOrientation> {
    let mut heads = Vec::with_capacity(h.edges().len());
    for (line, content) in content_lines(text) {
        let (a, b) = content.split_once("->").ok_or(Error::Parse {
            line,
            msg: "expected `u->v`".into(),
        })?;
        let (tail, head) = (number(line, a.trim())?, number(line, b.trim())?);
        let Some(edge) = h.edges().get(heads.len()) else {
            return Err(Error::Parse { line, msg: "more directions than NCL edges".into() });
        };
        if !((edge.u, edge.v) == (tail, head) || (edge.v, edge.u) == (tail, head)) {
            return Err(Error::Parse {
                line,
                msg: format!("edge {} joins {} and {}", heads.len(), edge.u, edge.v),
            });
        }
        heads.push(head);
    }
    if heads.len() != h.edges().len() {
        return Err(Error::Parse {
            line: 0,
            msg: format!("expected {} directions, found {}", h.edges().len(), heads.len()),
        });
    }
    Ok(NclOrientation::new(heads))
}

pub fn format_orientation(h: &NclGraph, sigma: &NclOrientation) -> String {
    h.edges()
        .iter()
        .zip(sigma.heads())
        .map(|(e, &head)| {
            let tail = if head == e.u { e.v } else { e.u };
            format!("{tail}->{head}\n")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "# a square\n4 4\n0 1\n1 2\n\n2 3 # last but one\n3 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(
            parse_graph("3 2\n0 1\n1 x\n"),
            Err(Error::Parse { line: 3, msg: "expected a nonnegative integer, found \"x\"".into() })
        );
        assert!(parse_graph("3 3\n0 1\n1 2\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn tree_and_sequence_round_trip() {
        let g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        let t = parse_tree(&g, "3 1\n2\n").unwrap();
        assert_eq!(t.edges(), &[1, 2, 3]);
        assert_eq!(format_tree(&t), "1 2 3\n");
        let mut seq = ReconfSequence::new(t, Constraint::DiamLe(3));
        seq.push_flip(&g, 2, 4).unwrap();
        let back = parse_sequence(&g, &format_sequence(&seq)).unwrap();
        assert_eq!(back, seq);
        let forged = format_sequence(&seq).replace("\"edges\": [\n        1,", "\"edges\": [\n        2,");
        assert!(parse_sequence(&g, &forged).is_err());
    }

    #[test]
    fn ncl_round_trip() {
        let text = "0 OR\n1 or\n0 1 2\n0 1 2\n1 0 2\n";
        let h = parse_ncl(text).unwrap();
        assert_eq!(parse_ncl(&format_ncl(&h)).unwrap(), h);
        let sigma = parse_orientation(&h, "0->1\n1->0\n0->1\n").unwrap();
        assert_eq!(sigma.heads(), &[1, 0, 1]);
        assert_eq!(parse_orientation(&h, &format_orientation(&h, &sigma)).unwrap(), sigma);
        assert!(parse_orientation(&h, "0->1\n").is_err());
        assert!(parse_ncl("0 XOR\n").is_err());
    }
}
