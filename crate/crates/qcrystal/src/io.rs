//! Graph serialization: a structured JSON format with an exact parser, and a
//! write-only Graphviz DOT emitter.
//!
//! JSON schema: `{ "n": int, "nodes": [{"id", "word", "weight"}],
//! "edges": [{"src", "dst", "label"}] }` with labels `"1".."n-1"` or
//! `"1bar"`. Node ids follow the deterministic node order (words sorted
//! lexicographically), so `from_json(to_json(g))` reproduces `g` exactly.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{CrystalGraph, Edge};
use crate::operators::weight;
use crate::word::{Alphabet, OperatorLabel, Word};

/// Serialized token for the odd label `1̄` (kept ASCII for portable files).
pub const ODD_LABEL_TOKEN: &str = "1bar";

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: u8,
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    word: Vec<u8>,
    weight: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeDoc {
    src: usize,
    dst: usize,
    label: String,
}

pub fn label_token(label: OperatorLabel) -> String {
    match label {
        OperatorLabel::Even(i) => i.to_string(),
        OperatorLabel::OddOne => ODD_LABEL_TOKEN.to_string(),
    }
}

fn parse_label(token: &str, alphabet: &Alphabet) -> Result<OperatorLabel, Error> {
    if token == ODD_LABEL_TOKEN {
        return Ok(OperatorLabel::OddOne);
    }
    let i: u8 = token
        .parse()
        .map_err(|_| Error::Parse(format!("unknown edge label {token:?}")))?;
    if !(1..alphabet.n()).contains(&i) {
        return Err(Error::Parse(format!(
            "edge label {i} out of range 1..={}",
            alphabet.n() - 1
        )));
    }
    Ok(OperatorLabel::Even(i))
}

pub fn to_json(graph: &CrystalGraph) -> String {
    let doc = GraphDoc {
        n: graph.alphabet().n(),
        nodes: graph
            .nodes()
            .iter()
            .enumerate()
            .map(|(id, node)| NodeDoc {
                id,
                word: node.word.letters().to_vec(),
                weight: node.weight.coords().to_vec(),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                src: e.src,
                dst: e.dst,
                label: label_token(e.label),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<CrystalGraph, Error> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let alphabet = Alphabet::new(doc.n)?;

    let mut words = Vec::with_capacity(doc.nodes.len());
    for (k, node) in doc.nodes.iter().enumerate() {
        if node.id != k {
            return Err(Error::Parse(format!(
                "node {k}: id {} out of order (ids must be 0..)",
                node.id
            )));
        }
        let word = Word::new(&alphabet, node.word.clone())?;
        let expected = weight(&alphabet, &word);
        if expected.coords() != node.weight.as_slice() {
            return Err(Error::Parse(format!(
                "node {k}: weight {:?} does not match word {word}",
                node.weight
            )));
        }
        words.push(word);
    }
    if !words.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Parse(
            "nodes must be sorted lexicographically by word".into(),
        ));
    }

    let mut edges = Vec::with_capacity(doc.edges.len());
    for (k, e) in doc.edges.iter().enumerate() {
        if e.src >= words.len() || e.dst >= words.len() {
            return Err(Error::Parse(format!(
                "edge {k}: node id out of range 0..{}",
                words.len()
            )));
        }
        let label = parse_label(&e.label, &alphabet)?;
        let src_wt = weight(&alphabet, &words[e.src]);
        let dst_wt = weight(&alphabet, &words[e.dst]);
        if dst_wt != src_wt.shifted_by_alpha(label, crate::word::Direction::Lower) {
            return Err(Error::Parse(format!(
                "edge {k}: label {label} does not shift the weight by -α"
            )));
        }
        edges.push(Edge {
            src: e.src,
            label,
            dst: e.dst,
        });
    }
    edges.sort_by_key(|e| (e.src, e.label, e.dst));
    CrystalGraph::from_parts(alphabet, words, edges)
}

/// Graphviz rendering: solid arrows for even labels, dashed for `1̄`.
pub fn to_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
    for (id, node) in graph.nodes().iter().enumerate() {
        out.push_str(&format!("  n{id} [label=\"{}\"];\n", node.word));
    }
    for e in graph.edges() {
        match e.label {
            OperatorLabel::Even(i) => {
                out.push_str(&format!("  n{} -> n{} [label=\"{i}\"];\n", e.src, e.dst))
            }
            OperatorLabel::OddOne => out.push_str(&format!(
                "  n{} -> n{} [style=dashed, label=\"1̄\"];\n",
                e.src, e.dst
            )),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeBudget;

    #[test]
    fn round_trip_tensor_square() {
        let a = Alphabet::new(3).unwrap();
        let g = CrystalGraph::tensor_power(&a, 2, NodeBudget::default()).unwrap();
        let text = to_json(&g);
        let back = from_json(&text).unwrap();
        assert_eq!(back, g);
        // Serialization itself is byte-stable.
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn round_trip_empty_power() {
        let a = Alphabet::new(3).unwrap();
        let g = CrystalGraph::tensor_power(&a, 0, NodeBudget::default()).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.node_count(), 1);
    }

    #[test]
    fn dot_output_marks_odd_arrows_dashed() {
        let a = Alphabet::new(2).unwrap();
        let g = CrystalGraph::tensor_power(&a, 1, NodeBudget::default()).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("n0 -> n1 [label=\"1\"];"));
        assert!(dot.contains("n0 -> n1 [style=dashed, label=\"1̄\"];"));
        assert!(dot.contains("n0 [label=\"1\"];"));
    }

    #[test]
    fn parser_rejects_malformed_documents() {
        assert!(from_json("not json").is_err());
        // Unsorted nodes.
        let text = r#"{"n":2,"nodes":[{"id":0,"word":[2],"weight":[0,1]},{"id":1,"word":[1],"weight":[1,0]}],"edges":[]}"#;
        assert!(from_json(text).is_err());
        // Wrong weight.
        let text = r#"{"n":2,"nodes":[{"id":0,"word":[1],"weight":[0,1]}],"edges":[]}"#;
        assert!(from_json(text).is_err());
        // Bad label.
        let text = r#"{"n":2,"nodes":[{"id":0,"word":[1],"weight":[1,0]},{"id":1,"word":[2],"weight":[0,1]}],"edges":[{"src":0,"dst":1,"label":"7"}]}"#;
        assert!(from_json(text).is_err());
        // Edge with the wrong weight step.
        let text = r#"{"n":3,"nodes":[{"id":0,"word":[1],"weight":[1,0,0]},{"id":1,"word":[3],"weight":[0,0,1]}],"edges":[{"src":0,"dst":1,"label":"1"}]}"#;
        assert!(from_json(text).is_err());
    }
}
