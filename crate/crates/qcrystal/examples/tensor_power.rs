//! Build the crystal graph of B ⊗ B and export it as DOT and JSON.
//!
//! Run with: cargo run -p qcrystal --example tensor_power

use qcrystal::graph::{CrystalGraph, NodeBudget};
use qcrystal::{io, Alphabet};

fn main() {
    let alphabet = Alphabet::new(3).unwrap();
    let graph = CrystalGraph::tensor_power(&alphabet, 2, NodeBudget::default()).unwrap();

    println!(
        "B^⊗2 for n=3: {} nodes, {} lowering edges",
        graph.node_count(),
        graph.edge_count()
    );
    for e in graph.edges() {
        println!(
            "  {} --{}--> {}",
            graph.nodes()[e.src].word,
            e.label,
            graph.nodes()[e.dst].word
        );
    }

    println!("\nDOT rendering:\n{}", io::to_dot(&graph));

    let json = io::to_json(&graph);
    let parsed = io::from_json(&json).unwrap();
    assert_eq!(parsed, graph);
    println!("JSON round-trip: ok ({} bytes)", json.len());
}
