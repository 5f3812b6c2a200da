//! The branching rule: tensoring a component with the vector crystal adds
//! one box in every way that keeps the highest weight strict.
//!
//! Run with: cargo run -p qcrystal --example branching

use qcrystal::graph::{CrystalGraph, NodeBudget};
use qcrystal::Alphabet;

fn main() {
    let alphabet = Alphabet::new(3).unwrap();

    // Start from B itself and branch twice.
    let b = CrystalGraph::tensor_power(&alphabet, 1, NodeBudget::default()).unwrap();
    let mut layer = b.components();
    for round in 1..=3usize {
        let mut next = Vec::new();
        for component in &layer {
            let lambda = component.label().unwrap();
            let branched = component.branch().unwrap();
            let summands: Vec<String> = branched
                .iter()
                .map(|(mu, piece)| format!("{mu} (size {})", piece.graph.node_count()))
                .collect();
            println!("round {round}: B ⊗ B({lambda}) = {}", summands.join(" ⊕ "));
            next.extend(branched.into_iter().map(|(_, piece)| piece));
        }
        layer = next;
    }

    // Components with the same label are isomorphic: compare canonical codes.
    let quartic = CrystalGraph::tensor_power(&alphabet, 4, NodeBudget::default()).unwrap();
    let components = quartic.components();
    let codes: Vec<_> = components
        .iter()
        .filter(|c| c.label().unwrap().parts() == [3, 1])
        .map(|c| c.canonical_code().unwrap())
        .collect();
    println!(
        "B^⊗4 has {} components with highest weight (3,1); canonical codes equal: {}",
        codes.len(),
        codes.windows(2).all(|w| w[0] == w[1])
    );
}
