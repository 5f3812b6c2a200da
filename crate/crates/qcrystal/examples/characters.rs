//! Weight generating functions: node censuses, the product law, and
//! symmetry under coordinate permutations.
//!
//! Run with: cargo run -p qcrystal --example characters

use qcrystal::character::{character, WeightPolynomial};
use qcrystal::graph::{CrystalGraph, NodeBudget};
use qcrystal::Alphabet;

fn main() {
    let alphabet = Alphabet::new(3).unwrap();

    let vector = CrystalGraph::tensor_power(&alphabet, 1, NodeBudget::default()).unwrap();
    let ch_vector = character(&vector);
    println!("ch B      = {ch_vector}");

    let square = CrystalGraph::tensor_power(&alphabet, 2, NodeBudget::default()).unwrap();
    let ch_square = character(&square);
    println!("ch B^⊗2   = {ch_square}");
    assert_eq!(ch_vector.product(&ch_vector).unwrap(), ch_square);
    println!("product law ch(B)² = ch(B^⊗2): ok");

    assert_eq!(
        ch_square.product(&WeightPolynomial::unit(3)).unwrap(),
        ch_square
    );

    // Component characters are Weyl-symmetric.
    let cube = CrystalGraph::tensor_power(&alphabet, 3, NodeBudget::default()).unwrap();
    for component in cube.components() {
        let ch = character(&component.graph);
        println!(
            "component {}: {} nodes, symmetric: {}",
            component.label().unwrap(),
            ch.total(),
            ch.is_symmetric()
        );
    }
}
