//! The shifted tableau crystal B(Y_λ): diagrams, readings, and the induced
//! graph.
//!
//! Run with: cargo run -p qcrystal --example tableau_crystal

use qcrystal::tableaux::{
    build_tableau_crystal, enumerate_ssyt, highest_tableau, ReadingStyle, ShiftedDiagram,
};
use qcrystal::{Alphabet, StrictPartition};

fn main() {
    let alphabet = Alphabet::new(3).unwrap();
    let lambda = StrictPartition::new(vec![3, 1]).unwrap();

    let diagram = ShiftedDiagram::new(&lambda);
    println!(
        "Y_{lambda}: rows {:?} with indents {:?}",
        diagram.row_lengths(),
        diagram.row_indents()
    );

    let tableaux = enumerate_ssyt(&lambda, &alphabet);
    println!("{} semistandard fillings with entries 1..=3", tableaux.len());

    let top = highest_tableau(&alphabet, &lambda).unwrap();
    println!(
        "diagonal filling {top} reads as {} (row) and {} (column)",
        top.reading(ReadingStyle::Me),
        top.reading(ReadingStyle::Fe)
    );

    for style in ReadingStyle::ALL {
        let graph = build_tableau_crystal(&alphabet, &lambda, style).unwrap();
        let components = graph.components();
        println!(
            "B(Y_{lambda}) via {style}: {} nodes, {} edges, {} component(s)",
            graph.node_count(),
            graph.edge_count(),
            components.len()
        );
    }

    // A single anti-diagonal puts no constraints on its entries, so B(Y_(4))
    // carries all 81 length-4 words and falls apart.
    let row = StrictPartition::new(vec![4]).unwrap();
    let graph = build_tableau_crystal(&alphabet, &row, ReadingStyle::Me).unwrap();
    println!(
        "B(Y_{row}): {} nodes, {} components (not connected)",
        graph.node_count(),
        graph.components().len()
    );
}
