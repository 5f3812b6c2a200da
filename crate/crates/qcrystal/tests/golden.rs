//! Golden-file tests: the crystals the code builds must coincide, arrow by
//! arrow, with the checked-in transcriptions of the two-factor crystal, the
//! rank-2 vector crystal, and the shifted (3,1) tableau crystal.
//!
//! The fixtures are decoded with a local schema and compared at the level of
//! word-labelled edges, independently of node ids and of the library's own
//! graph parser.

mod common;

use common::{graph_word_edges, graph_words, load_fixture, Fixture};

use qcrystal::graph::{CrystalGraph, NodeBudget};
use qcrystal::tableaux::{build_tableau_crystal, ReadingStyle};
use qcrystal::{Alphabet, StrictPartition};

fn assert_graph_matches(graph: &CrystalGraph, fixture: &Fixture, what: &str) {
    assert_eq!(graph_words(graph), fixture.words(), "{what}: node set");
    let built = graph_word_edges(graph);
    let transcribed = fixture.word_edges();
    if let Some(extra) = built.difference(&transcribed).next() {
        panic!("{what}: built edge {extra:?} is not in the transcription");
    }
    if let Some(missing) = transcribed.difference(&built).next() {
        panic!("{what}: transcribed edge {missing:?} was not built");
    }
}

#[test]
fn vector_crystal_matches_transcription() {
    let fixture = load_fixture("vector_crystal_n2.json");
    let alphabet = Alphabet::new(2).unwrap();
    let graph = CrystalGraph::tensor_power(&alphabet, 1, NodeBudget::default()).unwrap();
    assert_graph_matches(&graph, &fixture, "vector crystal n=2");
}

#[test]
fn tensor_square_matches_transcription() {
    let fixture = load_fixture("tensor_square_n3.json");
    let alphabet = Alphabet::new(3).unwrap();
    let graph = CrystalGraph::tensor_power(&alphabet, 2, NodeBudget::default()).unwrap();
    assert_graph_matches(&graph, &fixture, "B ⊗ B for n=3");
    assert_eq!(graph.edge_count(), 12);
}

#[test]
fn shifted_31_crystal_matches_transcription() {
    let fixture = load_fixture("shifted_31_n3.json");
    let alphabet = Alphabet::new(3).unwrap();
    let lambda = StrictPartition::new(vec![3, 1]).unwrap();
    for style in ReadingStyle::ALL {
        let graph = build_tableau_crystal(&alphabet, &lambda, style).unwrap();
        // Both admissible readings happen to list the (3,1) cells in the same
        // order, so the node words agree with the transcription either way.
        assert_graph_matches(&graph, &fixture, "B(Y_(3,1)) for n=3");
        assert_eq!(graph.node_count(), 24);
        assert_eq!(graph.edge_count(), 38);
    }
}
