//! Shared helpers for the integration tests: fixture decoding and word-level
//! edge extraction.
#![allow(dead_code)] // each test target uses a different subset

use std::collections::BTreeSet;

use serde::Deserialize;

use qcrystal::{Alphabet, CrystalGraph, OperatorLabel, Word};

#[derive(Deserialize)]
pub struct Fixture {
    #[allow(dead_code)]
    pub comment: String,
    pub n: u8,
    pub nodes: Vec<Vec<u8>>,
    pub edges: Vec<(Vec<u8>, String, Vec<u8>)>,
}

pub type WordEdge = (Word, String, Word);

pub fn load_fixture(name: &str) -> Fixture {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("decode {path}: {e}"))
}

impl Fixture {
    pub fn words(&self) -> BTreeSet<Word> {
        let alphabet = Alphabet::new(self.n).unwrap();
        self.nodes
            .iter()
            .map(|letters| Word::new(&alphabet, letters.clone()).unwrap())
            .collect()
    }

    pub fn word_edges(&self) -> BTreeSet<WordEdge> {
        let alphabet = Alphabet::new(self.n).unwrap();
        self.edges
            .iter()
            .map(|(src, label, dst)| {
                (
                    Word::new(&alphabet, src.clone()).unwrap(),
                    label.clone(),
                    Word::new(&alphabet, dst.clone()).unwrap(),
                )
            })
            .collect()
    }
}

pub fn label_token(label: OperatorLabel) -> String {
    match label {
        OperatorLabel::Even(i) => i.to_string(),
        OperatorLabel::OddOne => "1bar".to_string(),
    }
}

pub fn graph_word_edges(graph: &CrystalGraph) -> BTreeSet<WordEdge> {
    graph
        .edges()
        .iter()
        .map(|e| {
            (
                graph.nodes()[e.src].word.clone(),
                label_token(e.label),
                graph.nodes()[e.dst].word.clone(),
            )
        })
        .collect()
}

pub fn graph_words(graph: &CrystalGraph) -> BTreeSet<Word> {
    graph.nodes().iter().map(|n| n.word.clone()).collect()
}
