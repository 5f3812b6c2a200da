//! Highest weight vectors of B^⊗N: brute force versus the one-letter
//! recursion.
//!
//! Run with: cargo run -p qcrystal --example highest_weight

use std::collections::BTreeSet;

use qcrystal::operators::weight;
use qcrystal::weyl::{hw_recursion_candidates, is_highest_weight};
use qcrystal::{all_words, Alphabet, Word};

fn main() {
    let alphabet = Alphabet::new(3).unwrap();

    let mut level: BTreeSet<Word> = [Word::single(1)].into_iter().collect();
    for power in 1..=5usize {
        let brute: BTreeSet<Word> = all_words(&alphabet, power)
            .filter(|w| is_highest_weight(&alphabet, w))
            .collect();
        assert_eq!(level, brute, "recursion matches brute force at N={power}");

        println!("N={power}: {} highest weight vectors", brute.len());
        for w in &brute {
            let wt = weight(&alphabet, w);
            println!("  {w}  weight={wt}");
            assert!(wt.is_strict_dominant(), "highest weights are strict");
        }

        level = level
            .iter()
            .flat_map(|b| hw_recursion_candidates(&alphabet, b).unwrap())
            .collect();
    }
}
