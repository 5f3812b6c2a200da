//! The raising and lowering operators on tensor words.
//!
//! Run with: cargo run -p qcrystal --example kashiwara_operators

use qcrystal::operators::{apply, eps, phi, weight};
use qcrystal::{Alphabet, Direction, OperatorLabel, Word};

fn main() {
    let alphabet = Alphabet::new(3).unwrap();
    let word = Word::new(&alphabet, vec![1, 2, 1, 1]).unwrap();

    println!("word      {word}");
    println!("weight    {}", weight(&alphabet, &word));
    for i in alphabet.even_indices() {
        println!(
            "i={i}       eps={} phi={}",
            eps(&alphabet, &word, i),
            phi(&alphabet, &word, i)
        );
    }

    // Walk the 1-string through the word.
    let mut cur = word.clone();
    print!("1-string  {cur}");
    while let Some(next) = apply(&alphabet, &cur, OperatorLabel::Even(1), Direction::Lower) {
        print!(" -> {next}");
        cur = next;
    }
    println!();

    // The odd operators act on the last letter in {1, 2} and square to zero.
    for w in [vec![1, 1], vec![1, 3], vec![2, 3], vec![3, 3]] {
        let w = Word::new(&alphabet, w).unwrap();
        match apply(&alphabet, &w, OperatorLabel::OddOne, Direction::Lower) {
            Some(image) => {
                println!("f̃_1̄({w}) = {image}");
                assert_eq!(
                    apply(&alphabet, &image, OperatorLabel::OddOne, Direction::Lower),
                    None,
                    "f̃_1̄ is nilpotent"
                );
            }
            None => println!("f̃_1̄({w}) = 0"),
        }
    }
}
