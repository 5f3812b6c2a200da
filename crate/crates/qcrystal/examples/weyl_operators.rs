//! Weyl-group reflections on words and the conjugated odd operators.
//!
//! Run with: cargo run -p qcrystal --example weyl_operators

use qcrystal::operators::weight;
use qcrystal::weyl::{e_odd, is_highest_weight, s_action, weyl_action, WeylWord};
use qcrystal::{Alphabet, Word};

fn main() {
    let alphabet = Alphabet::new(3).unwrap();

    // S_i reflects the weight and is an involution.
    let word = Word::new(&alphabet, vec![1, 2, 1, 1]).unwrap();
    let reflected = s_action(&alphabet, &word, 1);
    println!("S_1({word}) = {reflected}");
    println!(
        "weights: {} -> {}",
        weight(&alphabet, &word),
        weight(&alphabet, &reflected)
    );
    assert_eq!(s_action(&alphabet, &reflected, 1), word);

    // The braid relation holds for the composed action.
    let braid_lhs = weyl_action(&alphabet, &word, &WeylWord::new(vec![1, 2, 1]));
    let braid_rhs = weyl_action(&alphabet, &word, &WeylWord::new(vec![2, 1, 2]));
    println!("S_1 S_2 S_1 = S_2 S_1 S_2 on {word}: both give {braid_lhs}");
    assert_eq!(braid_lhs, braid_rhs);

    // ẽ_2̄ is the conjugate of ẽ_1̄ by S_{w_2}.
    let word = Word::new(&alphabet, vec![1, 3]).unwrap();
    let w2 = WeylWord::w_i(2);
    println!(
        "ẽ_2̄({word}) = {:?} (through S_{{w_2}}: {word} -> {})",
        e_odd(&alphabet, &word, 2).map(|w| w.to_string()),
        weyl_action(&alphabet, &word, &w2),
    );

    // A word killed by every ẽ_i and ẽ_ī is a highest weight vector.
    for letters in [vec![1, 1], vec![1, 2], vec![1, 2, 1]] {
        let w = Word::new(&alphabet, letters).unwrap();
        println!("highest weight {w}: {}", is_highest_weight(&alphabet, &w));
    }
}
