//! Kashiwara operators on tensor words.
//!
//! Even operators `ẽ_i`, `f̃_i` (i = 1..n-1) are computed by the signature
//! rule: write `+` for the letter `i`, `-` for `i+1`, ignore everything else,
//! cancel `+-` pairs with the `+` left of the `-` until none remain. Then
//! `f̃_i` turns the leftmost surviving `+` into `i+1` and `ẽ_i` turns the
//! rightmost surviving `-` into `i`. This realizes the two-factor tensor
//! rule iterated over all factors; the agreement is checked exhaustively by
//! the pairwise evaluator in [`crate::verify`].
//!
//! The odd operators `ẽ_1̄`, `f̃_1̄` act on the last factor whose letter lies
//! in `{1, 2}`: `f̃_1̄` flips a `1` there to `2`, `ẽ_1̄` flips a `2` to `1`,
//! and both vanish otherwise. Absent results are `None`; the empty word is a
//! legal input and every operator vanishes on it.

use crate::word::{Alphabet, Direction, OperatorLabel, Weight, Word};

/// Content vector of a word: coordinate `j` counts the letter `j+1`.
pub fn weight(alphabet: &Alphabet, word: &Word) -> Weight {
    let mut coords = vec![0i64; alphabet.n() as usize];
    for &l in word.letters() {
        debug_assert!(alphabet.contains_letter(l));
        coords[(l - 1) as usize] += 1;
    }
    Weight::new(coords)
}

/// Surviving signs of the `i`-signature after full cancellation. Both lists
/// hold 0-based letter positions in increasing order, and every surviving
/// minus precedes every surviving plus.
struct Signature {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

fn signature(word: &Word, i: u8) -> Signature {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (pos, &l) in word.letters().iter().enumerate() {
        if l == i {
            plus.push(pos);
        } else if l == i + 1 {
            match plus.pop() {
                Some(_) => {}
                None => minus.push(pos),
            }
        }
    }
    Signature { plus, minus }
}

fn assert_even_index(alphabet: &Alphabet, i: u8) {
    assert!(
        (1..alphabet.n()).contains(&i),
        "even operator index {i} out of range 1..={}",
        alphabet.n() - 1
    );
}

/// `ε_i(b)`: number of times `ẽ_i` applies, as counted by the signature rule.
pub fn eps(alphabet: &Alphabet, word: &Word, i: u8) -> u32 {
    assert_even_index(alphabet, i);
    signature(word, i).minus.len() as u32
}

/// `φ_i(b)`: number of times `f̃_i` applies.
pub fn phi(alphabet: &Alphabet, word: &Word, i: u8) -> u32 {
    assert_even_index(alphabet, i);
    signature(word, i).plus.len() as u32
}

/// `f̃_i`: flip the leftmost unmatched `i` to `i+1`.
pub fn f_even(alphabet: &Alphabet, word: &Word, i: u8) -> Option<Word> {
    assert_even_index(alphabet, i);
    let pos = *signature(word, i).plus.first()?;
    Some(word.with_letter(pos, i + 1))
}

/// `ẽ_i`: flip the rightmost unmatched `i+1` to `i`.
pub fn e_even(alphabet: &Alphabet, word: &Word, i: u8) -> Option<Word> {
    assert_even_index(alphabet, i);
    let pos = *signature(word, i).minus.last()?;
    Some(word.with_letter(pos, i))
}

/// Position of the last letter in `{1, 2}`, the factor the odd operators see.
fn last_odd_position(word: &Word) -> Option<usize> {
    word.letters().iter().rposition(|&l| l == 1 || l == 2)
}

/// `f̃_1̄`: at the last `{1,2}`-position, flip a `1` to `2`.
pub fn f_odd1(word: &Word) -> Option<Word> {
    let pos = last_odd_position(word)?;
    if word.letters()[pos] == 1 {
        Some(word.with_letter(pos, 2))
    } else {
        None
    }
}

/// `ẽ_1̄`: at the last `{1,2}`-position, flip a `2` to `1`.
pub fn e_odd1(word: &Word) -> Option<Word> {
    let pos = last_odd_position(word)?;
    if word.letters()[pos] == 2 {
        Some(word.with_letter(pos, 1))
    } else {
        None
    }
}

/// Uniform dispatch over the stored operators.
pub fn apply(
    alphabet: &Alphabet,
    word: &Word,
    label: OperatorLabel,
    direction: Direction,
) -> Option<Word> {
    match (label, direction) {
        (OperatorLabel::Even(i), Direction::Lower) => f_even(alphabet, word, i),
        (OperatorLabel::Even(i), Direction::Raise) => e_even(alphabet, word, i),
        (OperatorLabel::OddOne, Direction::Lower) => f_odd1(word),
        (OperatorLabel::OddOne, Direction::Raise) => e_odd1(word),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::all_words;

    fn abc(n: u8) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn w(letters: &[u8]) -> Word {
        Word::from_letters_unchecked(letters.to_vec())
    }

    #[test]
    fn weight_counts_letters() {
        let a = abc(3);
        assert_eq!(weight(&a, &w(&[1, 2, 2])).coords(), &[1, 2, 0]);
        assert_eq!(weight(&a, &Word::empty()).coords(), &[0, 0, 0]);
        assert_eq!(weight(&a, &w(&[1, 2, 1, 1])).coords(), &[3, 1, 0]);
    }

    #[test]
    fn eps_phi_examples() {
        let a = abc(3);
        assert_eq!((eps(&a, &w(&[1, 2]), 1), phi(&a, &w(&[1, 2]), 1)), (0, 0));
        assert_eq!((eps(&a, &w(&[2, 1]), 1), phi(&a, &w(&[2, 1]), 1)), (1, 1));
        assert_eq!((eps(&a, &w(&[1, 1]), 1), phi(&a, &w(&[1, 1]), 1)), (0, 2));
    }

    /// Oracle: ε_i as the exact number of times ẽ_i applies, φ_i likewise.
    #[test]
    fn eps_phi_agree_with_iterated_operators() {
        for n in 2..=4u8 {
            let a = abc(n);
            for len in 0..=5usize {
                for word in all_words(&a, len) {
                    for i in 1..n {
                        let mut k = 0u32;
                        let mut cur = word.clone();
                        while let Some(next) = e_even(&a, &cur, i) {
                            k += 1;
                            cur = next;
                        }
                        assert_eq!(eps(&a, &word, i), k, "eps at {word}, i={i}");

                        let mut k = 0u32;
                        let mut cur = word.clone();
                        while let Some(next) = f_even(&a, &cur, i) {
                            k += 1;
                            cur = next;
                        }
                        assert_eq!(phi(&a, &word, i), k, "phi at {word}, i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn even_operator_examples_from_the_two_factor_crystal() {
        let a = abc(3);
        assert_eq!(f_even(&a, &w(&[1, 1]), 1), Some(w(&[2, 1])));
        assert_eq!(f_even(&a, &w(&[2, 1]), 2), Some(w(&[3, 1])));
        assert_eq!(f_even(&a, &w(&[1, 2]), 1), None);
        assert_eq!(e_even(&a, &w(&[2, 1]), 1), Some(w(&[1, 1])));
    }

    #[test]
    fn odd_operator_examples() {
        assert_eq!(f_odd1(&w(&[1, 1])), Some(w(&[1, 2])));
        assert_eq!(f_odd1(&w(&[1, 3])), Some(w(&[2, 3])));
        assert_eq!(f_odd1(&w(&[2, 3])), None);
        assert_eq!(f_odd1(&w(&[3, 3])), None);
        assert_eq!(e_odd1(&w(&[1, 2])), Some(w(&[1, 1])));
        assert_eq!(e_odd1(&Word::empty()), None);
        assert_eq!(f_odd1(&Word::empty()), None);
    }

    #[test]
    fn apply_dispatches() {
        let a = abc(3);
        assert_eq!(
            apply(&a, &w(&[1, 1]), OperatorLabel::Even(1), Direction::Lower),
            Some(w(&[2, 1]))
        );
        assert_eq!(
            apply(&a, &w(&[1, 1]), OperatorLabel::OddOne, Direction::Lower),
            Some(w(&[1, 2]))
        );
        for label in a.labels() {
            assert_eq!(apply(&a, &Word::empty(), label, Direction::Lower), None);
            assert_eq!(apply(&a, &Word::empty(), label, Direction::Raise), None);
        }
    }

    #[test]
    fn odd_operators_are_nilpotent_small_exhaustive() {
        let a = abc(4);
        for len in 0..=4usize {
            for word in all_words(&a, len) {
                if let Some(v) = e_odd1(&word) {
                    assert_eq!(e_odd1(&v), None, "ẽ_1̄² at {word}");
                }
                if let Some(v) = f_odd1(&word) {
                    assert_eq!(f_odd1(&v), None, "f̃_1̄² at {word}");
                }
            }
        }
    }

    #[test]
    fn partial_inverse_and_weight_shift_exhaustive() {
        for n in 2..=4u8 {
            let a = abc(n);
            for len in 0..=6usize {
                for word in all_words(&a, len) {
                    for label in a.labels() {
                        if let Some(lowered) = apply(&a, &word, label, Direction::Lower) {
                            assert_eq!(
                                apply(&a, &lowered, label, Direction::Raise).as_ref(),
                                Some(&word)
                            );
                            assert_eq!(
                                weight(&a, &lowered),
                                weight(&a, &word).shifted_by_alpha(label, Direction::Lower)
                            );
                        }
                        if let Some(raised) = apply(&a, &word, label, Direction::Raise) {
                            assert_eq!(
                                apply(&a, &raised, label, Direction::Lower).as_ref(),
                                Some(&word)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_minus_eps_is_h_pairing() {
        let a = abc(4);
        for len in 0..=5usize {
            for word in all_words(&a, len) {
                let wt = weight(&a, &word);
                for i in 1..4 {
                    assert_eq!(
                        phi(&a, &word, i) as i64 - eps(&a, &word, i) as i64,
                        wt.pairing_h(i)
                    );
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn even_index_zero_panics() {
        let a = abc(3);
        eps(&a, &w(&[1]), 0);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn even_index_n_panics() {
        let a = abc(3);
        f_even(&a, &w(&[1]), 3);
    }
}
