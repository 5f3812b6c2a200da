//! Weyl-group operators `S_i`, conjugated odd operators `ẽ_ī`/`f̃_ī`, and
//! highest-weight predicates.
//!
//! `S_i` shifts a word to the opposite end of its `i`-string:
//! `S_i b = f̃_i^{⟨h_i, wt b⟩} b` when the pairing is nonnegative and
//! `ẽ_i^{-⟨h_i, wt b⟩} b` otherwise. Products `S_w` are evaluated factor by
//! factor, rightmost reflection first, so the weight transforms by the group
//! element read left to right. The odd operators for `i >= 2` are the
//! conjugates `ẽ_ī = S_{w_i}^{-1} ∘ ẽ_1̄ ∘ S_{w_i}` with
//! `w_i = s_2 ⋯ s_i s_1 ⋯ s_{i-1}`, and a highest weight vector is a word
//! killed by every `ẽ_i` and every `ẽ_ī`.

use crate::error::Error;
use crate::operators::{e_even, e_odd1, f_even, f_odd1, weight};
use crate::word::{Alphabet, Word};

/// A word in the simple reflections `s_1, ..., s_{n-1}`, read left to right
/// as a group element. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    factors: Vec<u8>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord { factors: Vec::new() }
    }

    pub fn new(factors: Vec<u8>) -> Self {
        WeylWord { factors }
    }

    pub fn factors(&self) -> &[u8] {
        &self.factors
    }

    /// Inverse word: factors reversed (each `s_i` is an involution).
    pub fn inverse(&self) -> WeylWord {
        let mut factors = self.factors.clone();
        factors.reverse();
        WeylWord { factors }
    }

    /// `w_i = s_2 ⋯ s_i s_1 ⋯ s_{i-1}`, the shortest element with
    /// `w_i(α_i) = α_1`. For `i = 1` this is the identity.
    pub fn w_i(i: u8) -> WeylWord {
        let mut factors: Vec<u8> = (2..=i).collect();
        factors.extend(1..i);
        WeylWord { factors }
    }

    /// `z_i = s_3 s_4 ⋯ s_{i+1}` (identity for `i = 1`).
    pub fn z_i(i: u8) -> WeylWord {
        WeylWord { factors: (3..=i + 1).collect() }
    }

    /// `u_i = z_i w_i`.
    pub fn u_i(i: u8) -> WeylWord {
        let mut factors = Self::z_i(i).factors;
        factors.extend(Self::w_i(i).factors);
        WeylWord { factors }
    }
}

/// The reflection operator `S_i`, a weight-equivariant involution on words.
pub fn s_action(alphabet: &Alphabet, word: &Word, i: u8) -> Word {
    assert!(
        (1..alphabet.n()).contains(&i),
        "reflection index {i} out of range 1..={}",
        alphabet.n() - 1
    );
    let d = weight(alphabet, word).pairing_h(i);
    let mut cur = word.clone();
    if d >= 0 {
        for _ in 0..d {
            cur = f_even(alphabet, &cur, i).expect("i-string long enough for S_i");
        }
    } else {
        for _ in 0..-d {
            cur = e_even(alphabet, &cur, i).expect("i-string long enough for S_i");
        }
    }
    cur
}

/// `S_w` for a Weyl word, applying the rightmost reflection first.
pub fn weyl_action(alphabet: &Alphabet, word: &Word, ww: &WeylWord) -> Word {
    let mut cur = word.clone();
    for &i in ww.factors().iter().rev() {
        cur = s_action(alphabet, &cur, i);
    }
    cur
}

/// `f̃_ī = S_{w_i}^{-1} ∘ f̃_1̄ ∘ S_{w_i}`; coincides with `f̃_1̄` for `i = 1`.
pub fn f_odd(alphabet: &Alphabet, word: &Word, i: u8) -> Option<Word> {
    conjugated_odd(alphabet, word, i, f_odd1)
}

/// `ẽ_ī = S_{w_i}^{-1} ∘ ẽ_1̄ ∘ S_{w_i}`; coincides with `ẽ_1̄` for `i = 1`.
pub fn e_odd(alphabet: &Alphabet, word: &Word, i: u8) -> Option<Word> {
    conjugated_odd(alphabet, word, i, e_odd1)
}

fn conjugated_odd(
    alphabet: &Alphabet,
    word: &Word,
    i: u8,
    base: fn(&Word) -> Option<Word>,
) -> Option<Word> {
    assert!(
        (1..alphabet.n()).contains(&i),
        "odd operator index {i} out of range 1..={}",
        alphabet.n() - 1
    );
    if i == 1 {
        return base(word);
    }
    let wi = WeylWord::w_i(i);
    let moved = weyl_action(alphabet, word, &wi);
    let acted = base(&moved)?;
    Some(weyl_action(alphabet, &acted, &wi.inverse()))
}

/// `ẽ_i b = 0` for all `1 <= i < a`.
pub fn is_gl_highest(alphabet: &Alphabet, word: &Word, a: u8) -> bool {
    assert_subrank(alphabet, a);
    (1..a).all(|i| e_even(alphabet, word, i).is_none())
}

/// `ẽ_i b = ẽ_ī b = 0` for all `1 <= i < a`.
pub fn is_q_highest(alphabet: &Alphabet, word: &Word, a: u8) -> bool {
    assert_subrank(alphabet, a);
    (1..a).all(|i| e_even(alphabet, word, i).is_none() && e_odd(alphabet, word, i).is_none())
}

/// Highest weight vector of the full `q(n)`-crystal: `is_q_highest` at `a = n`.
pub fn is_highest_weight(alphabet: &Alphabet, word: &Word) -> bool {
    is_q_highest(alphabet, word, alphabet.n())
}

fn assert_subrank(alphabet: &Alphabet, a: u8) {
    assert!(
        (2..=alphabet.n()).contains(&a),
        "subrank {a} out of range 2..={}",
        alphabet.n()
    );
}

/// Successors of a highest weight vector `b` one tensor level up: the words
/// `1 ⊗ f̃_1 ⋯ f̃_{j-1} b` for every `j` making `wt(b) + ε_j` a strict
/// partition. These are exactly the highest weight vectors of `B ⊗ C(b)`,
/// returned in increasing `j` order.
pub fn hw_recursion_candidates(alphabet: &Alphabet, b: &Word) -> Result<Vec<Word>, Error> {
    if !is_highest_weight(alphabet, b) {
        return Err(Error::NotHighestWeight(b.clone()));
    }
    let wt = weight(alphabet, b);
    let mut out = Vec::new();
    for j in 1..=alphabet.n() {
        if !wt.plus_epsilon(j).is_strict_dominant() {
            continue;
        }
        let mut cur = b.clone();
        for i in (1..j).rev() {
            cur = f_even(alphabet, &cur, i)
                .expect("lowering chain is defined when the target weight is strict");
        }
        out.push(cur.prepended(1));
    }
    Ok(out)
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
    fn s_action_examples() {
        let a = abc(3);
        assert_eq!(s_action(&a, &w(&[1, 2, 1, 1]), 1), w(&[1, 2, 2, 2]));
        assert_eq!(s_action(&a, &w(&[1, 2, 2, 2]), 2), w(&[1, 3, 3, 3]));
        assert_eq!(s_action(&a, &w(&[1, 2]), 1), w(&[1, 2]));
    }

    #[test]
    fn weyl_action_examples() {
        let a = abc(3);
        assert_eq!(
            weyl_action(&a, &w(&[1, 3]), &WeylWord::new(vec![2, 1])),
            w(&[2, 3])
        );
        let word = w(&[2, 1, 3]);
        assert_eq!(weyl_action(&a, &word, &WeylWord::identity()), word);
    }

    #[test]
    fn s_action_is_involutive_and_equivariant() {
        for n in 2..=4u8 {
            let a = abc(n);
            for len in 0..=4usize {
                for word in all_words(&a, len) {
                    for i in 1..n {
                        let moved = s_action(&a, &word, i);
                        assert_eq!(weight(&a, &moved), weight(&a, &word).reflected(i));
                        assert_eq!(s_action(&a, &moved, i), word);
                    }
                }
            }
        }
    }

    #[test]
    fn braid_relations_small_exhaustive() {
        let a = abc(3);
        for len in 0..=4usize {
            for word in all_words(&a, len) {
                let lhs = weyl_action(&a, &word, &WeylWord::new(vec![1, 2, 1]));
                let rhs = weyl_action(&a, &word, &WeylWord::new(vec![2, 1, 2]));
                assert_eq!(lhs, rhs, "braid at {word}");
            }
        }
    }

    #[test]
    fn odd_conjugate_examples() {
        let a = abc(3);
        assert_eq!(e_odd(&a, &w(&[1, 2]), 1), Some(w(&[1, 1])));

        // S_{w_2} moves (1,3) to (2,3), ẽ_1̄ yields (1,3), and the inverse
        // chain lands on (1,2); the weight gains α_2.
        let word = w(&[1, 3]);
        let wi = WeylWord::w_i(2);
        assert_eq!(weyl_action(&a, &word, &wi), w(&[2, 3]));
        assert_eq!(e_odd(&a, &word, 2), Some(w(&[1, 2])));

        assert_eq!(e_odd(&a, &w(&[1, 2, 1, 1]), 2), None);
    }

    #[test]
    fn highest_weight_examples() {
        let a = abc(3);
        assert!(is_q_highest(&a, &w(&[1, 1]), 3));
        assert!(!is_q_highest(&a, &w(&[1, 2]), 3));
        assert!(is_q_highest(&a, &w(&[1, 2, 1, 1]), 3));
        assert!(is_gl_highest(&a, &w(&[1, 2, 1]), 3));
        assert!(is_q_highest(&a, &w(&[1, 2, 1]), 3));
        assert!(is_highest_weight(&a, &Word::empty()));
    }

    #[test]
    fn recursion_candidates_examples() {
        let a = abc(3);
        let set = |b: &Word| {
            hw_recursion_candidates(&a, b)
                .unwrap()
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(
            set(&w(&[1, 1])),
            [w(&[1, 1, 1]), w(&[1, 2, 1])].into_iter().collect()
        );
        assert_eq!(
            set(&w(&[1, 1, 1])),
            [w(&[1, 1, 1, 1]), w(&[1, 2, 1, 1])].into_iter().collect()
        );
        assert_eq!(set(&w(&[1, 2, 1])), [w(&[1, 1, 2, 1])].into_iter().collect());

        assert!(hw_recursion_candidates(&a, &w(&[2, 1])).is_err());
    }

    #[test]
    fn empty_word_recursion_base() {
        let a = abc(3);
        assert_eq!(
            hw_recursion_candidates(&a, &Word::empty()).unwrap(),
            vec![w(&[1])]
        );
    }
}
