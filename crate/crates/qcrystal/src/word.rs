//! Letters, tensor words, weights, and operator labels.
//!
//! A word `b_1 ⊗ ... ⊗ b_N` over the alphabet `{1, ..., n}` is the basic
//! carrier of the whole crate: every crystal we build has words (or tableau
//! readings, which are words) as its nodes. Weights live in `Z^n`; the
//! coordinate pairings `⟨k_i, μ⟩ = μ_i` and `⟨h_i, μ⟩ = μ_i - μ_{i+1}`
//! are what the operator and highest-weight machinery consumes.

use std::fmt;

use crate::error::Error;

/// A letter of the vector-representation crystal, in `1..=n`.
pub type Letter = u8;

/// The rank parameter `n >= 2`. Letters range over `1..=n`, even operator
/// indices over `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    n: u8,
}

impl Alphabet {
    pub fn new(n: u8) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RankTooSmall { n });
        }
        Ok(Alphabet { n })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Indices of the even operators: `1..=n-1`.
    pub fn even_indices(&self) -> impl Iterator<Item = u8> {
        1..self.n
    }

    /// All stored operator labels, in the fixed order `1, ..., n-1, 1̄`.
    pub fn labels(&self) -> impl Iterator<Item = OperatorLabel> {
        (1..self.n)
            .map(OperatorLabel::Even)
            .chain(std::iter::once(OperatorLabel::OddOne))
    }

    /// Number of stored labels, `n`.
    pub fn label_count(&self) -> usize {
        self.n as usize
    }

    /// Dense position of a label in [`Alphabet::labels`] order.
    pub fn label_index(&self, label: OperatorLabel) -> usize {
        match label {
            OperatorLabel::Even(i) => {
                debug_assert!(1 <= i && i < self.n);
                (i - 1) as usize
            }
            OperatorLabel::OddOne => (self.n - 1) as usize,
        }
    }

    pub fn contains_letter(&self, letter: Letter) -> bool {
        (1..=self.n).contains(&letter)
    }
}

/// Label of a stored crystal arrow: an even index `i` in `1..=n-1`, or the
/// odd label `1̄`. The derived odd labels `ī` for `i >= 2` are never stored;
/// they are recomputed by conjugation in [`crate::weyl`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorLabel {
    Even(u8),
    OddOne,
}

impl fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorLabel::Even(i) => write!(f, "{i}"),
            OperatorLabel::OddOne => write!(f, "1̄"),
        }
    }
}

/// Raising (`ẽ`) or lowering (`f̃`) direction of an operator application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Raise,
    Lower,
}

/// An element of `B^{⊗N}`: a sequence of letters, possibly empty.
///
/// Words are immutable values; operators return fresh words. Lexicographic
/// `Ord` on the letter sequence is the node order of every graph we build.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// Checked constructor: every letter must lie in `1..=n`.
    pub fn new(alphabet: &Alphabet, letters: Vec<Letter>) -> Result<Self, Error> {
        if let Some(&bad) = letters.iter().find(|&&l| !alphabet.contains_letter(l)) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                n: alphabet.n(),
            });
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn single(letter: Letter) -> Self {
        Word { letters: vec![letter] }
    }

    /// Internal constructor for letters already known to be in range.
    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// New word with the letter at `pos` replaced.
    pub(crate) fn with_letter(&self, pos: usize, letter: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters[pos] = letter;
        Word { letters }
    }

    /// `first ⊗ self`.
    pub fn prepended(&self, first: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(first);
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }

    /// Concatenation `self ⊗ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "∅");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, "⊗")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// All words of the given length over `alphabet`, in lexicographic order.
pub fn all_words(alphabet: &Alphabet, len: usize) -> impl Iterator<Item = Word> {
    let n = alphabet.n();
    let mut current: Option<Vec<Letter>> = Some(vec![1; len]);
    std::iter::from_fn(move || {
        let letters = current.take()?;
        let word = Word::from_letters_unchecked(letters.clone());
        // Advance the odometer; `None` stops the iteration after the last word.
        let mut next = letters;
        let mut pos = len;
        loop {
            if pos == 0 {
                current = None;
                break;
            }
            pos -= 1;
            if next[pos] < n {
                next[pos] += 1;
                for slot in next.iter_mut().skip(pos + 1) {
                    *slot = 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(word)
    })
}

/// A weight `μ = Σ μ_i ε_i` as a dense integer vector of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: u8) -> Self {
        Weight { coords: vec![0; n as usize] }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `⟨k_i, μ⟩ = μ_i`, with `i` in `1..=n`.
    pub fn pairing_k(&self, i: u8) -> i64 {
        self.coords[(i - 1) as usize]
    }

    /// `⟨h_i, μ⟩ = μ_i - μ_{i+1}`, with `i` in `1..=n-1`.
    pub fn pairing_h(&self, i: u8) -> i64 {
        self.coords[(i - 1) as usize] - self.coords[i as usize]
    }

    /// `μ ± α_label`, where `α_i = ε_i - ε_{i+1}` and the odd label moves
    /// weights by `α_1`.
    pub fn shifted_by_alpha(&self, label: OperatorLabel, direction: Direction) -> Weight {
        let i = match label {
            OperatorLabel::Even(i) => i,
            OperatorLabel::OddOne => 1,
        } as usize;
        let sign = match direction {
            Direction::Raise => 1,
            Direction::Lower => -1,
        };
        let mut coords = self.coords.clone();
        coords[i - 1] += sign;
        coords[i] -= sign;
        Weight { coords }
    }

    /// Apply the simple reflection `s_i`, swapping coordinates `i` and `i+1`.
    pub fn reflected(&self, i: u8) -> Weight {
        let mut coords = self.coords.clone();
        coords.swap((i - 1) as usize, i as usize);
        Weight { coords }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `μ + ε_j`, with `j` in `1..=n`.
    pub fn plus_epsilon(&self, j: u8) -> Weight {
        let mut coords = self.coords.clone();
        coords[(j - 1) as usize] += 1;
        Weight { coords }
    }

    /// Whether `μ` lies in `Λ⁺`: weakly decreasing, nonnegative, and equal
    /// consecutive entries only when both are zero. Such weights are exactly
    /// the strict partitions padded with trailing zeros.
    pub fn is_strict_dominant(&self) -> bool {
        if self.coords.iter().any(|&c| c < 0) {
            return false;
        }
        self.coords.windows(2).all(|w| w[0] > w[1] || (w[0] == 0 && w[1] == 0))
    }

    /// Whether `μ` is a partition: weakly decreasing and nonnegative.
    pub fn is_partition(&self) -> bool {
        if self.coords.iter().any(|&c| c < 0) {
            return false;
        }
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
