//! Shifted skew diagrams `Y_λ`, their semistandard tableaux, admissible
//! readings, and the induced crystal structure.
//!
//! For a strict partition `λ = (λ_1 > ... > λ_r > 0)`, the diagram `Y_λ`
//! carries `λ_d` boxes on its d-th anti-diagonal: its cells are
//! `(t, λ_1 - t + d)` for `1 <= d <= r` and `d <= t <= d + λ_d - 1`.
//! Fillings are semistandard (rows weakly increase left to right, columns
//! strictly increase top to bottom). Two admissible reading orders embed a
//! tableau into a tensor word: `Me` reads rows top to bottom, each right to
//! left, while `Fe` reads columns right to left, each top to bottom. Word
//! operators pull back to tableau operators through either one.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::graph::CrystalGraph;
use crate::operators::{apply, weight};
use crate::partition::StrictPartition;
use crate::word::{Alphabet, Direction, Letter, OperatorLabel, Weight, Word};

/// A cell as `(row, column)`, 1-indexed.
pub type Cell = (u32, u32);

/// Admissible reading order: each box is read before the box immediately to
/// its left and before the box immediately below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReadingStyle {
    /// Row reading: rows top to bottom, each row right to left.
    Me,
    /// Column reading: columns right to left, each column top to bottom.
    Fe,
}

impl ReadingStyle {
    pub const ALL: [ReadingStyle; 2] = [ReadingStyle::Me, ReadingStyle::Fe];
}

impl fmt::Display for ReadingStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadingStyle::Me => write!(f, "me"),
            ReadingStyle::Fe => write!(f, "fe"),
        }
    }
}

/// The shifted skew diagram `Y_λ`, with cells stored in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedDiagram {
    lambda: StrictPartition,
    cells: Vec<Cell>,
}

impl ShiftedDiagram {
    pub fn new(lambda: &StrictPartition) -> Self {
        let lambda1 = lambda.parts().first().copied().unwrap_or(0);
        let mut cells = Vec::with_capacity(lambda.size() as usize);
        for (d0, &part) in lambda.parts().iter().enumerate() {
            let d = d0 as u32 + 1;
            for t in d..d + part {
                cells.push((t, lambda1 - t + d));
            }
        }
        cells.sort_unstable();
        ShiftedDiagram { lambda: lambda.clone(), cells }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.lambda
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// Number of cells in each nonempty row, top to bottom.
    pub fn row_lengths(&self) -> Vec<u32> {
        self.per_row(|cells| cells.len() as u32)
    }

    /// Leading indent (leftmost column minus one) of each nonempty row.
    pub fn row_indents(&self) -> Vec<u32> {
        self.per_row(|cells| cells.iter().map(|c| c.1).min().unwrap() - 1)
    }

    fn per_row<T>(&self, f: impl Fn(&[Cell]) -> T) -> Vec<T> {
        let mut out = Vec::new();
        let mut row_start = 0;
        for k in 0..=self.cells.len() {
            if k == self.cells.len() || (k > row_start && self.cells[k].0 != self.cells[row_start].0)
            {
                if k > row_start {
                    out.push(f(&self.cells[row_start..k]));
                }
                row_start = k;
            }
        }
        out
    }

    /// Reading order of the given style, as a sequence of cells.
    pub fn reading_order(&self, style: ReadingStyle) -> Vec<Cell> {
        let mut order = self.cells.clone();
        match style {
            ReadingStyle::Me => order.sort_by_key(|&(r, c)| (r, std::cmp::Reverse(c))),
            ReadingStyle::Fe => order.sort_by_key(|&(r, c)| (std::cmp::Reverse(c), r)),
        }
        order
    }

    /// Whether `order` reads every cell before its left neighbor and before
    /// the cell below it.
    pub fn is_admissible_order(&self, order: &[Cell]) -> bool {
        if order.len() != self.cells.len() {
            return false;
        }
        let position = |cell: Cell| order.iter().position(|&c| c == cell);
        self.cells.iter().all(|&(r, c)| {
            let here = position((r, c)).unwrap();
            let left_ok = !self.contains((r, c - 1))
                || position((r, c - 1)).is_some_and(|p| here < p);
            let below_ok = !self.contains((r + 1, c))
                || position((r + 1, c)).is_some_and(|p| here < p);
            left_ok && below_ok
        })
    }
}

/// A semistandard filling of a shifted diagram. Entries are stored in the
/// diagram's row-major cell order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    diagram: ShiftedDiagram,
    entries: Vec<Letter>,
}

impl ShiftedTableau {
    pub fn new(diagram: ShiftedDiagram, entries: Vec<Letter>) -> Result<Self, Error> {
        if entries.len() != diagram.cell_count() {
            return Err(Error::Parse(format!(
                "expected {} entries, got {}",
                diagram.cell_count(),
                entries.len()
            )));
        }
        let t = ShiftedTableau { diagram, entries };
        if !t.is_semistandard() {
            return Err(Error::Parse(format!("filling {t} is not semistandard")));
        }
        Ok(t)
    }

    pub fn diagram(&self) -> &ShiftedDiagram {
        &self.diagram
    }

    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        self.diagram
            .cells
            .binary_search(&cell)
            .ok()
            .map(|k| self.entries[k])
    }

    pub fn entries(&self) -> &[Letter] {
        &self.entries
    }

    fn is_semistandard(&self) -> bool {
        self.diagram.cells.iter().enumerate().all(|(k, &(r, c))| {
            let e = self.entries[k];
            let right_ok = match self.entry((r, c + 1)) {
                Some(right) => e <= right,
                None => true,
            };
            let below_ok = match self.entry((r + 1, c)) {
                Some(below) => e < below,
                None => true,
            };
            right_ok && below_ok
        })
    }

    pub fn weight(&self, alphabet: &Alphabet) -> Weight {
        weight(alphabet, &self.reading(ReadingStyle::Me))
    }

    /// Embed into a tensor word along the given reading order.
    pub fn reading(&self, style: ReadingStyle) -> Word {
        let letters = self
            .diagram
            .reading_order(style)
            .into_iter()
            .map(|cell| self.entry(cell).unwrap())
            .collect();
        Word::from_letters_unchecked(letters)
    }

    /// Inverse of [`ShiftedTableau::reading`]: reassemble a tableau from a
    /// word of the same length, checking semistandardness.
    pub fn from_reading(
        diagram: &ShiftedDiagram,
        style: ReadingStyle,
        word: &Word,
    ) -> Result<Self, Error> {
        if word.len() != diagram.cell_count() {
            return Err(Error::Parse(format!(
                "reading length {} does not match diagram size {}",
                word.len(),
                diagram.cell_count()
            )));
        }
        let mut entries = vec![0 as Letter; diagram.cell_count()];
        for (cell, &letter) in diagram.reading_order(style).iter().zip(word.letters()) {
            let k = diagram.cells.binary_search(cell).unwrap();
            entries[k] = letter;
        }
        ShiftedTableau::new(diagram.clone(), entries)
    }
}

impl fmt::Display for ShiftedTableau {
    /// Rows top to bottom separated by `/`, with `.` marking the indent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut row = 0;
        for (k, &(r, c)) in self.diagram.cells.iter().enumerate() {
            if r != row {
                if row != 0 {
                    write!(f, "/")?;
                }
                // Row-major order: the first cell of a row is its leftmost.
                for _ in 1..c {
                    write!(f, ".")?;
                }
                row = r;
            }
            write!(f, "{}", self.entries[k])?;
        }
        Ok(())
    }
}

/// All semistandard fillings of `Y_λ` with entries in `1..=n`, ordered
/// lexicographically by their row-major entry lists.
pub fn enumerate_ssyt(lambda: &StrictPartition, alphabet: &Alphabet) -> Vec<ShiftedTableau> {
    let diagram = ShiftedDiagram::new(lambda);
    let cells = diagram.cells().to_vec();
    let mut entries: Vec<Letter> = Vec::with_capacity(cells.len());
    let mut out = Vec::new();
    fn go(
        diagram: &ShiftedDiagram,
        cells: &[Cell],
        n: u8,
        entries: &mut Vec<Letter>,
        out: &mut Vec<ShiftedTableau>,
    ) {
        let k = entries.len();
        if k == cells.len() {
            out.push(ShiftedTableau {
                diagram: diagram.clone(),
                entries: entries.clone(),
            });
            return;
        }
        let (r, c) = cells[k];
        let entry_at = |cell: Cell, entries: &[Letter]| {
            diagram.cells.binary_search(&cell).ok().and_then(|j| entries.get(j).copied())
        };
        // Row-major fill order: the left and upper neighbors are already set.
        let mut lo = 1 as Letter;
        if let Some(left) = entry_at((r, c - 1), entries) {
            lo = lo.max(left);
        }
        if let Some(above) = entry_at((r - 1, c), entries) {
            lo = lo.max(above + 1);
        }
        for letter in lo..=n {
            entries.push(letter);
            go(diagram, cells, n, entries, out);
            entries.pop();
        }
    }
    go(&diagram, &cells, alphabet.n(), &mut entries, &mut out);
    out
}

/// Apply a word operator to a tableau through the chosen reading. `Ok(None)`
/// means the operator vanishes; an escape from the semistandard family is an
/// implementation bug and reported as [`Error::StabilityViolation`].
pub fn tableau_op(
    alphabet: &Alphabet,
    tableau: &ShiftedTableau,
    label: OperatorLabel,
    direction: Direction,
    style: ReadingStyle,
) -> Result<Option<ShiftedTableau>, Error> {
    let word = tableau.reading(style);
    let Some(image) = apply(alphabet, &word, label, direction) else {
        return Ok(None);
    };
    match ShiftedTableau::from_reading(tableau.diagram(), style, &image) {
        Ok(next) => Ok(Some(next)),
        Err(_) => Err(Error::StabilityViolation {
            word,
            label,
            direction,
            image,
        }),
    }
}

/// The crystal graph on the readings of `B(Y_λ)`. Stability of the reading
/// set under all stored operators is checked during construction.
pub fn build_tableau_crystal(
    alphabet: &Alphabet,
    lambda: &StrictPartition,
    style: ReadingStyle,
) -> Result<CrystalGraph, Error> {
    let words: BTreeSet<Word> = enumerate_ssyt(lambda, alphabet)
        .iter()
        .map(|t| t.reading(style))
        .collect();
    CrystalGraph::from_word_set(alphabet, words)
}

/// The unique tableau of weight `λ`: anti-diagonal `d` filled with letter
/// `d`. Fails when `λ` has more than `n` rows; uniqueness is asserted by a
/// scan over the full enumeration.
pub fn highest_tableau(
    alphabet: &Alphabet,
    lambda: &StrictPartition,
) -> Result<ShiftedTableau, Error> {
    if lambda.len() > alphabet.n() as usize {
        return Err(Error::TooManyRows {
            rows: lambda.len(),
            n: alphabet.n(),
        });
    }
    let diagram = ShiftedDiagram::new(lambda);
    let lambda1 = lambda.parts().first().copied().unwrap_or(0);
    let entries = diagram
        .cells()
        .iter()
        .map(|&(t, c)| (t + c - lambda1) as Letter) // cell (t, λ_1 - t + d) lies on diagonal d
        .collect();
    let tableau = ShiftedTableau::new(diagram, entries)?;

    let target = lambda.to_weight(alphabet.n())?;
    let hits = enumerate_ssyt(lambda, alphabet)
        .into_iter()
        .filter(|t| t.weight(alphabet) == target)
        .count();
    if hits != 1 {
        return Err(Error::Inconsistent(format!(
            "expected a unique weight-{target} tableau, found {hits}"
        )));
    }
    Ok(tableau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeBudget;
    use crate::weyl::is_highest_weight;

    fn abc(n: u8) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn w(letters: &[u8]) -> Word {
        Word::from_letters_unchecked(letters.to_vec())
    }

    #[test]
    fn diagram_shapes() {
        let d = ShiftedDiagram::new(&sp(&[3, 1]));
        assert_eq!(d.row_lengths(), vec![1, 2, 1]);
        assert_eq!(d.row_indents(), vec![2, 1, 0]);
        assert_eq!(d.cells(), &[(1, 3), (2, 2), (2, 3), (3, 1)]);

        let d = ShiftedDiagram::new(&sp(&[7, 6, 4, 2]));
        assert_eq!(d.row_lengths(), vec![1, 2, 3, 4, 4, 3, 2]);
        assert_eq!(d.row_indents(), vec![6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(d.cell_count(), 19);

        let d = ShiftedDiagram::new(&sp(&[2]));
        assert_eq!(d.cells(), &[(1, 2), (2, 1)]);
    }

    #[test]
    fn rows_and_columns_are_contiguous() {
        for size in 1..=7u32 {
            for lambda in StrictPartition::all_of_size(size) {
                let d = ShiftedDiagram::new(&lambda);
                let cells: BTreeSet<Cell> = d.cells().iter().copied().collect();
                for &(r, c) in d.cells() {
                    // A gap in a row or column would break the skew shape.
                    if cells.contains(&(r, c + 2)) {
                        assert!(cells.contains(&(r, c + 1)), "row gap in {lambda}");
                    }
                    if cells.contains(&(r + 2, c)) {
                        assert!(cells.contains(&(r + 1, c)), "column gap in {lambda}");
                    }
                }
                assert_eq!(d.cell_count() as u32, lambda.size());
            }
        }
    }

    #[test]
    fn both_reading_orders_are_admissible() {
        for size in 1..=7u32 {
            for lambda in StrictPartition::all_of_size(size) {
                let d = ShiftedDiagram::new(&lambda);
                for style in ReadingStyle::ALL {
                    assert!(
                        d.is_admissible_order(&d.reading_order(style)),
                        "{style} order on {lambda}"
                    );
                }
                // A row-by-row left-to-right scan reads left neighbors first,
                // so it must be rejected whenever some row has >= 2 cells.
                let row_major = d.cells().to_vec();
                let has_wide_row = d.row_lengths().iter().any(|&l| l >= 2);
                assert_eq!(d.is_admissible_order(&row_major), !has_wide_row);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let a = abc(3);
        assert_eq!(enumerate_ssyt(&sp(&[3, 1]), &a).len(), 24);
        assert_eq!(enumerate_ssyt(&sp(&[2]), &a).len(), 9);
        assert_eq!(enumerate_ssyt(&sp(&[1]), &a).len(), 3);
        assert_eq!(enumerate_ssyt(&sp(&[1]), &abc(4)).len(), 4);
        // Column of height 3 cannot be filled with two letters.
        assert_eq!(enumerate_ssyt(&sp(&[3, 2, 1]), &abc(2)).len(), 0);
    }

    #[test]
    fn readings_of_the_top_tableau() {
        let a = abc(3);
        let top = highest_tableau(&a, &sp(&[3, 1])).unwrap();
        assert_eq!(top.reading(ReadingStyle::Me), w(&[1, 2, 1, 1]));
        assert_eq!(top.reading(ReadingStyle::Fe), w(&[1, 2, 1, 1]));
        assert_eq!(top.weight(&a).coords(), &[3, 1, 0]);
        assert!(is_highest_weight(&a, &top.reading(ReadingStyle::Me)));

        let single = highest_tableau(&abc(2), &sp(&[1])).unwrap();
        assert_eq!(single.reading(ReadingStyle::Me), w(&[1]));

        let t21 = highest_tableau(&a, &sp(&[2, 1])).unwrap();
        assert_eq!(t21.reading(ReadingStyle::Me), w(&[1, 2, 1]));
        assert!(is_highest_weight(&a, &w(&[1, 2, 1])));

        assert!(highest_tableau(&abc(2), &sp(&[3, 2, 1])).is_err());
    }

    #[test]
    fn tableau_ops_on_the_top_node() {
        let a = abc(3);
        let top = highest_tableau(&a, &sp(&[3, 1])).unwrap();

        let lowered = tableau_op(&a, &top, OperatorLabel::OddOne, Direction::Lower, ReadingStyle::Me)
            .unwrap()
            .unwrap();
        assert_eq!(lowered.entry((3, 1)), Some(2));
        assert_eq!(lowered.entry((1, 3)), Some(1));

        let lowered = tableau_op(&a, &top, OperatorLabel::Even(2), Direction::Lower, ReadingStyle::Me)
            .unwrap()
            .unwrap();
        assert_eq!(lowered.entry((2, 3)), Some(3));

        let raised =
            tableau_op(&a, &top, OperatorLabel::Even(1), Direction::Raise, ReadingStyle::Me).unwrap();
        assert!(raised.is_none());
    }

    #[test]
    fn figure_crystal_is_connected_with_one_source() {
        let a = abc(3);
        let g = build_tableau_crystal(&a, &sp(&[3, 1]), ReadingStyle::Me).unwrap();
        assert_eq!(g.node_count(), 24);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].hw_nodes.len(), 1);
        assert_eq!(
            comps[0].graph.nodes()[comps[0].hw_nodes[0]].word,
            w(&[1, 2, 1, 1])
        );
    }

    #[test]
    fn row_shape_crystal_decomposes() {
        let a = abc(3);
        let g = build_tableau_crystal(&a, &sp(&[4]), ReadingStyle::Me).unwrap();
        assert_eq!(g.node_count(), 81);
        assert!(g.components().len() >= 2);
    }

    #[test]
    fn two_cell_crystal_matches_the_tensor_square() {
        let a = abc(3);
        let g = build_tableau_crystal(&a, &sp(&[2]), ReadingStyle::Me).unwrap();
        assert_eq!(g.node_count(), 9);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        let square = CrystalGraph::tensor_power(&a, 2, NodeBudget::default()).unwrap();
        let square_comp = square.components().remove(0);
        assert_eq!(
            comps[0].canonical_code().unwrap(),
            square_comp.canonical_code().unwrap()
        );
    }

    #[test]
    fn highest_tableau_is_unique_and_highest_for_small_shapes() {
        let a = abc(3);
        for size in 1..=5u32 {
            for lambda in StrictPartition::all_of_size(size) {
                if lambda.len() > 3 {
                    assert!(highest_tableau(&a, &lambda).is_err());
                    continue;
                }
                let top = highest_tableau(&a, &lambda).unwrap();
                assert_eq!(
                    top.weight(&a),
                    lambda.to_weight(3).unwrap(),
                    "weight of the diagonal filling of {lambda}"
                );
                for style in ReadingStyle::ALL {
                    assert!(
                        is_highest_weight(&a, &top.reading(style)),
                        "top of {lambda} via {style}"
                    );
                }
            }
        }
    }

    #[test]
    fn reading_styles_agree_on_operators() {
        let a = abc(3);
        for lambda in [sp(&[3, 1]), sp(&[3, 2]), sp(&[3, 2, 1])] {
            for t in enumerate_ssyt(&lambda, &a) {
                for label in a.labels() {
                    for direction in [Direction::Lower, Direction::Raise] {
                        let via_me = tableau_op(&a, &t, label, direction, ReadingStyle::Me).unwrap();
                        let via_fe = tableau_op(&a, &t, label, direction, ReadingStyle::Fe).unwrap();
                        assert_eq!(via_me, via_fe, "at {t}, label {label}");
                    }
                }
            }
        }
    }
}
