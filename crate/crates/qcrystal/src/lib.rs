//! Combinatorics of abstract `q(n)`-crystals.
//!
//! The crate works with tensor words over the alphabet `{1, ..., n}`, the
//! elements of the crystal `B^{⊗N}` of the vector representation of the
//! quantum queer superalgebra, and implements:
//!
//! - the even Kashiwara operators `ẽ_i`, `f̃_i` (signature rule) and the odd
//!   operators `ẽ_1̄`, `f̃_1̄` ([`operators`]);
//! - the Weyl-group operators `S_i`/`S_w`, the conjugated odd operators
//!   `ẽ_ī`, `f̃_ī`, and highest-weight predicates ([`weyl`]);
//! - materialized crystal graphs with component decomposition, canonical
//!   forms for isomorphism testing, and the branching rule ([`graph`]);
//! - shifted skew diagrams `Y_λ`, their semistandard tableaux, admissible
//!   readings, and the induced tableau crystals ([`tableaux`]);
//! - weight generating functions and shifted standard tableau counts
//!   ([`character`]);
//! - JSON/DOT serialization ([`io`]) and exhaustive verification suites for
//!   the combinatorial theorems the operators satisfy ([`verify`]).
//!
//! Every operation is a pure function of its inputs, and every construction
//! is deterministic: nodes are sorted lexicographically, labels are visited
//! in a fixed order, and identical inputs give byte-identical outputs.
//!
//! The `examples/` directory walks through each capability; the `qcrystal`
//! binary exposes the same functionality as a small command-line tool.

pub mod character;
pub mod error;
pub mod graph;
pub mod io;
pub mod operators;
pub mod partition;
pub mod tableaux;
pub mod verify;
pub mod weyl;
pub mod word;

pub use error::Error;
pub use graph::{CanonicalCode, Component, CrystalGraph, Edge, Multiplicity, Node, NodeBudget};
pub use partition::StrictPartition;
pub use tableaux::{ReadingStyle, ShiftedDiagram, ShiftedTableau};
pub use word::{all_words, Alphabet, Direction, Letter, OperatorLabel, Weight, Word};
