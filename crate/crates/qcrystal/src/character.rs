//! Weight generating functions of crystals and the shifted standard
//! tableau counting oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Error;
use crate::graph::CrystalGraph;
use crate::partition::StrictPartition;
use crate::word::Weight;

/// A multiplicity-valued weight polynomial: each term maps a weight to the
/// number of nodes carrying it. Multiplication convolves term-wise (weights
/// add), matching `ch(B_1 ⊗ B_2) = ch(B_1) · ch(B_2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPolynomial {
    rank: usize,
    terms: BTreeMap<Weight, u64>,
}

impl WeightPolynomial {
    /// The multiplicative unit: one term at the zero weight.
    pub fn unit(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Weight::new(vec![0; rank]), 1);
        WeightPolynomial { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    /// Total number of nodes counted.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, weight: &Weight) -> u64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    fn insert(&mut self, weight: Weight, count: u64) {
        if count > 0 {
            *self.terms.entry(weight).or_insert(0) += count;
        }
    }

    pub fn product(&self, other: &WeightPolynomial) -> Result<WeightPolynomial, Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = WeightPolynomial {
            rank: self.rank,
            terms: BTreeMap::new(),
        };
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.insert(wa.add(wb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &WeightPolynomial) -> Result<WeightPolynomial, Error> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), *c);
        }
        Ok(out)
    }

    /// Whether the coefficients are invariant under every transposition of
    /// adjacent weight coordinates (hence under all permutations).
    pub fn is_symmetric(&self) -> bool {
        (1..self.rank as u8).all(|i| {
            self.terms
                .iter()
                .all(|(w, c)| self.coefficient(&w.reflected(i)) == *c)
        })
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "x^{w}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Node census of a graph (or of a component's graph) by weight.
pub fn character(graph: &CrystalGraph) -> WeightPolynomial {
    let mut out = WeightPolynomial {
        rank: graph.alphabet().n() as usize,
        terms: BTreeMap::new(),
    };
    for node in graph.nodes() {
        out.insert(node.weight.clone(), 1);
    }
    out
}

/// Number of standard shifted Young tableaux of shape `λ`, via the branching
/// recursion `g(λ) = Σ g(λ - ε_j)` over the strict predecessors of `λ`,
/// with `g(∅) = 1`. This equals the number of components of `B^{⊗|λ|}` with
/// highest weight `λ` whenever `ℓ(λ) <= n`.
pub fn shifted_syt_count(lambda: &StrictPartition) -> u64 {
    fn go(parts: &[u32], memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for j in 0..parts.len() {
            let mut prev: Vec<u32> = parts.to_vec();
            prev[j] -= 1;
            if prev[j] == 0 {
                if j + 1 != parts.len() {
                    continue; // removing an inner part entirely breaks strictness
                }
                prev.pop();
            } else if j + 1 < parts.len() && prev[j] <= prev[j + 1] {
                continue;
            }
            total += go(&prev, memo);
        }
        memo.insert(parts.to_vec(), total);
        total
    }
    go(lambda.parts(), &mut HashMap::new())
}
