//! Materialized crystal graphs: construction, component decomposition,
//! canonical forms, and the branching rule.
//!
//! A [`CrystalGraph`] stores its nodes in lexicographic word order and its
//! lowering edges for the labels `1, ..., n-1, 1̄` only; the derived odd
//! operators `ī` (i >= 2) are recomputed on demand when testing for highest
//! weight vectors. Connectivity uses the stored arrows in both directions,
//! matching the drawn arrows of a crystal diagram. Everything here is
//! deterministic: identical inputs produce byte-identical structures.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::Error;
use crate::operators::{apply, weight};
use crate::partition::StrictPartition;
use crate::weyl::is_highest_weight;
use crate::word::{all_words, Alphabet, Direction, OperatorLabel, Weight, Word};

/// Guard on the number of nodes a graph construction may materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeBudget(pub usize);

impl Default for NodeBudget {
    fn default() -> Self {
        NodeBudget(2_000_000)
    }
}

/// A node: a word with its cached weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub word: Word,
    pub weight: Weight,
}

/// A lowering edge `src --label--> dst` (indices into the node list).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub label: OperatorLabel,
    pub dst: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    alphabet: Alphabet,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

impl CrystalGraph {
    /// The crystal `B^{⊗power}` on all `n^power` words.
    pub fn tensor_power(alphabet: &Alphabet, power: usize, budget: NodeBudget) -> Result<Self, Error> {
        let nodes = (alphabet.n() as u128)
            .checked_pow(power as u32)
            .unwrap_or(u128::MAX);
        if nodes > budget.0 as u128 {
            return Err(Error::BudgetExceeded { nodes, budget: budget.0 });
        }
        let words: Vec<Word> = all_words(alphabet, power).collect();
        // All operator images stay inside the full tensor power.
        Self::from_sorted_words(alphabet, words)
    }

    /// Graph on an explicit word set, checked to be closed under every stored
    /// operator in both directions.
    pub fn from_word_set(alphabet: &Alphabet, words: BTreeSet<Word>) -> Result<Self, Error> {
        Self::from_sorted_words(alphabet, words.into_iter().collect())
    }

    fn from_sorted_words(alphabet: &Alphabet, words: Vec<Word>) -> Result<Self, Error> {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]), "words sorted and distinct");
        let index: HashMap<&Word, usize> =
            words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut edges = Vec::new();
        for (src, word) in words.iter().enumerate() {
            for label in alphabet.labels() {
                if let Some(image) = apply(alphabet, word, label, Direction::Lower) {
                    match index.get(&image) {
                        Some(&dst) => edges.push(Edge { src, label, dst }),
                        None => {
                            return Err(Error::StabilityViolation {
                                word: word.clone(),
                                label,
                                direction: Direction::Lower,
                                image,
                            })
                        }
                    }
                }
                if let Some(image) = apply(alphabet, word, label, Direction::Raise) {
                    if !index.contains_key(&image) {
                        return Err(Error::StabilityViolation {
                            word: word.clone(),
                            label,
                            direction: Direction::Raise,
                            image,
                        });
                    }
                }
            }
        }
        let nodes = words
            .into_iter()
            .map(|word| {
                let wt = weight(alphabet, &word);
                Node { word, weight: wt }
            })
            .collect();
        Ok(CrystalGraph {
            alphabet: *alphabet,
            nodes,
            edges,
        })
    }

    /// Rebuild a graph from parsed parts. The edge set must coincide with
    /// what the operators produce on the word set; anything else is a
    /// corrupt document.
    pub(crate) fn from_parts(
        alphabet: Alphabet,
        words: Vec<Word>,
        edges: Vec<Edge>,
    ) -> Result<Self, Error> {
        let rebuilt = Self::from_sorted_words(&alphabet, words)?;
        if rebuilt.edges != edges {
            return Err(Error::Parse(
                "edge set does not match the crystal operators on the node set".into(),
            ));
        }
        Ok(rebuilt)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_index(&self, word: &Word) -> Option<usize> {
        self.nodes.binary_search_by(|node| node.word.cmp(word)).ok()
    }

    /// Lowering and raising lookup tables indexed by `[node][label]`.
    fn adjacency(&self) -> Adjacency {
        let labels = self.alphabet.label_count();
        let mut lower = vec![vec![None; labels]; self.nodes.len()];
        let mut raise = vec![vec![None; labels]; self.nodes.len()];
        for e in &self.edges {
            let li = self.alphabet.label_index(e.label);
            debug_assert!(lower[e.src][li].is_none(), "one outgoing edge per label");
            debug_assert!(raise[e.dst][li].is_none(), "one incoming edge per label");
            lower[e.src][li] = Some(e.dst);
            raise[e.dst][li] = Some(e.src);
        }
        Adjacency { lower, raise }
    }

    /// Connected components under the stored arrows (both directions),
    /// sorted by highest weight descending, then size, then first word.
    pub fn components(&self) -> Vec<Component> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes.len()];
        let mut comps: Vec<Component> = Vec::new();
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for next in adj.lower[v].iter().chain(adj.raise[v].iter()).flatten() {
                    if !seen[*next] {
                        seen[*next] = true;
                        queue.push_back(*next);
                    }
                }
            }
            members.sort_unstable();
            comps.push(self.component_from_members(&members));
        }
        comps.sort_by(|a, b| {
            let wa = a.sort_weight();
            let wb = b.sort_weight();
            wb.cmp(&wa)
                .then(a.graph.node_count().cmp(&b.graph.node_count()))
                .then(a.graph.nodes[0].word.cmp(&b.graph.nodes[0].word))
        });
        comps
    }

    fn component_from_members(&self, members: &[usize]) -> Component {
        let renumber: HashMap<usize, usize> =
            members.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let nodes: Vec<Node> = members.iter().map(|&old| self.nodes[old].clone()).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| renumber.contains_key(&e.src) && renumber.contains_key(&e.dst))
            .map(|e| Edge {
                src: renumber[&e.src],
                label: e.label,
                dst: renumber[&e.dst],
            })
            .collect();
        edges.sort_by_key(|e| (e.src, e.label, e.dst));
        let graph = CrystalGraph {
            alphabet: self.alphabet,
            nodes,
            edges,
        };
        let hw_nodes = graph.highest_weight_nodes();
        Component { graph, hw_nodes }
    }

    /// Indices of the highest weight nodes (queried through all operators,
    /// including the derived `ī`).
    pub fn highest_weight_nodes(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, node)| is_highest_weight(&self.alphabet, &node.word))
            .map(|(k, _)| k)
            .collect()
    }
}

struct Adjacency {
    lower: Vec<Vec<Option<usize>>>,
    raise: Vec<Vec<Option<usize>>>,
}

/// One connected component together with its highest weight nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: CrystalGraph,
    pub hw_nodes: Vec<usize>,
}

impl Component {
    /// Weight of the unique highest weight node, when there is exactly one.
    pub fn highest_weight(&self) -> Option<&Weight> {
        match self.hw_nodes.as_slice() {
            [k] => Some(&self.graph.nodes[*k].weight),
            _ => None,
        }
    }

    /// Strict partition labelling this component.
    pub fn label(&self) -> Result<StrictPartition, Error> {
        let hw = self
            .highest_weight()
            .ok_or(Error::AmbiguousBasepoint { count: self.hw_nodes.len() })?;
        StrictPartition::from_weight(hw)
            .ok_or_else(|| Error::NotStrictHighestWeight(hw.to_string()))
    }

    fn sort_weight(&self) -> Weight {
        match self.highest_weight() {
            Some(w) => w.clone(),
            // Degenerate fallback for multi-hw components: largest node weight.
            None => self
                .graph
                .nodes
                .iter()
                .map(|n| n.weight.clone())
                .max()
                .expect("components are nonempty"),
        }
    }

    /// Canonical code deciding `q(n)`-crystal isomorphism of single-source
    /// components: breadth-first discovery order from the highest weight
    /// node, trying moves in the fixed order lower 1..n-1, lower 1̄,
    /// raise 1..n-1, raise 1̄, then the relabeled edge set plus node weights.
    pub fn canonical_code(&self) -> Result<CanonicalCode, Error> {
        let &[basepoint] = self.hw_nodes.as_slice() else {
            return Err(Error::AmbiguousBasepoint { count: self.hw_nodes.len() });
        };
        let adj = self.graph.adjacency();
        let mut discovery = vec![usize::MAX; self.graph.nodes.len()];
        let mut order = Vec::with_capacity(self.graph.nodes.len());
        let mut queue = std::collections::VecDeque::from([basepoint]);
        discovery[basepoint] = 0;
        order.push(basepoint);
        while let Some(v) = queue.pop_front() {
            let moves = adj.lower[v].iter().chain(adj.raise[v].iter());
            for next in moves.flatten() {
                if discovery[*next] == usize::MAX {
                    discovery[*next] = order.len();
                    order.push(*next);
                    queue.push_back(*next);
                }
            }
        }
        debug_assert_eq!(order.len(), self.graph.nodes.len(), "component is connected");
        let weights = order
            .iter()
            .map(|&v| self.graph.nodes[v].weight.clone())
            .collect();
        let mut edges: Vec<(usize, OperatorLabel, usize)> = self
            .graph
            .edges
            .iter()
            .map(|e| (discovery[e.src], e.label, discovery[e.dst]))
            .collect();
        edges.sort_unstable();
        Ok(CanonicalCode { weights, edges })
    }

    /// Decompose `B ⊗ C` for this component `C` of highest weight `λ`: build
    /// the graph on all one-letter extensions, split it, and label each piece.
    /// The resulting labels are exactly `{λ + ε_j strict}`, once each.
    pub fn branch(&self) -> Result<Vec<(StrictPartition, Component)>, Error> {
        self.label()?; // validates the single strict highest weight
        let alphabet = self.graph.alphabet;
        let mut words = BTreeSet::new();
        for letter in 1..=alphabet.n() {
            for node in &self.graph.nodes {
                words.insert(node.word.prepended(letter));
            }
        }
        let product = CrystalGraph::from_word_set(&alphabet, words)?;
        product
            .components()
            .into_iter()
            .map(|c| c.label().map(|lambda| (lambda, c)))
            .collect()
    }
}

/// Equality of codes is `q(n)`-crystal isomorphism of the components.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalCode {
    weights: Vec<Weight>,
    edges: Vec<(usize, OperatorLabel, usize)>,
}

/// Multiplicity data for one highest weight in a tensor power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicity {
    pub count: usize,
    pub component_size: usize,
}

/// For each strict partition occurring as a highest weight of `B^{⊗power}`,
/// the number of components carrying it and their common size.
pub fn multiplicity_table(
    alphabet: &Alphabet,
    power: usize,
    budget: NodeBudget,
) -> Result<BTreeMap<StrictPartition, Multiplicity>, Error> {
    let graph = CrystalGraph::tensor_power(alphabet, power, budget)?;
    let mut table: BTreeMap<StrictPartition, Multiplicity> = BTreeMap::new();
    for component in graph.components() {
        let lambda = component.label()?;
        let size = component.graph.node_count();
        let entry = table.entry(lambda.clone()).or_insert(Multiplicity {
            count: 0,
            component_size: size,
        });
        if entry.component_size != size {
            return Err(Error::Inconsistent(format!(
                "components of highest weight {lambda} have sizes {} and {size}",
                entry.component_size
            )));
        }
        entry.count += 1;
    }
    Ok(table)
}
