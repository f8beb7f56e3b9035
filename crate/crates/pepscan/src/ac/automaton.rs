use super::{Alphabet, Error, PatternId, PatternSet, StateId, ROOT};

/// One forward (goto) transition out of a trie node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub symbol: u8,
    pub next: StateId,
}

/// A trie node stored as an insertion-ordered edge array.
///
/// The edge array is scanned linearly during sparse matching, so lookup cost
/// grows with fan-out. That scan is the software-side cost the benchmark
/// harness observes; do not replace it with a binary search or a map.
#[derive(Debug, Clone, Default)]
pub struct SparseNode {
    pub edges: Vec<Edge>,
    pub fail: StateId,
    /// Pattern ids recognized at this state. After failure construction this
    /// is the merged set (own terminals plus everything along the fail
    /// chain), kept sorted ascending.
    pub outputs: Vec<PatternId>,
}

impl SparseNode {
    /// Linear edge-array scan. Returns the target state and the number of
    /// edge records examined (hit position + 1, or the full fan-out on miss).
    pub fn find_edge(&self, symbol: u8) -> (Option<StateId>, u64) {
        for (i, edge) in self.edges.iter().enumerate() {
            if edge.symbol == symbol {
                return (Some(edge.next), i as u64 + 1);
            }
        }
        (None, self.edges.len() as u64)
    }
}

/// Failure-free transition table: `delta[state][column]` is total over all
/// symbol columns plus the sentinel column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTable {
    columns: usize,
    delta: Vec<StateId>,
}

impl DenseTable {
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn next(&self, state: StateId, column: usize) -> StateId {
        self.delta[state as usize * self.columns + column]
    }

    pub fn row(&self, state: StateId) -> &[StateId] {
        let base = state as usize * self.columns;
        &self.delta[base..base + self.columns]
    }
}

/// A compiled Aho-Corasick machine.
///
/// Immutable once built; matching never mutates it, so one automaton can be
/// shared freely across concurrent matchers.
#[derive(Debug, Clone)]
pub struct Automaton {
    alphabet: Alphabet,
    patterns: Vec<Vec<u8>>,
    nodes: Vec<SparseNode>,
    dense: Option<DenseTable>,
    failure_built: bool,
}

/// Phase one: build the goto trie from a validated pattern set.
///
/// The result has one state per distinct non-empty pattern prefix plus the
/// root; terminal states carry the ids of the patterns ending there. Failure
/// links are unset (every `fail` is the root) until
/// [`Automaton::build_failure`] runs.
pub fn build_goto(patterns: &PatternSet, alphabet: Alphabet) -> Result<Automaton, Error> {
    for (index, pattern) in patterns.iter().enumerate() {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern(index));
        }
        for &byte in pattern {
            if !alphabet.is_symbol(byte) {
                return Err(Error::InvalidPatternSymbol {
                    pattern: index,
                    byte,
                });
            }
        }
    }

    let mut nodes = vec![SparseNode::default()];
    for (index, pattern) in patterns.iter().enumerate() {
        let mut state = ROOT;
        for &byte in pattern {
            let (found, _) = nodes[state as usize].find_edge(byte);
            state = match found {
                Some(next) => next,
                None => {
                    let next = nodes.len() as StateId;
                    nodes.push(SparseNode::default());
                    nodes[state as usize]
                        .edges
                        .push(Edge { symbol: byte, next });
                    next
                }
            };
        }
        nodes[state as usize].outputs.push(index as PatternId);
    }

    Ok(Automaton {
        alphabet,
        patterns: patterns.patterns().to_vec(),
        nodes,
        dense: None,
        failure_built: false,
    })
}

impl Automaton {
    /// One-call construction: goto trie, failure links, dense table.
    pub fn compile(patterns: &PatternSet, alphabet: Alphabet) -> Result<Self, Error> {
        Ok(build_goto(patterns, alphabet)?
            .build_failure()
            .compile_dense())
    }

    /// Phase two: breadth-first failure computation.
    ///
    /// Afterwards every non-root state's `fail` points to the state of the
    /// longest proper suffix of its string that is itself a prefix state, and
    /// each state's outputs are merged with the outputs along its fail chain.
    pub fn build_failure(mut self) -> Self {
        let mut queue = std::collections::VecDeque::new();
        for edge in self.nodes[ROOT as usize].edges.clone() {
            self.nodes[edge.next as usize].fail = ROOT;
            queue.push_back(edge.next);
        }

        while let Some(state) = queue.pop_front() {
            for edge in self.nodes[state as usize].edges.clone() {
                queue.push_back(edge.next);

                // Walk the parent's fail chain until some state has a goto on
                // this symbol. Depth-1 states were seeded above, so the walk
                // always starts strictly above the child and cannot hit it.
                let mut fail = self.nodes[state as usize].fail;
                let target = loop {
                    let (found, _) = self.nodes[fail as usize].find_edge(edge.symbol);
                    match found {
                        Some(next) => break next,
                        None if fail == ROOT => break ROOT,
                        None => fail = self.nodes[fail as usize].fail,
                    }
                };
                self.nodes[edge.next as usize].fail = target;

                let merged = merge_sorted(
                    &self.nodes[edge.next as usize].outputs,
                    &self.nodes[target as usize].outputs,
                );
                self.nodes[edge.next as usize].outputs = merged;
            }
        }

        self.failure_built = true;
        self
    }

    /// Phase three: fold failure links into a total transition table.
    ///
    /// `delta[s][c]` equals the state the sparse automaton reaches from `s`
    /// on `c` after chasing failure links; the sentinel column maps every
    /// state back to the root.
    pub fn compile_dense(mut self) -> Self {
        assert!(
            self.failure_built,
            "compile_dense requires failure links; call build_failure first"
        );
        let columns = self.alphabet.column_count();
        let mut delta = vec![ROOT; self.nodes.len() * columns];

        for state in self.bfs_order() {
            let base = state as usize * columns;
            if state != ROOT {
                // BFS order guarantees the fail row is already computed; its
                // state id may still be higher than ours.
                let fail_base = self.nodes[state as usize].fail as usize * columns;
                delta.copy_within(fail_base..fail_base + columns, base);
            }
            for edge in &self.nodes[state as usize].edges {
                let col = self
                    .alphabet
                    .column_of(edge.symbol)
                    .expect("trie edges only carry alphabet symbols");
                delta[base + col] = edge.next;
            }
        }

        self.dense = Some(DenseTable { columns, delta });
        self
    }

    /// States in breadth-first order over the goto trie, root first. Each
    /// state's fail target precedes it in this order.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut queue = std::collections::VecDeque::from([ROOT]);
        while let Some(state) = queue.pop_front() {
            order.push(state);
            for edge in &self.nodes[state as usize].edges {
                queue.push_back(edge.next);
            }
        }
        order
    }

    /// The string spelled by the trie path to each state, indexed by state
    /// id. Root is the empty string. Intended for tests and reports; walks
    /// the whole trie.
    pub fn state_strings(&self) -> Vec<Vec<u8>> {
        let mut strings = vec![Vec::new(); self.nodes.len()];
        for state in self.bfs_order() {
            for edge in &self.nodes[state as usize].edges {
                let mut s = strings[state as usize].clone();
                s.push(edge.symbol);
                strings[edge.next as usize] = s;
            }
        }
        strings
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn pattern_count(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[Vec<u8>] {
        &self.patterns
    }

    pub fn pattern(&self, id: PatternId) -> &[u8] {
        &self.patterns[id as usize]
    }

    pub fn node(&self, state: StateId) -> &SparseNode {
        &self.nodes[state as usize]
    }

    pub fn nodes(&self) -> &[SparseNode] {
        &self.nodes
    }

    pub fn dense(&self) -> Option<&DenseTable> {
        self.dense.as_ref()
    }

    pub fn failure_built(&self) -> bool {
        self.failure_built
    }
}

fn merge_sorted(a: &[PatternId], b: &[PatternId]) -> Vec<PatternId> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            merged.push(a[i]);
            i += 1;
        } else {
            merged.push(b[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    merged
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automaton_is_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Automaton>();

        let a = std::sync::Arc::new(
            Automaton::compile(
                &PatternSet::from_strs(&["HE", "SHE", "HIS", "HERS"]),
                Alphabet::uppercase(),
            )
            .unwrap(),
        );
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let a = a.clone();
                std::thread::spawn(move || a.match_dense(b"USHERS").unwrap().0.len())
            })
            .collect();
        for handle in handles {
            assert_eq!(handle.join().unwrap(), 3);
        }
    }

    fn classic() -> Automaton {
        let patterns = PatternSet::from_strs(&["HE", "SHE", "HIS", "HERS"]);
        build_goto(&patterns, Alphabet::uppercase()).unwrap()
    }

    fn state_of(a: &Automaton, s: &[u8]) -> StateId {
        a.state_strings()
            .iter()
            .position(|x| x == s)
            .expect("state exists") as StateId
    }

    #[test]
    fn classic_trie_has_ten_states() {
        // root + prefixes H, HE, HER, HERS, S, SH, SHE, HI, HIS
        assert_eq!(classic().state_count(), 10);
    }

    #[test]
    fn empty_pattern_set_is_root_only() {
        let a = build_goto(&PatternSet::default(), Alphabet::uppercase()).unwrap();
        assert_eq!(a.state_count(), 1);
        let a = a.build_failure().compile_dense();
        let (events, _) = a.match_dense(b"ABC").unwrap();
        assert!(events.is_empty());
    }

    #[test]
    fn duplicate_patterns_share_states_and_stack_outputs() {
        let patterns = PatternSet::from_strs(&["MK", "MK"]);
        let a = build_goto(&patterns, Alphabet::uppercase()).unwrap();
        assert_eq!(a.state_count(), 3);
        assert_eq!(a.node(state_of(&a, b"MK")).outputs, vec![0, 1]);
    }

    #[test]
    fn rejects_empty_and_invalid_patterns() {
        let err = build_goto(&PatternSet::from_strs(&["MK", ""]), Alphabet::uppercase());
        assert_eq!(err.unwrap_err(), Error::EmptyPattern(1));

        let err = build_goto(&PatternSet::from_strs(&["M k"]), Alphabet::uppercase());
        assert_eq!(
            err.unwrap_err(),
            Error::InvalidPatternSymbol {
                pattern: 0,
                byte: b' '
            }
        );
    }

    #[test]
    fn failure_links_point_to_longest_proper_suffix() {
        let a = classic().build_failure();
        let she = state_of(&a, b"SHE");
        let he = state_of(&a, b"HE");
        assert_eq!(a.node(she).fail, he);
        // outputs("SHE") = {SHE} ∪ {HE}
        assert_eq!(a.node(she).outputs, vec![0, 1]);
    }

    #[test]
    fn failure_links_on_repeated_symbol_chain() {
        let patterns = PatternSet::from_strs(&["AAA"]);
        let a = build_goto(&patterns, Alphabet::uppercase())
            .unwrap()
            .build_failure();
        assert_eq!(a.node(state_of(&a, b"AA")).fail, state_of(&a, b"A"));
        assert_eq!(a.node(state_of(&a, b"AAA")).fail, state_of(&a, b"AA"));
        assert_eq!(a.node(state_of(&a, b"A")).fail, ROOT);
    }

    #[test]
    fn depth_one_states_fail_to_root() {
        let a = classic().build_failure();
        for edge in a.node(ROOT).edges.clone() {
            assert_eq!(a.node(edge.next).fail, ROOT);
        }
    }

    #[test]
    fn dense_follows_failure_semantics() {
        let patterns = PatternSet::from_strs(&["HE", "SHE"]);
        let a = Automaton::compile(&patterns, Alphabet::uppercase()).unwrap();
        let dense = a.dense().unwrap();
        let col = |b: u8| a.alphabet().column_of(b).unwrap();

        assert_eq!(
            dense.next(state_of(&a, b"SH"), col(b'E')),
            state_of(&a, b"SHE")
        );
        // No "HER" pattern: both 'R' transitions reset to root.
        assert_eq!(dense.next(state_of(&a, b"SHE"), col(b'R')), ROOT);
        assert_eq!(dense.next(state_of(&a, b"HE"), col(b'R')), ROOT);
        // Root self-loop on a symbol with no root edge.
        assert_eq!(dense.next(ROOT, col(b'Z')), ROOT);
    }

    #[test]
    fn sentinel_column_resets_every_state() {
        let a = Automaton::compile(
            &PatternSet::from_strs(&["HE", "SHE", "HIS", "HERS"]),
            Alphabet::uppercase(),
        )
        .unwrap();
        let dense = a.dense().unwrap();
        let sentinel_col = a.alphabet().column_of(b'#').unwrap();
        for state in 0..a.state_count() as StateId {
            assert_eq!(dense.next(state, sentinel_col), ROOT);
        }
    }

    #[test]
    #[should_panic(expected = "requires failure links")]
    fn compile_dense_requires_failure() {
        let a = build_goto(&PatternSet::from_strs(&["HE"]), Alphabet::uppercase()).unwrap();
        let _ = a.compile_dense();
    }
}
