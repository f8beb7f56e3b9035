use super::{Alphabet, Automaton, Error, PatternId, PatternSet, ROOT};

/// One reported occurrence: pattern `pattern_id` ends at byte `end_offset`
/// (0-based index of the last matched byte in the scanned text).
///
/// Engines report events sorted by `(end_offset, pattern_id)` ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatchEvent {
    pub end_offset: usize,
    pub pattern_id: PatternId,
}

impl MatchEvent {
    pub fn new(pattern_id: PatternId, end_offset: usize) -> Self {
        MatchEvent {
            end_offset,
            pattern_id,
        }
    }
}

/// Operation counts observed during one matching pass.
///
/// The sparse engine fills `edge_comparisons` (edge records examined across
/// all scans, including re-scans after failure steps) and `fail_traversals`;
/// the dense engine fills `lookups`, exactly one per input byte. These are
/// the quantities whose growth separates the two implementations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkProfile {
    pub edge_comparisons: u64,
    pub fail_traversals: u64,
    pub lookups: u64,
}

impl Automaton {
    /// Matches by walking the goto trie and chasing failure links, scanning
    /// each node's edge array linearly.
    ///
    /// Requires failure links. Per-character cost grows with the fan-out of
    /// the states the walk visits, which is what makes this the
    /// "software-only" engine in benchmark comparisons.
    pub fn match_sparse(&self, text: &[u8]) -> Result<(Vec<MatchEvent>, WorkProfile), Error> {
        assert!(
            self.failure_built(),
            "match_sparse requires failure links; call build_failure first"
        );
        let mut events = Vec::new();
        let mut work = WorkProfile::default();
        let mut state = ROOT;

        for (offset, &byte) in text.iter().enumerate() {
            if !self.alphabet().is_text_byte(byte) {
                return Err(Error::InvalidTextSymbol { offset, byte });
            }
            loop {
                let (found, examined) = self.node(state).find_edge(byte);
                work.edge_comparisons += examined;
                match found {
                    Some(next) => {
                        state = next;
                        break;
                    }
                    None if state == ROOT => break,
                    None => {
                        state = self.node(state).fail;
                        work.fail_traversals += 1;
                    }
                }
            }
            for &id in &self.node(state).outputs {
                events.push(MatchEvent::new(id, offset));
            }
        }

        debug_assert!(events.windows(2).all(|w| w[0] <= w[1]));
        Ok((events, work))
    }

    /// Matches with the compiled dense table: exactly one transition lookup
    /// per input byte, independent of automaton size.
    ///
    /// Requires a compiled dense table. Event output is identical to
    /// [`Automaton::match_sparse`].
    pub fn match_dense(&self, text: &[u8]) -> Result<(Vec<MatchEvent>, WorkProfile), Error> {
        let dense = self
            .dense()
            .expect("match_dense requires a dense table; call compile_dense first");
        let mut events = Vec::new();
        let mut work = WorkProfile::default();
        let mut state = ROOT;

        for (offset, &byte) in text.iter().enumerate() {
            let column = self
                .alphabet()
                .column_of(byte)
                .ok_or(Error::InvalidTextSymbol { offset, byte })?;
            state = dense.next(state, column);
            work.lookups += 1;
            for &id in &self.node(state).outputs {
                events.push(MatchEvent::new(id, offset));
            }
        }

        debug_assert!(events.windows(2).all(|w| w[0] <= w[1]));
        Ok((events, work))
    }
}

/// Brute-force oracle: tries every `(pattern, start offset)` pair directly.
///
/// Definitionally independent of the automaton machinery; used to
/// cross-check both engines. Quadratic, so reserve it for tests and small
/// inputs.
pub fn match_naive(
    patterns: &PatternSet,
    alphabet: &Alphabet,
    text: &[u8],
) -> Result<Vec<MatchEvent>, Error> {
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
    if let Some(offset) = text.iter().position(|&b| !alphabet.is_text_byte(b)) {
        return Err(Error::InvalidTextSymbol {
            offset,
            byte: text[offset],
        });
    }

    let mut events = Vec::new();
    for (id, pattern) in patterns.iter().enumerate() {
        if pattern.len() > text.len() {
            continue;
        }
        for start in 0..=(text.len() - pattern.len()) {
            if &text[start..start + pattern.len()] == pattern {
                events.push(MatchEvent::new(id as PatternId, start + pattern.len() - 1));
            }
        }
    }
    events.sort_unstable();
    Ok(events)
}
