//! Property tests for the contract invariants of every module, built on
//! independent oracles: brute-force matching, prefix enumeration, and
//! longest-proper-suffix search.

use proptest::prelude::*;
use std::collections::HashSet;

use pepscan::ac::{build_goto, match_naive, Alphabet, Automaton, MatchEvent, PatternSet, ROOT};
use pepscan::bench::nested_prefix_family;
use pepscan::bio::{build_corpus, digest, DigestParams, FastaRecord};
use pepscan::hw::ComponentSim;

const RESIDUES: &[u8; 20] = b"ACDEFGHIKLMNPQRSTVWY";

fn pattern_strategy() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop::sample::select(RESIDUES.to_vec()), 1..=12)
}

fn pattern_set_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(pattern_strategy(), 0..=max)
}

fn text_strategy(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(
        prop::sample::select((b'A'..=b'Z').collect::<Vec<u8>>()),
        0..=max,
    )
}

/// Text over A-Z with sentinel bytes mixed in.
fn sentinel_text_strategy(max: usize) -> impl Strategy<Value = Vec<u8>> {
    let mut symbols: Vec<u8> = (b'A'..=b'Z').collect();
    symbols.push(b'#');
    symbols.push(b'#'); // weight sentinels a little heavier
    prop::collection::vec(prop::sample::select(symbols), 0..=max)
}

fn compile(patterns: &[Vec<u8>]) -> Automaton {
    Automaton::compile(&PatternSet::new(patterns.to_vec()), Alphabet::uppercase()).unwrap()
}

proptest! {
    /// The two engines and the register-level simulator agree with the
    /// brute-force oracle as event multisets (all are sorted, so equality).
    #[test]
    fn engines_match_the_naive_oracle(
        patterns in pattern_set_strategy(50),
        text in text_strategy(2_000),
    ) {
        let set = PatternSet::new(patterns.clone());
        let automaton = compile(&patterns);
        let expected = match_naive(&set, &Alphabet::uppercase(), &text).unwrap();

        let (sparse, _) = automaton.match_sparse(&text).unwrap();
        let (dense, _) = automaton.match_dense(&text).unwrap();
        prop_assert_eq!(&sparse, &expected);
        prop_assert_eq!(&dense, &expected);

        let mut sim = ComponentSim::new(&automaton);
        let outcome = sim.run_protein_list(&text).unwrap();
        prop_assert_eq!(&outcome.events, &expected);
        prop_assert_eq!(outcome.cycles, text.len() as u64);
    }

    /// State count is exactly 1 + |distinct non-empty prefixes|.
    #[test]
    fn state_count_formula(patterns in pattern_set_strategy(60)) {
        let automaton = build_goto(&PatternSet::new(patterns.clone()), Alphabet::uppercase()).unwrap();
        let mut prefixes = HashSet::new();
        for pattern in &patterns {
            for len in 1..=pattern.len() {
                prefixes.insert(pattern[..len].to_vec());
            }
        }
        prop_assert_eq!(automaton.state_count(), prefixes.len() + 1);
    }

    /// Every failure link points to the longest proper suffix that is itself
    /// a prefix state (oracle: direct suffix search over the prefix set).
    #[test]
    fn failure_links_are_longest_proper_suffixes(patterns in pattern_set_strategy(40)) {
        let automaton = build_goto(&PatternSet::new(patterns), Alphabet::uppercase())
            .unwrap()
            .build_failure();
        let strings = automaton.state_strings();
        let by_string: std::collections::HashMap<&[u8], u32> = strings
            .iter()
            .enumerate()
            .map(|(id, s)| (s.as_slice(), id as u32))
            .collect();

        for (id, string) in strings.iter().enumerate() {
            if id as u32 == ROOT {
                continue;
            }
            let expected = (1..string.len())
                .map(|start| &string[start..])
                .find_map(|suffix| by_string.get(suffix).copied())
                .unwrap_or(ROOT);
            prop_assert_eq!(automaton.node(id as u32).fail, expected);
        }
    }

    /// The dense engine does exactly one lookup per input byte, whatever the
    /// pattern count.
    #[test]
    fn dense_lookups_equal_text_length(
        patterns in pattern_set_strategy(30),
        text in text_strategy(1_000),
    ) {
        let automaton = compile(&patterns);
        let (_, work) = automaton.match_dense(&text).unwrap();
        prop_assert_eq!(work.lookups, text.len() as u64);
        prop_assert_eq!(work.edge_comparisons, 0);
    }

    /// No match ever spans a sentinel byte, in any engine.
    #[test]
    fn sentinel_isolation(
        patterns in pattern_set_strategy(30),
        text in sentinel_text_strategy(1_000),
    ) {
        let automaton = compile(&patterns);
        let (events, _) = automaton.match_dense(&text).unwrap();
        for event in &events {
            let len = automaton.pattern(event.pattern_id).len();
            let start = event.end_offset + 1 - len;
            prop_assert!(
                !text[start..=event.end_offset].contains(&b'#'),
                "event {:?} spans a sentinel",
                event
            );
        }
        let (sparse, _) = automaton.match_sparse(&text).unwrap();
        prop_assert_eq!(sparse, events);
    }

    /// Adding patterns never removes an existing event.
    #[test]
    fn superset_monotonicity(
        patterns in pattern_set_strategy(25),
        extra in pattern_set_strategy(10),
        text in text_strategy(800),
    ) {
        let (base_events, _) = compile(&patterns).match_dense(&text).unwrap();

        let mut extended = patterns.clone();
        extended.extend(extra);
        let (extended_events, _) = compile(&extended).match_dense(&text).unwrap();

        let extended_set: HashSet<MatchEvent> = extended_events.into_iter().collect();
        for event in base_events {
            prop_assert!(extended_set.contains(&event));
        }
    }

    /// With zero missed cleavages the fragments concatenate back to the
    /// input, and every peptide occurs at its reported position.
    #[test]
    fn digest_coverage_and_positions(
        seq in prop::collection::vec(
            prop::sample::select(b"ACDEFGHIKLMNPQRSTVWYKRKP".to_vec()),
            1..=120,
        ),
        missed in 0u8..=3,
    ) {
        let zero = digest(&seq, &DigestParams::default()).unwrap();
        let concat: Vec<u8> = zero.iter().flat_map(|p| p.sequence.clone()).collect();
        prop_assert_eq!(concat, seq.clone());

        let params = DigestParams { missed_cleavages: missed, ..DigestParams::default() };
        for peptide in digest(&seq, &params).unwrap() {
            let end = peptide.start + peptide.sequence.len();
            prop_assert!(end <= seq.len());
            prop_assert_eq!(&seq[peptide.start..end], peptide.sequence.as_slice());
        }
    }

    /// Matching digest products against the corpus never crosses a record
    /// boundary, and every reported occurrence is a real substring of the
    /// record it is attributed to.
    #[test]
    fn digest_matches_stay_within_records(
        seqs in prop::collection::vec(
            prop::collection::vec(prop::sample::select(RESIDUES.to_vec()), 1..=60),
            1..=6,
        ),
    ) {
        let records: Vec<FastaRecord> = seqs
            .iter()
            .enumerate()
            .map(|(i, seq)| FastaRecord {
                id: format!("R{i}"),
                description: String::new(),
                sequence: seq.clone(),
            })
            .collect();
        let corpus = build_corpus(records, b'#').unwrap();

        let mut peptides = Vec::new();
        for seq in &seqs {
            for p in digest(seq, &DigestParams::default()).unwrap() {
                peptides.push(p.sequence);
            }
        }
        let automaton = compile(&peptides);
        let (events, _) = automaton.match_dense(corpus.scan_text()).unwrap();
        prop_assert!(!events.is_empty(), "digest products must match their source");

        for event in events {
            let len = automaton.pattern(event.pattern_id).len();
            let (record_idx, local_end) = corpus.locate(event.end_offset).unwrap();
            prop_assert!(local_end + 1 >= len, "match crosses a record start");
            let start = local_end + 1 - len;
            let record = &corpus.records()[record_idx];
            prop_assert_eq!(
                &record.sequence[start..=local_end],
                automaton.pattern(event.pattern_id)
            );
        }
    }
}

/// On the default benchmark grid: modeled speedup never decreases along a
/// protein row as the peptide count grows, modeled hardware time per row is
/// constant, and the measured (wall-clock) sparse engine really is slower
/// per character at 1200 patterns than at 100.
#[test]
fn bench_matrix_speedups_are_row_monotone() {
    // Median of five repetitions keeps the wall-clock half of this check
    // stable when the suite runs in parallel.
    let config = pepscan::bench::BenchConfig {
        repetitions: 5,
        ..pepscan::bench::BenchConfig::default()
    };
    let outcome = pepscan::bench::run_matrix(&config).unwrap();

    for &proteins in &config.protein_set_sizes {
        let row: Vec<_> = outcome
            .cells
            .iter()
            .filter(|c| c.proteins == proteins)
            .collect();
        assert_eq!(row.len(), config.peptide_set_sizes.len());
        assert!(
            row.windows(2).all(|w| w[0].speedup <= w[1].speedup),
            "speedup not monotone for {proteins} proteins: {:?}",
            row.iter().map(|c| c.speedup).collect::<Vec<_>>()
        );
        assert!(row
            .windows(2)
            .all(|w| w[0].modeled_hw_us == w[1].modeled_hw_us));

        let first = row.first().unwrap();
        let last = row.last().unwrap();
        assert!(
            last.measured_sw_us / last.text_len as f64
                > first.measured_sw_us / first.text_len as f64,
            "wall-clock sparse cost per char did not grow with the pattern set"
        );
    }
}

/// A large table artifact round-trips into an automaton with identical
/// matching behavior.
#[test]
fn large_table_artifact_round_trips() {
    use pepscan::codegen::{generate_table, load_table};

    let set = pepscan::bench::scheduled_pattern_set(1200, 3);
    let automaton = Automaton::compile(&set, Alphabet::uppercase()).unwrap();
    let json = generate_table(&automaton).to_json();
    let parsed = pepscan::codegen::TableArtifact::from_json(&json).unwrap();
    let loaded = load_table(&parsed).unwrap();

    let text = pepscan::bio::synth_corpus(1, 5_000, 99).unwrap()[0]
        .sequence
        .clone();
    let (original, _) = automaton.match_dense(&text).unwrap();
    let (reloaded, _) = loaded.match_dense(&text).unwrap();
    assert_eq!(original, reloaded);
    assert!(!original.is_empty() || automaton.state_count() > 1);
}

/// Scaling asymmetry: on growing nested-prefix families the sparse engine's
/// per-character edge comparisons strictly exceed the dense engine's one
/// lookup per character, and grow with the family, while dense work is flat.
#[test]
fn sparse_work_grows_with_nested_prefix_families() {
    let text = pepscan::bio::synth_corpus(1, 60_000, 7).unwrap()[0]
        .sequence
        .clone();

    let mut last_per_char = 0.0f64;
    for size in [100usize, 400, 800, 1200] {
        let automaton =
            Automaton::compile(&nested_prefix_family(size, 11), Alphabet::uppercase()).unwrap();
        let (_, sparse_work) = automaton.match_sparse(&text).unwrap();
        let (_, dense_work) = automaton.match_dense(&text).unwrap();

        let per_char = sparse_work.edge_comparisons as f64 / text.len() as f64;
        assert!(
            per_char > 1.0,
            "sparse comparisons per char ({per_char}) must exceed dense lookups per char (1.0)"
        );
        assert_eq!(dense_work.lookups, text.len() as u64);
        assert!(
            per_char > last_per_char,
            "per-char comparisons must grow: {per_char} after {last_per_char} at size {size}"
        );
        last_per_char = per_char;
    }
}
