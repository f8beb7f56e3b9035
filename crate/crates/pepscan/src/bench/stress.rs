use crate::ac::PatternSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// First letters of the stress-family base strings, in assignment order:
/// the 20 canonical residues first, then the codes that never occur in
/// canonical sequences. `X` and `Z` are last, so no family of up to 24
/// bases has a root edge on them — a text of X/Z bytes makes every
/// character scan the full root edge array and miss.
const FIRST_LETTERS: &[u8; 26] = b"ACDEFGHIKLMNPQRSTVWYBJOUXZ";

/// Builds a nested-prefix stress family of `pattern_count` patterns.
///
/// The family is all prefixes (length ≥ 2) of base strings with distinct
/// first letters; the base count grows quadratically with the family
/// (1 base at 100 patterns, 24 at 1200), so root fan-out — and with it the
/// sparse engine's edge-scan work per character — rises steeply across
/// family sizes while the text rarely reaches depth 2 and the dense
/// engine's one-lookup-per-character cost stays flat. This is the workload
/// that separates the two engines most sharply.
pub fn nested_prefix_family(pattern_count: usize, seed: u64) -> PatternSet {
    assert!(
        pattern_count > 0,
        "stress family needs at least one pattern"
    );
    let base_count = (pattern_count * pattern_count / 60_000)
        .clamp(1, FIRST_LETTERS.len())
        .min(pattern_count);
    let per_base = pattern_count.div_ceil(base_count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut patterns = Vec::with_capacity(pattern_count);
    'bases: for b in 0..base_count {
        let mut base = Vec::with_capacity(per_base + 1);
        base.push(FIRST_LETTERS[b % FIRST_LETTERS.len()]);
        for _ in 0..per_base {
            base.push(rng.random_range(b'A'..=b'Z'));
        }
        for len in 2..=per_base + 1 {
            patterns.push(base[..len].to_vec());
            if patterns.len() == pattern_count {
                break 'bases;
            }
        }
    }
    PatternSet::new(patterns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ac::{Alphabet, Automaton};

    #[test]
    fn family_has_exact_count_and_nested_prefixes() {
        for &n in &[1usize, 99, 100, 250, 1200] {
            let family = nested_prefix_family(n, 11);
            assert_eq!(family.len(), n);
        }

        let family = nested_prefix_family(100, 11);
        let patterns = family.patterns();
        // Single base: every pattern is a prefix of the longest one.
        let longest = patterns.iter().max_by_key(|p| p.len()).unwrap();
        assert!(patterns.iter().all(|p| longest.starts_with(p)));
    }

    #[test]
    fn root_fanout_grows_quadratically_with_family_size() {
        let fanout = |n: usize| {
            let family = nested_prefix_family(n, 11);
            let a = Automaton::compile(&family, Alphabet::uppercase()).unwrap();
            a.node(crate::ac::ROOT).edges.len()
        };
        assert_eq!(fanout(100), 1);
        assert_eq!(fanout(400), 2);
        assert_eq!(fanout(800), 10);
        assert_eq!(fanout(1200), 24);
    }

    #[test]
    fn family_is_deterministic_per_seed() {
        assert_eq!(
            nested_prefix_family(300, 5).patterns(),
            nested_prefix_family(300, 5).patterns()
        );
        assert_ne!(
            nested_prefix_family(300, 5).patterns(),
            nested_prefix_family(300, 6).patterns()
        );
    }
}
