use super::{reference::REFERENCE, Error};
use crate::ac::{Alphabet, Automaton, PatternSet};
use crate::bio::{build_corpus, synth_corpus, ProteinCorpus};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fallback mean protein length for set sizes the reference tables do not
/// cover.
const MEAN_PROTEIN_LEN: usize = 450;

/// Residues synthetic patterns are drawn from (the 20 canonical amino
/// acids, matching the corpus generator).
const PATTERN_RESIDUES: &[u8; 20] = b"ACDEFGHIKLMNPQRSTVWY";

/// Pattern chain length: each base string contributes prefixes of length
/// 2..=CHAIN_LEN+1.
const CHAIN_LEN: usize = 30;

/// First-residue coverage per pattern-set size, interpolated linearly
/// between anchors.
///
/// This schedule is the shape parameter of the calibration workload: root
/// fan-out (and with it the sparse engine's per-character edge-scan cost)
/// grows with set size along this curve, which makes the two-constant
/// software cost model reproduce the published timing table. The anchor
/// values were chosen by minimizing the calibration residuals; they are
/// workload calibration data, not measurements.
const COVERAGE_ANCHORS: [(usize, f64); 6] = [
    (1, 1.0),
    (100, 2.0),
    (500, 4.0),
    (1000, 8.0),
    (1200, 20.0),
    (2600, 20.0),
];

/// Everything one benchmark run scans and matches: one corpus per protein
/// set size and one compiled automaton per peptide set size. Fully
/// determined by the sizes and the seed.
#[derive(Debug)]
pub struct Workload {
    pub protein_set_sizes: Vec<usize>,
    pub peptide_set_sizes: Vec<usize>,
    pub corpora: Vec<ProteinCorpus>,
    pub peptide_sets: Vec<PatternSet>,
    pub automata: Vec<Automaton>,
}

/// Scan-text residue total for a protein set size: the reference length when
/// the size appears in the reference tables, otherwise proportional to the
/// set size.
pub fn text_length_for(proteins: usize) -> usize {
    REFERENCE
        .text_length_of(proteins)
        .unwrap_or(proteins * MEAN_PROTEIN_LEN)
}

/// Builds the deterministic synthetic workload for a size grid.
pub fn build_workload(
    protein_set_sizes: &[usize],
    peptide_set_sizes: &[usize],
    seed: u64,
) -> Result<Workload, Error> {
    let mut corpora = Vec::with_capacity(protein_set_sizes.len());
    for (i, &proteins) in protein_set_sizes.iter().enumerate() {
        let records = synth_corpus(
            proteins,
            text_length_for(proteins),
            subseed(seed, 1 + i as u64),
        )?;
        corpora.push(build_corpus(records, b'#')?);
    }

    let mut peptide_sets = Vec::with_capacity(peptide_set_sizes.len());
    let mut automata = Vec::with_capacity(peptide_set_sizes.len());
    for &peptides in peptide_set_sizes {
        let set = scheduled_pattern_set(peptides, subseed(seed, 0x5050));
        let automaton = Automaton::compile(&set, Alphabet::uppercase())?;
        peptide_sets.push(set);
        automata.push(automaton);
    }

    Ok(Workload {
        protein_set_sizes: protein_set_sizes.to_vec(),
        peptide_set_sizes: peptide_set_sizes.to_vec(),
        corpora,
        peptide_sets,
        automata,
    })
}

/// First-residue coverage for a pattern-set size (see [`COVERAGE_ANCHORS`]).
pub(crate) fn first_residue_coverage(pattern_count: usize) -> usize {
    let n = pattern_count as f64;
    let (first, last) = (
        COVERAGE_ANCHORS[0],
        COVERAGE_ANCHORS[COVERAGE_ANCHORS.len() - 1],
    );
    let raw = if pattern_count <= first.0 {
        first.1
    } else if pattern_count >= last.0 {
        last.1
    } else {
        let right = COVERAGE_ANCHORS
            .iter()
            .position(|&(size, _)| size as f64 >= n)
            .expect("n is below the last anchor");
        let (x0, y0) = COVERAGE_ANCHORS[right - 1];
        let (x1, y1) = COVERAGE_ANCHORS[right];
        y0 + (y1 - y0) * (n - x0 as f64) / (x1 as f64 - x0 as f64)
    };
    (raw.round() as usize).clamp(1, PATTERN_RESIDUES.len())
}

/// Builds one synthetic pattern set of `pattern_count` patterns.
///
/// Patterns are prefixes (length ≥ 2) of random base strings; bases start
/// with the first `first_residue_coverage(pattern_count)` canonical
/// residues, spread evenly, with as few bases per residue as the chain
/// length allows. Scan cost over a uniform text is then dominated by root
/// fan-out, which follows the coverage schedule.
pub fn scheduled_pattern_set(pattern_count: usize, seed: u64) -> PatternSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut patterns = Vec::with_capacity(pattern_count);
    if pattern_count == 0 {
        return PatternSet::new(patterns);
    }

    // Exact per-residue quotas so every scheduled residue is represented.
    let coverage = first_residue_coverage(pattern_count).min(pattern_count);
    let base_quota = pattern_count / coverage;
    let remainder = pattern_count % coverage;

    for (residue_index, &first) in PATTERN_RESIDUES[..coverage].iter().enumerate() {
        let quota = base_quota + usize::from(residue_index < remainder);
        let mut emitted = 0;
        while emitted < quota {
            let chain = CHAIN_LEN.min(quota - emitted);
            let mut base = Vec::with_capacity(chain + 1);
            base.push(first);
            for _ in 0..chain {
                base.push(PATTERN_RESIDUES[rng.random_range(0..PATTERN_RESIDUES.len())]);
            }
            for len in 2..=chain + 1 {
                patterns.push(base[..len].to_vec());
            }
            emitted += chain;
        }
    }
    debug_assert_eq!(patterns.len(), pattern_count);
    PatternSet::new(patterns)
}

/// Derives an independent sub-seed per workload component (splitmix64 step).
pub(crate) fn subseed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
