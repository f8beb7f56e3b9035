use super::{Error, FastaRecord};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The 20 canonical amino acids, used for synthetic sequences.
pub(crate) const CANONICAL_RESIDUES: &[u8; 20] = b"ACDEFGHIKLMNPQRSTVWY";

/// Generates a deterministic synthetic protein set with exactly
/// `total_residues` residues spread over `record_count` records.
///
/// Published reference experiments report only total residue counts per
/// protein set, and the original selections are not recoverable; this
/// generator produces seeded stand-ins with matching totals so timing tables
/// can be reproduced dataset-independently. Record lengths vary around the
/// mean; residues are uniform over the 20 canonical amino acids.
pub fn synth_corpus(
    record_count: usize,
    total_residues: usize,
    seed: u64,
) -> Result<Vec<FastaRecord>, Error> {
    if record_count == 0 || total_residues < record_count {
        return Err(Error::InfeasibleSynthesis {
            records: record_count,
            total: total_residues,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Length split: random weights in [0.5, 1.5) scaled to the target total,
    // with the last record absorbing rounding drift.
    let weights: Vec<f64> = (0..record_count)
        .map(|_| rng.random_range(0.5..1.5))
        .collect();
    let weight_sum: f64 = weights.iter().sum();
    let mut lengths = Vec::with_capacity(record_count);
    let mut assigned = 0usize;
    for (i, w) in weights.iter().enumerate() {
        let remaining_records = record_count - i;
        let remaining = total_residues - assigned;
        let len = if i + 1 == record_count {
            remaining
        } else {
            let ideal = (w / weight_sum * total_residues as f64).round() as usize;
            // Keep at least one residue for every record still to come.
            ideal.clamp(1, remaining.saturating_sub(remaining_records - 1).max(1))
        };
        lengths.push(len);
        assigned += len;
    }

    let digits = record_count.to_string().len().max(4);
    let records = lengths
        .into_iter()
        .enumerate()
        .map(|(i, len)| {
            let sequence = (0..len)
                .map(|_| CANONICAL_RESIDUES[rng.random_range(0..CANONICAL_RESIDUES.len())])
                .collect();
            FastaRecord {
                id: format!("SYN{:0digits$}", i + 1),
                description: format!("synthetic protein {} of {record_count}", i + 1),
                sequence,
            }
        })
        .collect();
    Ok(records)
}
