use super::Error;
use std::collections::HashSet;
use std::str::FromStr;

/// Cleavage enzyme. Only trypsin is implemented: cleave after `K` or `R`
/// unless the next residue is `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Enzyme {
    #[default]
    Trypsin,
}

impl FromStr for Enzyme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "trypsin" => Ok(Enzyme::Trypsin),
            other => Err(Error::UnsupportedEnzyme(other.to_string())),
        }
    }
}

/// Digestion configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigestParams {
    pub enzyme: Enzyme,
    /// How many adjacent fragments may be joined (0..=3).
    pub missed_cleavages: u8,
    pub min_len: usize,
    pub max_len: Option<usize>,
    /// Drop peptides whose sequence was already emitted.
    pub dedupe: bool,
}

impl Default for DigestParams {
    fn default() -> Self {
        DigestParams {
            enzyme: Enzyme::Trypsin,
            missed_cleavages: 0,
            min_len: 1,
            max_len: None,
            dedupe: false,
        }
    }
}

impl DigestParams {
    fn validate(&self) -> Result<(), Error> {
        if self.missed_cleavages > 3 {
            return Err(Error::InvalidDigestParams(format!(
                "missed_cleavages {} exceeds the supported maximum of 3",
                self.missed_cleavages
            )));
        }
        if let Some(max) = self.max_len {
            if self.min_len > max {
                return Err(Error::InvalidDigestParams(format!(
                    "min_len {} exceeds max_len {max}",
                    self.min_len
                )));
            }
        }
        Ok(())
    }
}

/// A digestion product with its position in the source protein.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peptide {
    /// 0-based start offset within the protein sequence.
    pub start: usize,
    pub sequence: Vec<u8>,
}

/// Digests one normalized sequence.
///
/// Base fragments come from cleaving after `K`/`R` not followed by `P`; with
/// `m` missed cleavages every concatenation of up to `m + 1` consecutive
/// fragments is also emitted. Output order is by missed-cleavage count, then
/// by start position, so the plain fragments always come first.
pub fn digest(seq: &[u8], params: &DigestParams) -> Result<Vec<Peptide>, Error> {
    params.validate()?;
    let Enzyme::Trypsin = params.enzyme;

    // Fragment boundaries: start offsets of each base fragment plus the end.
    let mut starts = vec![0];
    for i in 0..seq.len() {
        let cleaves = matches!(seq[i], b'K' | b'R') && seq.get(i + 1) != Some(&b'P');
        if cleaves && i + 1 < seq.len() {
            starts.push(i + 1);
        }
    }
    starts.push(seq.len());

    let fragment_count = starts.len() - 1;
    let mut peptides = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for missed in 0..=params.missed_cleavages as usize {
        if missed >= fragment_count {
            break;
        }
        for first in 0..fragment_count - missed {
            let start = starts[first];
            let end = starts[first + missed + 1];
            let len = end - start;
            if len < params.min_len || params.max_len.is_some_and(|max| len > max) {
                continue;
            }
            let sequence = seq[start..end].to_vec();
            if params.dedupe && !seen.insert(sequence.clone()) {
                continue;
            }
            peptides.push(Peptide { start, sequence });
        }
    }
    Ok(peptides)
}
