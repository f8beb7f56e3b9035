use super::{Error, FastaRecord};
use serde::Serialize;

/// Protein records concatenated into one scan text, with a boundary map from
/// scan-text offsets back to records.
#[derive(Debug, Clone)]
pub struct ProteinCorpus {
    records: Vec<FastaRecord>,
    sentinel: u8,
    scan_text: Vec<u8>,
    /// Per record: (start, end) of its slice in `scan_text`, end exclusive.
    spans: Vec<(usize, usize)>,
}

impl ProteinCorpus {
    pub fn records(&self) -> &[FastaRecord] {
        &self.records
    }

    pub fn sentinel(&self) -> u8 {
        self.sentinel
    }

    /// Sequences joined by single sentinel bytes.
    pub fn scan_text(&self) -> &[u8] {
        &self.scan_text
    }

    /// Maps a scan-text offset to `(record index, offset within record)`.
    /// Sentinel positions belong to no record.
    pub fn locate(&self, offset: usize) -> Option<(usize, usize)> {
        let idx = self.spans.partition_point(|&(_, end)| end <= offset);
        let &(start, end) = self.spans.get(idx)?;
        (offset >= start && offset < end).then(|| (idx, offset - start))
    }

    pub fn spans(&self) -> &[(usize, usize)] {
        &self.spans
    }

    pub fn residue_count(&self) -> usize {
        self.records.iter().map(|r| r.sequence.len()).sum()
    }
}

/// Concatenates records into a scan text with sentinel separators.
pub fn build_corpus(records: Vec<FastaRecord>, sentinel: u8) -> Result<ProteinCorpus, Error> {
    if records.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if sentinel.is_ascii_uppercase() {
        return Err(Error::SentinelInAlphabet(sentinel));
    }

    let total: usize = records.iter().map(|r| r.sequence.len()).sum();
    let mut scan_text = Vec::with_capacity(total + records.len() - 1);
    let mut spans = Vec::with_capacity(records.len());
    for (i, record) in records.iter().enumerate() {
        if i > 0 {
            scan_text.push(sentinel);
        }
        let start = scan_text.len();
        scan_text.extend_from_slice(&record.sequence);
        spans.push((start, scan_text.len()));
    }

    Ok(ProteinCorpus {
        records,
        sentinel,
        scan_text,
        spans,
    })
}

/// Corpus size summary. `residue_count` excludes sentinel separators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub record_count: usize,
    pub residue_count: usize,
    pub record_lengths: Vec<RecordLength>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordLength {
    pub id: String,
    pub residues: usize,
}

pub fn corpus_stats(corpus: &ProteinCorpus) -> CorpusStats {
    CorpusStats {
        record_count: corpus.records().len(),
        residue_count: corpus.residue_count(),
        record_lengths: corpus
            .records()
            .iter()
            .map(|r| RecordLength {
                id: r.id.clone(),
                residues: r.sequence.len(),
            })
            .collect(),
    }
}

impl CorpusStats {
    /// Aligned-text rendering, one record per row plus a total line.
    pub fn to_text_table(&self) -> String {
        let id_width = self
            .record_lengths
            .iter()
            .map(|r| r.id.len())
            .chain(["record".len()])
            .max()
            .unwrap_or(6);
        let mut out = format!("{:<id_width$}  residues\n", "record");
        for record in &self.record_lengths {
            out.push_str(&format!("{:<id_width$}  {}\n", record.id, record.residues));
        }
        out.push_str(&format!(
            "{:<id_width$}  {} ({} records)\n",
            "total", self.residue_count, self.record_count
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, seq: &[u8]) -> FastaRecord {
        FastaRecord {
            id: id.to_string(),
            description: String::new(),
            sequence: seq.to_vec(),
        }
    }

    #[test]
    fn two_records_join_with_one_sentinel() {
        let corpus = build_corpus(vec![record("A", b"MK"), record("B", b"RP")], b'#').unwrap();
        assert_eq!(corpus.scan_text(), b"MK#RP");
        assert_eq!(corpus.scan_text().len(), 5);
    }

    #[test]
    fn single_record_has_no_sentinel() {
        let corpus = build_corpus(vec![record("A", b"MKRP")], b'#').unwrap();
        assert_eq!(corpus.scan_text(), b"MKRP");
    }

    #[test]
    fn sentinel_must_not_be_a_residue() {
        let err = build_corpus(vec![record("A", b"MK")], b'K').unwrap_err();
        assert_eq!(err, Error::SentinelInAlphabet(b'K'));
    }

    #[test]
    fn empty_corpus_is_rejected() {
        assert_eq!(build_corpus(vec![], b'#').unwrap_err(), Error::EmptyCorpus);
    }

    #[test]
    fn locate_maps_offsets_to_records() {
        let corpus = build_corpus(
            vec![record("A", b"MK"), record("B", b"RP"), record("C", b"W")],
            b'#',
        )
        .unwrap();
        // scan text: M K # R P # W
        assert_eq!(corpus.locate(0), Some((0, 0)));
        assert_eq!(corpus.locate(1), Some((0, 1)));
        assert_eq!(corpus.locate(2), None); // sentinel
        assert_eq!(corpus.locate(3), Some((1, 0)));
        assert_eq!(corpus.locate(4), Some((1, 1)));
        assert_eq!(corpus.locate(6), Some((2, 0)));
        assert_eq!(corpus.locate(7), None); // past the end
    }

    #[test]
    fn stats_exclude_sentinels() {
        let corpus = build_corpus(
            vec![
                record("A", &[b'A'; 5]),
                record("B", &[b'C'; 7]),
                record("C", &[b'D'; 11]),
            ],
            b'#',
        )
        .unwrap();
        let stats = corpus_stats(&corpus);
        assert_eq!(stats.record_count, 3);
        assert_eq!(stats.residue_count, 23);
        assert_eq!(corpus.scan_text().len(), 25);

        let table = stats.to_text_table();
        assert!(table.contains("23 (3 records)"));
    }
}
