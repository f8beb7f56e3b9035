use super::Error;

/// One FASTA entry after normalization: lowercase folded to uppercase,
/// whitespace stripped, every residue in `A`–`Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    /// Accession: the first whitespace-delimited token of the header.
    pub id: String,
    /// Remainder of the header line.
    pub description: String,
    pub sequence: Vec<u8>,
}

/// Parses FASTA text: `>` lines start records, subsequent lines are sequence
/// data concatenated after normalization.
pub fn parse_fasta(text: &str) -> Result<Vec<FastaRecord>, Error> {
    let mut records: Vec<FastaRecord> = Vec::new();
    let mut current: Option<FastaRecord> = None;

    for line in text.lines() {
        let line = line.trim_end();
        if let Some(header) = line.strip_prefix('>') {
            if let Some(record) = current.take() {
                records.push(finish(record)?);
            }
            let mut parts = header.splitn(2, char::is_whitespace);
            let id = parts.next().unwrap_or("").to_string();
            let description = parts.next().unwrap_or("").trim().to_string();
            current = Some(FastaRecord {
                id,
                description,
                sequence: Vec::new(),
            });
        } else {
            let record = current.as_mut().ok_or(Error::NoRecords)?;
            for byte in line.bytes() {
                if byte.is_ascii_whitespace() {
                    continue;
                }
                let upper = byte.to_ascii_uppercase();
                if !upper.is_ascii_uppercase() {
                    return Err(Error::InvalidResidue {
                        record: record.id.clone(),
                        byte,
                    });
                }
                record.sequence.push(upper);
            }
        }
    }

    if let Some(record) = current.take() {
        records.push(finish(record)?);
    }
    if records.is_empty() {
        return Err(Error::NoRecords);
    }
    Ok(records)
}

fn finish(record: FastaRecord) -> Result<FastaRecord, Error> {
    if record.sequence.is_empty() {
        return Err(Error::EmptySequence(record.id));
    }
    Ok(record)
}

/// Renders records back to FASTA, wrapping sequence lines at 60 residues.
pub fn to_fasta(records: &[FastaRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push('>');
        out.push_str(&record.id);
        if !record.description.is_empty() {
            out.push(' ');
            out.push_str(&record.description);
        }
        out.push('\n');
        for chunk in record.sequence.chunks(60) {
            out.push_str(&String::from_utf8_lossy(chunk));
            out.push('\n');
        }
    }
    out
}
