use super::PatternId;

/// An ordered list of keyword byte strings.
///
/// Pattern ids are the dense indices `0..len()` in input order. Duplicate
/// strings are allowed and keep their distinct ids, so a peptide that occurs
/// twice in a digestion list is reported twice with its own provenance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Vec<u8>>,
}

impl PatternSet {
    pub fn new(patterns: Vec<Vec<u8>>) -> Self {
        PatternSet { patterns }
    }

    pub fn from_strs(patterns: &[&str]) -> Self {
        PatternSet {
            patterns: patterns.iter().map(|p| p.as_bytes().to_vec()).collect(),
        }
    }

    /// Parses the pattern-file format: one pattern per line, blank lines and
    /// lines starting with `#` ignored.
    pub fn from_lines(text: &str) -> Self {
        let patterns = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty() && !line.starts_with('#'))
            .map(|line| line.as_bytes().to_vec())
            .collect();
        PatternSet { patterns }
    }

    /// Serializes back to the pattern-file format, one pattern per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for p in &self.patterns {
            out.push_str(&String::from_utf8_lossy(p));
            out.push('\n');
        }
        out
    }

    pub fn push(&mut self, pattern: Vec<u8>) {
        self.patterns.push(pattern);
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, id: PatternId) -> Option<&[u8]> {
        self.patterns.get(id as usize).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.patterns.iter().map(Vec::as_slice)
    }

    pub fn patterns(&self) -> &[Vec<u8>] {
        &self.patterns
    }

    pub fn into_patterns(self) -> Vec<Vec<u8>> {
        self.patterns
    }
}

impl From<Vec<Vec<u8>>> for PatternSet {
    fn from(patterns: Vec<Vec<u8>>) -> Self {
        PatternSet::new(patterns)
    }
}
