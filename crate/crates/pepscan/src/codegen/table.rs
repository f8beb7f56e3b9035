use super::Error;
use crate::ac::{Alphabet, Automaton, PatternSet, StateId};
use serde::{Deserialize, Serialize};

/// JSON twin of a dense-compiled automaton.
///
/// Field-for-field equal to the in-memory machine: `delta` holds one row per
/// state with one column per alphabet symbol plus a trailing sentinel
/// column, `outputs` the merged pattern ids per state, `patterns` the
/// original keyword list. State ids follow construction order (patterns
/// inserted in list order), so regenerating from `patterns` reproduces the
/// exact table; `load_table` relies on that to verify consistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableArtifact {
    pub alphabet: String,
    pub sentinel: char,
    pub state_count: u32,
    pub pattern_count: u32,
    pub delta: Vec<Vec<u32>>,
    pub outputs: Vec<Vec<u32>>,
    pub patterns: Vec<String>,
}

/// Serializes a dense-compiled automaton into its JSON twin.
pub fn generate_table(automaton: &Automaton) -> TableArtifact {
    let dense = automaton
        .dense()
        .expect("generate_table requires a dense-compiled automaton");
    let states = automaton.state_count();

    TableArtifact {
        alphabet: String::from_utf8_lossy(automaton.alphabet().symbols()).into_owned(),
        sentinel: automaton.alphabet().sentinel() as char,
        state_count: states as u32,
        pattern_count: automaton.pattern_count() as u32,
        delta: (0..states as StateId)
            .map(|s| dense.row(s).to_vec())
            .collect(),
        outputs: (0..states as StateId)
            .map(|s| automaton.node(s).outputs.clone())
            .collect(),
        patterns: automaton
            .patterns()
            .iter()
            .map(|p| String::from_utf8_lossy(p).into_owned())
            .collect(),
    }
}

impl TableArtifact {
    /// Canonical JSON rendering: fixed key order, two-space indentation,
    /// trailing newline. Byte-stable across runs.
    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("artifact serializes");
        json.push('\n');
        json
    }

    /// Parses and schema-checks artifact JSON, reporting the path of the
    /// offending element on failure.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let deserializer = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(deserializer).map_err(|e| Error::SchemaError {
            path: e.path().to_string(),
            reason: e.inner().to_string(),
        })
    }
}

/// Reconstructs an [`Automaton`] from its JSON twin.
///
/// The automaton is rebuilt from the artifact's pattern list and the rebuilt
/// dense table is compared element-wise against the artifact; any
/// disagreement (out-of-range state ids, edited delta rows, mismatched
/// outputs) is rejected as [`Error::InconsistentTable`].
pub fn load_table(artifact: &TableArtifact) -> Result<Automaton, Error> {
    let inconsistent = |reason: String| Error::InconsistentTable(reason);

    if !artifact.sentinel.is_ascii() {
        return Err(inconsistent(format!(
            "sentinel {:?} is not an ASCII byte",
            artifact.sentinel
        )));
    }
    if !artifact.alphabet.is_ascii() {
        return Err(inconsistent("alphabet must be ASCII".to_string()));
    }
    let alphabet = Alphabet::new(artifact.alphabet.as_bytes(), artifact.sentinel as u8)
        .map_err(|e| inconsistent(e.to_string()))?;

    let states = artifact.state_count as usize;
    let columns = alphabet.column_count();
    if artifact.patterns.len() != artifact.pattern_count as usize {
        return Err(inconsistent(format!(
            "pattern_count {} disagrees with {} listed patterns",
            artifact.pattern_count,
            artifact.patterns.len()
        )));
    }
    if artifact.delta.len() != states {
        return Err(inconsistent(format!(
            "delta has {} rows for {states} states",
            artifact.delta.len()
        )));
    }
    if artifact.outputs.len() != states {
        return Err(inconsistent(format!(
            "outputs has {} rows for {states} states",
            artifact.outputs.len()
        )));
    }
    for (s, row) in artifact.delta.iter().enumerate() {
        if row.len() != columns {
            return Err(inconsistent(format!(
                "delta row {s} has {} columns, expected {columns}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&t| t as usize >= states) {
            return Err(inconsistent(format!(
                "delta value {bad} in row {s} is out of range (state count {states})"
            )));
        }
    }
    for (s, ids) in artifact.outputs.iter().enumerate() {
        if let Some(&bad) = ids.iter().find(|&&id| id >= artifact.pattern_count) {
            return Err(inconsistent(format!(
                "output id {bad} in state {s} is out of range (pattern count {})",
                artifact.pattern_count
            )));
        }
    }

    let patterns = PatternSet::new(
        artifact
            .patterns
            .iter()
            .map(|p| p.as_bytes().to_vec())
            .collect(),
    );
    let automaton =
        Automaton::compile(&patterns, alphabet).map_err(|e| inconsistent(e.to_string()))?;

    if automaton.state_count() != states {
        return Err(inconsistent(format!(
            "patterns rebuild into {} states, artifact claims {states}",
            automaton.state_count()
        )));
    }
    let dense = automaton.dense().expect("compile produced a dense table");
    for s in 0..states {
        if dense.row(s as StateId) != artifact.delta[s].as_slice() {
            return Err(inconsistent(format!(
                "delta row {s} does not match the table rebuilt from the pattern list"
            )));
        }
        if automaton.node(s as StateId).outputs != artifact.outputs[s] {
            return Err(inconsistent(format!(
                "outputs of state {s} do not match the table rebuilt from the pattern list"
            )));
        }
    }

    Ok(automaton)
}
