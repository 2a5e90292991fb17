//! Quiver and word ingestion.

use std::collections::BTreeSet;
use std::path::Path;

use rootloop_core::{fixtures, MutationWord, QuiverFile, ValuedQuiver};

use crate::error::CliError;

/// Parses a quiver file. Syntax and shape errors are parse errors;
/// violated quiver invariants are reported separately.
pub fn parse_quiver(text: &str) -> Result<ValuedQuiver, CliError> {
    let file: QuiverFile = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("malformed quiver file: {e}")))?;
    Ok(ValuedQuiver::try_from(file)?)
}

/// A builtin name (`a2`, `d4`, ...) or a path to a quiver file.
pub fn load_quiver(spec: &str) -> Result<ValuedQuiver, CliError> {
    if let Some(q) = fixtures::builtin(spec) {
        return Ok(q);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Parse(format!(
            "{spec:?} is neither a builtin ({}) nor a readable file",
            fixtures::BUILTIN_NAMES.join(", ")
        )));
    }
    parse_quiver(&std::fs::read_to_string(path)?)
}

/// 1-based comma-separated vertex list, e.g. `1,2,3`.
pub fn parse_vertex_set(text: &str) -> Result<BTreeSet<usize>, CliError> {
    let w: MutationWord = text.parse()?;
    Ok(w.steps().iter().copied().collect())
}

/// Loads a quiver and freezes the complement of `mutable` when given.
pub fn quiver_with_mutable(spec: &str, mutable: Option<&str>) -> Result<ValuedQuiver, CliError> {
    let q = load_quiver(spec)?;
    match mutable {
        Some(m) => Ok(q.freeze(&parse_vertex_set(m)?)?),
        None => Ok(q),
    }
}

/// Parses a word and checks it against the quiver.
pub fn parse_word(text: &str, q: &ValuedQuiver) -> Result<MutationWord, CliError> {
    let w: MutationWord = text.parse()?;
    for &k in w.steps() {
        if k >= q.n() {
            return Err(CliError::Invariant(format!(
                "vertex {} out of range 1..={}",
                k + 1,
                q.n()
            )));
        }
        if q.is_frozen(k) {
            return Err(CliError::Invariant(format!("vertex {} is frozen", k + 1)));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_files() {
        let q =
            parse_quiver(r#"{"n": 2, "edges": [{"from": 1, "to": 2, "val": [1, 2]}]}"#).unwrap();
        assert_eq!(q.symmetrizer(), &[2, 1]);
        assert!(matches!(parse_quiver("{n: 2}"), Err(CliError::Parse(_))));
        assert!(matches!(
            parse_quiver(r#"{"n": 2, "edges": [{"from": 1, "to": 1, "val": [1, 1]}]}"#),
            Err(CliError::Invariant(_))
        ));
        assert!(matches!(
            load_quiver("no-such-quiver"),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn words_are_checked() {
        let q = fixtures::a2();
        assert_eq!(parse_word("1,2", &q).unwrap().steps(), &[0, 1]);
        assert!(matches!(parse_word("3", &q), Err(CliError::Invariant(_))));
        assert!(matches!(parse_word("x", &q), Err(CliError::Parse(_))));
        let frozen = quiver_with_mutable("a3", Some("1,2")).unwrap();
        assert!(matches!(
            parse_word("3", &frozen),
            Err(CliError::Invariant(_))
        ));
    }
}
