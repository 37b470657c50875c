//! Built-in example codes, shipped in the code file format.

use thiserror::Error;

use crate::io::{parse_input, InputFile, ParseError};

const ENTRIES: &[(&str, &str, &str)] = &[
    (
        "five-qubit",
        "[[5,1,3]] perfect qubit code",
        include_str!("../catalog/five-qubit.code"),
    ),
    (
        "four-two-two",
        "[[4,2,2]] error-detecting qubit code",
        include_str!("../catalog/four-two-two.code"),
    ),
    (
        "shor",
        "[[9,1,3]] Shor code (impure)",
        include_str!("../catalog/shor.code"),
    ),
    (
        "qutrit-repetition",
        "three-qutrit repetition code",
        include_str!("../catalog/qutrit-repetition.code"),
    ),
    (
        "full-space-m2-n2",
        "the whole two-qubit space, given by a basis",
        include_str!("../catalog/full-space-m2-n2.code"),
    ),
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("no catalog entry named `{0}` (known: {known})", known = names().join(", "))]
    Unknown(String),
    #[error("catalog entry `{name}` is malformed: {source}")]
    Malformed { name: String, source: ParseError },
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.0).collect()
}

/// `(name, description)` pairs.
pub fn entries() -> impl Iterator<Item = (&'static str, &'static str)> {
    ENTRIES.iter().map(|e| (e.0, e.1))
}

/// Raw file text of an entry.
pub fn source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|e| e.0 == name).map(|e| e.2)
}

pub fn load(name: &str) -> Result<InputFile, CatalogError> {
    let text = source(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    parse_input(text).map_err(|source| CatalogError::Malformed {
        name: name.to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for name in names() {
            let code = load(name).unwrap().into_code().unwrap();
            assert!(code.n() >= 2, "{name}");
        }
        assert!(matches!(load("nope"), Err(CatalogError::Unknown(_))));
    }
}
