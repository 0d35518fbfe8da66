//! The presentation file format and its canonical serialization.
//!
//! A presentation file is a TOML document with two keys:
//!
//! ```toml
//! generators = ["a", "b", "c"]
//! commuting_pairs = [
//!     ["a", "c"],
//!     ["b", "c"],
//! ]
//! ```
//!
//! The generator order in the file is the ShortLex order used everywhere
//! else. A pair being absent means the product of the two generators has
//! infinite order, so the document above describes the full system. The
//! canonical serialization sorts each pair and the pair list by generator
//! order; the digest every command reports is computed from it, so files
//! that differ only in comments or pair order get the same digest.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use racg::Presentation;

use crate::commands::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    generators: Vec<String>,
    #[serde(default)]
    commuting_pairs: Vec<(String, String)>,
}

/// Read and validate a presentation file.
pub fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Parse a presentation document. TOML syntax errors come back with line
/// and column positions; semantic errors name the offending generator.
pub fn parse(text: &str) -> Result<Presentation, String> {
    let file: PresentationFile = toml::from_str(text).map_err(|e| e.to_string())?;
    let mut seen: HashSet<(String, String)> = HashSet::new();
    for (a, b) in &file.commuting_pairs {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if !seen.insert(key) {
            return Err(format!("duplicate commuting pair [{a:?}, {b:?}]"));
        }
    }
    let names: Vec<&str> = file.generators.iter().map(String::as_str).collect();
    let pairs: Vec<(&str, &str)> = file
        .commuting_pairs
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Presentation::new(&names, &pairs).map_err(|e| e.to_string())
}

/// The canonical serialization: generators in declared order, pairs sorted
/// by generator order, one pair per line.
pub fn canonical(p: &Presentation) -> String {
    let mut out = String::from("generators = [");
    for (i, name) in p.names().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&quote(name));
    }
    out.push_str("]\n");
    let pairs = p.commuting_pairs();
    if pairs.is_empty() {
        out.push_str("commuting_pairs = []\n");
    } else {
        out.push_str("commuting_pairs = [\n");
        for (s, t) in pairs {
            out.push_str("    [");
            out.push_str(&quote(p.name(s)));
            out.push_str(", ");
            out.push_str(&quote(p.name(t)));
            out.push_str("],\n");
        }
        out.push_str("]\n");
    }
    out
}

/// First twelve hex digits of the SHA-256 of the canonical serialization.
pub fn digest(p: &Presentation) -> String {
    let hash = Sha256::digest(canonical(p).as_bytes());
    hash[..6].iter().map(|b| format!("{b:02x}")).collect()
}

fn quote(name: &str) -> String {
    let mut q = String::from("\"");
    for ch in name.chars() {
        match ch {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            c if c.is_control() => q.push_str(&format!("\\u{:04X}", c as u32)),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}
