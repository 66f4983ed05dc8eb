//! Bundled registries: the dual numbers k[t]/(t^2), the truncated cubic
//! k[t]/(t^3), and the path algebras of the A_2 and A_3 quivers, each with
//! simples, indecomposable projectives and truncation modules, X = projectives.
//!
//! `HOMQUOT_FIXTURES` may point at a directory of replacement JSON files.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::registry::ObjectRegistry;

pub const FIXTURE_NAMES: [&str; 4] = ["kt2", "kt3", "a2", "a3"];

pub const FIXTURES_ENV: &str = "HOMQUOT_FIXTURES";

pub fn bundled_source(name: &str) -> Result<String> {
    if let Ok(dir) = std::env::var(FIXTURES_ENV) {
        let path: PathBuf = [dir.as_str(), &format!("{name}.json")].iter().collect();
        if path.exists() {
            return Ok(std::fs::read_to_string(path)?);
        }
    }
    let text = match name {
        "kt2" => include_str!("../fixtures/kt2.json"),
        "kt3" => include_str!("../fixtures/kt3.json"),
        "a2" => include_str!("../fixtures/a2.json"),
        "a3" => include_str!("../fixtures/a3.json"),
        _ => return Err(Error::UnknownObject(format!("fixture `{name}`"))),
    };
    Ok(text.to_string())
}

pub fn load_bundled(name: &str, p_override: Option<u64>) -> Result<ObjectRegistry> {
    ObjectRegistry::from_json(&bundled_source(name)?, p_override)
}

/// Try `arg` as a path first, then as a bundled fixture name.
pub fn load_path_or_bundled(arg: &str, p_override: Option<u64>) -> Result<ObjectRegistry> {
    let path = std::path::Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return ObjectRegistry::from_json(&text, p_override);
    }
    load_bundled(arg, p_override)
}
