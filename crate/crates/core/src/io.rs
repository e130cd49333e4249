//! Reading and writing instance files, and the certificate store.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signed::{AltCertificate, Hypergraph, LinearOrder};

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

/// Parses JSON, reporting the line and column of the first problem.
pub fn parse_json<T: DeserializeOwned>(what: &'static str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        Error::Parse { what, line: e.line(), column: e.column(), message }
    })
}

pub fn read_json<T: DeserializeOwned>(what: &'static str, path: &Path) -> Result<T> {
    parse_json(what, &read_text(path)?)
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    read_json("hypergraph", path)
}

pub fn read_order(path: &Path) -> Result<LinearOrder> {
    read_json("ordering", path)
}

/// JSON when the file starts with `{`, the `p <n>` edge list otherwise.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('{') {
        parse_json("graph", &text)
    } else {
        Graph::parse_text(&text)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    }
    fs::write(path, text).map_err(|e| io_err(path, e))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_text(path, &to_json(value))
}

/// Certificates filed under the hash of their canonical JSON, so storing
/// the same certificate twice leaves one file.
pub struct CertificateStore {
    root: PathBuf,
}

impl CertificateStore {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        CertificateStore { root: root.into() }
    }

    pub fn key(cert: &AltCertificate) -> String {
        let canonical = serde_json::to_vec(cert).expect("certificate serializes");
        hex::encode(Sha256::digest(&canonical))
    }

    pub fn path_for(&self, cert: &AltCertificate) -> PathBuf {
        self.root.join("certificates").join(format!("{}.json", Self::key(cert)))
    }

    /// Writes the certificate unless it is already stored; returns its path.
    pub fn put(&self, cert: &AltCertificate) -> Result<PathBuf> {
        let path = self.path_for(cert);
        if !path.exists() {
            write_json(&path, cert)?;
        }
        Ok(path)
    }

    pub fn get(&self, key: &str) -> Result<AltCertificate> {
        read_json("certificate", &self.root.join("certificates").join(format!("{key}.json")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_error_has_position() {
        let err = parse_json::<Hypergraph>("hypergraph", "{\n  \"vertices\": [1, 2],\n  \"edges\": [[1,]\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_content_is_rejected() {
        assert!(parse_json::<Hypergraph>("hypergraph", r#"{"vertices":[1],"edges":[[2]]}"#).is_err());
        assert!(parse_json::<LinearOrder>("ordering", "[1, 1]").is_err());
    }

    #[test]
    fn missing_file() {
        assert!(matches!(read_hypergraph(Path::new("/nonexistent/h.json")), Err(Error::Io { .. })));
    }
}
