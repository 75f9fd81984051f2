//! Run manifests: enough to rerun a command and check its outputs.
//!
//! Timestamps honour `SOURCE_DATE_EPOCH`, so a manifest is byte-identical
//! across reruns when that variable is set.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

impl FileDigest {
    pub fn of(path: impl Into<String>, bytes: &[u8]) -> Self {
        FileDigest {
            path: path.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub command: String,
    pub inputs: Vec<FileDigest>,
    pub rooms: Option<usize>,
    pub capacity: Option<usize>,
    pub seed: Option<u64>,
    pub method: Option<String>,
    pub budget: Option<usize>,
    /// Any other arguments that affect the result.
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub outputs: Vec<FileDigest>,
}

impl RunManifest {
    pub fn start(command: &str) -> Self {
        RunManifest {
            tool: format!("roomalloc {}", env!("CARGO_PKG_VERSION")),
            command: command.to_string(),
            inputs: Vec::new(),
            rooms: None,
            capacity: None,
            seed: None,
            method: None,
            budget: None,
            parameters: BTreeMap::new(),
            started_unix: now_unix(),
            finished_unix: 0,
            outputs: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("parameter serializes");
        self.parameters.insert(key.to_string(), v);
    }

    pub fn finish(&mut self) {
        self.finished_unix = now_unix();
    }
}

fn now_unix() -> u64 {
    if let Some(epoch) = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|v| v.trim().parse().ok())
    {
        return epoch;
    }
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}
