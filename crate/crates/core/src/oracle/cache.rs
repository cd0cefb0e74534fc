//! On-disk cache of Turán oracle results.
//!
//! One JSON file per query, named by a SHA-256 digest of the order and the
//! sorted canonical keys of the forbidden family.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::turan::{turan_oracle, TuranDoc, TuranResult};
use crate::error::Result;
use crate::graph::{canonical_key, Graph};

#[derive(Debug, Clone)]
pub struct OracleCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    order: usize,
    family: Vec<String>,
    result: TuranDoc,
}

impl OracleCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        OracleCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn family_keys(family: &[Graph]) -> Vec<String> {
        let mut keys: Vec<String> = family.iter().map(|g| canonical_key(g).to_hex()).collect();
        keys.sort();
        keys.dedup();
        keys
    }

    fn path(&self, order: usize, keys: &[String]) -> PathBuf {
        let mut h = Sha256::new();
        h.update(order.to_le_bytes());
        for k in keys {
            h.update(k.as_bytes());
            h.update(b"\n");
        }
        self.dir.join(format!("turan-{}.json", hex::encode(h.finalize())))
    }

    pub fn get(&self, order: usize, family: &[Graph]) -> Option<TuranResult> {
        let keys = Self::family_keys(family);
        let text = fs::read_to_string(self.path(order, &keys)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.order != order || entry.family != keys {
            return None;
        }
        TuranResult::from_doc(&entry.result).ok()
    }

    pub fn put(&self, order: usize, family: &[Graph], result: &TuranResult) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let keys = Self::family_keys(family);
        let path = self.path(order, &keys);
        let entry = Entry {
            order,
            family: keys,
            result: result.to_doc(),
        };
        let text = serde_json::to_string_pretty(&entry).expect("serializable");
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// Cached result, computing and storing it on a miss. The flag reports
    /// whether the cache answered.
    pub fn turan(&self, order: usize, family: &[Graph]) -> Result<(TuranResult, bool)> {
        if let Some(r) = self.get(order, family) {
            return Ok((r, true));
        }
        let r = turan_oracle(order, family)?;
        self.put(order, family, &r)?;
        Ok((r, false))
    }
}
