//! On-disk cache for enumeration results, keyed by a SHA-256 digest of the
//! generator matrix and the operation name.
//!
//! Each entry is a JSON document carrying a format version, the matrix
//! digest, the operation, its parameters and the result. A stored entry
//! whose version, digest or parameters disagree with the request is
//! reported as [`Error::CacheMismatch`] rather than silently reused.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::{
    codewords_of_weight, weight_distribution, CodewordSet, LinearCode, WeightDistribution,
};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub const CACHE_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "QRLAB_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct Entry<T> {
    version: u32,
    matrix_hash: String,
    operation: String,
    params: Value,
    result: T,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$QRLAB_CACHE_DIR`, else `$XDG_CACHE_HOME/qrlab`, else
    /// `$HOME/.cache/qrlab`, else a directory under the system temp dir.
    pub fn from_env() -> Self {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
            return Self::new(dir);
        }
        if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME") {
            return Self::new(Path::new(&xdg).join("qrlab"));
        }
        if let Some(home) = std::env::var_os("HOME") {
            return Self::new(Path::new(&home).join(".cache").join("qrlab"));
        }
        Self::new(std::env::temp_dir().join("qrlab-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn matrix_hash(generator: &BitMatrix) -> String {
        let mut h = Sha256::new();
        h.update((generator.num_rows() as u64).to_le_bytes());
        h.update((generator.num_cols() as u64).to_le_bytes());
        for row in generator.rows() {
            for w in row.words() {
                h.update(w.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }

    pub fn entry_path(&self, matrix_hash: &str, operation: &str) -> PathBuf {
        self.dir.join(format!("{matrix_hash}-{operation}.json"))
    }

    pub fn load<T: DeserializeOwned>(
        &self,
        generator: &BitMatrix,
        operation: &str,
        params: &Value,
    ) -> Result<Option<T>> {
        let hash = Self::matrix_hash(generator);
        let path = self.entry_path(&hash, operation);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mismatch = |message: String| Error::CacheMismatch {
            path: path.clone(),
            message,
        };
        let entry: Entry<T> =
            serde_json::from_str(&text).map_err(|e| mismatch(format!("unreadable entry: {e}")))?;
        if entry.version != CACHE_VERSION {
            return Err(mismatch(format!(
                "version {} (expected {CACHE_VERSION})",
                entry.version
            )));
        }
        if entry.matrix_hash != hash {
            return Err(mismatch(format!("matrix hash {}", entry.matrix_hash)));
        }
        if entry.operation != operation || &entry.params != params {
            return Err(mismatch(format!(
                "stored {} {} does not match request {operation} {params}",
                entry.operation, entry.params
            )));
        }
        Ok(Some(entry.result))
    }

    pub fn store<T: Serialize>(
        &self,
        generator: &BitMatrix,
        operation: &str,
        params: &Value,
        result: &T,
    ) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let hash = Self::matrix_hash(generator);
        let path = self.entry_path(&hash, operation);
        let entry = Entry {
            version: CACHE_VERSION,
            matrix_hash: hash,
            operation: operation.to_string(),
            params: params.clone(),
            result,
        };
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    fn get_or_compute<T, F>(
        &self,
        code: &LinearCode,
        operation: &str,
        params: Value,
        compute: F,
    ) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(hit) = self.load(code.generator(), operation, &params)? {
            return Ok(hit);
        }
        let value = compute()?;
        self.store(code.generator(), operation, &params, &value)?;
        Ok(value)
    }

    pub fn weight_distribution(&self, code: &LinearCode) -> Result<WeightDistribution> {
        let params = serde_json::json!({ "n": code.len(), "k": code.dimension() });
        self.get_or_compute(code, "weights", params, || weight_distribution(code))
    }

    pub fn codewords_of_weight(&self, code: &LinearCode, w: usize) -> Result<CodewordSet> {
        let params = serde_json::json!({ "n": code.len(), "k": code.dimension(), "w": w });
        self.get_or_compute(code, &format!("words-w{w}"), params, || {
            codewords_of_weight(code, w)
        })
    }
}
