//! Advisory on-disk cache of solve verdicts and parameter reports.
//!
//! Records are JSON files named by the SHA-256 of their key. Unreadable or
//! mismatched records are treated as misses.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::{Graph, Vertex};

pub const CACHE_DIR_ENV: &str = "CHEATBOT_CACHE_DIR";
const SCHEMA: u32 = 1;

#[derive(Clone, Debug)]
pub struct SolveCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    schema: u32,
    key: String,
    value: T,
}

/// Verdict of one fixed-`k` solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub cop_win: bool,
    pub placement: Option<Vec<Vertex>>,
    pub rounds: Option<u16>,
}

impl SolveCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SolveCache { dir: dir.into() }
    }

    /// `CHEATBOT_CACHE_DIR` if set, else `fallback`.
    pub fn from_env(fallback: impl Into<PathBuf>) -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(d) => SolveCache::new(d),
            None => SolveCache::new(fallback),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Key for `kind` on `g` with extra discriminating parameters.
    pub fn key(kind: &str, g: &Graph, extra: &impl Serialize) -> String {
        let extra = serde_json::to_string(extra).expect("serializable key");
        format!("{kind}|{}|{extra}", g.content_hash())
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.json"))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let env: Envelope<T> = serde_json::from_str(&text).ok()?;
        (env.schema == SCHEMA && env.key == key).then_some(env.value)
    }

    /// Writes through a temporary file so readers never see a partial record.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let env = Envelope {
            schema: SCHEMA,
            key: key.to_string(),
            value,
        };
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec_pretty(&env)?)?;
        fs::rename(tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SolveCache::new(dir.path());
        let g = GraphFamily::Cycle(5).generate().unwrap();
        let key = SolveCache::key("verdict", &g, &("cheating_robot", 2));
        assert!(cache.get::<VerdictRecord>(&key).is_none());
        let rec = VerdictRecord {
            cop_win: true,
            placement: Some(vec![0, 1]),
            rounds: Some(3),
        };
        cache.put(&key, &rec).unwrap();
        assert_eq!(cache.get::<VerdictRecord>(&key), Some(rec));
        let other = SolveCache::key("verdict", &g, &("cheating_robot", 3));
        assert!(cache.get::<VerdictRecord>(&other).is_none());
    }

    #[test]
    fn corrupt_record_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SolveCache::new(dir.path());
        let key = "k".to_string();
        cache.put(&key, &1u32).unwrap();
        fs::write(cache.path(&key), "{").unwrap();
        assert!(cache.get::<u32>(&key).is_none());
    }
}
