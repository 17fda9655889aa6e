//! One JSON file per row under `<dir>/v<schema>/`. Writes go through a
//! temporary file in the same directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use super::record::{ResultRecord, SCHEMA_VERSION};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct ResultCache {
    root: PathBuf,
}

impl ResultCache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        ResultCache {
            root: dir.as_ref().join(format!("v{SCHEMA_VERSION}")),
        }
    }

    pub fn path_for(&self, n: u32) -> PathBuf {
        self.root.join(format!("n{n}.json"))
    }

    /// Cached record for `n`; unreadable or stale entries count as misses.
    pub fn load(&self, n: u32) -> Option<ResultRecord> {
        let text = fs::read_to_string(self.path_for(n)).ok()?;
        let record = ResultRecord::from_json(text.trim()).ok()?;
        (record.schema_version == SCHEMA_VERSION && record.n == n).then_some(record)
    }

    pub fn store(&self, record: &ResultRecord) -> Result<()> {
        fs::create_dir_all(&self.root)?;
        let mut tmp = NamedTempFile::new_in(&self.root)?;
        writeln!(tmp, "{}", record.to_json_line()?)?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path_for(record.n))
            .map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::{solve_folded, Limits};

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(dir.path());
        assert!(cache.load(8).is_none());
        let rec = ResultRecord::from_report(&solve_folded(8, &Limits::default()).unwrap());
        cache.store(&rec).unwrap();
        assert_eq!(cache.load(8).unwrap(), rec);
        assert!(cache.path_for(8).starts_with(dir.path().join("v1")));

        fs::write(cache.path_for(9), "not json").unwrap();
        assert!(cache.load(9).is_none());
    }
}
