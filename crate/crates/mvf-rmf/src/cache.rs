//! Memoized spectrum bases.
//!
//! Bases are kept in memory for the life of the cache and, when a directory
//! is configured, persisted as `basis-p{p}-n{n}.json` documents. A cached
//! file that fails to parse or does not fit the orbit table is ignored and
//! rebuilt.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use mvf_rmf_core::{build_orbit_table, Radix, SpectrumBasis};
use rayon::prelude::*;

use crate::error::Result;
use crate::formats::BasisDoc;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "MVF_RMF_CACHE_DIR";

#[derive(Debug, Default)]
pub struct BasisCache {
    dir: Option<PathBuf>,
    memo: RwLock<HashMap<(u32, usize), Arc<SpectrumBasis>>>,
}

impl BasisCache {
    /// In-memory only.
    pub fn new() -> Self {
        BasisCache::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        BasisCache {
            dir: Some(dir.into()),
            memo: RwLock::default(),
        }
    }

    /// Uses `dir` if given, else `$MVF_RMF_CACHE_DIR`, else memory only.
    pub fn from_env(dir: Option<PathBuf>) -> Self {
        match dir.or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)) {
            Some(d) => BasisCache::with_dir(d),
            None => BasisCache::new(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_for(&self, p: Radix, n: usize) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("basis-p{}-n{}.json", p.get(), n)))
    }

    pub fn get(&self, p: Radix, n: usize) -> Result<Arc<SpectrumBasis>> {
        let key = (p.get(), n);
        if let Some(b) = self.memo.read().expect("cache lock poisoned").get(&key) {
            return Ok(Arc::clone(b));
        }
        let basis = match self.load(p, n) {
            Some(b) => b,
            None => {
                let b = build_parallel(p, n)?;
                self.store(&b)?;
                b
            }
        };
        let mut memo = self.memo.write().expect("cache lock poisoned");
        Ok(Arc::clone(memo.entry(key).or_insert_with(|| Arc::new(basis))))
    }

    fn load(&self, p: Radix, n: usize) -> Option<SpectrumBasis> {
        let text = fs::read_to_string(self.file_for(p, n)?).ok()?;
        let doc: BasisDoc = serde_json::from_str(&text).ok()?;
        if doc.schema != crate::formats::SCHEMA || doc.p != p.get() || doc.n != n {
            return None;
        }
        let table = build_orbit_table(p, n).ok()?;
        SpectrumBasis::from_columns(table, doc.columns).ok()
    }

    fn store(&self, basis: &SpectrumBasis) -> Result<()> {
        let Some(path) = self.file_for(basis.p(), basis.n()) else {
            return Ok(());
        };
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        // write-then-rename so concurrent readers never see a partial file
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&BasisDoc::from(basis))?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// Builds the basis with columns computed in parallel.
pub fn build_parallel(p: Radix, n: usize) -> Result<SpectrumBasis> {
    let table = build_orbit_table(p, n)?;
    let columns = (0..table.len())
        .into_par_iter()
        .map(|k| SpectrumBasis::column(&table, k).map(|c| c.entries().to_vec()))
        .collect::<mvf_rmf_core::Result<Vec<_>>>()?;
    Ok(SpectrumBasis::from_columns(table, columns)?)
}
