//! On-disk cache of 3-Jack tables: `<dir>/jack_v<schema>_N<N>_L<level>_<tag>.json`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use yangian_core::jack3::{JackTableSerial, SCHEMA_VERSION};
use yangian_core::{Coeff, JackTable, ModelConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub file: String,
    pub schema: u32,
    pub n: usize,
    pub level: usize,
    pub tag: String,
    pub bytes: u64,
    pub current: bool,
}

/// Parse `jack_v1_N3_L5_sym.json`.
pub fn parse_name(name: &str) -> Option<(u32, usize, usize, String)> {
    let rest = name.strip_prefix("jack_v")?.strip_suffix(".json")?;
    let mut it = rest.splitn(4, '_');
    let schema = it.next()?.parse().ok()?;
    let n = it.next()?.strip_prefix('N')?.parse().ok()?;
    let level = it.next()?.strip_prefix('L')?.parse().ok()?;
    let tag = it.next()?.to_string();
    Some((schema, n, level, tag))
}

pub fn file_name(n: usize, level: usize, tag: &str) -> String {
    format!("jack_v{SCHEMA_VERSION}_N{n}_L{level}_{tag}.json")
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        if !self.dir.exists() {
            return Ok(out);
        }
        for e in fs::read_dir(&self.dir).with_context(|| format!("reading {}", self.dir.display()))? {
            let e = e?;
            let name = e.file_name().to_string_lossy().into_owned();
            if let Some((schema, n, level, tag)) = parse_name(&name) {
                out.push(CacheEntry { file: name, schema, n, level, tag, bytes: e.metadata()?.len(), current: schema == SCHEMA_VERSION });
            }
        }
        out.sort_by(|a, b| a.file.cmp(&b.file));
        Ok(out)
    }

    /// Remove every cache file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for e in &entries {
            fs::remove_file(self.dir.join(&e.file))?;
        }
        Ok(entries.len())
    }

    /// A table reaching `level`, from disk when a valid file exists. Messages about stale or
    /// rejected files are pushed to `notices`. A fresh table replaces smaller ones.
    pub fn table<F: Coeff>(&self, cfg: &ModelConfig<F>, level: usize, notices: &mut Vec<String>) -> Result<JackTable<F>> {
        let mut candidates: Vec<CacheEntry> = Vec::new();
        for e in self.entries()? {
            if e.n != cfg.n || e.tag != cfg.tag {
                continue;
            }
            if !e.current {
                notices.push(format!("cache file {} has schema v{} (current v{SCHEMA_VERSION}); recomputing", e.file, e.schema));
                fs::remove_file(self.dir.join(&e.file))?;
                continue;
            }
            if e.level >= level {
                candidates.push(e);
            }
        }
        candidates.sort_by_key(|e| e.level);
        for e in candidates {
            let path = self.dir.join(&e.file);
            match load(&path, cfg) {
                Ok(t) => return Ok(t),
                Err(err) => {
                    notices.push(format!("discarding cache file {}: {err:#}", e.file));
                    fs::remove_file(&path)?;
                }
            }
        }
        let table = JackTable::compute(level, cfg)?;
        self.store(&table)?;
        for e in self.entries()? {
            if e.n == cfg.n && e.tag == cfg.tag && e.level < level {
                fs::remove_file(self.dir.join(&e.file))?;
            }
        }
        Ok(table)
    }

    /// Write-temp-then-rename.
    pub fn store<F: Coeff>(&self, table: &JackTable<F>) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let cfg = table.config();
        let name = file_name(cfg.n, table.max_level(), &cfg.tag);
        let target = self.dir.join(&name);
        let tmp = self.dir.join(format!(".{name}.{}.tmp", std::process::id()));
        let json = serde_json::to_vec(&table.to_serial())?;
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&json)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target)?;
        Ok(target)
    }
}

/// Read a table and re-check its `e0` invariant before use.
fn load<F: Coeff>(path: &Path, cfg: &ModelConfig<F>) -> Result<JackTable<F>> {
    let bytes = fs::read(path)?;
    let serial: JackTableSerial = serde_json::from_slice(&bytes)?;
    let table = JackTable::from_serial(&serial, cfg)?;
    table.verify_e0()?;
    Ok(table)
}
