//! On-disk cache of the walk table as JSON lines.
//!
//! The cache only ever saves recomputation: a table loaded from disk is used
//! when it reaches far enough, otherwise a larger one is computed and written
//! back. Writers take a `.lock` sibling with `create_new`; if it already
//! exists the write is skipped rather than waited for.

use std::fs::{self, File, OpenOptions};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use gessel::WalkTable;

pub const CACHE_DIR_ENV: &str = "GESSEL_CACHE_DIR";
const CACHE_FILE: &str = "walks.jsonl";

/// Explicit `--cache` path, else `$GESSEL_CACHE_DIR/walks.jsonl`, else none.
pub fn resolve(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| {
        std::env::var_os(CACHE_DIR_ENV)
            .filter(|dir| !dir.is_empty())
            .map(|dir| PathBuf::from(dir).join(CACHE_FILE))
    })
}

fn load(path: &Path) -> Option<WalkTable> {
    let file = File::open(path).ok()?;
    match WalkTable::read_jsonl(BufReader::new(file)) {
        Ok(table) => Some(table),
        Err(e) => {
            eprintln!("warning: ignoring unreadable cache {}: {e}", path.display());
            None
        }
    }
}

fn store(path: &Path, table: &WalkTable) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let lock = path.with_extension("jsonl.lock");
    let _guard = match OpenOptions::new().write(true).create_new(true).open(&lock) {
        Ok(f) => LockGuard { path: lock, _file: f },
        Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
            eprintln!("warning: cache {} is locked by another writer; not saving", path.display());
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let tmp = path.with_extension("jsonl.tmp");
    {
        let mut out = BufWriter::new(File::create(&tmp)?);
        table.write_jsonl(&mut out).map_err(std::io::Error::other)?;
        out.flush()?;
    }
    fs::rename(&tmp, path)
}

struct LockGuard {
    path: PathBuf,
    _file: File,
}

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

/// A walk table reaching at least `m_max`, through the cache when one is
/// configured.
pub fn walk_table(cache: Option<&Path>, m_max: usize) -> WalkTable {
    let Some(path) = cache else {
        return WalkTable::new(m_max);
    };
    let cached = load(path);
    if let Some(table) = cached.as_ref().filter(|t| t.m_max() >= m_max) {
        return table.clone();
    }
    let reach = cached.map_or(m_max, |t| t.m_max().max(m_max));
    let table = WalkTable::new(reach);
    if let Err(e) = store(path, &table) {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
    table
}
