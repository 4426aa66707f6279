//! On-disk corpus cache: `<kind>_<n>.g6` holds one graph6 line per member
//! and `<kind>_<n>.idx.json` holds the dissociation-number index.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{check_cap, generate, CorpusKind, EnumerationError, GraphCorpus, Result};
use crate::graph::{graph6_encode, read_graph6_lines};

pub const CACHE_DIR_ENV: &str = "SPECDISS_CACHE_DIR";

/// `$SPECDISS_CACHE_DIR`, or `specdiss-cache` under the system temp dir.
pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("specdiss-cache"))
}

#[derive(Serialize, Deserialize)]
struct IndexFile {
    kind: CorpusKind,
    n: usize,
    count: usize,
    tau: BTreeMap<String, Vec<usize>>,
}

fn paths(dir: &Path, kind: CorpusKind, n: usize) -> (PathBuf, PathBuf) {
    let stem = format!("{}_{n}", kind.name());
    (dir.join(format!("{stem}.g6")), dir.join(format!("{stem}.idx.json")))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Writes both cache files; returns the graph6 path.
pub fn write_cache(dir: &Path, corpus: &GraphCorpus) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let (g6, idx) = paths(dir, corpus.kind, corpus.n);
    let mut text = String::new();
    for g in &corpus.members {
        text.push_str(&graph6_encode(g));
        text.push('\n');
    }
    let index = IndexFile {
        kind: corpus.kind,
        n: corpus.n,
        count: corpus.len(),
        tau: corpus.by_tau.iter().map(|(t, v)| (t.to_string(), v.clone())).collect(),
    };
    let json = serde_json::to_vec_pretty(&index).map_err(|e| EnumerationError::Cache(e.to_string()))?;
    write_atomic(&g6, text.as_bytes())?;
    write_atomic(&idx, &json)?;
    Ok(g6)
}

/// Reads a cached corpus; `Ok(None)` when either file is missing.
pub fn read_cache(dir: &Path, kind: CorpusKind, n: usize) -> Result<Option<GraphCorpus>> {
    let (g6, idx) = paths(dir, kind, n);
    if !g6.exists() || !idx.exists() {
        return Ok(None);
    }
    let bad = |m: String| EnumerationError::Cache(format!("{}: {m}", g6.display()));
    let members = read_graph6_lines(&fs::read_to_string(&g6)?)?;
    let index: IndexFile =
        serde_json::from_slice(&fs::read(&idx)?).map_err(|e| bad(e.to_string()))?;
    if index.kind != kind || index.n != n || index.count != members.len() {
        return Err(bad("index does not match graph file".into()));
    }
    if let Some(g) = members.iter().find(|g| g.order() != n || !kind.admits(g)) {
        return Err(bad(format!("member {} is not a {kind} graph of order {n}", graph6_encode(g))));
    }
    let mut taus = vec![usize::MAX; members.len()];
    for (t, list) in &index.tau {
        let t: usize = t.parse().map_err(|_| bad(format!("bad tau key '{t}'")))?;
        for &i in list {
            match taus.get_mut(i) {
                Some(slot) if *slot == usize::MAX => *slot = t,
                _ => return Err(bad(format!("member index {i} invalid or repeated"))),
            }
        }
    }
    if taus.contains(&usize::MAX) {
        return Err(bad("some members have no tau".into()));
    }
    Ok(Some(GraphCorpus::with_taus(kind, n, members, taus)))
}

/// Cached corpus if present and valid, otherwise a fresh one written back.
pub fn load_or_generate(kind: CorpusKind, n: usize, dir: &Path) -> Result<GraphCorpus> {
    check_cap(kind, n)?;
    if let Ok(Some(c)) = read_cache(dir, kind, n) {
        return Ok(c);
    }
    let corpus = generate(kind, n)?;
    // A read-only cache location should not stop verification.
    let _ = write_cache(dir, &corpus);
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let corpus = generate(CorpusKind::Trees, 7).unwrap();
        let path = write_cache(dir.path(), &corpus).unwrap();
        assert!(path.ends_with("TREES_7.g6"));
        let back = read_cache(dir.path(), CorpusKind::Trees, 7).unwrap().unwrap();
        assert_eq!(back.members, corpus.members);
        assert_eq!(back.by_tau, corpus.by_tau);
        let json = fs::read_to_string(dir.path().join("TREES_7.idx.json")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v["tau"]["5"].is_array());
        assert!(read_cache(dir.path(), CorpusKind::Trees, 6).unwrap().is_none());
    }

    #[test]
    fn corrupt_cache_is_regenerated() {
        let dir = tempfile::tempdir().unwrap();
        let corpus = generate(CorpusKind::Connected, 4).unwrap();
        write_cache(dir.path(), &corpus).unwrap();
        fs::write(dir.path().join("CONNECTED_4.g6"), "Cr\n").unwrap();
        assert!(read_cache(dir.path(), CorpusKind::Connected, 4).is_err());
        let again = load_or_generate(CorpusKind::Connected, 4, dir.path()).unwrap();
        assert_eq!(again.len(), 6);
        assert!(read_cache(dir.path(), CorpusKind::Connected, 4).unwrap().is_some());
    }
}
