use std::fs::{self, File};
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{KneserError, Result};
use crate::om::{match_cocircuit_pattern, parse_record, BasisOrder, Catalog, PatternMatch};
use crate::transversal::complete_line_transversals_om;

/// Result of a database scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary<H> {
    pub db_path: String,
    pub n: usize,
    pub r: usize,
    /// Records read (inside the range, for ranged scans).
    pub total: usize,
    /// Records actually tested (after the uniformity filter).
    pub considered: usize,
    pub count: usize,
    pub hits: Vec<H>,
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(w.max(1));
    }
    b.build().map_err(|e| KneserError::Internal(e.to_string()))
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    BufReader::new(File::open(path)?).lines().collect::<std::io::Result<_>>().map_err(Into::into)
}

/// Indices (1-based) of the rank-4, 7-element records that have a complete
/// transversal line.
pub fn scan_db_complete(
    db_path: &Path,
    uniform_only: bool,
    order: BasisOrder,
    workers: Option<usize>,
) -> Result<ScanSummary<usize>> {
    let lines = read_lines(db_path)?;
    let results: Vec<Option<bool>> = pool(workers)?.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, line)| {
                let rec = parse_record(line, i + 1, 7, 4, order)?;
                if uniform_only && !rec.uniform {
                    return Ok(None);
                }
                Ok(Some(!complete_line_transversals_om(&rec.chirotope)?.is_empty()))
            })
            .collect::<Result<_>>()
    })?;
    let hits: Vec<usize> = results.iter().enumerate().filter(|(_, r)| **r == Some(true)).map(|(i, _)| i + 1).collect();
    Ok(ScanSummary {
        db_path: db_path.display().to_string(),
        n: 7,
        r: 4,
        total: lines.len(),
        considered: results.iter().filter(|r| r.is_some()).count(),
        count: hits.len(),
        hits,
    })
}

/// One 7-element minor of a pattern hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deletion {
    pub deleted: usize,
    /// Sign string of the minor in the scan's basis order.
    pub chirotope: String,
    /// Index of the equivalent catalog entry, when a catalog was supplied.
    pub catalog_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHit {
    pub index: usize,
    pub matches: Vec<PatternMatch>,
    pub deletions: Vec<Deletion>,
}

/// Resumable progress of a pattern scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub db: String,
    pub next_index: usize,
    pub hits: Vec<PatternHit>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Option<Self>> {
        match fs::read_to_string(path) {
            Ok(text) => Ok(Some(serde_json::from_str(&text)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut tmp: PathBuf = path.to_path_buf();
        tmp.as_mut_os_string().push(".tmp");
        fs::write(&tmp, serde_json::to_vec_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// Hex SHA-256 of the database path, identifying it inside checkpoints.
pub fn path_hash(path: &Path) -> String {
    hex::encode(Sha256::digest(path.display().to_string().as_bytes()))
}

/// Settings of [`scan_db_pattern8`].
#[derive(Debug, Clone, Default)]
pub struct Pattern8Options {
    pub order: BasisOrder,
    /// Half-open range of 1-based record indices; everything by default.
    pub range: Option<(usize, usize)>,
    pub checkpoint: Option<PathBuf>,
    /// Records between checkpoint writes.
    pub chunk: Option<usize>,
    pub workers: Option<usize>,
    /// Stops after this many records of the range (for interrupted runs).
    pub stop_after: Option<usize>,
}

fn scan_record(line: &str, index: usize, order: BasisOrder, catalog: Option<&Catalog>) -> Result<Option<PatternHit>> {
    let rec = parse_record(line, index, 8, 4, order)?;
    let matches = match_cocircuit_pattern(&rec.chirotope)?;
    let Some(first) = matches.first() else {
        return Ok(None);
    };
    let mut deletions = Vec::new();
    for e in (1..=8).filter(|e| !first.contains(e)) {
        let minor = rec.chirotope.delete(e)?;
        deletions.push(Deletion {
            deleted: e,
            chirotope: minor.to_sign_string(order),
            catalog_index: catalog.and_then(|c| c.identify(&minor)),
        });
    }
    Ok(Some(PatternHit { index, matches, deletions }))
}

/// Records of the rank-4, 8-element database carrying the cocircuit
/// pattern, with both 7-element deletions of the elements outside the
/// pattern. Progress is checkpointed per chunk and resumed from an
/// existing checkpoint for the same database.
pub fn scan_db_pattern8(
    db_path: &Path,
    options: &Pattern8Options,
    catalog: Option<&Catalog>,
) -> Result<ScanSummary<PatternHit>> {
    let db = path_hash(db_path);
    let (start, end) = options.range.unwrap_or((1, usize::MAX));
    if start == 0 || start > end {
        return Err(KneserError::invalid(format!("bad record range {start}:{end}")));
    }
    let mut next = start;
    let mut hits = Vec::new();
    if let Some(cp) = options.checkpoint.as_deref().map(Checkpoint::load).transpose()?.flatten() {
        if cp.db != db {
            return Err(KneserError::invalid("checkpoint belongs to a different database"));
        }
        if cp.next_index < start || cp.next_index > end {
            return Err(KneserError::invalid("checkpoint lies outside the requested range"));
        }
        next = cp.next_index;
        hits = cp.hits;
    }
    let chunk = options.chunk.unwrap_or(10_000).max(1);
    let limit = options.stop_after.map_or(end, |s| end.min(next.saturating_add(s)));
    let pool = pool(options.workers)?;

    let mut lines = BufReader::new(File::open(db_path)?).lines();
    for _ in 1..next {
        if lines.next().transpose()?.is_none() {
            break;
        }
    }
    let mut index = next;
    let mut exhausted = false;
    while index < limit && !exhausted {
        let mut batch = Vec::with_capacity(chunk);
        while batch.len() < chunk && index + batch.len() < limit {
            match lines.next().transpose()? {
                Some(l) => batch.push(l),
                None => {
                    exhausted = true;
                    break;
                }
            }
        }
        let found: Vec<Option<PatternHit>> = pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .map(|(j, line)| scan_record(line, index + j, options.order, catalog))
                .collect::<Result<_>>()
        })?;
        hits.extend(found.into_iter().flatten());
        index += batch.len();
        if let Some(path) = &options.checkpoint {
            Checkpoint { db: db.clone(), next_index: index, hits: hits.clone() }.save(path)?;
        }
    }
    Ok(ScanSummary {
        db_path: db_path.display().to_string(),
        n: 8,
        r: 4,
        total: index - start,
        considered: index - start,
        count: hits.len(),
        hits,
    })
}

/// A catalog of the 7-element order types in a database file, keyed by
/// canonical form.
pub fn load_catalog(path: &Path, order: BasisOrder, convention: crate::om::SignConvention) -> Result<Catalog> {
    let mut catalog = Catalog::new(convention);
    for (i, line) in read_lines(path)?.iter().enumerate() {
        let rec = parse_record(line, i + 1, 7, 4, order)?;
        catalog.insert(rec.index, &rec.chirotope);
    }
    Ok(catalog)
}
