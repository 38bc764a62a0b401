//! Corpus-level scoring of extracted strokes against ground truth.
//!
//! Files are paired by stem. Truth in InkML source units is fitted into
//! pixel space with the render settings first; JSON truth is taken to be in
//! pixels already.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ink_io::{match_strokes, to_pixel_space, CoordinateSpace, InkDocument, MatchReport, RenderParams};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileReport {
    pub name: String,
    pub recall: f64,
    pub precision: f64,
    /// False when the extracted file was missing and an empty extraction
    /// was scored instead.
    pub paired: bool,
    pub report: MatchReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub threshold: f64,
    pub files: Vec<FileReport>,
    /// Truth stems without an extracted file; scored as empty extractions.
    pub unpaired_truth: Vec<String>,
    /// Extracted stems without truth; not scored.
    pub unpaired_extracted: Vec<String>,
    /// Mean of per-file recall.
    pub recall: f64,
    /// Mean of per-file precision.
    pub precision: f64,
    /// Mean of per-file mean match distance, over files with any match.
    pub mean_distance: Option<f64>,
    /// Matched strokes over all truth strokes in the corpus.
    pub pooled_recall: f64,
    /// Matched strokes over all extracted strokes in the corpus.
    pub pooled_precision: f64,
    /// Fraction of files whose stroke counts agree exactly.
    pub count_agreement: f64,
}

fn mean(v: impl Iterator<Item = f64>) -> Option<f64> {
    let (s, n) = v.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    (n > 0).then(|| s / n as f64)
}

impl CorpusReport {
    pub fn from_files(threshold: f64, files: Vec<FileReport>, unpaired_truth: Vec<String>, unpaired_extracted: Vec<String>) -> Self {
        let reports = || files.iter().map(|f| &f.report);
        let matched: usize = reports().map(MatchReport::matched).sum();
        let n_truth: usize = reports().map(|r| r.n_truth).sum();
        let n_extracted: usize = reports().map(|r| r.n_extracted).sum();
        CorpusReport {
            threshold,
            recall: mean(files.iter().map(|f| f.recall)).unwrap_or(0.0),
            precision: mean(files.iter().map(|f| f.precision)).unwrap_or(0.0),
            mean_distance: mean(reports().filter_map(|r| r.mean_match_distance)),
            pooled_recall: if n_truth == 0 { 1.0 } else { matched as f64 / n_truth as f64 },
            pooled_precision: if n_extracted == 0 {
                if n_truth == 0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                matched as f64 / n_extracted as f64
            },
            count_agreement: mean(reports().map(|r| r.count_agrees() as u8 as f64)).unwrap_or(0.0),
            files,
            unpaired_truth,
            unpaired_extracted,
        }
    }

    /// Plain-text table, one row per file plus totals.
    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<32} {:>6} {:>6} {:>7} {:>7} {:>7} {:>8}\n",
            "file", "truth", "extr", "match", "recall", "prec", "dist"
        );
        for f in &self.files {
            let r = &f.report;
            out.push_str(&format!(
                "{:<32} {:>6} {:>6} {:>7} {:>7.3} {:>7.3} {:>8}\n",
                f.name,
                r.n_truth,
                r.n_extracted,
                r.matched(),
                f.recall,
                f.precision,
                r.mean_match_distance.map_or("-".into(), |d| format!("{d:.2}")),
            ));
        }
        out.push_str(&format!(
            "\nfiles {}  recall {:.3}  precision {:.3}  mean distance {}  count agreement {:.3}\n",
            self.files.len(),
            self.recall,
            self.precision,
            self.mean_distance.map_or("-".into(), |d| format!("{d:.2}")),
            self.count_agreement,
        ));
        out.push_str(&format!(
            "pooled recall {:.3}  pooled precision {:.3}  (threshold {} px)\n",
            self.pooled_recall, self.pooled_precision, self.threshold
        ));
        for s in &self.unpaired_truth {
            out.push_str(&format!("missing extraction: {s}\n"));
        }
        for s in &self.unpaired_extracted {
            out.push_str(&format!("no truth for: {s}\n"));
        }
        out
    }
}

pub fn score(name: &str, truth: &InkDocument, extracted: Option<&InkDocument>, threshold: f64) -> FileReport {
    let empty;
    let e = match extracted {
        Some(e) => e,
        None => {
            empty = InkDocument::from_strokes(truth.width, truth.height, &[]);
            &empty
        }
    };
    let report = match_strokes(truth, e, threshold);
    FileReport {
        name: name.to_string(),
        recall: report.recall(),
        precision: report.precision(),
        paired: extracted.is_some(),
        report,
    }
}

fn ink_files(dir: &Path) -> Result<BTreeMap<String, PathBuf>> {
    let mut out = BTreeMap::new();
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && p.extension()
                    .and_then(|e| e.to_str())
                    .is_some_and(|e| e.eq_ignore_ascii_case("json") || e.eq_ignore_ascii_case("inkml"))
        })
        .collect();
    // With both a .inkml and a .json of one stem, the first in name order wins.
    paths.sort();
    for p in paths {
        if let Some(stem) = p.file_stem().and_then(|s| s.to_str()) {
            out.entry(stem.to_string()).or_insert(p);
        }
    }
    Ok(out)
}

/// Truth in pixel space: source-unit ink is fitted as `render` would.
pub fn truth_in_pixels(doc: InkDocument, render: &RenderParams) -> Result<InkDocument> {
    match doc.space {
        CoordinateSpace::Pixels => Ok(doc),
        CoordinateSpace::Source => to_pixel_space(&doc, render),
    }
}

pub fn evaluate_dirs(truth_dir: &Path, extracted_dir: &Path, threshold: f64, render: &RenderParams) -> Result<CorpusReport> {
    if !(threshold >= 0.0 && threshold.is_finite()) {
        return Err(Error::InvalidParams(format!("threshold must be non-negative, got {threshold}")));
    }
    let truth = ink_files(truth_dir)?;
    let extracted = ink_files(extracted_dir)?;
    let mut files = Vec::new();
    let mut unpaired_truth = Vec::new();
    for (stem, tp) in &truth {
        let t = truth_in_pixels(InkDocument::read(tp)?, render)?;
        let e = match extracted.get(stem) {
            Some(ep) => Some(InkDocument::read(ep)?),
            None => {
                unpaired_truth.push(stem.clone());
                None
            }
        };
        files.push(score(stem, &t, e.as_ref(), threshold));
    }
    let unpaired_extracted = extracted.keys().filter(|k| !truth.contains_key(*k)).cloned().collect();
    Ok(CorpusReport::from_files(threshold, files, unpaired_truth, unpaired_extracted))
}
