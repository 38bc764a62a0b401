use serde::{Deserialize, Serialize};

use super::{InkDocument, InkPoint};

pub(crate) fn segment_dist2(p: InkPoint, a: InkPoint, b: InkPoint) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let (ex, ey) = (a.x + t * dx - p.x, a.y + t * dy - p.y);
    ex * ex + ey * ey
}

/// Points along the polyline no more than one unit apart, vertices included.
fn resample(line: &[InkPoint]) -> Vec<InkPoint> {
    let mut out = vec![line[0]];
    for w in line.windows(2) {
        let (a, b) = (w[0], w[1]);
        let n = (a.x - b.x).hypot(a.y - b.y).ceil().max(1.0) as usize;
        for k in 1..=n {
            let t = k as f64 / n as f64;
            out.push(InkPoint::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
        }
    }
    out
}

/// Largest distance from a sample of `a` to the polyline `b`, or `None` once
/// it exceeds `cap`.
fn directed(a: &[InkPoint], b: &[InkPoint], cap: f64) -> Option<f64> {
    let cap2 = cap * cap;
    let mut worst = 0.0f64;
    for &p in &resample(a) {
        let mut best = f64::INFINITY;
        if b.len() == 1 {
            best = segment_dist2(p, b[0], b[0]);
        }
        for w in b.windows(2) {
            best = best.min(segment_dist2(p, w[0], w[1]));
            if best <= worst {
                break;
            }
        }
        worst = worst.max(best);
        if worst > cap2 {
            return None;
        }
    }
    Some(worst.sqrt())
}

/// Symmetric Hausdorff distance between two polylines, sampled at unit
/// spacing. `None` when it is larger than `cap`.
pub fn hausdorff_capped(a: &[InkPoint], b: &[InkPoint], cap: f64) -> Option<f64> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    if a == b {
        // Resampling would otherwise leave rounding noise.
        return Some(0.0);
    }
    let ab = directed(a, b, cap)?;
    let ba = directed(b, a, cap)?;
    Some(ab.max(ba))
}

pub fn hausdorff(a: &[InkPoint], b: &[InkPoint]) -> f64 {
    hausdorff_capped(a, b, f64::INFINITY).unwrap_or(f64::INFINITY)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub truth: usize,
    pub extracted: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub n_truth: usize,
    pub n_extracted: usize,
    pub matched_pairs: Vec<MatchedPair>,
    /// Mean distance over matched pairs; `None` without matches.
    pub mean_match_distance: Option<f64>,
    pub unmatched_truth: usize,
    pub unmatched_extracted: usize,
}

impl MatchReport {
    pub fn matched(&self) -> usize {
        self.matched_pairs.len()
    }

    /// Matched over truth strokes; 1 when there is no truth.
    pub fn recall(&self) -> f64 {
        if self.n_truth == 0 {
            1.0
        } else {
            self.matched() as f64 / self.n_truth as f64
        }
    }

    /// Matched over extracted strokes. Extracting nothing is perfect only
    /// when there was nothing to extract.
    pub fn precision(&self) -> f64 {
        match (self.n_extracted, self.n_truth) {
            (0, 0) => 1.0,
            (0, _) => 0.0,
            (n, _) => self.matched() as f64 / n as f64,
        }
    }

    pub fn count_agrees(&self) -> bool {
        self.n_truth == self.n_extracted
    }
}

fn bbox(s: &[InkPoint]) -> [f64; 4] {
    s.iter().fold([f64::MAX, f64::MAX, f64::MIN, f64::MIN], |b, p| {
        [b[0].min(p.x), b[1].min(p.y), b[2].max(p.x), b[3].max(p.y)]
    })
}

/// Greedy one-to-one matching: pairs within `threshold` are taken in order
/// of increasing distance (then truth index, then extracted index).
pub fn match_strokes(truth: &InkDocument, extracted: &InkDocument, threshold: f64) -> MatchReport {
    let tb: Vec<[f64; 4]> = truth.strokes.iter().map(|s| bbox(s)).collect();
    let eb: Vec<[f64; 4]> = extracted.strokes.iter().map(|s| bbox(s)).collect();
    let mut candidates = Vec::new();
    for (ti, t) in truth.strokes.iter().enumerate() {
        for (ei, e) in extracted.strokes.iter().enumerate() {
            // The gap between bounding boxes bounds the distance from below.
            let gx = (eb[ei][0] - tb[ti][2]).max(tb[ti][0] - eb[ei][2]).max(0.0);
            let gy = (eb[ei][1] - tb[ti][3]).max(tb[ti][1] - eb[ei][3]).max(0.0);
            if gx.hypot(gy) > threshold {
                continue;
            }
            if let Some(d) = hausdorff_capped(t, e, threshold) {
                candidates.push(MatchedPair {
                    truth: ti,
                    extracted: ei,
                    distance: d,
                });
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.distance
            .total_cmp(&b.distance)
            .then(a.truth.cmp(&b.truth))
            .then(a.extracted.cmp(&b.extracted))
    });
    let mut used_t = vec![false; truth.strokes.len()];
    let mut used_e = vec![false; extracted.strokes.len()];
    let mut pairs = Vec::new();
    for c in candidates {
        if !used_t[c.truth] && !used_e[c.extracted] {
            used_t[c.truth] = true;
            used_e[c.extracted] = true;
            pairs.push(c);
        }
    }
    let mean = (!pairs.is_empty()).then(|| pairs.iter().map(|p| p.distance).sum::<f64>() / pairs.len() as f64);
    MatchReport {
        n_truth: truth.strokes.len(),
        n_extracted: extracted.strokes.len(),
        unmatched_truth: truth.strokes.len() - pairs.len(),
        unmatched_extracted: extracted.strokes.len() - pairs.len(),
        matched_pairs: pairs,
        mean_match_distance: mean,
    }
}
