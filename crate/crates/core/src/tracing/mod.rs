//! Turning the skeleton graph into pen paths.
//!
//! Every edge starts as its own path. Paths that share an end vertex are
//! merged greedily, smallest turning angle first, until nothing can merge.
//! Isolated vertices become single-point dot strokes. A final pass lets a
//! segment be traversed twice when that reconnects strokes split by the
//! writer retracing over their own ink.

mod cluster;
mod double_trace;

pub use cluster::{trace_strokes, trace_strokes_logged, MergeRecord};
pub use double_trace::fix_double_traced;

use serde::{Deserialize, Serialize};

use crate::geometry::{centroid, Point};
use crate::ordering::Stroke;
use crate::skeleton_graph::{JunctionId, Segment, SegmentId, SkeletonGraph};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TraceParams {
    /// Number of pixels used to estimate a segment's direction at an end.
    pub direction_window: usize,
    /// Angles within this margin of a right angle block double tracing.
    pub double_trace_angle_margin: f64,
    /// Splice closed circuits into paths that touch them, minimizing the
    /// number of strokes.
    pub eulerian_mode: bool,
}

impl Default for TraceParams {
    fn default() -> Self {
        TraceParams {
            direction_window: 5,
            double_trace_angle_margin: std::f64::consts::PI / 9.0,
            eulerian_mode: false,
        }
    }
}

impl TraceParams {
    pub fn validate(&self) -> crate::Result<()> {
        if self.direction_window < 2 {
            return Err(crate::Error::InvalidParams(
                "direction window must be at least 2".into(),
            ));
        }
        let m = self.double_trace_angle_margin;
        if !(m > 0.0 && m < std::f64::consts::FRAC_PI_2) {
            return Err(crate::Error::InvalidParams(format!(
                "double trace angle margin must be in (0, pi/2), got {m}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentEnd {
    First,
    Last,
}

/// Unit direction of travel into the given end of a segment, from the chord
/// over the last `window` pixels. `None` when the chord has zero length.
pub fn endpoint_direction(segment: &Segment, end: SegmentEnd, window: usize) -> Option<[f64; 2]> {
    let px = &segment.pixels;
    if px.is_empty() {
        return None;
    }
    let m = window.min(px.len()).max(1);
    let (from, to) = match end {
        SegmentEnd::First => (px[m - 1], px[0]),
        SegmentEnd::Last => (px[px.len() - m], px[px.len() - 1]),
    };
    let (dx, dy) = ((to.x - from.x) as f64, (to.y - from.y) as f64);
    let n = dx.hypot(dy);
    (n > 0.0).then(|| [dx / n, dy / n])
}

/// One traversal of a segment; `forward` walks its pixels first to last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub segment: SegmentId,
    pub forward: bool,
}

impl Step {
    pub fn from_vertex(&self, g: &SkeletonGraph) -> JunctionId {
        let (a, b) = g.segments[self.segment].endpoints;
        if self.forward {
            a
        } else {
            b
        }
    }

    pub fn to_vertex(&self, g: &SkeletonGraph) -> JunctionId {
        let (a, b) = g.segments[self.segment].endpoints;
        if self.forward {
            b
        } else {
            a
        }
    }

    fn reversed(self) -> Step {
        Step {
            segment: self.segment,
            forward: !self.forward,
        }
    }
}

/// A walk through the graph that becomes one stroke.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TracedPath {
    pub steps: Vec<Step>,
    pub start: JunctionId,
    pub end: JunctionId,
}

impl TracedPath {
    pub fn single(segment: &Segment) -> Self {
        TracedPath {
            steps: vec![Step {
                segment: segment.id,
                forward: true,
            }],
            start: segment.endpoints.0,
            end: segment.endpoints.1,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }

    pub fn reversed(&self) -> Self {
        TracedPath {
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
            start: self.end,
            end: self.start,
        }
    }

    /// Vertices visited, starting with `start` and ending with `end`.
    pub fn vertices(&self, g: &SkeletonGraph) -> Vec<JunctionId> {
        let mut v = vec![self.start];
        v.extend(self.steps.iter().map(|s| s.to_vertex(g)));
        v
    }

    /// Pixel polyline: oriented segment pixels with vertex centroids between
    /// them and at both ends. Consecutive duplicates are removed.
    pub fn points(&self, g: &SkeletonGraph) -> Vec<Point> {
        let vc = |v: JunctionId| centroid(&g.junctions[v].pixels).expect("junction has pixels");
        let mut out = vec![vc(self.start)];
        for step in &self.steps {
            let px = &g.segments[step.segment].pixels;
            if step.forward {
                out.extend(px.iter().copied());
            } else {
                out.extend(px.iter().rev().copied());
            }
            out.push(vc(step.to_vertex(g)));
        }
        out.dedup();
        out
    }

    /// Direction of travel into the path's start (or end) vertex.
    pub(crate) fn end_direction(&self, g: &SkeletonGraph, at_start: bool, window: usize) -> Option<[f64; 2]> {
        let (step, seg_end) = if at_start {
            let s = self.steps[0];
            (s, if s.forward { SegmentEnd::First } else { SegmentEnd::Last })
        } else {
            let s = *self.steps.last().expect("paths are non-empty");
            (s, if s.forward { SegmentEnd::Last } else { SegmentEnd::First })
        };
        endpoint_direction(&g.segments[step.segment], seg_end, window)
    }

    pub fn segment_count(&self, segment: SegmentId) -> usize {
        self.steps.iter().filter(|s| s.segment == segment).count()
    }
}

/// One single-point stroke per isolated vertex, at its rounded centroid.
pub fn extract_dots(graph: &SkeletonGraph) -> Vec<Stroke> {
    let deg = graph.degrees();
    graph
        .junctions
        .iter()
        .filter(|j| deg[j.id] == 0)
        .filter_map(|j| centroid(&j.pixels))
        .map(Stroke::point)
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures;
