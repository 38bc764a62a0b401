//! Skeleton decomposition into an attributed graph.
//!
//! A skeleton pixel with exactly two ink neighbors that are not 4-adjacent to
//! each other is a *segment pixel*; every other skeleton pixel is a
//! *junction pixel*. Connected runs of segment pixels become edges and
//! connected blobs of junction pixels become vertices. Widths come from the
//! stroke width transform of the binary image.

mod build;
mod classify;
mod simplify;

pub use build::build_graph;
pub use classify::{classify_pixels, extract_components, order_segment_pixels, Components, OrderedSegment, PixelClass, PixelLabels};
pub use simplify::{simplify, SimplifyParams};

use serde::Serialize;

use crate::geometry::Point;
use crate::imaging::{SkeletonImage, StrokeWidthMap};

/// Classification, component extraction and graph assembly in one call.
pub fn graph_from_skeleton(skeleton: &SkeletonImage, swt: &StrokeWidthMap) -> crate::Result<SkeletonGraph> {
    let labels = classify_pixels(skeleton);
    build_graph(&extract_components(&labels), swt)
}

pub type JunctionId = usize;
pub type SegmentId = usize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Junction {
    pub id: JunctionId,
    pub pixels: Vec<Point>,
    /// Largest stroke width among the pixels.
    pub width: u32,
    /// Synthesized on a closed segment so that it has an endpoint.
    pub imposed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Segment {
    pub id: SegmentId,
    /// Ordered so that successive pixels are 8-adjacent.
    pub pixels: Vec<Point>,
    /// Junctions touching the first and last pixel; equal for loops.
    pub endpoints: (JunctionId, JunctionId),
    pub width: u32,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }

    /// The endpoint opposite `v`; `None` if `v` is not an endpoint.
    pub fn other_end(&self, v: JunctionId) -> Option<JunctionId> {
        match self.endpoints {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkeletonGraph {
    pub junctions: Vec<Junction>,
    pub segments: Vec<Segment>,
    /// Mean segment width; the reference length for every noise threshold.
    pub avg_stroke_width: f64,
}

impl SkeletonGraph {
    pub fn empty() -> Self {
        SkeletonGraph {
            junctions: Vec::new(),
            segments: Vec::new(),
            avg_stroke_width: 0.0,
        }
    }

    /// Segment-endpoint incidences per vertex; a loop counts twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.junctions.len()];
        for s in &self.segments {
            deg[s.endpoints.0] += 1;
            deg[s.endpoints.1] += 1;
        }
        deg
    }

    pub fn degree(&self, v: JunctionId) -> usize {
        self.segments
            .iter()
            .map(|s| usize::from(s.endpoints.0 == v) + usize::from(s.endpoints.1 == v))
            .sum()
    }

    /// Connected components, each listed as its vertex ids in ascending order.
    pub fn components(&self) -> Vec<Vec<JunctionId>> {
        let n = self.junctions.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in &self.segments {
            let (a, b) = (find(&mut parent, s.endpoints.0), find(&mut parent, s.endpoints.1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Checks the structural invariants, and when a skeleton is given, that
    /// the graph partitions it exactly. Returns the first violation found.
    pub fn validate(&self, skeleton: Option<&SkeletonImage>) -> Result<(), String> {
        for (i, j) in self.junctions.iter().enumerate() {
            if j.id != i {
                return Err(format!("junction at index {i} has id {}", j.id));
            }
            if j.pixels.is_empty() {
                return Err(format!("junction {i} has no pixels"));
            }
        }
        let mut owner = std::collections::HashMap::new();
        for (i, s) in self.segments.iter().enumerate() {
            if s.id != i {
                return Err(format!("segment at index {i} has id {}", s.id));
            }
            let (a, b) = s.endpoints;
            if a >= self.junctions.len() || b >= self.junctions.len() {
                return Err(format!("segment {i} references a missing junction"));
            }
            if s.pixels.is_empty() {
                return Err(format!("segment {i} is empty"));
            }
            if let Some(w) = s.pixels.windows(2).find(|w| !w[0].is_8_adjacent(w[1])) {
                return Err(format!("segment {i}: {:?} and {:?} are not adjacent", w[0], w[1]));
            }
            for &p in &s.pixels {
                if let Some(prev) = owner.insert(p, i) {
                    return Err(format!("pixel {p:?} shared by segments {prev} and {i}"));
                }
            }
        }
        if let Some(skel) = skeleton {
            let mut covered: std::collections::HashSet<Point> = owner.keys().copied().collect();
            for j in self.junctions.iter().filter(|j| !j.imposed) {
                for &p in &j.pixels {
                    if !covered.insert(p) {
                        return Err(format!("junction pixel {p:?} also belongs to a segment"));
                    }
                }
            }
            let fg: std::collections::HashSet<Point> = skel.foreground().collect();
            if covered != fg {
                return Err(format!(
                    "graph covers {} pixels but the skeleton has {}",
                    covered.len(),
                    fg.len()
                ));
            }
        }
        Ok(())
    }
}
