use serde::{Deserialize, Serialize};

use super::{Junction, Segment, SkeletonGraph};

/// Multipliers of the average stroke width used by the noise rules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SimplifyParams {
    /// Edges shorter than this many average widths are contracted.
    pub short_edge_multiplier: f64,
    /// Isolated vertices narrower than this many average widths are dropped.
    pub dot_width_multiplier: f64,
}

impl Default for SimplifyParams {
    fn default() -> Self {
        SimplifyParams {
            short_edge_multiplier: 1.0,
            dot_width_multiplier: 0.5,
        }
    }
}

impl SimplifyParams {
    pub fn validate(&self) -> crate::Result<()> {
        if !(self.short_edge_multiplier > 0.0 && self.dot_width_multiplier > 0.0) {
            return Err(crate::Error::InvalidParams(
                "simplification multipliers must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Removes likely noise from the graph.
///
/// Short edges are taken shortest first: a short loop is dropped, any other
/// short edge is dropped and its endpoints merged. Afterwards isolated
/// vertices that are too narrow to be a dot are dropped. Thresholds use the
/// average stroke width of the input graph, which the output keeps.
pub fn simplify(graph: &SkeletonGraph, params: &SimplifyParams) -> SkeletonGraph {
    let avg = graph.avg_stroke_width;
    let edge_limit = params.short_edge_multiplier * avg;
    let dot_limit = params.dot_width_multiplier * avg;

    let mut vertices: Vec<Option<Junction>> = graph.junctions.iter().cloned().map(Some).collect();
    let mut edges: Vec<Option<Segment>> = graph.segments.iter().cloned().map(Some).collect();
    // Merged vertices point at the survivor.
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut short: Vec<usize> = graph
        .segments
        .iter()
        .filter(|s| (s.len() as f64) < edge_limit)
        .map(|s| s.id)
        .collect();
    short.sort_by_key(|&id| (graph.segments[id].len(), id));
    for id in short {
        let (a, b) = graph.segments[id].endpoints;
        let (a, b) = (find(&mut parent, a), find(&mut parent, b));
        edges[id] = None;
        if a == b {
            continue;
        }
        let (keep, gone) = (a.min(b), a.max(b));
        parent[gone] = keep;
        let g = vertices[gone].take().expect("live vertex");
        let k = vertices[keep].as_mut().expect("live vertex");
        k.pixels.extend(g.pixels);
        k.pixels.sort_by_key(|p| p.row_major());
        k.pixels.dedup();
        k.width = k.width.max(g.width);
        k.imposed &= g.imposed;
    }

    let mut degree = vec![0usize; vertices.len()];
    for e in edges.iter_mut().flatten() {
        e.endpoints = (find(&mut parent, e.endpoints.0), find(&mut parent, e.endpoints.1));
        degree[e.endpoints.0] += 1;
        degree[e.endpoints.1] += 1;
    }
    for (v, slot) in vertices.iter_mut().enumerate() {
        if let Some(j) = slot {
            if degree[v] == 0 && (j.width as f64) < dot_limit {
                *slot = None;
            }
        }
    }

    let mut remap = vec![usize::MAX; vertices.len()];
    let mut junctions = Vec::new();
    for (old, v) in vertices.into_iter().enumerate() {
        if let Some(mut j) = v {
            remap[old] = junctions.len();
            j.id = junctions.len();
            junctions.push(j);
        }
    }
    let segments = edges
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(id, mut s)| {
            s.id = id;
            s.endpoints = (remap[s.endpoints.0], remap[s.endpoints.1]);
            s
        })
        .collect();
    SkeletonGraph {
        junctions,
        segments,
        avg_stroke_width: avg,
    }
}
