use std::cmp::Ordering;
use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::{TraceParams, TracedPath};
use crate::geometry::angle_between;
use crate::skeleton_graph::{JunctionId, SegmentId, SkeletonGraph};

/// One greedy merge, in the order it happened.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MergeRecord {
    pub vertex: JunctionId,
    /// Segments at the two joined path ends, smaller id first.
    pub segments: (SegmentId, SegmentId),
    /// Turning angle in radians; 0 is a straight continuation.
    pub cost: f64,
}

#[derive(Debug, Clone, Copy)]
struct Slot {
    path: usize,
    at_start: bool,
    dir: Option<[f64; 2]>,
    segment: SegmentId,
}

/// Turning angle when arriving along `a` and leaving back out along `b`.
/// Both are directions pointing into the shared vertex. An undefined
/// direction gives a neutral right angle.
pub(crate) fn turning_cost(a: Option<[f64; 2]>, b: Option<[f64; 2]>) -> f64 {
    match (a, b) {
        (Some(a), Some(b)) => angle_between(a, [-b[0], -b[1]]),
        _ => FRAC_PI_2,
    }
}

pub fn trace_strokes(graph: &SkeletonGraph, params: &TraceParams) -> Vec<TracedPath> {
    trace_strokes_logged(graph, params).0
}

/// Bottom-up path clustering, also returning the merge history.
///
/// Costs depend only on the segments at path ends, which merging never
/// changes, so the logged costs are non-decreasing.
pub fn trace_strokes_logged(
    graph: &SkeletonGraph,
    params: &TraceParams,
) -> (Vec<TracedPath>, Vec<MergeRecord>) {
    let window = params.direction_window;
    let mut paths: Vec<Option<TracedPath>> =
        graph.segments.iter().map(|s| Some(TracedPath::single(s))).collect();
    let mut log = Vec::new();
    let mut slots: Vec<Vec<Slot>> = vec![Vec::new(); graph.junctions.len()];

    loop {
        slots.iter_mut().for_each(Vec::clear);
        for (i, p) in paths.iter().enumerate() {
            let Some(p) = p else { continue };
            for at_start in [true, false] {
                let (v, step) = if at_start {
                    (p.start, p.steps[0])
                } else {
                    (p.end, *p.steps.last().unwrap())
                };
                slots[v].push(Slot {
                    path: i,
                    at_start,
                    dir: p.end_direction(graph, at_start, window),
                    segment: step.segment,
                });
            }
        }

        let mut best: Option<(f64, (SegmentId, SegmentId), JunctionId, Slot, Slot)> = None;
        for (v, at) in slots.iter().enumerate() {
            for (k, a) in at.iter().enumerate() {
                for b in &at[k + 1..] {
                    if a.path == b.path {
                        continue;
                    }
                    let cost = turning_cost(a.dir, b.dir);
                    let pair = (a.segment.min(b.segment), a.segment.max(b.segment));
                    let better = match &best {
                        None => true,
                        Some((c, p, bv, _, _)) => {
                            cost.total_cmp(c).then(pair.cmp(p)).then(v.cmp(bv)) == Ordering::Less
                        }
                    };
                    if better {
                        best = Some((cost, pair, v, *a, *b));
                    }
                }
            }
        }
        let Some((cost, pair, vertex, a, b)) = best else { break };

        let pa = paths[a.path].take().unwrap();
        let pb = paths[b.path].take().unwrap();
        // `pa` must end at the vertex and `pb` start there.
        let pa = if a.at_start { pa.reversed() } else { pa };
        let pb = if b.at_start { pb } else { pb.reversed() };
        let mut steps = pa.steps;
        steps.extend(pb.steps);
        paths[a.path.min(b.path)] = Some(TracedPath {
            steps,
            start: pa.start,
            end: pb.end,
        });
        log.push(MergeRecord {
            vertex,
            segments: pair,
            cost,
        });
    }

    let mut paths: Vec<TracedPath> = paths.into_iter().flatten().collect();
    if params.eulerian_mode {
        absorb_circuits(graph, &mut paths);
    }
    (paths, log)
}

/// Splices every closed path into another path that visits one of its
/// vertices, until no closed path shares a vertex with any other path.
fn absorb_circuits(graph: &SkeletonGraph, paths: &mut Vec<TracedPath>) {
    'outer: loop {
        for c in 0..paths.len() {
            if !paths[c].is_closed() {
                continue;
            }
            let cverts = paths[c].vertices(graph);
            for p in (0..paths.len()).filter(|&p| p != c) {
                let pverts = paths[p].vertices(graph);
                let hit = pverts.iter().enumerate().find_map(|(i, v)| {
                    cverts[..cverts.len() - 1]
                        .iter()
                        .position(|cv| cv == v)
                        .map(|j| (i, j))
                });
                let Some((i, j)) = hit else { continue };

                let circuit = &paths[c].steps;
                let mut rotated = circuit[j..].to_vec();
                rotated.extend_from_slice(&circuit[..j]);
                let host = &paths[p];
                let mut steps = host.steps[..i].to_vec();
                steps.extend(rotated);
                steps.extend_from_slice(&host.steps[i..]);
                let merged = TracedPath {
                    steps,
                    start: host.start,
                    end: host.end,
                };
                let (keep, drop) = (c.min(p), c.max(p));
                paths[keep] = merged;
                paths.remove(drop);
                continue 'outer;
            }
        }
        break;
    }
}
