use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};

use super::{endpoint_direction, SegmentEnd, Step, TraceParams, TracedPath};
use crate::geometry::angle_between;
use crate::skeleton_graph::{JunctionId, SegmentId, SkeletonGraph};

#[derive(Debug, Clone, Copy)]
struct End {
    path: usize,
    at_start: bool,
    deviation: f64,
}

/// Finds the best path end at `w` to continue a doubled `segment` into.
fn best_end(
    graph: &SkeletonGraph,
    paths: &[TracedPath],
    segment: SegmentId,
    w: JunctionId,
    params: &TraceParams,
) -> Option<End> {
    let seg = &graph.segments[segment];
    let end = if seg.endpoints.0 == w {
        SegmentEnd::First
    } else {
        SegmentEnd::Last
    };
    let ds = endpoint_direction(seg, end, params.direction_window);
    let mut best: Option<End> = None;
    for (i, p) in paths.iter().enumerate() {
        // A path made of the segment alone cannot absorb its own copy.
        if p.steps.len() == 1 && p.steps[0].segment == segment {
            continue;
        }
        for at_start in [true, false] {
            let v = if at_start { p.start } else { p.end };
            if v != w {
                continue;
            }
            let deviation = match (ds, p.end_direction(graph, at_start, params.direction_window)) {
                (Some(a), Some(b)) => {
                    let theta = angle_between(a, b);
                    if (theta - FRAC_PI_2).abs() <= params.double_trace_angle_margin {
                        continue;
                    }
                    theta.min(PI - theta)
                }
                _ => FRAC_PI_2,
            };
            if best.is_none_or(|b| deviation.total_cmp(&b.deviation) == Ordering::Less) {
                best = Some(End {
                    path: i,
                    at_start,
                    deviation,
                });
            }
        }
    }
    best
}

/// Lets segments between two odd-degree vertices be traversed a second time
/// when both sides can continue into an existing path end without a
/// near-perpendicular turn. Candidates are taken one at a time, most
/// collinear first, re-evaluating after each join.
pub fn fix_double_traced(
    graph: &SkeletonGraph,
    paths: Vec<TracedPath>,
    params: &TraceParams,
) -> Vec<TracedPath> {
    let mut paths = paths;
    let mut degree = graph.degrees();
    loop {
        let mut best: Option<(f64, SegmentId, End, End)> = None;
        for seg in &graph.segments {
            let (u, v) = seg.endpoints;
            if u == v || degree[u].is_multiple_of(2) || degree[v].is_multiple_of(2) {
                continue;
            }
            let Some(eu) = best_end(graph, &paths, seg.id, u, params) else { continue };
            let Some(ev) = best_end(graph, &paths, seg.id, v, params) else { continue };
            let key = eu.deviation.max(ev.deviation);
            if best.is_none_or(|(k, _, _, _)| key.total_cmp(&k) == Ordering::Less) {
                best = Some((key, seg.id, eu, ev));
            }
        }
        let Some((_, s, eu, ev)) = best else { break };
        let (u, v) = graph.segments[s].endpoints;

        let orient_to_end = |e: End| {
            let p = &paths[e.path];
            if e.at_start {
                p.reversed()
            } else {
                p.clone()
            }
        };
        let head = orient_to_end(eu);
        let mut steps = head.steps;
        steps.push(Step {
            segment: s,
            forward: true,
        });
        let joined = if eu.path == ev.path {
            TracedPath {
                steps,
                start: head.start,
                end: v,
            }
        } else {
            let tail = orient_to_end(ev).reversed();
            steps.extend(tail.steps);
            TracedPath {
                steps,
                start: head.start,
                end: tail.end,
            }
        };
        let (keep, drop) = (eu.path.min(ev.path), eu.path.max(ev.path));
        paths[keep] = joined;
        if drop != keep {
            paths.remove(drop);
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::SkeletonFixture;
    use crate::tracing::fixtures::graph;
    use crate::tracing::trace_strokes;

    fn run(f: SkeletonFixture) -> (SkeletonGraph, Vec<TracedPath>) {
        let g = graph(f);
        let p = TraceParams::default();
        let paths = fix_double_traced(&g, trace_strokes(&g, &p), &p);
        for path in &paths {
            for w in path.steps.windows(2) {
                assert_eq!(w[0].to_vertex(&g), w[1].from_vertex(&g));
            }
            assert_eq!(path.steps[0].from_vertex(&g), path.start);
            assert_eq!(path.steps.last().unwrap().to_vertex(&g), path.end);
        }
        (g, paths)
    }

    #[test]
    fn plus_untouched() {
        let (_, paths) = run(SkeletonFixture::Plus);
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn tee_stays_two_strokes() {
        let (g, paths) = run(SkeletonFixture::Tee);
        assert_eq!(paths.len(), 2);
        for s in &g.segments {
            assert_eq!(paths.iter().map(|p| p.segment_count(s.id)).sum::<usize>(), 1);
        }
    }

    #[test]
    fn loop_with_stem_becomes_one_stroke() {
        let (g, paths) = run(SkeletonFixture::LoopStem);
        assert_eq!(paths.len(), 1);
        let stem = g.segments.iter().find(|s| !s.is_loop()).unwrap();
        assert_eq!(paths[0].segment_count(stem.id), 2);
        let ring = g.segments.iter().find(|s| s.is_loop()).unwrap();
        assert_eq!(paths[0].segment_count(ring.id), 1);
    }

    #[test]
    fn hook_becomes_one_stroke() {
        let (g, paths) = run(SkeletonFixture::Hook);
        assert_eq!(paths.len(), 1);
        let twice: Vec<_> = g.segments.iter().filter(|s| paths[0].segment_count(s.id) == 2).collect();
        assert_eq!(twice.len(), 1);
    }

    #[test]
    fn every_segment_kept() {
        for f in SkeletonFixture::ALL {
            let (g, paths) = run(f);
            for s in &g.segments {
                let n: usize = paths.iter().map(|p| p.segment_count(s.id)).sum();
                assert!((1..=2).contains(&n), "{f:?} segment {} used {n} times", s.id);
            }
        }
    }
}
