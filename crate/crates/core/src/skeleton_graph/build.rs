use std::collections::HashMap;

use super::{order_segment_pixels, Components, Junction, Segment, SkeletonGraph};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::imaging::StrokeWidthMap;

/// Assembles the attributed graph from segment and junction components.
///
/// Each closed segment gets an imposed junction at its row-major smallest
/// pixel and becomes a self-loop. A single-pixel segment is always treated
/// as open, even when both its neighbors belong to one junction.
pub fn build_graph(components: &Components, swt: &StrokeWidthMap) -> Result<SkeletonGraph> {
    let max_width = |px: &[Point]| px.iter().map(|&p| swt.at(p)).max().unwrap_or(0);

    let mut junctions: Vec<Junction> = Vec::with_capacity(components.junctions.len());
    let mut owner: HashMap<Point, usize> = HashMap::new();
    for (id, px) in components.junctions.iter().enumerate() {
        let mut pixels = px.clone();
        pixels.sort_by_key(|p| p.row_major());
        for &p in &pixels {
            owner.insert(p, id);
        }
        junctions.push(Junction {
            id,
            width: max_width(&pixels),
            pixels,
            imposed: false,
        });
    }

    let touching = |p: Point| -> Vec<usize> {
        let mut ids: Vec<usize> = Vec::new();
        for q in p.neighbors8() {
            if let Some(&j) = owner.get(&q) {
                if !ids.contains(&j) {
                    ids.push(j);
                }
            }
        }
        ids
    };

    let mut segments = Vec::with_capacity(components.segments.len());
    for px in &components.segments {
        let ordered = order_segment_pixels(px)?;
        let id = segments.len();
        let width = max_width(&ordered.pixels);
        let first = ordered.pixels[0];
        let last = *ordered.pixels.last().unwrap();
        let endpoints = if ordered.closed {
            let j = junctions.len();
            junctions.push(Junction {
                id: j,
                pixels: vec![first],
                width: swt.at(first),
                imposed: true,
            });
            (j, j)
        } else if ordered.pixels.len() == 1 {
            match touching(first).as_slice() {
                [a] => (*a, *a),
                [a, b] => (*a, *b),
                ids => {
                    return Err(Error::Consistency(format!(
                        "single-pixel segment at {first:?} touches {} junctions",
                        ids.len()
                    )))
                }
            }
        } else {
            let one = |p: Point| match touching(p).as_slice() {
                [a] => Ok(*a),
                ids => Err(Error::Consistency(format!(
                    "segment end {p:?} touches {} junctions",
                    ids.len()
                ))),
            };
            (one(first)?, one(last)?)
        };
        segments.push(Segment {
            id,
            pixels: ordered.pixels,
            endpoints,
            width,
        });
    }

    let avg_stroke_width = if segments.is_empty() {
        0.0
    } else {
        segments.iter().map(|s| s.width as f64).sum::<f64>() / segments.len() as f64
    };
    Ok(SkeletonGraph {
        junctions,
        segments,
        avg_stroke_width,
    })
}
