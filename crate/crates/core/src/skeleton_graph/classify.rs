use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::imaging::{BinaryImage, SkeletonImage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PixelClass {
    Background,
    Segment,
    Junction,
}

#[derive(Debug, Clone)]
pub struct PixelLabels {
    width: usize,
    height: usize,
    classes: Vec<PixelClass>,
}

impl PixelLabels {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> PixelClass {
        self.classes[y * self.width + x]
    }

    pub fn at(&self, p: Point) -> PixelClass {
        if p.x < 0 || p.y < 0 || p.x as usize >= self.width || p.y as usize >= self.height {
            return PixelClass::Background;
        }
        self.classes[p.y as usize * self.width + p.x as usize]
    }
}

/// Labels each skeleton pixel as a segment or junction pixel.
pub fn classify_pixels(skeleton: &SkeletonImage) -> PixelLabels {
    let img: &BinaryImage = skeleton.as_binary();
    let (w, h) = (img.width(), img.height());
    let mut classes = vec![PixelClass::Background; w * h];
    for p in img.foreground() {
        let mut nbrs = p.neighbors8().filter(|&q| img.at(q));
        let class = match (nbrs.next(), nbrs.next(), nbrs.next()) {
            (Some(a), Some(b), None) if !a.is_4_adjacent(b) => PixelClass::Segment,
            _ => PixelClass::Junction,
        };
        classes[p.y as usize * w + p.x as usize] = class;
    }
    PixelLabels {
        width: w,
        height: h,
        classes,
    }
}

/// 8-connected components of segment pixels and of junction pixels.
#[derive(Debug, Clone, Default)]
pub struct Components {
    pub segments: Vec<Vec<Point>>,
    pub junctions: Vec<Vec<Point>>,
}

pub fn extract_components(labels: &PixelLabels) -> Components {
    let of = |class| {
        crate::imaging::components::label_8(labels.width, labels.height, |i| {
            labels.classes[i] == class
        })
    };
    Components {
        segments: of(PixelClass::Segment),
        junctions: of(PixelClass::Junction),
    }
}

/// A segment's pixels in walking order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSegment {
    pub pixels: Vec<Point>,
    /// First and last pixel are adjacent and no junction is touched.
    pub closed: bool,
}

/// Lists a segment component so successive pixels are 8-adjacent.
///
/// Open chains start at the end whose pixel comes first in row-major order;
/// closed loops start at their row-major smallest pixel.
pub fn order_segment_pixels(pixels: &[Point]) -> Result<OrderedSegment> {
    match pixels {
        [] => return Err(Error::Consistency("empty segment component".into())),
        [p] => {
            return Ok(OrderedSegment {
                pixels: vec![*p],
                closed: false,
            })
        }
        _ => {}
    }
    let index: HashMap<Point, usize> = pixels.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let adjacency: Vec<Vec<usize>> = pixels
        .iter()
        .map(|p| p.neighbors8().filter_map(|q| index.get(&q).copied()).collect())
        .collect();
    if let Some(i) = adjacency.iter().position(|a| a.len() > 2 || a.is_empty()) {
        return Err(Error::Consistency(format!(
            "segment pixel {:?} has {} neighbors inside its component",
            pixels[i],
            adjacency[i].len()
        )));
    }
    let key = |i: &usize| pixels[*i].row_major();
    let ends: Vec<usize> = (0..pixels.len()).filter(|&i| adjacency[i].len() == 1).collect();
    let (start, closed) = match ends.len() {
        0 => ((0..pixels.len()).min_by_key(|i| key(i)).unwrap(), true),
        2 => (ends.iter().copied().min_by_key(|i| key(i)).unwrap(), false),
        n => {
            return Err(Error::Consistency(format!(
                "segment component starting at {:?} has {n} ends",
                pixels[0]
            )))
        }
    };

    let mut visited = vec![false; pixels.len()];
    let mut order = Vec::with_capacity(pixels.len());
    let mut cur = start;
    loop {
        visited[cur] = true;
        order.push(pixels[cur]);
        let next = adjacency[cur]
            .iter()
            .copied()
            .filter(|&j| !visited[j])
            .min_by_key(key);
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    if order.len() != pixels.len() {
        return Err(Error::Consistency(format!(
            "segment component starting at {:?} is not a simple chain",
            pixels[start]
        )));
    }
    Ok(OrderedSegment {
        pixels: order,
        closed,
    })
}
