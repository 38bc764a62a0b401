//! Stroke direction and writing-order normalization.
//!
//! Each stroke is first oriented so that it runs roughly left-to-right and
//! top-to-bottom. Strokes are then grouped by recursive X-Y cuts on their
//! bounding boxes, and each group is topologically sorted by the left-of and
//! above relations, with the top-left corner breaking ties and cycles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

/// An ordered pixel polyline, y pointing down. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct Stroke {
    points: Vec<Point>,
}

impl TryFrom<Vec<Point>> for Stroke {
    type Error = Error;

    fn try_from(points: Vec<Point>) -> Result<Self> {
        Stroke::new(points)
    }
}

impl From<Stroke> for Vec<Point> {
    fn from(s: Stroke) -> Self {
        s.points
    }
}

impl Stroke {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("a stroke needs at least one point".into()));
        }
        Ok(Stroke { points })
    }

    pub fn point(p: Point) -> Self {
        Stroke { points: vec![p] }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    pub fn bbox(&self) -> BBox {
        let mut b = BBox {
            min_x: i32::MAX,
            min_y: i32::MAX,
            max_x: i32::MIN,
            max_y: i32::MIN,
        };
        for p in &self.points {
            b.min_x = b.min_x.min(p.x);
            b.min_y = b.min_y.min(p.y);
            b.max_x = b.max_x.max(p.x);
            b.max_y = b.max_y.max(p.y);
        }
        b
    }

    pub fn reversed(&self) -> Self {
        Stroke {
            points: self.points.iter().rev().copied().collect(),
        }
    }

    pub fn translated(&self, dx: i32, dy: i32) -> Self {
        Stroke {
            points: self.points.iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect(),
        }
    }
}

/// Inclusive pixel bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BBox {
    pub min_x: i32,
    pub min_y: i32,
    pub max_x: i32,
    pub max_y: i32,
}

impl BBox {
    fn range(&self, axis: Axis) -> (i32, i32) {
        match axis {
            Axis::X => (self.min_x, self.max_x),
            Axis::Y => (self.min_y, self.max_y),
        }
    }

    /// Closed-interval overlap of the projections; touching counts.
    pub fn overlaps_on(&self, other: &BBox, axis: Axis) -> bool {
        let (a0, a1) = self.range(axis);
        let (b0, b1) = other.range(axis);
        a0 <= b1 && b0 <= a1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OrderParams {
    /// A projection gap wider than this many average stroke widths splits a
    /// group.
    pub gap_multiplier: f64,
}

impl Default for OrderParams {
    fn default() -> Self {
        OrderParams { gap_multiplier: 1.0 }
    }
}

impl OrderParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.gap_multiplier > 0.0 && self.gap_multiplier.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "gap multiplier must be positive, got {}",
                self.gap_multiplier
            )));
        }
        Ok(())
    }
}

/// Reverses the stroke when its end scores lower than its start under
/// `2x + 3y`.
pub fn normalize_direction(stroke: &Stroke) -> Stroke {
    let score = |p: Point| 2 * p.x as i64 + 3 * p.y as i64;
    if score(stroke.end()) < score(stroke.start()) {
        stroke.reversed()
    } else {
        stroke.clone()
    }
}

/// Result of the recursive X-Y cut, holding stroke indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupTree {
    Leaf(Vec<usize>),
    Split { axis: Axis, children: Vec<GroupTree> },
}

impl GroupTree {
    /// Leaf groups in reading order.
    pub fn leaves(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<Vec<usize>>) {
        match self {
            GroupTree::Leaf(g) => out.push(g.clone()),
            GroupTree::Split { children, .. } => children.iter().for_each(|c| c.collect(out)),
        }
    }
}

/// Splits `members` wherever the projections on `axis` leave a gap wider
/// than `gap`. Parts come out in ascending coordinate order.
fn split(boxes: &[BBox], members: &[usize], axis: Axis, gap: f64) -> Vec<Vec<usize>> {
    let mut sorted = members.to_vec();
    sorted.sort_by_key(|&i| (boxes[i].range(axis), i));
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut reach = i32::MIN;
    for i in sorted {
        let (lo, hi) = boxes[i].range(axis);
        if parts.is_empty() || (lo as i64 - reach as i64) as f64 > gap {
            parts.push(Vec::new());
        }
        parts.last_mut().unwrap().push(i);
        reach = reach.max(hi);
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts
}

fn cut(boxes: &[BBox], members: Vec<usize>, axis: Axis, gap: f64) -> GroupTree {
    for a in [axis, axis.other()] {
        let parts = split(boxes, &members, a, gap);
        if parts.len() > 1 {
            let children = parts.into_iter().map(|p| cut(boxes, p, a.other(), gap)).collect();
            return GroupTree::Split { axis: a, children };
        }
    }
    GroupTree::Leaf(members)
}

/// Recursive X-Y cut over stroke bounding boxes, x first.
pub fn group_tree(strokes: &[Stroke], avg_width: f64, params: &OrderParams) -> GroupTree {
    let boxes: Vec<BBox> = strokes.iter().map(Stroke::bbox).collect();
    let gap = params.gap_multiplier * avg_width;
    cut(&boxes, (0..strokes.len()).collect(), Axis::X, gap)
}

/// Leaf groups of [`group_tree`], as stroke indices in reading order.
pub fn group_strokes(strokes: &[Stroke], avg_width: f64, params: &OrderParams) -> Vec<Vec<usize>> {
    if strokes.is_empty() {
        return Vec::new();
    }
    group_tree(strokes, avg_width, params).leaves()
}

/// Whether `a` must come before `b`: left of it within a shared row band,
/// or above it within a shared column band.
pub fn precedes(a: &BBox, b: &BBox) -> bool {
    let (ox, oy) = (a.overlaps_on(b, Axis::X), a.overlaps_on(b, Axis::Y));
    (oy && !ox && a.max_x < b.min_x) || (ox && !oy && a.max_y < b.min_y)
}

/// Topological order of the given strokes under [`precedes`]. Strokes in a
/// precedence cycle, and incomparable ones, are ordered by their top-left
/// corner, then by index. Returns positions into `group`.
pub fn sort_group(group: &[Stroke]) -> Vec<usize> {
    let n = group.len();
    let boxes: Vec<BBox> = group.iter().map(Stroke::bbox).collect();
    let key = |i: usize| (boxes[i].min_y, boxes[i].min_x, i);
    let edges: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && precedes(&boxes[i], &boxes[j])).collect())
        .collect();

    // Reachability, then strongly connected components as mutual reach.
    let reach: Vec<Vec<bool>> = (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in &edges[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        })
        .collect();
    let mut comp = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if comp[i] != usize::MAX {
            continue;
        }
        let mut m: Vec<usize> = (i..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
        m.sort_by_key(|&j| key(j));
        for &j in &m {
            comp[j] = members.len();
        }
        members.push(m);
    }

    let c = members.len();
    let mut indeg = vec![0usize; c];
    let mut cedges: Vec<Vec<usize>> = vec![Vec::new(); c];
    for i in 0..n {
        for &j in &edges[i] {
            let (a, b) = (comp[i], comp[j]);
            if a != b && !cedges[a].contains(&b) {
                cedges[a].push(b);
                indeg[b] += 1;
            }
        }
    }
    let mut ready: std::collections::BTreeSet<((i32, i32, usize), usize)> = (0..c)
        .filter(|&k| indeg[k] == 0)
        .map(|k| (key(members[k][0]), k))
        .collect();
    let mut out = Vec::with_capacity(n);
    while let Some(first) = ready.pop_first() {
        let k = first.1;
        out.extend_from_slice(&members[k]);
        for &b in &cedges[k] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.insert((key(members[b][0]), b));
            }
        }
    }
    out
}

/// Direction-normalizes every stroke, groups, sorts within groups and
/// concatenates. Returns the reordered strokes and, for each, its index in
/// the input.
pub fn order_strokes_indexed(strokes: &[Stroke], avg_width: f64, params: &OrderParams) -> (Vec<Stroke>, Vec<usize>) {
    let normalized: Vec<Stroke> = strokes.iter().map(normalize_direction).collect();
    let mut order = Vec::with_capacity(strokes.len());
    for g in group_strokes(&normalized, avg_width, params) {
        let members: Vec<Stroke> = g.iter().map(|&i| normalized[i].clone()).collect();
        order.extend(sort_group(&members).into_iter().map(|k| g[k]));
    }
    (order.iter().map(|&i| normalized[i].clone()).collect(), order)
}

pub fn order_strokes(strokes: &[Stroke], avg_width: f64, params: &OrderParams) -> Vec<Stroke> {
    order_strokes_indexed(strokes, avg_width, params).0
}
