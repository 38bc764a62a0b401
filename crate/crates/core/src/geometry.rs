//! Integer pixel coordinates and small vector helpers.

use serde::{Deserialize, Serialize};

/// A pixel position in image coordinates: `x` grows to the right, `y` grows
/// downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    /// Sort key for row-major (top-to-bottom, then left-to-right) order.
    pub fn row_major(self) -> (i32, i32) {
        (self.y, self.x)
    }

    pub fn is_8_adjacent(self, other: Point) -> bool {
        self != other && (self.x - other.x).abs() <= 1 && (self.y - other.y).abs() <= 1
    }

    pub fn is_4_adjacent(self, other: Point) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    pub fn neighbors8(self) -> impl Iterator<Item = Point> {
        NEIGHBORS_8
            .iter()
            .map(move |&(dx, dy)| Point::new(self.x + dx, self.y + dy))
    }
}

/// Offsets of the 8-neighborhood, clockwise from north.
pub const NEIGHBORS_8: [(i32, i32); 8] = [
    (0, -1),
    (1, -1),
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
];

/// Rounds half toward negative infinity, so 4.5 becomes 4 and -4.5 becomes -5.
pub fn round_half_down(v: f64) -> i32 {
    (v - 0.5).ceil() as i32
}

/// Centroid of a non-empty pixel set, rounded half-down on each axis.
pub fn centroid<'a>(pixels: impl IntoIterator<Item = &'a Point>) -> Option<Point> {
    let (mut sx, mut sy, mut n) = (0i64, 0i64, 0i64);
    for p in pixels {
        sx += p.x as i64;
        sy += p.y as i64;
        n += 1;
    }
    if n == 0 {
        return None;
    }
    Some(Point::new(
        round_half_down(sx as f64 / n as f64),
        round_half_down(sy as f64 / n as f64),
    ))
}

/// Unsigned angle between two vectors, in `[0, π]`.
pub fn angle_between(a: [f64; 2], b: [f64; 2]) -> f64 {
    let cross = a[0] * b[1] - a[1] * b[0];
    let dot = a[0] * b[0] + a[1] * b[1];
    cross.abs().atan2(dot)
}
