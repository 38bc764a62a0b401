use super::BinaryImage;
use crate::geometry::{Point, NEIGHBORS_8};

/// 8-connected components of `member` pixels on a `width` x `height` grid.
///
/// Components are discovered in row-major order of their first pixel, which
/// makes the output order deterministic.
pub(crate) fn label_8(
    width: usize,
    height: usize,
    member: impl Fn(usize) -> bool,
) -> Vec<Vec<Point>> {
    let mut seen = vec![false; width * height];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..width * height {
        if seen[start] || !member(start) {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = Vec::new();
        while let Some(i) = stack.pop() {
            let (x, y) = ((i % width) as i32, (i / width) as i32);
            comp.push(Point::new(x, y));
            for (dx, dy) in NEIGHBORS_8 {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx as usize >= width || ny as usize >= height {
                    continue;
                }
                let j = ny as usize * width + nx as usize;
                if !seen[j] && member(j) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn components_8(image: &BinaryImage) -> Vec<Vec<Point>> {
    let raw = image.as_raw();
    label_8(image.width(), image.height(), |i| raw[i])
}

pub fn count_components_8(image: &BinaryImage) -> usize {
    components_8(image).len()
}
