use super::{BinaryImage, StrokeWidthMap};

/// Stroke width transform by directional runs: each ink pixel gets the
/// shortest of the four maximal runs (horizontal, vertical and both
/// diagonals) passing through it.
///
/// Runs are walked from their first pixel, so the cost is proportional to
/// the amount of ink rather than the image area.
pub fn stroke_width_transform(binary: &BinaryImage) -> StrokeWidthMap {
    let (w, h) = (binary.width(), binary.height());
    let ink = binary.as_raw();
    let mut out = vec![0u32; w * h];
    let cells: Vec<usize> = (0..ink.len()).filter(|&i| ink[i]).collect();
    for &i in &cells {
        out[i] = u32::MAX;
    }
    let at = |x: isize, y: isize| -> Option<usize> {
        (x >= 0 && y >= 0 && (x as usize) < w && (y as usize) < h).then(|| y as usize * w + x as usize)
    };
    for (dx, dy) in [(1isize, 0isize), (0, 1), (1, 1), (-1, 1)] {
        for &i in &cells {
            let (x, y) = ((i % w) as isize, (i / w) as isize);
            if at(x - dx, y - dy).is_some_and(|p| ink[p]) {
                continue;
            }
            let mut len = 1;
            while at(x + dx * len, y + dy * len).is_some_and(|p| ink[p]) {
                len += 1;
            }
            for k in 0..len {
                let p = ((y + dy * k) as usize) * w + (x + dx * k) as usize;
                out[p] = out[p].min(len as u32);
            }
        }
    }
    StrokeWidthMap {
        width: w,
        height: h,
        widths: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Walks outward from every pixel in all four directions.
    fn brute_force(b: &BinaryImage) -> Vec<u32> {
        let (w, h) = (b.width() as i64, b.height() as i64);
        let fg = |x: i64, y: i64| x >= 0 && y >= 0 && x < w && y < h && b.get(x as usize, y as usize);
        let mut out = vec![0; (w * h) as usize];
        for y in 0..h {
            for x in 0..w {
                if !fg(x, y) {
                    continue;
                }
                let mut best = u32::MAX;
                for (dx, dy) in [(1i64, 0i64), (0, 1), (1, 1), (1, -1)] {
                    let mut n = 1;
                    let (mut cx, mut cy) = (x + dx, y + dy);
                    while fg(cx, cy) {
                        n += 1;
                        cx += dx;
                        cy += dy;
                    }
                    let (mut cx, mut cy) = (x - dx, y - dy);
                    while fg(cx, cy) {
                        n += 1;
                        cx -= dx;
                        cy -= dy;
                    }
                    best = best.min(n);
                }
                out[(y * w + x) as usize] = best;
            }
        }
        out
    }

    #[test]
    fn isolated_pixel() {
        let b = BinaryImage::from_ascii(&["...", ".#.", "..."]);
        assert_eq!(stroke_width_transform(&b).get(1, 1), 1);
    }

    #[test]
    fn horizontal_bar() {
        let b = BinaryImage::from_ascii(&["#####"]);
        let swt = stroke_width_transform(&b);
        assert_eq!(swt.get(2, 0), 1);
    }

    #[test]
    fn solid_block() {
        let b = BinaryImage::from_ascii(&["###", "###", "###"]);
        let swt = stroke_width_transform(&b);
        assert_eq!(brute_force(&b)[4], 3);
        assert_eq!(brute_force(&b)[0], 1);
        assert_eq!(swt.get(1, 1), 3);
        assert_eq!(swt.get(0, 0), 1);
        assert_eq!(swt.as_raw(), brute_force(&b).as_slice());
    }

    #[test]
    fn background_is_zero() {
        let b = BinaryImage::from_ascii(&["#..", "..."]);
        let swt = stroke_width_transform(&b);
        assert_eq!(swt.get(1, 0), 0);
        assert_eq!(swt.get(0, 0), 1);
    }

    proptest! {
        #[test]
        fn equals_brute_force(b in crate::imaging::random_binary(40)) {
            let swt = stroke_width_transform(&b);
            let expected = brute_force(&b);
            prop_assert_eq!(swt.as_raw(), expected.as_slice());
            let bound = b.width().min(b.height()) as u32;
            for (i, &v) in swt.as_raw().iter().enumerate() {
                if b.as_raw()[i] {
                    prop_assert!(v >= 1 && v <= bound);
                } else {
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }
}
