use serde::{Deserialize, Serialize};

use super::{BinaryImage, SkeletonImage};

/// Which deletion rules drive the two-subiteration thinning loop.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThinningVariant {
    /// Zhang-Suen subiteration masks, but each deletion is committed only if
    /// the pixel is still a simple point of the partially thinned image, and
    /// 4-connected staircase corners are removed so diagonal strokes stay
    /// one pixel wide. Preserves 8-connected components exactly.
    #[default]
    Guarded,
    /// Textbook Zhang-Suen. Erases 2x2 blocks and may split two pixel thick
    /// diagonals.
    ZhangSuen,
}

// Neighborhood bytes: bit k is set when the k-th neighbor, clockwise from
// north (N, NE, E, SE, S, SW, W, NW), is ink.
const N: u8 = 1;
const NE: u8 = 1 << 1;
const E: u8 = 1 << 2;
const SE: u8 = 1 << 3;
const S: u8 = 1 << 4;
const SW: u8 = 1 << 5;
const W: u8 = 1 << 6;
const NW: u8 = 1 << 7;

struct Tables {
    first: [bool; 256],
    second: [bool; 256],
    simple: [bool; 256],
    staircase: [bool; 256],
}

impl Tables {
    fn build() -> Self {
        let mut t = Tables {
            first: [false; 256],
            second: [false; 256],
            simple: [false; 256],
            staircase: [false; 256],
        };
        for n in 0..256usize {
            let b = n as u8;
            let count = b.count_ones();
            let transitions = (0..8)
                .filter(|&k| b & (1 << k) == 0 && b & (1 << ((k + 1) % 8)) != 0)
                .count();
            let has = |m: u8| b & m == m;
            let base = (2..=6).contains(&count) && transitions == 1;
            t.first[n] = base && !has(N | E | S) && !has(E | S | W);
            t.second[n] = base && !has(N | E | W) && !has(N | S | W);
            t.simple[n] = yokoi_8(b) == 1;
            // A corner of a one pixel wide staircase: two 4-neighbors meeting
            // around an empty diagonal, nothing on the opposite sides.
            t.staircase[n] = [(N | E, NE, S | W), (E | S, SE, W | N), (S | W, SW, N | E), (W | N, NW, E | S)]
                .iter()
                .any(|&(pair, diag, opposite)| has(pair) && b & diag == 0 && b & opposite == 0);
        }
        t
    }
}

/// Yokoi connectivity number for 8-connected ink. A border pixel with value
/// 1 can be removed without changing the topology.
fn yokoi_8(b: u8) -> u32 {
    // Counter-clockwise from east: E, NE, N, NW, W, SW, S, SE.
    const ORDER: [u8; 8] = [2, 1, 0, 7, 6, 5, 4, 3];
    let bg = |k: usize| u32::from(b & (1 << ORDER[k % 8]) == 0);
    (0..8)
        .step_by(2)
        .map(|k| bg(k) - bg(k) * bg(k + 1) * bg(k + 2))
        .sum()
}

pub fn thin(binary: &BinaryImage) -> SkeletonImage {
    thin_with(binary, ThinningVariant::default())
}

/// Iterative parallel thinning; runs until a full pass deletes nothing, so
/// the result is a fixed point and thinning it again is a no-op.
pub fn thin_with(binary: &BinaryImage, variant: ThinningVariant) -> SkeletonImage {
    let tables = Tables::build();
    let (w, h) = (binary.width(), binary.height());
    let pw = w + 2;
    let mut buf = vec![0u8; pw * (h + 2)];
    let mut pixels = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if binary.get(x, y) {
                let i = (y + 1) * pw + x + 1;
                buf[i] = 1;
                pixels.push(i);
            }
        }
    }
    let offsets: [isize; 8] = {
        let p = pw as isize;
        [-p, -p + 1, 1, p + 1, p, p - 1, -1, -p - 1]
    };
    let neighborhood = |buf: &[u8], i: usize| -> usize {
        offsets
            .iter()
            .enumerate()
            .fold(0usize, |acc, (k, &o)| acc | ((buf[(i as isize + o) as usize] as usize) << k))
    };

    let mut candidates = Vec::new();
    loop {
        let mut changed = false;
        for mask in [&tables.first, &tables.second] {
            candidates.clear();
            candidates.extend(pixels.iter().copied().filter(|&i| mask[neighborhood(&buf, i)]));
            for &i in &candidates {
                let n = neighborhood(&buf, i);
                // Candidates were chosen on the pass snapshot, which already
                // excludes line ends; here only topology is rechecked.
                if variant == ThinningVariant::ZhangSuen || tables.simple[n] {
                    buf[i] = 0;
                    changed = true;
                }
            }
            pixels.retain(|&i| buf[i] == 1);
        }
        if variant == ThinningVariant::Guarded {
            for &i in &pixels {
                let n = neighborhood(&buf, i);
                if tables.staircase[n] && n.count_ones() >= 2 && tables.simple[n] {
                    buf[i] = 0;
                    changed = true;
                }
            }
            pixels.retain(|&i| buf[i] == 1);
        }
        if !changed {
            break;
        }
    }

    let out = BinaryImage::from_fn(w, h, |x, y| buf[(y + 1) * pw + x + 1] == 1);
    SkeletonImage(out)
}
