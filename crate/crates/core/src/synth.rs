//! Synthetic ink and skeleton fixtures.
//!
//! Glyph ink is used to exercise the pipeline end to end: documents are
//! rendered, extracted and compared with the ink they came from. Skeleton
//! fixtures are hand-placed one-pixel-wide drawings for testing graph
//! construction and tracing without the imaging stages.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::imaging::{BinaryImage, SkeletonImage};
use crate::ink_io::{InkDocument, InkPoint};

/// One-pixel-wide test drawings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeletonFixture {
    Line,
    Plus,
    /// Bar with a stem dropping from its middle.
    Tee,
    /// Closed ring with a stem leaving tangentially, as in a "d".
    LoopStem,
    /// Long stem with an arch branching off its middle, as in an "h".
    Hook,
    /// Ring sitting on a straight line.
    RingOnLine,
}

impl SkeletonFixture {
    pub const ALL: [SkeletonFixture; 6] = [
        SkeletonFixture::Line,
        SkeletonFixture::Plus,
        SkeletonFixture::Tee,
        SkeletonFixture::LoopStem,
        SkeletonFixture::Hook,
        SkeletonFixture::RingOnLine,
    ];

    fn polylines(self) -> Vec<Vec<(i32, i32)>> {
        match self {
            SkeletonFixture::Line => vec![vec![(0, 0), (20, 0)]],
            SkeletonFixture::Plus => vec![vec![(0, 10), (20, 10)], vec![(10, 0), (10, 20)]],
            SkeletonFixture::Tee => vec![vec![(0, 0), (20, 0)], vec![(10, 0), (10, 18)]],
            SkeletonFixture::LoopStem => vec![
                vec![(20, 0), (20, 14)],
                vec![(20, 14), (20, 20), (15, 25), (11, 25), (6, 20), (6, 14), (12, 8), (14, 8), (20, 14)],
            ],
            SkeletonFixture::Hook => vec![
                vec![(5, 0), (5, 30)],
                vec![(5, 12), (10, 7), (13, 7), (16, 10), (16, 30)],
            ],
            SkeletonFixture::RingOnLine => vec![
                vec![(0, 10), (30, 10)],
                vec![(15, 10), (20, 5), (15, 0), (10, 5), (15, 10)],
            ],
        }
    }
}

/// Draws polylines with 8-connected unit steps: diagonal while both
/// coordinates differ, then straight.
pub fn draw_polylines(width: usize, height: usize, lines: &[Vec<(i32, i32)>]) -> BinaryImage {
    let mut img = BinaryImage::new(width, height);
    for line in lines {
        let (mut x, mut y) = line[0];
        img.set(x as usize, y as usize, true);
        for &(tx, ty) in &line[1..] {
            while (x, y) != (tx, ty) {
                x += (tx - x).signum();
                y += (ty - y).signum();
                img.set(x as usize, y as usize, true);
            }
        }
    }
    img
}

pub fn skeleton_fixture(f: SkeletonFixture) -> SkeletonImage {
    const PAD: i32 = 2;
    let lines: Vec<Vec<(i32, i32)>> = f
        .polylines()
        .into_iter()
        .map(|l| l.into_iter().map(|(x, y)| (x + PAD, y + PAD)).collect())
        .collect();
    let w = lines.iter().flatten().map(|p| p.0).max().unwrap() + PAD + 1;
    let h = lines.iter().flatten().map(|p| p.1).max().unwrap() + PAD + 1;
    SkeletonImage::from_binary(draw_polylines(w as usize, h as usize, &lines))
}

/// Handwriting-like shapes with a known stroke decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Glyph {
    Line,
    Arc,
    Corner,
    Loop,
    Plus,
    Cross,
    Tee,
    /// "d": a circle, then up the stem and back down over it.
    LoopStem,
    /// "h": down the stem, back up part of it, then over the arch.
    Hook,
    Dot,
}

const BOX: f64 = 60.0;

fn circle(cx: f64, cy: f64, r: f64, from: f64, sweep: f64, n: usize) -> Vec<InkPoint> {
    (0..=n)
        .map(|i| {
            let a = from + sweep * i as f64 / n as f64;
            InkPoint::new(cx + r * a.cos(), cy + r * a.sin())
        })
        .collect()
}

fn pts(v: &[(f64, f64)]) -> Vec<InkPoint> {
    v.iter().map(|&(x, y)| InkPoint::new(x, y)).collect()
}

impl Glyph {
    pub const ALL: [Glyph; 10] = [
        Glyph::Line,
        Glyph::Arc,
        Glyph::Corner,
        Glyph::Loop,
        Glyph::Plus,
        Glyph::Cross,
        Glyph::Tee,
        Glyph::LoopStem,
        Glyph::Hook,
        Glyph::Dot,
    ];

    pub fn stroke_count(self) -> usize {
        match self {
            Glyph::Plus | Glyph::Cross | Glyph::Tee => 2,
            _ => 1,
        }
    }

    /// Strokes inside a 60x60 box, y down. `variant` picks an orientation
    /// where the glyph has several.
    pub fn strokes(self, variant: usize) -> Vec<Vec<InkPoint>> {
        let c = BOX / 2.0;
        match self {
            Glyph::Line => match variant % 4 {
                0 => vec![pts(&[(5.0, c), (55.0, c)])],
                1 => vec![pts(&[(c, 5.0), (c, 55.0)])],
                2 => vec![pts(&[(8.0, 8.0), (52.0, 52.0)])],
                _ => vec![pts(&[(8.0, 52.0), (52.0, 8.0)])],
            },
            Glyph::Arc => vec![circle(c, c, 24.0, (variant % 4) as f64 * PI / 2.0, PI, 24)],
            Glyph::Corner => {
                let l = pts(&[(8.0, 5.0), (8.0, 55.0), (55.0, 55.0)]);
                let l = match variant % 4 {
                    0 => l,
                    1 => l.iter().map(|p| InkPoint::new(BOX - p.x, p.y)).collect(),
                    2 => l.iter().map(|p| InkPoint::new(p.x, BOX - p.y)).collect(),
                    _ => l.iter().map(|p| InkPoint::new(BOX - p.x, BOX - p.y)).collect(),
                };
                vec![l]
            }
            Glyph::Loop => vec![circle(c, c, 24.0, -PI / 2.0, TAU, 36)],
            Glyph::Plus => vec![pts(&[(5.0, c), (55.0, c)]), pts(&[(c, 5.0), (c, 55.0)])],
            Glyph::Cross => vec![pts(&[(8.0, 8.0), (52.0, 52.0)]), pts(&[(52.0, 8.0), (8.0, 52.0)])],
            Glyph::Tee => vec![pts(&[(5.0, 5.0), (55.0, 5.0)]), pts(&[(c, 5.0), (c, 55.0)])],
            Glyph::LoopStem => {
                // Circle through the junction (45, 40) with a vertical
                // tangent there, so the stem continues it smoothly.
                let mut s = circle(30.0, 40.0, 15.0, 0.0, -TAU, 32);
                s.extend(pts(&[(45.0, 20.0), (45.0, 0.0), (45.0, 20.0), (45.0, 40.0)]));
                vec![s]
            }
            Glyph::Hook => vec![pts(&[
                (10.0, 0.0),
                (10.0, 60.0),
                (10.0, 30.0),
                (18.0, 18.0),
                (30.0, 14.0),
                (42.0, 18.0),
                (48.0, 30.0),
                (50.0, 60.0),
            ])],
            Glyph::Dot => vec![pts(&[(c, c)])],
        }
    }
}

/// Random glyphs on a grid, with `n` strokes in total.
pub fn random_document(rng: &mut impl Rng, n: usize) -> InkDocument {
    const CELL: f64 = 100.0;
    const COLUMNS: usize = 4;
    let mut strokes = Vec::new();
    let mut cell = 0;
    while strokes.len() < n {
        let left = n - strokes.len();
        let glyph = loop {
            let g = Glyph::ALL[rng.random_range(0..Glyph::ALL.len())];
            if g.stroke_count() <= left {
                break g;
            }
        };
        let scale = rng.random_range(0.8..1.2);
        let ox = (cell % COLUMNS) as f64 * CELL + rng.random_range(0.0..(CELL - BOX * scale));
        let oy = (cell / COLUMNS) as f64 * CELL + rng.random_range(0.0..(CELL - BOX * scale));
        let variant = rng.random_range(0..4);
        for s in glyph.strokes(variant) {
            strokes.push(s.into_iter().map(|p| InkPoint::new(ox + p.x * scale, oy + p.y * scale)).collect());
        }
        cell += 1;
    }
    let mut doc = InkDocument::new(1, 1, strokes).expect("glyph strokes are non-empty");
    doc.width = (COLUMNS as f64 * CELL) as u32;
    doc.height = (cell.div_ceil(COLUMNS) as f64 * CELL) as u32;
    doc.space = crate::ink_io::CoordinateSpace::Source;
    doc
}

/// `count` documents of 2 to 12 strokes each, reproducible from `seed`.
pub fn corpus(seed: u64, count: usize) -> Vec<InkDocument> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=12);
            random_document(&mut rng, n)
        })
        .collect()
}

/// A single glyph as a document.
pub fn glyph_document(glyph: Glyph) -> InkDocument {
    let mut doc = InkDocument::new(BOX as u32, BOX as u32, glyph.strokes(0)).expect("glyph strokes are non-empty");
    doc.space = crate::ink_io::CoordinateSpace::Source;
    doc
}
