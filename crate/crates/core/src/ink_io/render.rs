use serde::{Deserialize, Serialize};

use super::{CoordinateSpace, InkDocument, InkPoint};
use crate::error::{Error, Result};
use crate::imaging::GrayImage;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RenderParams {
    /// Side of the square canvas in pixels.
    pub size: u32,
    pub pen_width: f64,
    /// Blank border on each side, as a fraction of `size`.
    pub margin: f64,
}

impl Default for RenderParams {
    fn default() -> Self {
        RenderParams {
            size: 1000,
            pen_width: 3.0,
            margin: 0.05,
        }
    }
}

impl RenderParams {
    pub fn validate(&self) -> Result<()> {
        if self.size < 16 {
            return Err(Error::InvalidParams(format!("render size must be at least 16, got {}", self.size)));
        }
        if !(self.pen_width > 0.0 && self.pen_width.is_finite()) {
            return Err(Error::InvalidParams(format!("pen width must be positive, got {}", self.pen_width)));
        }
        if !(0.0..0.5).contains(&self.margin) {
            return Err(Error::InvalidParams(format!("margin must be in [0, 0.5), got {}", self.margin)));
        }
        Ok(())
    }
}

/// Uniform scale about the ink's bounding-box center, mapped onto the
/// canvas center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitTransform {
    pub scale: f64,
    pub center: InkPoint,
    pub target: f64,
}

impl FitTransform {
    pub fn apply(&self, p: InkPoint) -> InkPoint {
        InkPoint::new(
            (p.x - self.center.x) * self.scale + self.target,
            (p.y - self.center.y) * self.scale + self.target,
        )
    }
}

pub fn fit_transform(doc: &InkDocument, params: &RenderParams) -> FitTransform {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in doc.strokes.iter().flatten() {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let size = params.size as f64;
    if x0 > x1 {
        return FitTransform {
            scale: 1.0,
            center: InkPoint::new(0.0, 0.0),
            target: size / 2.0,
        };
    }
    let extent = (x1 - x0).max(y1 - y0);
    let scale = if extent > 0.0 {
        size * (1.0 - 2.0 * params.margin) / extent
    } else {
        1.0
    };
    FitTransform {
        scale,
        center: InkPoint::new((x0 + x1) / 2.0, (y0 + y1) / 2.0),
        target: size / 2.0,
    }
}

/// The document in the pixel coordinates `render` draws it at.
pub fn to_pixel_space(doc: &InkDocument, params: &RenderParams) -> Result<InkDocument> {
    params.validate()?;
    let t = fit_transform(doc, params);
    Ok(InkDocument {
        width: params.size,
        height: params.size,
        strokes: doc
            .strokes
            .iter()
            .map(|s| s.iter().map(|&p| t.apply(p)).collect())
            .collect(),
        space: CoordinateSpace::Pixels,
    })
}

fn stamp_capsule(img: &mut GrayImage, a: InkPoint, b: InkPoint, r: f64) {
    let (w, h) = (img.width() as i64, img.height() as i64);
    let lo_x = ((a.x.min(b.x) - r).floor() as i64).max(0);
    let hi_x = ((a.x.max(b.x) + r).ceil() as i64).min(w - 1);
    let lo_y = ((a.y.min(b.y) - r).floor() as i64).max(0);
    let hi_y = ((a.y.max(b.y) + r).ceil() as i64).min(h - 1);
    let r2 = r * r + 1e-9;
    for y in lo_y..=hi_y {
        for x in lo_x..=hi_x {
            let p = InkPoint::new(x as f64, y as f64);
            if super::matching::segment_dist2(p, a, b) <= r2 {
                img.set(x as usize, y as usize, 0);
            }
        }
    }
}

/// Draws the strokes black on white, scaled and centered to fit the canvas
/// with the configured margin. Consecutive points are joined by round-capped
/// lines of the pen width; single points become discs.
pub fn render(doc: &InkDocument, params: &RenderParams) -> Result<GrayImage> {
    let px = to_pixel_space(doc, params)?;
    let n = params.size as usize;
    let mut img = GrayImage::filled(n, n, 255)?;
    let r = params.pen_width / 2.0;
    for s in &px.strokes {
        if s.len() == 1 {
            stamp_capsule(&mut img, s[0], s[0], r);
        }
        for w in s.windows(2) {
            stamp_capsule(&mut img, w[0], w[1], r);
        }
    }
    Ok(img)
}
