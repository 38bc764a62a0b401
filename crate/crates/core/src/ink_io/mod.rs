//! Ink documents: parsing, serialization, rendering and stroke matching.
//!
//! Ground truth arrives as InkML (one `trace` element per stroke). Extracted
//! strokes are written as JSON or InkML. [`render`] draws ink into a bitmap
//! so that the extraction pipeline can be scored against the strokes it was
//! fed, using [`match_strokes`].

mod inkml;
mod json;
mod matching;
mod render;

pub use inkml::{parse_ink, to_inkml};
pub use json::{parse_json, to_json};
pub use matching::{hausdorff, hausdorff_capped, match_strokes, MatchReport, MatchedPair};
pub use render::{fit_transform, render, to_pixel_space, FitTransform, RenderParams};

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::ordering::Stroke;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InkPoint {
    pub x: f64,
    pub y: f64,
}

impl InkPoint {
    pub fn new(x: f64, y: f64) -> Self {
        InkPoint { x, y }
    }
}

impl From<Point> for InkPoint {
    fn from(p: Point) -> Self {
        InkPoint::new(p.x as f64, p.y as f64)
    }
}

/// What the coordinates of a document are measured in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordinateSpace {
    /// Tablet or file units, as found in the source markup.
    Source,
    /// Pixels of a rendered or extracted image.
    #[default]
    Pixels,
}

/// Ordered strokes on a canvas. Strokes are never empty.
#[derive(Debug, Clone, PartialEq)]
pub struct InkDocument {
    pub width: u32,
    pub height: u32,
    pub strokes: Vec<Vec<InkPoint>>,
    pub space: CoordinateSpace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    InkMl,
}

impl Format {
    /// `.json` means JSON; anything else is treated as InkML.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::InkMl,
        }
    }
}

impl InkDocument {
    pub fn new(width: u32, height: u32, strokes: Vec<Vec<InkPoint>>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidInput(format!("canvas must be positive, got {width}x{height}")));
        }
        if let Some(i) = strokes.iter().position(Vec::is_empty) {
            return Err(Error::InvalidInput(format!("stroke {i} has no points")));
        }
        Ok(InkDocument {
            width,
            height,
            strokes,
            space: CoordinateSpace::Pixels,
        })
    }

    pub fn from_strokes(width: u32, height: u32, strokes: &[Stroke]) -> Self {
        InkDocument {
            width: width.max(1),
            height: height.max(1),
            strokes: strokes
                .iter()
                .map(|s| s.points().iter().map(|&p| p.into()).collect())
                .collect(),
            space: CoordinateSpace::Pixels,
        }
    }

    /// Strokes with coordinates rounded to the nearest pixel.
    pub fn to_strokes(&self) -> Vec<Stroke> {
        self.strokes
            .iter()
            .map(|s| {
                let pts = s
                    .iter()
                    .map(|p| Point::new(p.x.round() as i32, p.y.round() as i32))
                    .collect();
                Stroke::new(pts).expect("document strokes are non-empty")
            })
            .collect()
    }

    pub fn point_count(&self) -> usize {
        self.strokes.iter().map(Vec::len).sum()
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::InkMl => to_inkml(self),
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Json => parse_json(text),
            Format::InkMl => parse_ink(text),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        InkDocument::parse(&text, Format::from_path(path))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.serialize(Format::from_path(path))).map_err(|e| Error::io(path, e))
    }
}

/// Formats a coordinate without a trailing `.0` when it is integral.
pub(crate) fn format_coord(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 9.0e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}
