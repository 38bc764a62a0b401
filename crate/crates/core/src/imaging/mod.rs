//! Raster preprocessing: grayscale conversion, adaptive binarization,
//! thinning and the stroke width transform.

pub(crate) mod components;
mod gray;
mod sauvola;
mod swt;
mod thin;

pub use components::{components_8, count_components_8};
pub use gray::{to_grayscale, ColorRaster, GrayWeights};
pub use sauvola::{sauvola_binarize, BinarizationParams};
pub use swt::stroke_width_transform;
pub use thin::{thin, thin_with, ThinningVariant};

use crate::error::{Error, Result};
use crate::geometry::Point;

/// 8-bit luminance raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    data: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidInput(format!(
                "gray image must be non-empty, got {width}x{height}"
            )));
        }
        if data.len() != width * height {
            return Err(Error::InvalidInput(format!(
                "gray buffer has {} bytes, expected {}",
                data.len(),
                width * height
            )));
        }
        Ok(GrayImage {
            width,
            height,
            data,
        })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> u8) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self::new(width, height, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        self.data[y * self.width + x] = v;
    }

    pub fn as_raw(&self) -> &[u8] {
        &self.data
    }

    pub fn to_image(&self) -> image::GrayImage {
        image::GrayImage::from_raw(self.width as u32, self.height as u32, self.data.clone())
            .expect("buffer length checked at construction")
    }

    pub fn from_image(img: &image::GrayImage) -> Result<Self> {
        Self::new(
            img.width() as usize,
            img.height() as usize,
            img.as_raw().clone(),
        )
    }
}

/// Two-level raster; `true` marks ink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    data: Vec<bool>,
}

impl BinaryImage {
    pub fn new(width: usize, height: usize) -> Self {
        BinaryImage {
            width,
            height,
            data: vec![false; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<bool>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::InvalidInput(format!(
                "binary buffer has {} entries, expected {}",
                data.len(),
                width * height
            )));
        }
        Ok(BinaryImage {
            width,
            height,
            data,
        })
    }

    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut img = Self::new(width, height);
        for y in 0..height {
            for x in 0..width {
                img.data[y * width + x] = f(x, y);
            }
        }
        img
    }

    /// Parses a picture made of `#` (ink) and `.` (background) rows.
    pub fn from_ascii(rows: &[&str]) -> Self {
        let height = rows.len();
        let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        Self::from_fn(width, height, |x, y| rows[y].as_bytes().get(x) == Some(&b'#'))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.data[y * self.width + x]
    }

    /// Bounds-checked lookup; everything outside the raster is background.
    pub fn at(&self, p: Point) -> bool {
        p.x >= 0
            && p.y >= 0
            && (p.x as usize) < self.width
            && (p.y as usize) < self.height
            && self.data[p.y as usize * self.width + p.x as usize]
    }

    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.data[y * self.width + x] = v;
    }

    pub fn as_raw(&self) -> &[bool] {
        &self.data
    }

    pub fn count(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.data.iter().any(|&b| b)
    }

    /// Foreground pixels in row-major order.
    pub fn foreground(&self) -> impl Iterator<Item = Point> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| Point::new((i % self.width) as i32, (i / self.width) as i32))
    }

    /// Ink rendered black on white.
    pub fn to_image(&self) -> image::GrayImage {
        let raw = self.data.iter().map(|&b| if b { 0 } else { 255 }).collect();
        image::GrayImage::from_raw(self.width as u32, self.height as u32, raw)
            .expect("buffer length matches dimensions")
    }

    pub fn to_ascii(&self) -> Vec<String> {
        (0..self.height)
            .map(|y| {
                (0..self.width)
                    .map(|x| if self.get(x, y) { '#' } else { '.' })
                    .collect()
            })
            .collect()
    }
}

/// Output of [`thin`]: a binary image whose ink is a one pixel wide skeleton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonImage(BinaryImage);

impl SkeletonImage {
    /// Wraps an image that is already thin, e.g. a hand-drawn test skeleton.
    pub fn from_binary(image: BinaryImage) -> Self {
        SkeletonImage(image)
    }

    pub fn as_binary(&self) -> &BinaryImage {
        &self.0
    }

    pub fn into_binary(self) -> BinaryImage {
        self.0
    }
}

impl std::ops::Deref for SkeletonImage {
    type Target = BinaryImage;

    fn deref(&self) -> &BinaryImage {
        &self.0
    }
}

/// Per-pixel stroke width estimate; zero on background.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrokeWidthMap {
    width: usize,
    height: usize,
    widths: Vec<u32>,
}

impl StrokeWidthMap {
    /// The same width on every foreground pixel of `image`.
    pub fn constant(image: &BinaryImage, w: u32) -> Self {
        StrokeWidthMap {
            width: image.width(),
            height: image.height(),
            widths: image.as_raw().iter().map(|&f| if f { w } else { 0 }).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.widths[y * self.width + x]
    }

    pub fn at(&self, p: Point) -> u32 {
        if p.x < 0 || p.y < 0 || p.x as usize >= self.width || p.y as usize >= self.height {
            return 0;
        }
        self.widths[p.y as usize * self.width + p.x as usize]
    }

    pub fn as_raw(&self) -> &[u32] {
        &self.widths
    }

    /// Heat map for debugging: brighter means wider, background is black.
    pub fn to_image(&self) -> image::GrayImage {
        let max = self.widths.iter().copied().max().unwrap_or(0).max(1);
        let raw = self
            .widths
            .iter()
            .map(|&w| {
                if w == 0 {
                    0
                } else {
                    (55 + (200 * w / max)) as u8
                }
            })
            .collect();
        image::GrayImage::from_raw(self.width as u32, self.height as u32, raw)
            .expect("buffer length matches dimensions")
    }
}

#[cfg(test)]
pub(crate) fn random_binary(max: usize) -> impl proptest::strategy::Strategy<Value = BinaryImage> {
    use proptest::prelude::*;
    (1..=max, 1..=max).prop_flat_map(|(w, h)| {
        proptest::collection::vec(any::<bool>(), w * h)
            .prop_map(move |d| BinaryImage::from_vec(w, h, d).unwrap())
    })
}
