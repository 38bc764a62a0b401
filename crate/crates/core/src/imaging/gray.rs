use super::GrayImage;
use crate::error::{Error, Result};

/// Interleaved 8-bit raster with one or more channels and no alpha.
#[derive(Debug, Clone)]
pub struct ColorRaster {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<u8>,
}

impl ColorRaster {
    /// Flattens a decoded image. Alpha is composited over white.
    pub fn from_dynamic(img: &image::DynamicImage) -> Self {
        use image::DynamicImage::*;
        let (width, height) = (img.width() as usize, img.height() as usize);
        match img {
            ImageLuma8(g) => ColorRaster {
                width,
                height,
                channels: 1,
                data: g.as_raw().clone(),
            },
            ImageLumaA8(_) | ImageLumaA16(_) => {
                let la = img.to_luma_alpha8();
                let data = la
                    .pixels()
                    .map(|p| over_white(p.0[0], p.0[1]))
                    .collect();
                ColorRaster {
                    width,
                    height,
                    channels: 1,
                    data,
                }
            }
            ImageLuma16(_) => ColorRaster {
                width,
                height,
                channels: 1,
                data: img.to_luma8().into_raw(),
            },
            _ if img.color().has_alpha() => {
                let rgba = img.to_rgba8();
                let mut data = Vec::with_capacity(width * height * 3);
                for p in rgba.pixels() {
                    let a = p.0[3];
                    data.extend(p.0[..3].iter().map(|&c| over_white(c, a)));
                }
                ColorRaster {
                    width,
                    height,
                    channels: 3,
                    data,
                }
            }
            _ => ColorRaster {
                width,
                height,
                channels: 3,
                data: img.to_rgb8().into_raw(),
            },
        }
    }
}

fn over_white(c: u8, a: u8) -> u8 {
    let (c, a) = (c as u32, a as u32);
    ((c * a + 255 * (255 - a) + 127) / 255) as u8
}

/// Channel weighting used when averaging color channels.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrayWeights {
    /// Plain arithmetic mean of all channels.
    #[default]
    Equal,
    /// ITU-R BT.601 luma weights; only meaningful for three channels.
    Luma,
    Custom(Vec<f64>),
}

impl GrayWeights {
    fn resolve(&self, channels: usize) -> Result<Vec<f64>> {
        let w = match self {
            GrayWeights::Equal => vec![1.0; channels],
            GrayWeights::Luma if channels == 3 => vec![0.299, 0.587, 0.114],
            GrayWeights::Luma => vec![1.0; channels],
            GrayWeights::Custom(w) => {
                if w.len() != channels {
                    return Err(Error::InvalidParams(format!(
                        "{} gray weights for {channels} channels",
                        w.len()
                    )));
                }
                w.clone()
            }
        };
        if w.iter().any(|&v| v < 0.0 || !v.is_finite()) || w.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidParams("gray weights must be non-negative with a positive sum".into()));
        }
        Ok(w)
    }
}

/// Weighted per-pixel mean of the channels, rounded to the nearest integer.
pub fn to_grayscale(raster: &ColorRaster, weights: &GrayWeights) -> Result<GrayImage> {
    let ColorRaster {
        width,
        height,
        channels,
        ref data,
    } = *raster;
    if width == 0 || height == 0 || channels == 0 {
        return Err(Error::InvalidInput(format!(
            "empty raster {width}x{height}x{channels}"
        )));
    }
    if data.len() != width * height * channels {
        return Err(Error::InvalidInput(format!(
            "raster buffer has {} bytes, expected {}",
            data.len(),
            width * height * channels
        )));
    }
    if channels == 1 {
        return GrayImage::new(width, height, data.clone());
    }
    let w = weights.resolve(channels)?;
    let total: f64 = w.iter().sum();
    let out = data
        .chunks_exact(channels)
        .map(|px| {
            let s: f64 = px.iter().zip(&w).map(|(&c, &wi)| c as f64 * wi).sum();
            (s / total).round().clamp(0.0, 255.0) as u8
        })
        .collect();
    GrayImage::new(width, height, out)
}
