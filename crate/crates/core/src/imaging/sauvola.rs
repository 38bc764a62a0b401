use serde::{Deserialize, Serialize};

use super::{BinaryImage, GrayImage};
use crate::error::{Error, Result};

/// Parameters of Sauvola's local threshold
/// `T = m * (1 + k * (s / R - 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BinarizationParams {
    /// Side of the square window; odd.
    pub window: usize,
    pub k: f64,
    /// `R`, the dynamic range of the standard deviation.
    pub dynamic_range: f64,
}

impl Default for BinarizationParams {
    fn default() -> Self {
        BinarizationParams {
            window: 15,
            k: 0.2,
            dynamic_range: 128.0,
        }
    }
}

impl BinarizationParams {
    /// Default window size for an image: 15, or `min(width, height) / 50`
    /// rounded up to odd when that is larger.
    pub fn auto_window(width: usize, height: usize) -> usize {
        let w = (width.min(height) / 50).max(15);
        w | 1
    }

    pub fn validate(&self) -> Result<()> {
        if self.window < 3 || self.window.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!(
                "binarization window must be odd and >= 3, got {}",
                self.window
            )));
        }
        if !(self.k > 0.0 && self.k < 1.0) {
            return Err(Error::InvalidParams(format!(
                "binarization k must be in (0, 1), got {}",
                self.k
            )));
        }
        if !(self.dynamic_range > 0.0) {
            return Err(Error::InvalidParams(format!(
                "dynamic range must be positive, got {}",
                self.dynamic_range
            )));
        }
        Ok(())
    }
}

/// Sauvola adaptive binarization. Dark pixels below the local threshold are
/// ink. Windows are clipped at the image border.
///
/// Window sums come from column sums slid down the image and a prefix sum
/// along each row, so the cost is linear in the pixel count regardless of
/// window size.
pub fn sauvola_binarize(gray: &GrayImage, params: &BinarizationParams) -> Result<BinaryImage> {
    params.validate()?;
    let (w, h) = (gray.width(), gray.height());
    let raw = gray.as_raw();
    let r = params.window / 2;
    let (k, range) = (params.k, params.dynamic_range);

    // The standard deviation of 8-bit values is at most 127.5, which bounds
    // the threshold by 255 c; pixels at or above that bound are background.
    let c_max = (1.0 + k * (127.5 / range - 1.0)).max(1.0);
    let never: [bool; 256] = std::array::from_fn(|v| v as f64 >= 255.0 * c_max);
    let mut col_s = vec![0u64; w];
    let mut col_q = vec![0u64; w];
    let mut pre_s = vec![0u64; w + 1];
    let mut pre_q = vec![0u64; w + 1];
    let lo: Vec<usize> = (0..w).map(|x| x.saturating_sub(r)).collect();
    let hi: Vec<usize> = (0..w).map(|x| (x + r).min(w - 1) + 1).collect();
    let (mut top, mut bottom) = (0usize, 0usize);
    let mut out = vec![false; w * h];
    for y in 0..h {
        let y0 = y.saturating_sub(r);
        let y1 = (y + r).min(h - 1) + 1;
        while bottom < y1 {
            for (x, &v) in raw[bottom * w..(bottom + 1) * w].iter().enumerate() {
                col_s[x] += v as u64;
                col_q[x] += (v as u64) * (v as u64);
            }
            bottom += 1;
        }
        while top < y0 {
            for (x, &v) in raw[top * w..(top + 1) * w].iter().enumerate() {
                col_s[x] -= v as u64;
                col_q[x] -= (v as u64) * (v as u64);
            }
            top += 1;
        }
        for x in 0..w {
            pre_s[x + 1] = pre_s[x] + col_s[x];
            pre_q[x + 1] = pre_q[x] + col_q[x];
        }
        let rows = (y1 - y0) as u64;
        let row = &raw[y * w..(y + 1) * w];
        for x in 0..w {
            if never[row[x] as usize] {
                continue;
            }
            let (x0, x1) = (lo[x], hi[x]);
            let n = rows * (x1 - x0) as u64;
            let (sum, sq) = (pre_s[x1] - pre_s[x0], pre_q[x1] - pre_q[x0]);
            let v = row[x] as f64;
            out[y * w + x] = if n * sq == sum * sum {
                // Flat window: the threshold is m (1 - k).
                v * (n as f64) < sum as f64 * (1.0 - k)
            } else {
                let mean = sum as f64 / n as f64;
                let var = (sq as f64 / n as f64 - mean * mean).max(0.0);
                // v < m (1 - k) + (m k / R) s, compared without the square root.
                let a = v - mean * (1.0 - k);
                let c = mean * k / range;
                a < 0.0 || a * a < c * c * var
            };
        }
    }
    BinaryImage::from_vec(w, h, out)
}
