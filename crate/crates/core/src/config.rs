//! Pipeline configuration, loadable from and savable to TOML.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imaging::{BinarizationParams, GrayWeights, ThinningVariant};
use crate::ink_io::RenderParams;
use crate::ordering::OrderParams;
use crate::skeleton_graph::SimplifyParams;
use crate::tracing::TraceParams;

/// Sauvola settings; a missing window is chosen from the image size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BinarizationConfig {
    pub window: Option<usize>,
    pub k: f64,
    pub dynamic_range: f64,
}

impl Default for BinarizationConfig {
    fn default() -> Self {
        let p = BinarizationParams::default();
        BinarizationConfig {
            window: None,
            k: p.k,
            dynamic_range: p.dynamic_range,
        }
    }
}

impl BinarizationConfig {
    pub fn params_for(&self, width: usize, height: usize) -> BinarizationParams {
        BinarizationParams {
            window: self.window.unwrap_or_else(|| BinarizationParams::auto_window(width, height)),
            k: self.k,
            dynamic_range: self.dynamic_range,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub gray_weights: GrayWeights,
    pub binarization: BinarizationConfig,
    pub thinning: ThinningVariant,
    pub simplify: SimplifyParams,
    pub trace: TraceParams,
    pub order: OrderParams,
    pub render: RenderParams,
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        // Any odd window is checked here; the automatic one is always valid.
        self.binarization.params_for(1000, 1000).validate()?;
        self.simplify.validate()?;
        self.trace.validate()?;
        self.order.validate()?;
        self.render.validate()
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let c: PipelineConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PipelineConfig::from_toml(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            e => e,
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_toml()).map_err(|e| Error::io(path, e))
    }
}
