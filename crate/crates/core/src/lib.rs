//! Stroke extraction for handwritten mathematical expressions.
//!
//! Turns a bitmap of handwriting into an ordered list of pen strokes that an
//! online (ink-based) recognizer can consume. The pipeline runs:
//!
//! 1. grayscale conversion and Sauvola binarization ([`imaging`])
//! 2. stroke width transform and thinning ([`imaging`])
//! 3. skeleton decomposition into an attributed graph plus noise removal
//!    ([`skeleton_graph`])
//! 4. minimum-turning-angle path clustering, dot extraction and repair of
//!    retraced segments ([`tracing`])
//! 5. stroke direction and writing-order normalization ([`ordering`])
//!
//! [`ink_io`] parses and renders ink so the whole pipeline can be checked by
//! rendering known strokes and extracting them again.

pub mod cli;
pub mod config;
pub mod error;
pub mod evaluate;
pub mod geometry;
pub mod imaging;
pub mod ink_io;
pub mod ordering;
pub mod pipeline;
pub mod skeleton_graph;
pub mod synth;
pub mod tracing;

pub use config::PipelineConfig;
pub use error::{Error, Result};
pub use geometry::Point;
pub use imaging::{BinaryImage, GrayImage, SkeletonImage, StrokeWidthMap};
pub use ink_io::InkDocument;
pub use ordering::Stroke;
pub use pipeline::{extract, Extraction};
pub use skeleton_graph::SkeletonGraph;
