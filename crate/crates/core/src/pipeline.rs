//! The full image-to-strokes pipeline and its debug artifacts.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::config::PipelineConfig;
use crate::error::{Error, Result};
use crate::imaging::{
    sauvola_binarize, stroke_width_transform, thin_with, to_grayscale, BinaryImage, ColorRaster, GrayImage,
    SkeletonImage, StrokeWidthMap,
};
use crate::ink_io::InkDocument;
use crate::ordering::{group_tree, order_strokes, GroupTree, Stroke};
use crate::skeleton_graph::{graph_from_skeleton, simplify, SkeletonGraph};
use crate::tracing::{extract_dots, fix_double_traced, trace_strokes_logged, MergeRecord, TracedPath};

/// Ordered strokes extracted from one image.
#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    pub width: usize,
    pub height: usize,
    pub strokes: Vec<Stroke>,
    pub avg_stroke_width: f64,
    pub warnings: Vec<String>,
}

impl Extraction {
    pub fn to_document(&self) -> InkDocument {
        InkDocument::from_strokes(self.width as u32, self.height as u32, &self.strokes)
    }
}

/// Every intermediate result, kept for inspection.
#[derive(Debug, Clone)]
pub struct Stages {
    pub gray: GrayImage,
    pub binary: BinaryImage,
    pub swt: StrokeWidthMap,
    pub skeleton: SkeletonImage,
    pub raw_graph: SkeletonGraph,
    pub graph: SkeletonGraph,
    pub merge_log: Vec<MergeRecord>,
    pub paths: Vec<TracedPath>,
    pub groups: GroupTree,
}

/// Loads an image file and converts it to grayscale.
pub fn load_gray(path: &Path, config: &PipelineConfig) -> Result<GrayImage> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let img = image::load_from_memory(&bytes)?;
    to_grayscale(&ColorRaster::from_dynamic(&img), &config.gray_weights)
}

pub fn extract(gray: &GrayImage, config: &PipelineConfig) -> Result<Extraction> {
    extract_with_stages(gray, config).map(|(e, _)| e)
}

pub fn extract_file(path: &Path, config: &PipelineConfig) -> Result<Extraction> {
    extract(&load_gray(path, config)?, config)
}

pub fn extract_with_stages(gray: &GrayImage, config: &PipelineConfig) -> Result<(Extraction, Stages)> {
    config.validate()?;
    let (w, h) = (gray.width(), gray.height());
    let binary = sauvola_binarize(gray, &config.binarization.params_for(w, h))?;
    let mut warnings = Vec::new();
    if binary.is_empty() {
        warnings.push("no foreground after binarization; page is blank".to_string());
    }
    let swt = stroke_width_transform(&binary);
    let skeleton = thin_with(&binary, config.thinning);
    let raw_graph = graph_from_skeleton(&skeleton, &swt)?;
    raw_graph
        .validate(Some(&skeleton))
        .map_err(|m| Error::Consistency(format!("skeleton graph: {m}")))?;
    let graph = simplify(&raw_graph, &config.simplify);
    graph
        .validate(None)
        .map_err(|m| Error::Consistency(format!("simplified graph: {m}")))?;

    let (paths, merge_log) = trace_strokes_logged(&graph, &config.trace);
    let paths = fix_double_traced(&graph, paths, &config.trace);
    let mut strokes: Vec<Stroke> = paths
        .iter()
        .map(|p| Stroke::new(p.points(&graph)))
        .collect::<Result<_>>()?;
    strokes.extend(extract_dots(&graph));

    let avg = graph.avg_stroke_width;
    let groups = group_tree(&strokes, avg, &config.order);
    let strokes = order_strokes(&strokes, avg, &config.order);
    let extraction = Extraction {
        width: w,
        height: h,
        strokes,
        avg_stroke_width: avg,
        warnings,
    };
    let stages = Stages {
        gray: gray.clone(),
        binary,
        swt,
        skeleton,
        raw_graph,
        graph,
        merge_log,
        paths,
        groups,
    };
    Ok((extraction, stages))
}

#[derive(Serialize)]
struct GraphDump<'a> {
    raw: &'a SkeletonGraph,
    simplified: &'a SkeletonGraph,
}

const PALETTE: [[u8; 3]; 8] = [
    [230, 25, 75],
    [60, 180, 75],
    [0, 130, 200],
    [245, 130, 48],
    [145, 30, 180],
    [70, 190, 190],
    [240, 50, 230],
    [128, 128, 0],
];

/// Faded input with each stroke in its own color and its start marked.
fn overlay(gray: &GrayImage, strokes: &[Stroke]) -> image::RgbImage {
    let mut img = image::RgbImage::from_fn(gray.width() as u32, gray.height() as u32, |x, y| {
        let v = 155 + gray.get(x as usize, y as usize) as u32 * 100 / 255;
        image::Rgb([v as u8; 3])
    });
    let mut put = |x: i32, y: i32, c: [u8; 3]| {
        if x >= 0 && y >= 0 && (x as u32) < img.width() && (y as u32) < img.height() {
            img.put_pixel(x as u32, y as u32, image::Rgb(c));
        }
    };
    for (i, s) in strokes.iter().enumerate() {
        let c = PALETTE[i % PALETTE.len()];
        for p in s.points() {
            put(p.x, p.y, c);
        }
        let p = s.start();
        for dy in -2..=2 {
            for dx in -2..=2 {
                put(p.x + dx, p.y + dy, c);
            }
        }
    }
    img
}

/// Writes every stage to `dir`, which is created if needed.
pub fn write_debug(dir: &Path, stages: &Stages, extraction: &Extraction) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let save = |name: &str, img: image::GrayImage| img.save(dir.join(name)).map_err(Error::from);
    save("gray.png", stages.gray.to_image())?;
    save("binary.png", stages.binary.to_image())?;
    save("swt.png", stages.swt.to_image())?;
    save("skeleton.png", stages.skeleton.to_image())?;
    overlay(&stages.gray, &extraction.strokes).save(dir.join("overlay.png"))?;

    let write = |name: &str, text: String| {
        let p = dir.join(name);
        std::fs::write(&p, text).map_err(|e| Error::io(&p, e))
    };
    write(
        "graph.json",
        serde_json::to_string(&GraphDump {
            raw: &stages.raw_graph,
            simplified: &stages.graph,
        })?,
    )?;
    write("paths.json", serde_json::to_string(&stages.paths)?)?;
    write("groups.json", serde_json::to_string(&stages.groups)?)?;
    let p = dir.join("merge_log.jsonl");
    let mut f = std::fs::File::create(&p).map_err(|e| Error::io(&p, e))?;
    for m in &stages.merge_log {
        writeln!(f, "{}", serde_json::to_string(m)?).map_err(|e| Error::io(&p, e))?;
    }
    Ok(())
}
