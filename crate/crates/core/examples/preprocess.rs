//! Grayscale, binarization, stroke width and thinning on one image.
//!
//! Usage: cargo run --release --example preprocess [image.png] [out_dir]
//!
//! Without an image a synthetic page is rendered. Stage images are written to
//! `out_dir` (default: a `strokex-preprocess` directory under the temp dir).

use std::collections::BTreeMap;
use std::path::PathBuf;

use strokex::imaging::{sauvola_binarize, stroke_width_transform, thin};
use strokex::ink_io::{render, RenderParams};
use strokex::pipeline::load_gray;
use strokex::synth::corpus;
use strokex::PipelineConfig;

fn main() -> strokex::Result<()> {
    let mut args = std::env::args().skip(1);
    let input = args.next().map(PathBuf::from);
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("strokex-preprocess"));

    let config = PipelineConfig::default();
    let gray = match &input {
        Some(path) => load_gray(path, &config)?,
        None => render(&corpus(7, 1)[0], &RenderParams::default())?,
    };
    let (w, h) = (gray.width(), gray.height());
    let params = config.binarization.params_for(w, h);
    println!("{w}x{h}, Sauvola window {} k {} R {}", params.window, params.k, params.dynamic_range);

    let binary = sauvola_binarize(&gray, &params)?;
    println!("ink pixels {}", binary.count());

    let swt = stroke_width_transform(&binary);
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    for p in binary.foreground() {
        *histogram.entry(swt.at(p)).or_default() += 1;
    }
    println!("stroke width histogram:");
    for (width, n) in &histogram {
        println!("  {width:>3} px  {n}");
    }

    let skeleton = thin(&binary);
    println!("skeleton pixels {}", skeleton.as_binary().count());

    std::fs::create_dir_all(&out).map_err(|e| strokex::Error::io(&out, e))?;
    let save = |name: &str, img: image::GrayImage| -> strokex::Result<()> {
        let path = out.join(name);
        img.save(&path)?;
        println!("wrote {}", path.display());
        Ok(())
    };
    save("gray.png", gray.to_image())?;
    save("binary.png", binary.to_image())?;
    save("swt.png", swt.to_image())?;
    save("skeleton.png", skeleton.as_binary().to_image())?;
    Ok(())
}
