//! Extract ordered strokes from an image file and print them as JSON.
//!
//! Usage: cargo run --release --example extract_image <image.png> [debug_dir]
//!
//! With `debug_dir`, every intermediate stage is written there as well.

use std::path::Path;

use strokex::ink_io::Format;
use strokex::pipeline::{extract_with_stages, load_gray, write_debug};
use strokex::PipelineConfig;

fn main() -> strokex::Result<()> {
    let mut args = std::env::args().skip(1);
    let Some(input) = args.next() else {
        eprintln!("usage: extract_image <image.png> [debug_dir]");
        std::process::exit(1);
    };
    let config = PipelineConfig::default();
    let gray = load_gray(Path::new(&input), &config)?;
    let (extraction, stages) = extract_with_stages(&gray, &config)?;
    for w in &extraction.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!(
        "{} strokes, average stroke width {:.2} px",
        extraction.strokes.len(),
        extraction.avg_stroke_width
    );
    if let Some(dir) = args.next() {
        write_debug(Path::new(&dir), &stages, &extraction)?;
        eprintln!("stages written to {dir}");
    }
    println!("{}", extraction.to_document().serialize(Format::Json));
    Ok(())
}
