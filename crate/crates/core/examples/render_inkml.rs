//! Ink file handling: build a document, convert between InkML and JSON,
//! and rasterize it.
//!
//! Usage: cargo run --example render_inkml [file.inkml|file.json] [out.png]

use std::path::{Path, PathBuf};

use strokex::ink_io::{render, to_pixel_space, Format, InkPoint, RenderParams};
use strokex::synth::{glyph_document, Glyph};
use strokex::InkDocument;

fn main() -> strokex::Result<()> {
    let mut args = std::env::args().skip(1);
    let doc = match args.next() {
        Some(path) => InkDocument::read(Path::new(&path))?,
        None => {
            let mut doc = glyph_document(Glyph::LoopStem);
            doc.strokes.push(vec![InkPoint::new(80.0, 10.0), InkPoint::new(120.0, 10.5)]);
            doc
        }
    };
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("strokex-render.png"));

    println!("{} strokes, {} points", doc.strokes.len(), doc.point_count());
    let inkml = doc.serialize(Format::InkMl);
    println!("InkML:\n{inkml}");
    let back = InkDocument::parse(&inkml, Format::InkMl)?;
    assert_eq!(back.strokes.len(), doc.strokes.len());

    let params = RenderParams::default();
    let pixels = to_pixel_space(&doc, &params)?;
    println!("in pixel space (JSON):\n{}", pixels.serialize(Format::Json));

    render(&doc, &params)?.to_image().save(&out)?;
    println!("wrote {}", out.display());
    Ok(())
}
