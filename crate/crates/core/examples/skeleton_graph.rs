//! Decompose thinned shapes into junctions and segments, then prune noise.
//!
//! Usage: cargo run --example skeleton_graph

use strokex::imaging::{stroke_width_transform, thin, StrokeWidthMap};
use strokex::ink_io::{render, RenderParams};
use strokex::skeleton_graph::{graph_from_skeleton, simplify, SimplifyParams};
use strokex::synth::{glyph_document, skeleton_fixture, Glyph, SkeletonFixture};
use strokex::SkeletonGraph;

fn describe(graph: &SkeletonGraph) {
    let degrees = graph.degrees();
    for j in &graph.junctions {
        let c = strokex::geometry::centroid(&j.pixels).expect("junction pixels");
        println!(
            "    junction {} at ({}, {}) degree {}{}",
            j.id,
            c.x,
            c.y,
            degrees[j.id],
            if j.imposed { " (imposed)" } else { "" }
        );
    }
    for s in &graph.segments {
        println!(
            "    segment {} {} -> {} length {} width {}",
            s.id,
            s.endpoints.0,
            s.endpoints.1,
            s.len(),
            s.width
        );
    }
}

fn main() -> strokex::Result<()> {
    println!("hand-drawn skeletons:");
    for f in SkeletonFixture::ALL {
        let skel = skeleton_fixture(f);
        let graph = graph_from_skeleton(&skel, &StrokeWidthMap::constant(skel.as_binary(), 1))?;
        graph.validate(Some(&skel)).expect("consistent graph");
        println!("  {f:?}: {} components", graph.component_count());
        describe(&graph);
    }

    println!("rendered glyphs, before and after simplification:");
    for glyph in [Glyph::Tee, Glyph::Hook] {
        let gray = render(&glyph_document(glyph), &RenderParams { size: 200, ..Default::default() })?;
        let binary = strokex::imaging::sauvola_binarize(&gray, &Default::default())?;
        let skel = thin(&binary);
        let raw = graph_from_skeleton(&skel, &stroke_width_transform(&binary))?;
        let clean = simplify(&raw, &SimplifyParams::default());
        println!(
            "  {glyph:?}: {} -> {} segments, average width {:.2}",
            raw.segments.len(),
            clean.segments.len(),
            clean.avg_stroke_width
        );
        describe(&clean);
    }
    Ok(())
}
