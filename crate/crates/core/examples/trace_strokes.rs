//! Cluster skeleton segments into pen strokes for each test glyph.
//!
//! Usage: cargo run --release --example trace_strokes
//!
//! Shows the merge decisions, the effect of repairing retraced segments and
//! the alternative Eulerian grouping.

use strokex::ink_io::{render, RenderParams};
use strokex::pipeline::extract_with_stages;
use strokex::synth::{glyph_document, Glyph};
use strokex::tracing::{fix_double_traced, trace_strokes, TraceParams};
use strokex::PipelineConfig;

fn main() -> strokex::Result<()> {
    let config = PipelineConfig::default();
    let render_params = RenderParams { size: 300, ..Default::default() };
    let eulerian = TraceParams { eulerian_mode: true, ..config.trace };
    println!("{:<10} {:>6} {:>7} {:>9} {:>8} {:>8}", "glyph", "truth", "greedy", "repaired", "eulerian", "final");
    for glyph in Glyph::ALL {
        let gray = render(&glyph_document(glyph), &render_params)?;
        let (extraction, stages) = extract_with_stages(&gray, &config)?;
        let graph = &stages.graph;
        let greedy = trace_strokes(graph, &config.trace);
        let repaired = fix_double_traced(graph, greedy.clone(), &config.trace);
        let euler = trace_strokes(graph, &eulerian);
        println!(
            "{:<10} {:>6} {:>7} {:>9} {:>8} {:>8}",
            format!("{glyph:?}"),
            glyph.stroke_count(),
            greedy.len(),
            repaired.len(),
            euler.len(),
            extraction.strokes.len()
        );
        for m in &stages.merge_log {
            println!(
                "    merged segments {} and {} at junction {} (turn {:.1} deg)",
                m.segments.0,
                m.segments.1,
                m.vertex,
                m.cost.to_degrees()
            );
        }
    }
    Ok(())
}
