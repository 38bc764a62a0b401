//! Render synthetic ink, extract it again and score the result.
//!
//! Usage: cargo run --release --example round_trip [count] [seed]

use std::time::Instant;

use strokex::evaluate::{score, CorpusReport};
use strokex::ink_io::{render, to_pixel_space, RenderParams};
use strokex::synth::corpus;
use strokex::{extract, PipelineConfig};

fn main() -> strokex::Result<()> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(50, |a| a.parse().expect("count"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));

    let config = PipelineConfig::default();
    let params = RenderParams::default();
    let mut files = Vec::new();
    let mut extract_time = 0.0;
    for (i, doc) in corpus(seed, count).iter().enumerate() {
        let truth = to_pixel_space(doc, &params)?;
        let gray = render(doc, &params)?;
        let t = Instant::now();
        let found = extract(&gray, &config)?;
        extract_time += t.elapsed().as_secs_f64();
        files.push(score(&format!("doc{i:03}"), &truth, Some(&found.to_document()), 10.0));
    }
    let report = CorpusReport::from_files(10.0, files, vec![], vec![]);
    print!("{}", report.table());
    println!("mean extraction time {:.1} ms", 1000.0 * extract_time / count as f64);
    Ok(())
}
