use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use strokex::ink_io::{render, Format, RenderParams};
use strokex::synth::{corpus, glyph_document, Glyph};
use strokex::GrayImage;

fn strokex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strokex"))
        .args(args)
        .env_remove("STROKEX_CONFIG")
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn save_png(img: &GrayImage, p: &Path) {
    img.to_image().save(p).unwrap();
}

fn count_files(dir: &Path, ext: &str) -> usize {
    std::fs::read_dir(dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == ext))
        .count()
}

#[test]
fn blank_page_gives_no_strokes() {
    let dir = tempfile::tempdir().unwrap();
    let png = dir.path().join("blank.png");
    save_png(&GrayImage::filled(200, 200, 255).unwrap(), &png);
    let out = strokex(&["extract", "--input", path(&png)]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains(r#""strokes":[]"#), "{stdout}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn rendered_plus_gives_two_strokes() {
    let dir = tempfile::tempdir().unwrap();
    let png = dir.path().join("plus.png");
    let json = dir.path().join("plus.json");
    save_png(&render(&glyph_document(Glyph::Plus), &RenderParams::default()).unwrap(), &png);
    let out = strokex(&["extract", "--input", path(&png), "--output", path(&json)]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["strokes"].as_array().unwrap().len(), 2);
}

#[test]
fn debug_dir_holds_every_stage() {
    let dir = tempfile::tempdir().unwrap();
    let png = dir.path().join("tee.png");
    let debug = dir.path().join("debug");
    save_png(&render(&glyph_document(Glyph::Tee), &RenderParams::default()).unwrap(), &png);
    let out = strokex(&["extract", "--input", path(&png), "--debug-dir", path(&debug)]);
    assert_eq!(out.status.code(), Some(0));
    for f in ["gray.png", "binary.png", "swt.png", "skeleton.png", "overlay.png", "graph.json", "paths.json", "groups.json", "merge_log.jsonl"] {
        assert!(debug.join(f).is_file(), "{f} missing");
    }
}

#[test]
fn inkml_output_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let png = dir.path().join("line.png");
    let ink = dir.path().join("line.inkml");
    save_png(&render(&glyph_document(Glyph::Line), &RenderParams::default()).unwrap(), &png);
    assert_eq!(strokex(&["extract", "--input", path(&png), "--output", path(&ink)]).status.code(), Some(0));
    let doc = strokex::InkDocument::read(&ink).unwrap();
    assert_eq!(doc.strokes.len(), 1);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.inkml");
    std::fs::write(&bad, "<ink><trace>1 2, x 4</trace></ink>").unwrap();
    let out = strokex(&["render", "--input", path(&bad), "--output", path(&dir.path().join("bad.png"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trace 0"));

    let missing = dir.path().join("missing.png");
    assert_eq!(strokex(&["extract", "--input", path(&missing)]).status.code(), Some(2));

    let junk = dir.path().join("junk.png");
    std::fs::write(&junk, b"not an image").unwrap();
    assert_eq!(strokex(&["extract", "--input", path(&junk)]).status.code(), Some(2));

    assert_eq!(strokex(&[]).status.code(), Some(1));
    assert_eq!(strokex(&["extract"]).status.code(), Some(1));
    assert_eq!(strokex(&["config", "--k", "1.5"]).status.code(), Some(1));
    assert_eq!(strokex(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("strokex.toml");
    let out = strokex(&["config", "--k", "0.3", "--eulerian"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&cfg, &out.stdout).unwrap();

    let png = dir.path().join("loop.png");
    save_png(&render(&glyph_document(Glyph::LoopStem), &RenderParams::default()).unwrap(), &png);
    let by_flags = strokex(&["extract", "--input", path(&png), "--k", "0.3", "--eulerian"]);
    let by_file = strokex(&["extract", "--input", path(&png), "--config", path(&cfg)]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_strokex"))
        .args(["extract", "--input", path(&png)])
        .env("STROKEX_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(by_flags.stdout, by_file.stdout);
    assert_eq!(by_flags.stdout, by_env.stdout);

    let again = strokex(&["config", "--config", path(&cfg)]);
    assert_eq!(again.stdout, out.stdout);
}

/// Renders a corpus to `inkml/`, then `render` and `extract` in batch.
fn round_trip_dirs(root: &Path, count: usize) -> (std::path::PathBuf, std::path::PathBuf) {
    let (ink, png, truth, found) = (root.join("inkml"), root.join("png"), root.join("truth"), root.join("found"));
    std::fs::create_dir_all(&ink).unwrap();
    for (i, doc) in corpus(11, count).iter().enumerate() {
        std::fs::write(ink.join(format!("doc{i:03}.inkml")), doc.serialize(Format::InkMl)).unwrap();
    }
    let out = strokex(&["render", "--input", path(&ink), "--output", path(&png), "--truth-out", path(&truth), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(count_files(&png, "png"), count);
    assert_eq!(count_files(&truth, "json"), count);
    let out = strokex(&["extract", "--input", path(&png), "--output", path(&found), "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(count_files(&found, "json"), count);
    (truth, found)
}

fn evaluate(truth: &Path, found: &Path, report: &Path) -> Value {
    let out = strokex(&["evaluate", "--truth", path(truth), "--extracted", path(found), "--report", path(report)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap()
}

fn mean(v: impl Iterator<Item = f64>) -> f64 {
    let v: Vec<f64> = v.collect();
    v.iter().sum::<f64>() / v.len() as f64
}

#[test]
fn batch_aggregates_are_means_of_files() {
    let dir = tempfile::tempdir().unwrap();
    let (truth, found) = round_trip_dirs(dir.path(), 50);
    let r = evaluate(&truth, &found, &dir.path().join("report.json"));
    let files = r["files"].as_array().unwrap();
    assert_eq!(files.len(), 50);

    let matched = |f: &Value| f["report"]["matched_pairs"].as_array().unwrap().len() as f64;
    let n = |f: &Value, k: &str| f["report"][k].as_u64().unwrap() as f64;
    let recall = mean(files.iter().map(|f| if n(f, "n_truth") == 0.0 { 1.0 } else { matched(f) / n(f, "n_truth") }));
    let precision = mean(files.iter().map(|f| if n(f, "n_extracted") == 0.0 { 0.0 } else { matched(f) / n(f, "n_extracted") }));
    let agree = mean(files.iter().map(|f| f64::from(n(f, "n_truth") == n(f, "n_extracted"))));
    let distance = mean(
        files
            .iter()
            .filter_map(|f| f["report"]["matched_pairs"].as_array().filter(|m| !m.is_empty()))
            .map(|m| mean(m.iter().map(|p| p["distance"].as_f64().unwrap()))),
    );
    assert!((r["recall"].as_f64().unwrap() - recall).abs() < 1e-12);
    assert!((r["precision"].as_f64().unwrap() - precision).abs() < 1e-12);
    assert!((r["count_agreement"].as_f64().unwrap() - agree).abs() < 1e-12);
    assert!((r["mean_distance"].as_f64().unwrap() - distance).abs() < 1e-9);
    assert!(recall >= 0.85 && precision >= 0.85, "recall {recall} precision {precision}");
}

#[test]
fn identical_and_empty_directories() {
    let dir = tempfile::tempdir().unwrap();
    let (truth, _) = round_trip_dirs(dir.path(), 5);
    let same = evaluate(&truth, &truth, &dir.path().join("same.json"));
    assert_eq!(same["recall"].as_f64(), Some(1.0));
    assert_eq!(same["precision"].as_f64(), Some(1.0));
    assert_eq!(same["mean_distance"].as_f64(), Some(0.0));

    let empty = dir.path().join("empty");
    std::fs::create_dir(&empty).unwrap();
    let none = evaluate(&truth, &empty, &dir.path().join("none.json"));
    assert_eq!(none["recall"].as_f64(), Some(0.0));
    assert_eq!(none["unpaired_truth"].as_array().unwrap().len(), 5);
}

#[test]
fn extraction_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let png = dir.path().join("hook.png");
    save_png(&render(&glyph_document(Glyph::Hook), &RenderParams::default()).unwrap(), &png);
    let a = strokex(&["extract", "--input", path(&png)]);
    let b = strokex(&["extract", "--input", path(&png)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn batch_continues_past_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let (input, output) = (dir.path().join("in"), dir.path().join("out"));
    std::fs::create_dir(&input).unwrap();
    save_png(&render(&glyph_document(Glyph::Cross), &RenderParams::default()).unwrap(), &input.join("good.png"));
    std::fs::write(input.join("bad.png"), b"garbage").unwrap();
    let out = strokex(&["extract", "--input", path(&input), "--output", path(&output)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(output.join("good.json").is_file());
    assert!(!output.join("bad.json").exists());
}
