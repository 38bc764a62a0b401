use super::{format_coord, CoordinateSpace, InkDocument, InkPoint};
use crate::error::{Error, Result};

fn parse_trace(text: &str, index: usize) -> Result<Vec<InkPoint>> {
    let mut points = Vec::new();
    for chunk in text.split(',') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut values = chunk.split_whitespace().map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::parse(Some(index), format!("non-numeric coordinate {t:?}")))
        });
        let (Some(x), Some(y)) = (values.next(), values.next()) else {
            return Err(Error::parse(Some(index), format!("point {chunk:?} needs two coordinates")));
        };
        // Extra channels (time, pressure) are validated but dropped.
        for v in values {
            v?;
        }
        points.push(InkPoint::new(x?, y?));
    }
    if points.is_empty() {
        return Err(Error::parse(Some(index), "empty trace"));
    }
    Ok(points)
}

/// Reads every `trace` element, in document order, as one stroke. Other
/// annotations are ignored. The canvas is sized to cover the coordinates.
pub fn parse_ink(text: &str) -> Result<InkDocument> {
    let xml = roxmltree::Document::parse(text).map_err(|e| Error::parse(None, e.to_string()))?;
    let mut strokes = Vec::new();
    for node in xml.descendants().filter(|n| n.is_element() && n.tag_name().name() == "trace") {
        let text: String = node
            .children()
            .filter(|c| c.is_text())
            .filter_map(|c| c.text())
            .collect();
        strokes.push(parse_trace(&text, strokes.len())?);
    }
    if strokes.is_empty() {
        return Err(Error::parse(None, "document contains no traces"));
    }
    let extent = |f: fn(&InkPoint) -> f64| {
        strokes
            .iter()
            .flatten()
            .map(f)
            .fold(0.0f64, f64::max)
            .ceil()
            .min(u32::MAX as f64 - 1.0) as u32
            + 1
    };
    let (width, height) = (extent(|p| p.x), extent(|p| p.y));
    Ok(InkDocument {
        width,
        height,
        strokes,
        space: CoordinateSpace::Source,
    })
}

pub fn to_inkml(doc: &InkDocument) -> String {
    let mut out = String::from("<ink xmlns=\"http://www.w3.org/2003/InkML\">\n");
    for (i, s) in doc.strokes.iter().enumerate() {
        let pts: Vec<String> = s
            .iter()
            .map(|p| format!("{} {}", format_coord(p.x), format_coord(p.y)))
            .collect();
        out.push_str(&format!("<trace id=\"{i}\">{}</trace>\n", pts.join(", ")));
    }
    out.push_str("</ink>\n");
    out
}
