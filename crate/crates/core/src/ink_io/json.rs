use serde::{Deserialize, Serialize};

use super::{CoordinateSpace, InkDocument, InkPoint};
use crate::error::{Error, Result};

#[derive(Serialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Float(f64),
}

impl From<f64> for Num {
    fn from(v: f64) -> Self {
        if v.fract() == 0.0 && v.abs() < 9.0e15 {
            Num::Int(v as i64)
        } else {
            Num::Float(v)
        }
    }
}

#[derive(Serialize)]
struct Out {
    width: u32,
    height: u32,
    strokes: Vec<Vec<[Num; 2]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct In {
    width: u32,
    height: u32,
    strokes: Vec<Vec<[f64; 2]>>,
}

/// `{"width":W,"height":H,"strokes":[[[x,y],...],...]}`, integral
/// coordinates written without a fraction.
pub fn to_json(doc: &InkDocument) -> String {
    let out = Out {
        width: doc.width,
        height: doc.height,
        strokes: doc
            .strokes
            .iter()
            .map(|s| s.iter().map(|p| [p.x.into(), p.y.into()]).collect())
            .collect(),
    };
    serde_json::to_string(&out).expect("plain data serializes")
}

pub fn parse_json(text: &str) -> Result<InkDocument> {
    let raw: In = serde_json::from_str(text).map_err(|e| Error::parse(None, e.to_string()))?;
    if let Some(i) = raw.strokes.iter().position(Vec::is_empty) {
        return Err(Error::parse(Some(i), "empty stroke"));
    }
    let strokes = raw
        .strokes
        .into_iter()
        .map(|s| s.into_iter().map(|[x, y]| InkPoint::new(x, y)).collect())
        .collect();
    let mut doc = InkDocument::new(raw.width, raw.height, strokes).map_err(|e| Error::parse(None, e.to_string()))?;
    doc.space = CoordinateSpace::Pixels;
    Ok(doc)
}
