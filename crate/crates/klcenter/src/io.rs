//! File formats: JSON-lines curve files, CSV import, GeoJSON export, and
//! the sidecar metadata written next to generated hard instances.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::frechet::PolyCurve;
use crate::geometry::Point;

/// One curve per line: {"id": "...", "points": [[x, ...], ...]}.
#[derive(Debug, Serialize, Deserialize)]
struct CurveRecord {
    id: String,
    points: Vec<Vec<f64>>,
}

/// Metadata written alongside generated hard instances.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceSidecar {
    pub variant: String,
    pub t: usize,
    pub s: usize,
    pub ell: usize,
    pub target_radius: f64,
    pub gap_radius: f64,
}

/// Parses a JSON-lines curve file. Blank lines are skipped; every curve
/// must be non-empty and of uniform dimension.
pub fn read_curves_jsonl<R: BufRead>(reader: R) -> Result<Vec<PolyCurve>> {
    let mut curves = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CurveRecord = serde_json::from_str(&line)
            .map_err(|e| Error::Malformed(format!("line {}: {}", lineno + 1, e)))?;
        let pts = rec.points.into_iter().map(|c| Point { coords: c }).collect();
        curves.push(PolyCurve::new(rec.id, pts)?);
    }
    if curves.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(curves)
}

pub fn write_curves_jsonl<W: Write>(writer: &mut W, curves: &[PolyCurve]) -> Result<()> {
    for c in curves {
        let rec = CurveRecord {
            id: c.id.clone(),
            points: c.vertices.iter().map(|p| p.coords.clone()).collect(),
        };
        writeln!(writer, "{}", serde_json::to_string(&rec)?)?;
    }
    Ok(())
}

/// Imports curves from CSV rows of the form `id,x,y`, consecutive rows with
/// the same id forming one curve. A leading header row is tolerated.
pub fn read_curves_csv<R: std::io::Read>(reader: R) -> Result<Vec<PolyCurve>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<String, Vec<Point>> = BTreeMap::new();
    for (i, row) in rdr.records().enumerate() {
        let row = row?;
        if row.len() < 3 {
            return Err(Error::Malformed(format!(
                "csv row {}: expected id,x,y",
                i + 1
            )));
        }
        let id = row[0].trim().to_string();
        let x = row[1].trim().parse::<f64>();
        let y = row[2].trim().parse::<f64>();
        match (x, y) {
            (Ok(x), Ok(y)) => {
                if !groups.contains_key(&id) {
                    order.push(id.clone());
                }
                groups.entry(id).or_default().push(Point::two(x, y));
            }
            _ if i == 0 => continue, // header row
            _ => {
                return Err(Error::Malformed(format!(
                    "csv row {}: non-numeric coordinates",
                    i + 1
                )))
            }
        }
    }
    if order.is_empty() {
        return Err(Error::EmptyInput);
    }
    order
        .into_iter()
        .map(|id| {
            let pts = groups.remove(&id).unwrap();
            PolyCurve::new(id, pts)
        })
        .collect()
}

/// Exports curves as a GeoJSON FeatureCollection of LineStrings (single
/// vertices become Points). 1D curves are embedded on the x-axis.
pub fn write_curves_geojson<W: Write>(writer: &mut W, curves: &[PolyCurve]) -> Result<()> {
    let features: Vec<_> = curves
        .iter()
        .map(|c| {
            let coords: Vec<Vec<f64>> = c
                .vertices
                .iter()
                .map(|p| match p.coords.len() {
                    1 => vec![p.coords[0], 0.0],
                    _ => p.coords.clone(),
                })
                .collect();
            let geometry = if coords.len() == 1 {
                json!({"type": "Point", "coordinates": coords[0]})
            } else {
                json!({"type": "LineString", "coordinates": coords})
            };
            json!({
                "type": "Feature",
                "properties": {"id": c.id},
                "geometry": geometry,
            })
        })
        .collect();
    let fc = json!({"type": "FeatureCollection", "features": features});
    writeln!(writer, "{}", serde_json::to_string_pretty(&fc)?)?;
    Ok(())
}
