//! Reading and writing curves: JSON-lines, CSV import, and GeoJSON export
//! for external viewers.

use klcenter::io::{read_curves_csv, read_curves_jsonl, write_curves_geojson, write_curves_jsonl};

fn main() -> anyhow::Result<()> {
    let jsonl = r#"{"id":"tram-12","points":[[13.3777,52.5163],[13.3903,52.5096],[13.4050,52.5200]]}
{"id":"bus-100","points":[[13.3500,52.5144],[13.3777,52.5163]]}
"#;
    let curves = read_curves_jsonl(jsonl.as_bytes())?;
    println!("parsed {} curves from JSON lines", curves.len());
    for c in &curves {
        println!("  {}: {} vertices, dimension {}", c.id, c.complexity(), c.dim());
    }

    let csv = "id,x,y\nwalk-1,0,0\nwalk-1,1,0.5\nwalk-1,2,0\n";
    let walked = read_curves_csv(csv.as_bytes())?;
    println!("\nparsed {} curve from CSV ({} vertices)", walked.len(), walked[0].complexity());

    let mut out = Vec::new();
    write_curves_jsonl(&mut out, &walked)?;
    print!("\nround-tripped JSON lines:\n{}", String::from_utf8(out)?);

    let mut geo = Vec::new();
    write_curves_geojson(&mut geo, &curves)?;
    println!("\nGeoJSON export ({} bytes):", geo.len());
    println!("{}", String::from_utf8(geo)?);
    Ok(())
}
