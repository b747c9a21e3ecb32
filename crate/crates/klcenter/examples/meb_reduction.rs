//! The minimum-enclosing-ball variant: with an unbounded center budget the
//! supersequence length is controlled by two extra curves A^j and B^j'
//! with j + j' = t, instead of a vertex-count cap.

use klcenter::frechet::Metric;
use klcenter::hardness::{center_from_superstring, gen_meb, verify_instance, ScsInstance, Variant};
use klcenter::oracle::brute_scs;

fn main() -> anyhow::Result<()> {
    let strings = vec!["AB".to_string(), "BA".to_string()];
    let scs = brute_scs(&strings)?;
    println!("strings {:?}, shortest common supersequence {:?}", strings, scs);

    let t = scs.len();
    let inst = ScsInstance::new(strings, t)?;
    let j = scs.chars().filter(|&c| c == 'A').count();
    let jp = t - j;
    let hi = gen_meb(&inst, j, jp)?;
    println!("\ninstance with split (j, j') = ({}, {}):", j, jp);
    for c in &hi.curves {
        let xs: Vec<f64> = c.vertices.iter().map(|p| p.coords[0]).collect();
        println!("  {}: {:?}", c.id, xs);
    }

    // The canonical center for the supersequence stays within distance 1
    // of the gadget curves and of both length-bounding curves.
    let center = center_from_superstring(&scs, Variant::MebOneDDiscrete, 0)?;
    let (ok, radius) = verify_instance(&hi, &center, 1.0, Metric::Discrete)?;
    println!("\ncenter verifies at radius 1: {} (achieved {:.4})", ok, radius);

    // A wrong split rejects the same center: the bounding curves force
    // exactly j letters A and j' letters B.
    if t >= 1 {
        let wrong = gen_meb(&inst, t, 0)?;
        let (ok_wrong, radius_wrong) = verify_instance(&wrong, &center, 1.0, Metric::Discrete)?;
        println!(
            "under split ({}, 0) the same center verifies: {} (achieved {:.4})",
            t, ok_wrong, radius_wrong
        );
    }
    Ok(())
}
