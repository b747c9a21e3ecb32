//! The planar reduction: gadgets wind around three rays at 120 degrees,
//! and the geometry of the layout is what makes approximation hard — any
//! center within the gap radius of the curves can be snapped back to a
//! supersequence.

use klcenter::frechet::Metric;
use klcenter::hardness::{
    center_from_superstring, extract_superstring_2d_discrete, gap_radius_2d_discrete, gen_2d,
    verify_instance, GadgetLayout2D, ScsInstance, Variant,
};
use klcenter::hardness::is_subsequence;

fn main() -> anyhow::Result<()> {
    let layout = GadgetLayout2D::new();
    println!("layout: three rays at 90, 210 and 330 degrees");
    for ray in 1..=3 {
        let p = layout.p(ray, 3);
        println!("  outer point {}: ({:+.4}, {:+.4})", ray, p.coords[0], p.coords[1]);
    }
    println!(
        "  outer points pairwise {:.6} apart (= 2 x {:.6})",
        layout.p(1, 3).dist(layout.p(2, 3)),
        gap_radius_2d_discrete()
    );

    let strings = vec!["ABB".to_string(), "BBA".to_string(), "ABA".to_string()];
    let inst = ScsInstance::new(strings.clone(), 4)?;
    let hi = gen_2d(&inst, Metric::Discrete);
    println!(
        "\ndiscrete instance: t = {}, s = {}, center budget {} vertices",
        hi.t, hi.s, hi.ell
    );
    for c in &hi.curves {
        println!("  {}: {} vertices", c.id, c.complexity());
    }

    let center = center_from_superstring("ABBA", Variant::TwoDDiscrete, hi.s)?;
    let (ok, radius) = verify_instance(&hi, &center, 1.0, Metric::Discrete)?;
    println!(
        "\ncenter for ABBA: {} vertices, verifies at radius 1: {} (radius {:.4})",
        center.complexity(),
        ok,
        radius
    );

    // Extraction tolerates any radius below the disjointness threshold.
    let recovered = extract_superstring_2d_discrete(&center, 2.59, hi.s)?;
    println!("recovered superstring at snap radius 2.59: {}", recovered);
    println!(
        "supersequence of every input: {}",
        strings.iter().all(|s| is_subsequence(s, &recovered))
    );

    let hic = gen_2d(&inst, Metric::Continuous);
    println!(
        "\ncontinuous instance: s = {}, gap radius {}",
        hic.s, hic.gap_radius
    );
    Ok(())
}
