//! Curve simplification in both directions: fix an error bound and
//! minimize the vertex count, or fix a vertex budget and minimize the
//! error — under the discrete and the continuous Fréchet distance.

use klcenter::frechet::PolyCurve;
use klcenter::simplify::{
    approx4_min_error_simplify_continuous, min_error_simplify_discrete,
    min_size_simplify_continuous_vc, min_size_simplify_discrete,
};

fn show(label: &str, res: &klcenter::simplify::SimplifyResult) {
    let xs: Vec<f64> = res.curve.vertices.iter().map(|p| p.coords[0]).collect();
    println!("  {}: {} vertices, error {:.4}, {:?}", label, res.complexity, res.error, xs);
}

fn main() -> anyhow::Result<()> {
    // A noisy staircase in one dimension.
    let c = PolyCurve::from_coords_1d(
        "staircase",
        &[0.0, 0.4, -0.3, 5.0, 5.2, 4.8, 10.0, 9.7, 10.3, 10.1],
    )?;
    println!("input: {} vertices", c.complexity());

    println!("\nminimum-complexity simplification (discrete, weak):");
    for delta in [0.3, 0.6, 3.0] {
        show(&format!("delta {delta}"), &min_size_simplify_discrete(&c, delta));
    }

    println!("\nminimum-error simplification (discrete, weak):");
    for ell in [1, 2, 3, 5] {
        show(&format!("ell {ell}"), &min_error_simplify_discrete(&c, ell)?);
    }

    println!("\nminimum-complexity simplification (continuous, vertex-constrained):");
    for delta in [0.3, 0.6, 3.0] {
        show(
            &format!("delta {delta}"),
            &min_size_simplify_continuous_vc(&c, delta)?,
        );
    }

    println!("\n4-approximate minimum-error simplification (continuous):");
    for ell in [2, 3, 5] {
        show(
            &format!("ell {ell}"),
            &approx4_min_error_simplify_continuous(&c, ell)?,
        );
    }
    Ok(())
}
