//! (k,l)-center clustering of curves: the farthest-first heuristic, the
//! approximate decision procedure, and the radius search built on top of
//! it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use klcenter::cluster::{gonzalez_kl_center, kl_center_decide, kl_center_search, ClusterParams};
use klcenter::cluster::DecideOutcome;
use klcenter::frechet::{Metric, PolyCurve};
use klcenter::geometry::Point;

/// Synthetic input: three planted center shapes, each observed several
/// times with resampling and small perturbations.
fn planted(rng: &mut ChaCha8Rng) -> Vec<PolyCurve> {
    let shapes: Vec<Vec<Point>> = (0..3)
        .map(|j| {
            let off = 40.0 * j as f64;
            (0..5)
                .map(|_| Point::two(off + rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect()
        })
        .collect();
    (0..24)
        .map(|i| {
            let mut pts = Vec::new();
            for v in &shapes[i % 3] {
                for _ in 0..rng.gen_range(1..=3) {
                    pts.push(Point::two(
                        v.coords[0] + rng.gen_range(-0.1..0.1),
                        v.coords[1] + rng.gen_range(-0.1..0.1),
                    ));
                }
            }
            PolyCurve::new(format!("obs-{i}"), pts).unwrap()
        })
        .collect()
}

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let curves = planted(&mut rng);
    let params = ClusterParams::new(3, 5, Metric::Discrete, 1e-9)?;

    let result = gonzalez_kl_center(&curves, &params)?;
    println!("farthest-first traversal:");
    println!("  radius  = {:.4}", result.radius);
    println!("  history = {:?}", result.history.iter().map(|h| (h * 1e4).round() / 1e4).collect::<Vec<_>>());
    for (i, c) in result.centers.iter().enumerate() {
        let members = result.assignment.values().filter(|&&a| a == i).count();
        println!("  center {} ({} vertices): {} members", i, c.complexity(), members);
    }

    println!("\ndecision procedure:");
    for delta in [0.01, 0.2] {
        match kl_center_decide(&curves, &params, delta)? {
            DecideOutcome::Clustering(r) => {
                println!("  delta {}: clustering of radius {:.4} (<= 3 delta)", delta, r.radius)
            }
            DecideOutcome::No => println!("  delta {}: no", delta),
        }
    }

    let searched = kl_center_search(&curves, &params)?;
    println!("\nradius search:");
    println!("  radius        = {:.4}", searched.radius);
    println!("  decider calls = {}", searched.decider_calls);
    Ok(())
}
