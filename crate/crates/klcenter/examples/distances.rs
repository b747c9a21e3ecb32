//! Computing discrete and continuous Fréchet distances, with an optimal
//! alignment and a look at how the two metrics differ on spiky curves.

use klcenter::frechet::{
    continuous_frechet, continuous_frechet_decide, discrete_frechet, discrete_frechet_alignment,
    PolyCurve,
};
use klcenter::geometry::Point;

fn main() -> anyhow::Result<()> {
    // Two parallel polylines, one unit apart.
    let a = PolyCurve::new(
        "a",
        vec![
            Point::two(0.0, 0.0),
            Point::two(4.0, 0.0),
            Point::two(8.0, 0.0),
        ],
    )?;
    let b = PolyCurve::new(
        "b",
        vec![
            Point::two(0.0, 1.0),
            Point::two(3.0, 1.0),
            Point::two(8.0, 1.0),
        ],
    )?;
    println!("parallel lines, one unit apart:");
    println!("  discrete   = {:.6}", discrete_frechet(&a, &b)?);
    println!("  continuous = {:.6}", continuous_frechet(&a, &b, 1e-9)?);

    let (value, alignment) = discrete_frechet_alignment(&a, &b)?;
    println!("  optimal alignment at {:.6}: {:?}", value, alignment.pairs);

    // A densely sampled curve against a sparse one: the discrete metric
    // pays for the intermediate samples, the continuous one does not.
    let dense = PolyCurve::new(
        "dense",
        (0..=16)
            .map(|i| Point::two(i as f64 / 2.0, 0.0))
            .collect(),
    )?;
    let sparse = PolyCurve::new("sparse", vec![Point::two(0.0, 0.0), Point::two(8.0, 0.0)])?;
    println!("\nsame segment, different sampling:");
    println!("  discrete   = {:.6}", discrete_frechet(&dense, &sparse)?);
    println!(
        "  continuous = {:.6}",
        continuous_frechet(&dense, &sparse, 1e-9)?
    );

    // The decision procedure answers "is the distance at most delta"
    // without a value computation.
    for delta in [0.5, 1.0, 2.0] {
        println!(
            "  d_F(a, b) <= {}? {}",
            delta,
            continuous_frechet_decide(&a, &b, delta)?
        );
    }
    Ok(())
}
