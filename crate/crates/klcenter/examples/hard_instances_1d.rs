//! The one-dimensional reduction from shortest common supersequence: build
//! gadget curves for a set of strings, verify a center derived from a
//! supersequence, and read the supersequence back out of the center.

use klcenter::frechet::Metric;
use klcenter::hardness::{
    center_from_superstring, extract_superstring_1d, gen_1d, verify_instance, ScsInstance,
    Variant,
};
use klcenter::oracle::brute_scs;

fn main() -> anyhow::Result<()> {
    let strings = vec!["ABB".to_string(), "BBA".to_string(), "ABA".to_string()];
    let scs = brute_scs(&strings)?;
    println!("strings: {:?}", strings);
    println!("shortest common supersequence: {} (length {})", scs, scs.len());

    let inst = ScsInstance::new(strings, scs.len())?;
    let hi = gen_1d(&inst, Metric::Discrete);
    println!("\ndiscrete gadget curves (t = {}):", hi.t);
    for c in &hi.curves {
        println!("  {}: {} vertices", c.id, c.complexity());
    }
    println!("center budget: {} vertices", hi.ell);

    // A supersequence of length t becomes a center within distance 1 of
    // every gadget curve; no center does better than the gap radius.
    let center = center_from_superstring(&scs, Variant::OneDDiscrete, 0)?;
    let (ok, radius) = verify_instance(&hi, &center, 1.0, Metric::Discrete)?;
    println!("\ncanonical center: {} vertices", center.complexity());
    println!("verifies at radius 1: {} (achieved radius {})", ok, radius);
    let (ok_below, _) = verify_instance(&hi, &center, 0.99, Metric::Discrete)?;
    println!("verifies at radius 0.99: {}", ok_below);

    // The reverse direction: a feasible center encodes a supersequence.
    println!("recovered superstring: {}", extract_superstring_1d(&center)?);

    // The continuous variant repeats the gadgets so a center's vertex
    // count still pins down the supersequence length.
    let hic = gen_1d(&inst, Metric::Continuous);
    println!(
        "\ncontinuous variant: {} vertices per curve, center budget {}",
        hic.curves[0].complexity(),
        hic.ell
    );
    Ok(())
}
