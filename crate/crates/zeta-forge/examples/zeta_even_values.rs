//! Exact ζ(2k) through four independent routes, cross-validated.

use zeta_forge::zeta_engine::{ZetaEngine, ZetaRoute};

fn main() -> zeta_forge::Result<()> {
    let max_k = 12;
    let engine = ZetaEngine::new(max_k);

    println!("{:>3}  {:>34}  {:<18}", "2k", "exact", "decimal");
    for k in 1..=max_k {
        let v = engine.validated(k)?;
        println!("{:>3}  {:>34}  {:<18.15}", 2 * k, v.exact_string(), v.to_f64());
    }

    // the same value out of each route separately; validated() asserts the
    // equality, this just shows where it comes from
    println!("\nζ(12) route by route:");
    for route in [
        ZetaRoute::Tangent,
        ZetaRoute::Cotangent,
        ZetaRoute::SelfRecurrence,
        ZetaRoute::Bernoulli,
    ] {
        let v = engine.via(route, 6)?;
        println!("  {route:<12} {}", v.exact_string());
    }

    // polygamma at the lattice midpoint is the same data in another coat:
    // ψ_{2k-1}(1/2) = (2^{2k}-1)(2k-1)! ζ(2k)
    println!("\nψ_(2k-1)(1/2):");
    for k in 1..=4 {
        println!("  k={k}: {}", engine.polygamma_half(k)?.exact_string());
    }
    Ok(())
}
