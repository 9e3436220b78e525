//! The charged-lattice story in partial sums: the force a half-integer test
//! charge feels from a unit grid is π²/2, its regularized potential is
//! −2 ln 2, and both carry certified tail brackets at any truncation.

use std::f64::consts::{LN_2, PI};
use zeta_forge::series_lab::{coulomb_force, partial_zeta_sum, regularized_potential};

fn main() -> zeta_forge::Result<()> {
    let basel = PI * PI / 6.0;
    println!("plain sum Σ 1/n² vs π²/6 = {basel:.15}:");
    for exp in [2u32, 3, 4, 5, 6] {
        let n = 10u64.pow(exp);
        let est = partial_zeta_sum(1, n, false)?;
        let (lo, hi) = est.bracket();
        println!(
            "  N = 10^{exp}: estimate {:.15}  bracket width {:.2e}  contains π²/6: {}",
            est.value_estimate(),
            hi - lo,
            est.contains(basel)
        );
    }

    // the same limit through the half-shifted lattice: Σ (n−1/2)^{-2} = 3ζ(2)
    let shifted = partial_zeta_sum(1, 1_000_000, true)?;
    println!(
        "\nhalf-shifted sum / 3 = {:.15} (π²/6 again)",
        shifted.value_estimate() / 3.0
    );

    let force = coulomb_force(0.5, 1_000_000)?;
    println!(
        "\nforce at x = 1/2: estimate {:.15} vs π²/2 = {:.15}  (bracketed: {})",
        force.value_estimate(),
        PI * PI / 2.0,
        force.contains(PI * PI / 2.0)
    );

    let potential = regularized_potential(0.5, 1_000_000)?;
    println!(
        "potential at x = 1/2: estimate {:.15} vs −2ln2 = {:.15}  (bracketed: {})",
        potential.value_estimate(),
        -2.0 * LN_2,
        potential.contains(-2.0 * LN_2)
    );
    Ok(())
}
