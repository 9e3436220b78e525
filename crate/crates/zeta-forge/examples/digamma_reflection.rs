//! Digamma by series and by integral, then the polygamma reflection
//! identity checked on a grid: series on the left, exact cot-derivative
//! polynomial on the right.

use zeta_forge::quadrature_lab::digamma_integral;
use zeta_forge::series_lab::{digamma_series, reflection_check, EULER_GAMMA};

fn main() -> zeta_forge::Result<()> {
    println!("ψ(1−x): series (10^6 terms) vs integral route:");
    for x in [0.1, 0.3, 0.5, 0.7] {
        let series = digamma_series(x, 1_000_000)?;
        let quad = digamma_integral(x)?;
        println!(
            "  x = {x}: series {:.12}  integral {:.12}  diff {:.2e}",
            series.value_estimate(),
            quad.value() - EULER_GAMMA,
            (series.value_estimate() - (quad.value() - EULER_GAMMA)).abs()
        );
    }

    // ψ_(2k-1)(x) + ψ_(2k-1)(1−x) vs −π (d/dx)^(2k-1) cot(πx): series on the
    // left, exact polynomial in cot(πx) on the right
    let grid: Vec<f64> = (2..=18).map(|i| i as f64 / 20.0).collect();
    for k in [1usize, 2] {
        let report = reflection_check(k, &grid)?;
        println!(
            "\nreflection at derivative order {}: max residual {:.3e} over {} points",
            2 * k - 1,
            report.max_abs_residual(),
            grid.len()
        );
        for (x, r) in report.points().iter().zip(report.residuals()).step_by(4) {
            println!("  x = {x:.2}  residual = {r:+.3e}");
        }
    }
    Ok(())
}
