//! φ(x) = −π cot(πx) three ways: the unit-interval integral, the folded
//! half-line principal value, and the closed form — then the grid checks
//! that pin the routes against each other.

use zeta_forge::quadrature_lab::{
    phi_closed_form, phi_principal_value, phi_unit_interval, pv_consistency_check,
    reflection_closed_form_check,
};

fn main() -> zeta_forge::Result<()> {
    println!("  x      unit interval        principal value      closed form");
    for i in 1..=9 {
        let x = i as f64 / 10.0;
        let unit = phi_unit_interval(x)?;
        let pv = phi_principal_value(x)?;
        println!(
            "  {x:.1}  {:+.15}  {:+.15}  {:+.15}",
            unit.value(),
            pv.value(),
            phi_closed_form(x)
        );
    }

    let grid: Vec<f64> = (2..=18).map(|i| i as f64 / 20.0).collect();
    let vs_closed = reflection_closed_form_check(&grid)?;
    let vs_unit = pv_consistency_check(&grid)?;
    println!(
        "\nPV vs closed form:    max residual {:.3e}",
        vs_closed.max_abs_residual()
    );
    println!(
        "PV vs unit interval:  max residual {:.3e}",
        vs_unit.max_abs_residual()
    );

    // the engine reports its own convergence
    let qr = phi_principal_value(0.3)?;
    println!(
        "\nat x = 0.3: value {:.15}, error estimate {:.1e}, {} evaluations",
        qr.value(),
        qr.error_estimate,
        qr.evaluations
    );
    Ok(())
}
