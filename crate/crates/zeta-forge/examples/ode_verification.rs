//! Three structural checks on φ(x) = −π cot(πx) that never use the closed
//! form as an input: the Riccati equation φ′ = π² + φ², the log-kernel
//! product identity −∫ (t^{−x}+t^{x−1}) ln t/(1−t) dt = π² + φ², and the
//! two-pole Fubini probe whose ε → 0 limit is −ln y/(1−y).

use zeta_forge::quadrature_lab::{
    fubini_inner_check, ode_residual_with_step, product_identity_check,
};

fn main() -> zeta_forge::Result<()> {
    let grid: Vec<f64> = (4..=16).map(|i| i as f64 / 20.0).collect();

    for h in [1e-2, 1e-3, 1e-4] {
        let report = ode_residual_with_step(&grid, h)?;
        println!(
            "Riccati residual, step h = {h:<6}: max {:.3e}",
            report.max_abs_residual()
        );
    }

    let product = product_identity_check(&grid)?;
    println!(
        "\nproduct identity −∫ = π² + φ²: max residual {:.3e}",
        product.max_abs_residual()
    );

    println!("\nFubini probe, closed form −ln y/(1−y):");
    for y in [0.5, 2.0, 5.0] {
        let report = fubini_inner_check(y, &[1e-1, 1e-2, 1e-3, 1e-4])?;
        print!("  y = {y}: |I(ε) − closed| =");
        for r in report.residuals() {
            print!(" {r:.3e}");
        }
        println!();
    }
    Ok(())
}
