//! The ∓iε regularizations of the half-line integral for φ(x). As ε shrinks
//! the real part settles on φ(x) while the imaginary part walks to ±π — the
//! two half-residues the principal value throws away.

use zeta_forge::quadrature_lab::{phi_closed_form, phi_epsilon, plemelj_sweep, PlemeljSign};

fn main() -> zeta_forge::Result<()> {
    let eps_list = [1e-1, 1e-2, 1e-3, 1e-4];

    for x in [0.3, 0.5, 0.7] {
        println!("x = {x}  (φ = {:+.12}, target Im = +π)", phi_closed_form(x));
        println!("  ε        Re φ_ε              Im φ_ε              |Im − π|");
        for &eps in &eps_list {
            let qr = phi_epsilon(x, eps, PlemeljSign::Minus)?;
            println!(
                "  {eps:<7} {:+.15}  {:+.15}  {:.3e}",
                qr.value_real,
                qr.value_imag,
                (qr.value_imag - std::f64::consts::PI).abs()
            );
        }
        println!();
    }

    // the report form used by the verifier: residuals are Im − target
    for sign in [PlemeljSign::Minus, PlemeljSign::Plus] {
        let sweep = plemelj_sweep(0.3, &eps_list, sign)?;
        println!(
            "sweep at x = 0.3, sign {sign}: target {:+.3}, final residual {:+.3e}",
            sign.target_imag(),
            sweep.residuals().last().unwrap()
        );
    }
    Ok(())
}
