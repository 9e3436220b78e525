//! The integer/rational sequences feeding the zeta closed forms: tangent
//! numbers, cotangent Taylor numbers, Bernoulli numbers (two routes), and
//! the cotangent derivative polynomials.

use zeta_forge::exact_kernel::format_rational;
use zeta_forge::sequences::{
    bernoulli_from_tangent_table, bernoulli_recurrence, cot_derivative_poly, cotangent_numbers,
    tangent_numbers,
};

fn main() -> zeta_forge::Result<()> {
    let tangent = tangent_numbers(13);
    println!("tangent numbers (odd entries; even ones vanish):");
    for (i, v) in tangent.values() {
        if i % 2 == 1 {
            println!("  T_{i:<2} = {}", format_rational(v));
        }
    }

    let cotangent = cotangent_numbers(12);
    println!("\ncotangent numbers (even entries; odd ones vanish):");
    for (i, v) in cotangent.values() {
        if i % 2 == 0 {
            println!("  S_{i:<2} = {}", format_rational(v));
        }
    }

    // two ways to the same Bernoulli table: the seeded quadratic recurrence
    // and the tangent-number conversion
    let via_recurrence = bernoulli_recurrence(8, &zeta_forge::exact_kernel::rat(1, 6));
    let via_tangent = bernoulli_from_tangent_table(8);
    println!("\neven Bernoulli numbers (recurrence == from-tangent: {}):",
        via_recurrence.values() == via_tangent.values());
    for (i, v) in via_recurrence.values() {
        println!("  B_{i:<2} = {}", format_rational(v));
    }

    // d^n/dx^n cot(πx) = π^n Σ_j c_j cot^j(πx); the constant term is −T_n
    println!("\ncot derivative polynomials (coefficients, ascending powers):");
    for order in 0..=5 {
        let p = cot_derivative_poly(order);
        let coeffs: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
        println!("  order {order}: [{}]  constant = {}", coeffs.join(", "), p.constant_term());
    }
    Ok(())
}
