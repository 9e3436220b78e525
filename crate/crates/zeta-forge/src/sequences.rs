//! Integer and rational coefficient sequences: tangent numbers, cotangent
//! Taylor numbers, Bernoulli numbers, and the polynomials giving higher
//! derivatives of cot(πx).
//!
//! Tangent numbers T_n (n-th derivative of tan at 0) satisfy the convolution
//!
//! ```text
//! T_n = Σ_{r=0}^{n-1} C(n-1, r) T_r T_{n-1-r},   T_0 = 0, T_1 = 1,
//! ```
//!
//! a consequence of tan′ = 1 + tan². Cotangent numbers S_n (derivatives of
//! x·cot x at 0) satisfy
//!
//! ```text
//! (n+1) S_n = −Σ_{r=1}^{n-1} C(n, r) S_r S_{n-r}     (n ≥ 3),
//! ```
//!
//! from x·(x cot x)′ = x cot x − (x cot x)² − x²; the x² term only survives
//! n = 2 differentiations, which forces the seed S_2 = −2/3 next to S_0 = 1,
//! S_1 = 0. Bernoulli numbers come in by two bridges: the tangent formula
//! B_{2m} = (−1)^{m+1}·2m·T_{2m-1}/(2^{2m}(2^{2m}−1)), and their own
//! quadratic recurrence (2n+1)B_{2n} = −Σ C(2n,2m) B_{2m} B_{2n-2m}, which
//! likewise needs its first even value seeded.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_kernel::{format_rational, pow2, rat, rat_int, BigRational};

/// Which sequence a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Tangent,
    Cotangent,
    Bernoulli,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceKind::Tangent => "tangent",
            SequenceKind::Cotangent => "cotangent",
            SequenceKind::Bernoulli => "bernoulli",
        })
    }
}

/// How a table's values were produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceRoute {
    /// The sequence's own recurrence.
    Recurrence,
    /// Converted from a tangent-number table.
    FromTangent,
}

impl fmt::Display for SequenceRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceRoute::Recurrence => "recurrence",
            SequenceRoute::FromTangent => "from-tangent",
        })
    }
}

/// An index → value table for one sequence. Integer sequences (tangent) are
/// stored as rationals with denominator 1 so every table serializes the same
/// way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub kind: SequenceKind,
    pub route: SequenceRoute,
    values: BTreeMap<usize, BigRational>,
}

impl SequenceTable {
    fn new(kind: SequenceKind, route: SequenceRoute, values: BTreeMap<usize, BigRational>) -> Self {
        SequenceTable { kind, route, values }
    }

    /// Value at `index`, or a missing-index error.
    pub fn get(&self, index: usize) -> Result<&BigRational> {
        self.values.get(&index).ok_or(Error::MissingIndex {
            kind: self.kind,
            index,
        })
    }

    /// All held (index, value) pairs in index order.
    pub fn values(&self) -> &BTreeMap<usize, BigRational> {
        &self.values
    }

    pub fn max_index(&self) -> Option<usize> {
        self.values.keys().next_back().copied()
    }

    /// `{"kind": ..., "route": ..., "values": {"3": "2", ...}}`
    pub fn to_json(&self) -> Value {
        let values: serde_json::Map<String, Value> = self
            .values
            .iter()
            .map(|(i, v)| (i.to_string(), Value::String(format_rational(v))))
            .collect();
        json!({
            "kind": self.kind.to_string(),
            "route": self.route.to_string(),
            "values": values,
        })
    }
}

/// Incrementally maintained row of Pascal's triangle.
struct PascalRow {
    n: usize,
    row: Vec<BigInt>,
}

impl PascalRow {
    /// Row for n = 0, i.e. `[1]`.
    fn new() -> Self {
        PascalRow {
            n: 0,
            row: vec![BigInt::one()],
        }
    }

    /// Advance from C(n, ·) to C(n+1, ·) in place.
    fn advance(&mut self) {
        self.row.push(BigInt::one());
        let len = self.row.len();
        for r in (1..len - 1).rev() {
            let prev = self.row[r - 1].clone();
            self.row[r] += prev;
        }
        self.n += 1;
    }

    fn choose(&self, r: usize) -> &BigInt {
        &self.row[r]
    }
}

/// T_0..T_max as machine-friendly bigints (T_n = 0 for even n).
pub(crate) fn tangent_ints(max_index: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero()];
    if max_index >= 1 {
        t.push(BigInt::one());
    }
    let mut row = PascalRow::new(); // C(0, ·), used when n = 1
    for n in 2..=max_index {
        row.advance(); // C(n-1, ·)
        let mut sum = BigInt::zero();
        for r in 0..n {
            if t[r].is_zero() || t[n - 1 - r].is_zero() {
                continue;
            }
            sum += row.choose(r) * &t[r] * &t[n - 1 - r];
        }
        t.push(sum);
    }
    t
}

/// Table of tangent numbers T_0..T_max.
pub fn tangent_numbers(max_index: usize) -> SequenceTable {
    let values = tangent_ints(max_index)
        .into_iter()
        .enumerate()
        .map(|(i, v)| (i, BigRational::from_integer(v)))
        .collect();
    SequenceTable::new(SequenceKind::Tangent, SequenceRoute::Recurrence, values)
}

/// Table of cotangent numbers S_0..S_max (Taylor derivatives of x·cot x).
pub fn cotangent_numbers(max_index: usize) -> SequenceTable {
    let seeds = [rat_int(1), rat_int(0), rat(-2, 3)];
    let mut s: Vec<BigRational> = seeds.into_iter().take(max_index + 1).collect();
    let mut row = PascalRow::new();
    row.advance();
    row.advance(); // C(2, ·)
    for n in 3..=max_index {
        row.advance(); // C(n, ·)
        let mut sum = BigRational::zero();
        for r in 1..n {
            if s[r].is_zero() || s[n - r].is_zero() {
                continue;
            }
            sum += BigRational::from_integer(row.choose(r).clone()) * &s[r] * &s[n - r];
        }
        s.push(-sum / rat_int(n as i64 + 1));
    }
    let values = s.into_iter().enumerate().collect();
    SequenceTable::new(SequenceKind::Cotangent, SequenceRoute::Recurrence, values)
}

/// T_{2k-1} recovered from a cotangent table via
/// T_{2k-1} = −(2^{2k} − 1)/(2k) · S_{2k}.
pub fn tangent_from_cotangent(k: usize, cotangent: &SequenceTable) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::domain("tangent_from_cotangent", "k must be ≥ 1"));
    }
    if cotangent.kind != SequenceKind::Cotangent {
        return Err(Error::domain(
            "tangent_from_cotangent",
            format!("expected a cotangent table, got {}", cotangent.kind),
        ));
    }
    let s2k = cotangent.get(2 * k)?;
    let factor = BigRational::new(-(pow2(2 * k as u64) - BigInt::one()), BigInt::from(2 * k));
    Ok(factor * s2k)
}

/// B_n from a tangent table:
/// B_{2m} = (−1)^{m+1} · 2m · T_{2m-1} / (2^{2m}(2^{2m} − 1)), odd n ≥ 3 give 0.
pub fn bernoulli_from_tangent(n: usize, tangent: &SequenceTable) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::domain("bernoulli_from_tangent", "defined for n ≥ 2"));
    }
    if tangent.kind != SequenceKind::Tangent {
        return Err(Error::domain(
            "bernoulli_from_tangent",
            format!("expected a tangent table, got {}", tangent.kind),
        ));
    }
    if n % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let m = n / 2;
    let t = tangent.get(n - 1)?;
    let p = pow2(n as u64);
    let mut numer = BigInt::from(n) * t.numer();
    if m % 2 == 0 {
        numer = -numer;
    }
    Ok(BigRational::new(numer, &p * (&p - BigInt::one())))
}

/// Even Bernoulli table B_2..B_{2·max_n} from a seeded quadratic recurrence:
/// (2n+1) B_{2n} = −Σ_{m=1}^{n-1} C(2n, 2m) B_{2m} B_{2n-2m} for n ≥ 2.
///
/// The n = 1 case of the recurrence has an empty sum, so the first even value
/// must be supplied from outside; keys are the Bernoulli indices 2, 4, ...
pub fn bernoulli_recurrence(max_n: usize, seed_b2: &BigRational) -> SequenceTable {
    let mut by_m: Vec<BigRational> = vec![BigRational::zero(), seed_b2.clone()];
    let mut row = PascalRow::new();
    row.advance();
    row.advance(); // C(2, ·)
    for n in 2..=max_n {
        row.advance();
        row.advance(); // C(2n, ·)
        let mut sum = BigRational::zero();
        for m in 1..n {
            sum += BigRational::from_integer(row.choose(2 * m).clone()) * &by_m[m] * &by_m[n - m];
        }
        by_m.push(-sum / rat_int(2 * n as i64 + 1));
    }
    let values = by_m
        .into_iter()
        .enumerate()
        .skip(1)
        .take(max_n)
        .map(|(m, v)| (2 * m, v))
        .collect();
    SequenceTable::new(SequenceKind::Bernoulli, SequenceRoute::Recurrence, values)
}

/// Even Bernoulli table B_2..B_{2·max_n} converted from tangent numbers.
pub fn bernoulli_from_tangent_table(max_n: usize) -> SequenceTable {
    let tangent = tangent_numbers(2 * max_n.max(1) - 1);
    let values = (1..=max_n)
        .map(|m| {
            let b = bernoulli_from_tangent(2 * m, &tangent).expect("table long enough");
            (2 * m, b)
        })
        .collect();
    SequenceTable::new(SequenceKind::Bernoulli, SequenceRoute::FromTangent, values)
}

/// Coefficients of the polynomial P_n with
/// dⁿ/dxⁿ cot(πx) = πⁿ · P_n(cot(πx)).
///
/// P_0(c) = c and P_{n+1} = −(1 + c²) P_n′, from (cot)′ = −π(1 + cot²).
/// The constant term of P_n is −T_n, which is how cot derivatives at x = 1/2
/// reduce to tangent numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotDerivativePoly {
    pub order: usize,
    coefficients: Vec<BigInt>,
}

impl CotDerivativePoly {
    /// Coefficient list, index j holding the cot^j coefficient.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coefficients[0]
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation of P_n at a double `c`.
    pub fn eval(&self, c: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, coeff| acc * c + big_to_f64(coeff))
    }

    /// dⁿ/dxⁿ cot(πx) at `x`, i.e. πⁿ · P_n(cot(πx)).
    pub fn derivative_at(&self, x: f64) -> f64 {
        let c = (std::f64::consts::PI * x).cos() / (std::f64::consts::PI * x).sin();
        std::f64::consts::PI.powi(self.order as i32) * self.eval(c)
    }
}

fn big_to_f64(v: &BigInt) -> f64 {
    use num::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

/// Build P_n by repeated application of P ↦ −(1 + c²) P′.
pub fn cot_derivative_poly(order: usize) -> CotDerivativePoly {
    let mut coeffs = vec![BigInt::zero(), BigInt::one()]; // P_0(c) = c
    for _ in 0..order {
        // derivative
        let deriv: Vec<BigInt> = (1..coeffs.len())
            .map(|j| BigInt::from(j) * &coeffs[j])
            .collect();
        // multiply by -(1 + c²)
        let mut next = vec![BigInt::zero(); deriv.len() + 2];
        for (j, d) in deriv.iter().enumerate() {
            next[j] -= d;
            next[j + 2] -= d;
        }
        while next.len() > 1 && next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        coeffs = next;
    }
    CotDerivativePoly {
        order,
        coefficients: coeffs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::factorial;
    use num::Signed;
    use proptest::prelude::*;

    /// Maclaurin coefficients of num/den given the coefficient lists of the
    /// two series (den[0] must be 1). Long division, exact rationals.
    fn divide_series(num: &[BigRational], den: &[BigRational], terms: usize) -> Vec<BigRational> {
        assert!(den[0].is_one());
        let mut q = Vec::with_capacity(terms);
        for i in 0..terms {
            let mut c = num.get(i).cloned().unwrap_or_else(BigRational::zero);
            for j in 0..i {
                let dj = den.get(i - j).cloned().unwrap_or_else(BigRational::zero);
                c -= &q[j] * dj;
            }
            q.push(c);
        }
        q
    }

    fn inv_factorial(n: usize) -> BigRational {
        BigRational::new(BigInt::one(), factorial(n as u64))
    }

    /// [x^i] cos x
    fn cos_series(terms: usize) -> Vec<BigRational> {
        (0..terms)
            .map(|i| {
                if i % 2 == 1 {
                    BigRational::zero()
                } else if (i / 2) % 2 == 0 {
                    inv_factorial(i)
                } else {
                    -inv_factorial(i)
                }
            })
            .collect()
    }

    /// [x^i] sin x / x
    fn sinc_series(terms: usize) -> Vec<BigRational> {
        (0..terms)
            .map(|i| {
                if i % 2 == 1 {
                    BigRational::zero()
                } else if (i / 2) % 2 == 0 {
                    inv_factorial(i + 1)
                } else {
                    -inv_factorial(i + 1)
                }
            })
            .collect()
    }

    /// Oracle: S_n = n! · [x^n] (x·cos x / sin x), by series division.
    fn cotangent_oracle(max: usize) -> Vec<BigRational> {
        let q = divide_series(&cos_series(max + 1), &sinc_series(max + 1), max + 1);
        q.into_iter()
            .enumerate()
            .map(|(n, c)| c * BigRational::from_integer(factorial(n as u64)))
            .collect()
    }

    /// Oracle: T_n = n! · [x^n] (sin x / cos x), by series division.
    fn tangent_oracle(max: usize) -> Vec<BigRational> {
        let num: Vec<BigRational> = (0..=max)
            .map(|i| {
                if i % 2 == 0 {
                    BigRational::zero()
                } else if (i / 2) % 2 == 0 {
                    inv_factorial(i)
                } else {
                    -inv_factorial(i)
                }
            })
            .collect();
        let q = divide_series(&num, &cos_series(max + 1), max + 1);
        q.into_iter()
            .enumerate()
            .map(|(n, c)| c * BigRational::from_integer(factorial(n as u64)))
            .collect()
    }

    /// Oracle: Bernoulli numbers from the classical linear recurrence
    /// Σ_{j=0}^{m} C(m+1, j) B_j = 0, independent of both bridges used by
    /// the library.
    fn bernoulli_oracle(max: usize) -> Vec<BigRational> {
        let mut b = vec![rat_int(1)];
        for m in 1..=max {
            let mut sum = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                sum += BigRational::from_integer(crate::exact_kernel::binomial(
                    m as u64 + 1,
                    j as u64,
                )) * bj;
            }
            b.push(-sum / rat_int(m as i64 + 1));
        }
        b
    }

    #[test]
    fn tangent_golden_values() {
        let t = tangent_numbers(12);
        for (i, expected) in [(1usize, 1i64), (3, 2), (5, 16), (7, 272), (9, 7936), (11, 353_792)] {
            assert_eq!(t.get(i).unwrap(), &rat_int(expected), "T_{i}");
        }
        for i in (0..=12).step_by(2) {
            assert!(t.get(i).unwrap().is_zero(), "T_{i} should vanish");
        }
    }

    #[test]
    fn tangent_matches_series_oracle() {
        let t = tangent_ints(25);
        let oracle = tangent_oracle(25);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&BigRational::from_integer(t[n].clone()), expected, "T_{n}");
        }
    }

    #[test]
    fn odd_tangent_numbers_are_positive() {
        let t = tangent_ints(99);
        for n in (1..=99).step_by(2) {
            assert!(t[n].is_positive(), "T_{n}");
        }
    }

    #[test]
    fn cotangent_golden_values() {
        let s = cotangent_numbers(8);
        assert_eq!(s.get(0).unwrap(), &rat_int(1));
        assert_eq!(s.get(1).unwrap(), &rat_int(0));
        assert_eq!(s.get(2).unwrap(), &rat(-2, 3));
        assert_eq!(s.get(4).unwrap(), &rat(-8, 15));
        assert_eq!(s.get(6).unwrap(), &rat(-32, 21));
        for i in (1..=7).step_by(2) {
            assert!(s.get(i).unwrap().is_zero(), "S_{i} should vanish");
        }
    }

    #[test]
    fn cotangent_matches_series_oracle() {
        let s = cotangent_numbers(24);
        let oracle = cotangent_oracle(24);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(s.get(n).unwrap(), expected, "S_{n}");
        }
    }

    #[test]
    fn even_cotangent_numbers_are_negative() {
        let s = cotangent_numbers(60);
        for n in (2..=60).step_by(2) {
            assert!(s.get(n).unwrap().is_negative(), "S_{n}");
        }
    }

    #[test]
    fn tangent_recovered_from_cotangent() {
        let s = cotangent_numbers(50);
        let t = tangent_ints(49);
        for k in 1..=25 {
            let recovered = tangent_from_cotangent(k, &s).unwrap();
            assert!(recovered.is_integer(), "T_{} should be integral", 2 * k - 1);
            assert_eq!(recovered, BigRational::from_integer(t[2 * k - 1].clone()));
        }
    }

    #[test]
    fn tangent_from_cotangent_rejects_bad_input() {
        let s = cotangent_numbers(6);
        assert!(matches!(
            tangent_from_cotangent(0, &s),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            tangent_from_cotangent(5, &s),
            Err(Error::MissingIndex { index: 10, .. })
        ));
        let t = tangent_numbers(6);
        assert!(matches!(
            tangent_from_cotangent(1, &t),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn bernoulli_golden_values() {
        let t = tangent_numbers(12);
        let cases = [
            (2usize, rat(1, 6)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
            (12, rat(-691, 2730)),
        ];
        for (n, expected) in cases {
            assert_eq!(bernoulli_from_tangent(n, &t).unwrap(), expected, "B_{n}");
        }
        assert!(bernoulli_from_tangent(7, &t).unwrap().is_zero());
        assert!(matches!(
            bernoulli_from_tangent(1, &t),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn bernoulli_routes_agree_with_classical_oracle() {
        let oracle = bernoulli_oracle(80);
        let from_tangent = bernoulli_from_tangent_table(40);
        let recurrence = bernoulli_recurrence(40, &rat(1, 6));
        for m in 1..=40 {
            assert_eq!(from_tangent.get(2 * m).unwrap(), &oracle[2 * m], "B_{}", 2 * m);
            assert_eq!(recurrence.get(2 * m).unwrap(), &oracle[2 * m], "B_{}", 2 * m);
        }
    }

    #[test]
    fn bernoulli_signs_alternate() {
        let b = bernoulli_recurrence(50, &rat(1, 6));
        for m in 1..=50 {
            let v = b.get(2 * m).unwrap();
            assert_eq!(v.is_positive(), m % 2 == 1, "B_{}", 2 * m);
        }
    }

    #[test]
    fn cot_poly_golden_values() {
        let p0 = cot_derivative_poly(0);
        assert_eq!(p0.coefficients(), &[BigInt::zero(), BigInt::one()]);
        let p1 = cot_derivative_poly(1);
        assert_eq!(
            p1.coefficients(),
            &[BigInt::from(-1), BigInt::zero(), BigInt::from(-1)]
        );
        let p3 = cot_derivative_poly(3);
        assert_eq!(
            p3.coefficients(),
            &[
                BigInt::from(-2),
                BigInt::zero(),
                BigInt::from(-8),
                BigInt::zero(),
                BigInt::from(-6)
            ]
        );
    }

    #[test]
    fn cot_poly_constant_term_is_minus_tangent() {
        let t = tangent_ints(30);
        for n in 0..=30 {
            let p = cot_derivative_poly(n);
            assert_eq!(p.constant_term(), &(-&t[n]), "order {n}");
            assert_eq!(p.degree(), n + 1, "degree at order {n}");
            // parity: only powers of the same parity as n+1 appear
            for (j, c) in p.coefficients().iter().enumerate() {
                if j % 2 != (n + 1) % 2 {
                    assert!(c.is_zero(), "order {n}, coefficient {j}");
                }
            }
        }
    }

    #[test]
    fn cot_poly_eval_matches_known_derivative() {
        // d/dx cot(πx) = −π (1 + cot²(πx)); at x = 1/4 that is −2π
        let p1 = cot_derivative_poly(1);
        assert!((p1.derivative_at(0.25) + 2.0 * std::f64::consts::PI).abs() < 1e-12);
        // at x = 1/2 every derivative is −πⁿ·T_n
        let p3 = cot_derivative_poly(3);
        let expected = -std::f64::consts::PI.powi(3) * 2.0;
        assert!((p3.derivative_at(0.5) - expected).abs() < 1e-9);
    }

    #[test]
    fn table_json_shape() {
        let t = tangent_numbers(3);
        let json = t.to_json();
        assert_eq!(
            json,
            serde_json::json!({
                "kind": "tangent",
                "route": "recurrence",
                "values": {"0": "0", "1": "1", "2": "0", "3": "2"}
            })
        );
        let b = bernoulli_from_tangent_table(2);
        assert_eq!(b.to_json()["route"], "from-tangent");
        assert_eq!(b.to_json()["values"]["4"], "-1/30");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn tangent_tables_are_prefix_consistent(a in 0usize..40, b in 0usize..40) {
            let (lo, hi) = (a.min(b), a.max(b));
            let small = tangent_numbers(lo);
            let large = tangent_numbers(hi);
            for (i, v) in small.values() {
                prop_assert_eq!(large.get(*i).unwrap(), v);
            }
        }

        #[test]
        fn cotangent_tables_are_prefix_consistent(a in 0usize..40, b in 0usize..40) {
            let (lo, hi) = (a.min(b), a.max(b));
            let small = cotangent_numbers(lo);
            let large = cotangent_numbers(hi);
            for (i, v) in small.values() {
                prop_assert_eq!(large.get(*i).unwrap(), v);
            }
        }
    }
}
