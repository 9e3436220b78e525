//! Exact even zeta values ζ(2k) = q_k · π^{2k} by four independent routes,
//! cross-validated.
//!
//! * tangent:    q_k = T_{2k-1} / (2 (2^{2k} − 1) (2k−1)!)
//! * cotangent:  q_k = −S_{2k} / (2 (2k)!)
//! * recurrence: (k + 1/2) q_k = Σ_{m=1}^{k-1} q_m q_{k-m}, seeded from the
//!   tangent route at k = 1
//! * bernoulli:  q_k = (−1)^{k+1} 2^{2k} B_{2k} / (2 (2k)!)
//!
//! All four produce identical rationals; [`zeta_validated`] checks that and
//! tags the value accordingly. The same tangent numbers give the odd
//! polygamma values at 1/2 exactly: ψ_{2k-1}(1/2) = (π^{2k}/2) · T_{2k-1}.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_kernel::{
    factorial, format_rational, parse_rational, pow2, to_f64, BigRational,
};
use crate::sequences::{
    bernoulli_recurrence, cotangent_numbers, tangent_ints, SequenceTable,
};

/// Which derivation produced a zeta value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaRoute {
    Tangent,
    Cotangent,
    SelfRecurrence,
    Bernoulli,
    /// All four routes computed and found identical.
    Validated,
}

impl fmt::Display for ZetaRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZetaRoute::Tangent => "tangent",
            ZetaRoute::Cotangent => "cotangent",
            ZetaRoute::SelfRecurrence => "recurrence",
            ZetaRoute::Bernoulli => "bernoulli",
            ZetaRoute::Validated => "validated",
        })
    }
}

/// Exact ζ(2k) = coeff · π^{2k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaValue {
    pub k: usize,
    pub coeff: BigRational,
    pub route: ZetaRoute,
}

impl ZetaValue {
    pub fn pi_power(&self) -> usize {
        2 * self.k
    }

    pub fn routes_agreed(&self) -> bool {
        matches!(self.route, ZetaRoute::Validated)
    }

    /// Canonical text form, e.g. `691/638512875 * pi^12`.
    pub fn exact_string(&self) -> String {
        format!("{} * pi^{}", format_rational(&self.coeff), self.pi_power())
    }

    /// Nearest-double numeric value (useful up to k of a few hundred, after
    /// which π^{2k} leaves the double range).
    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coeff) * std::f64::consts::PI.powi(self.pi_power() as i32)
    }

    /// `{"k": 6, "coeff": "691/638512875", "pi_power": 12, "routes_agreed": true}`
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "coeff": format_rational(&self.coeff),
            "pi_power": self.pi_power(),
            "routes_agreed": self.routes_agreed(),
        })
    }
}

/// An exact multiple of a power of π: coeff · π^pi_power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMonomial {
    pub coeff: BigRational,
    pub pi_power: usize,
}

impl PiMonomial {
    pub fn exact_string(&self) -> String {
        format!("{} * pi^{}", format_rational(&self.coeff), self.pi_power)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.coeff) * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

/// Parse the `p/q * pi^n` form back into a monomial; a bare rational means
/// pi_power 0. Inverse of the `exact_string` renderings.
pub fn parse_pi_monomial(s: &str) -> Result<PiMonomial> {
    let trimmed = s.trim();
    match trimmed.split_once(" * pi^") {
        None => Ok(PiMonomial {
            coeff: parse_rational(trimmed)?,
            pi_power: 0,
        }),
        Some((coeff, power)) => Ok(PiMonomial {
            coeff: parse_rational(coeff)?,
            pi_power: power.parse().map_err(|_| Error::Parse {
                what: "pi power",
                input: s.to_string(),
            })?,
        }),
    }
}

/// Shared state for computing many zeta values: one tangent table, one
/// cotangent table, one Bernoulli table, one recurrence vector, all built to
/// depth `max_k` up front.
pub struct ZetaEngine {
    max_k: usize,
    tangent: Vec<BigInt>,
    cotangent: SequenceTable,
    bernoulli: SequenceTable,
    q_recurrence: Vec<BigRational>,
}

impl ZetaEngine {
    /// Tables deep enough for every k ≤ max_k.
    pub fn new(max_k: usize) -> ZetaEngine {
        let max_k = max_k.max(1);
        let tangent = tangent_ints(2 * max_k - 1);
        let cotangent = cotangent_numbers(2 * max_k);
        let seed_b2 = BigRational::new(BigInt::one(), BigInt::from(6));
        let bernoulli = bernoulli_recurrence(max_k, &seed_b2);

        // self-recurrence: (k + 1/2) q_k = Σ q_m q_{k-m}, seeded by the
        // tangent route's q_1 = 1/6
        let q1 = tangent_coeff(&tangent, 1);
        let mut q = vec![BigRational::zero(), q1];
        for k in 2..=max_k {
            let mut sum = BigRational::zero();
            for m in 1..k {
                sum += &q[m] * &q[k - m];
            }
            q.push(sum * BigRational::new(BigInt::from(2), BigInt::from(2 * k as i64 + 1)));
        }

        ZetaEngine {
            max_k,
            tangent,
            cotangent,
            bernoulli,
            q_recurrence: q,
        }
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    fn check_k(&self, op: &'static str, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::domain(op, "k must be ≥ 1"));
        }
        if k > self.max_k {
            return Err(Error::domain(
                op,
                format!("k = {k} exceeds engine depth {}", self.max_k),
            ));
        }
        Ok(())
    }

    /// ζ(2k) coefficient by one route.
    pub fn via(&self, route: ZetaRoute, k: usize) -> Result<ZetaValue> {
        self.check_k("zeta", k)?;
        let coeff = match route {
            ZetaRoute::Tangent => tangent_coeff(&self.tangent, k),
            ZetaRoute::Cotangent => {
                let s = self.cotangent.get(2 * k)?;
                -s / BigRational::from_integer(double_even_factorial(k))
            }
            ZetaRoute::SelfRecurrence => self.q_recurrence[k].clone(),
            ZetaRoute::Bernoulli => {
                let b = self.bernoulli.get(2 * k)?;
                let mut numer = pow2(2 * k as u64);
                if k % 2 == 0 {
                    numer = -numer;
                }
                b * BigRational::new(numer, double_even_factorial(k))
            }
            ZetaRoute::Validated => return self.validated(k),
        };
        Ok(ZetaValue { k, coeff, route })
    }

    /// All four routes, checked for exact equality.
    pub fn validated(&self, k: usize) -> Result<ZetaValue> {
        self.check_k("zeta", k)?;
        let reference = self.via(ZetaRoute::Tangent, k)?;
        for route in [ZetaRoute::Cotangent, ZetaRoute::SelfRecurrence, ZetaRoute::Bernoulli] {
            let other = self.via(route, k)?;
            if other.coeff != reference.coeff {
                return Err(Error::RouteDisagreement {
                    k,
                    left_route: ZetaRoute::Tangent,
                    left: format_rational(&reference.coeff),
                    right_route: route,
                    right: format_rational(&other.coeff),
                });
            }
        }
        Ok(ZetaValue {
            k,
            coeff: reference.coeff,
            route: ZetaRoute::Validated,
        })
    }

    /// Exact ψ_{2k-1}(1/2) = (T_{2k-1}/2) · π^{2k}.
    pub fn polygamma_half(&self, k: usize) -> Result<PiMonomial> {
        self.check_k("polygamma_half_exact", k)?;
        Ok(PiMonomial {
            coeff: BigRational::new(self.tangent[2 * k - 1].clone(), BigInt::from(2)),
            pi_power: 2 * k,
        })
    }
}

/// q_k from a tangent-number table.
fn tangent_coeff(tangent: &[BigInt], k: usize) -> BigRational {
    let denom = BigInt::from(2) * (pow2(2 * k as u64) - BigInt::one()) * factorial(2 * k as u64 - 1);
    BigRational::new(tangent[2 * k - 1].clone(), denom)
}

/// 2 · (2k)!
fn double_even_factorial(k: usize) -> BigInt {
    BigInt::from(2) * factorial(2 * k as u64)
}

fn one_shot(route: ZetaRoute, k: usize) -> Result<ZetaValue> {
    if k == 0 {
        return Err(Error::domain("zeta", "k must be ≥ 1"));
    }
    ZetaEngine::new(k).via(route, k)
}

/// ζ(2k) from tangent numbers.
pub fn zeta_via_tangent(k: usize) -> Result<ZetaValue> {
    one_shot(ZetaRoute::Tangent, k)
}

/// ζ(2k) from cotangent numbers.
pub fn zeta_via_cotangent(k: usize) -> Result<ZetaValue> {
    one_shot(ZetaRoute::Cotangent, k)
}

/// ζ(2k) from the quadratic self-recurrence of the q_k themselves.
pub fn zeta_via_self_recurrence(k: usize) -> Result<ZetaValue> {
    one_shot(ZetaRoute::SelfRecurrence, k)
}

/// ζ(2k) from Bernoulli numbers.
pub fn zeta_via_bernoulli(k: usize) -> Result<ZetaValue> {
    one_shot(ZetaRoute::Bernoulli, k)
}

/// ζ(2k) with all four routes cross-checked.
pub fn zeta_validated(k: usize) -> Result<ZetaValue> {
    if k == 0 {
        return Err(Error::domain("zeta", "k must be ≥ 1"));
    }
    ZetaEngine::new(k).validated(k)
}

/// Exact odd polygamma value at 1/2.
pub fn polygamma_half_exact(k: usize) -> Result<PiMonomial> {
    if k == 0 {
        return Err(Error::domain("polygamma_half_exact", "k must be ≥ 1"));
    }
    ZetaEngine::new(k).polygamma_half(k)
}
