//! Seeded random generators for charts, polynomials and vector fields.
//! Used by property tests, the acceptance suite and the benchmarks.

use std::sync::Arc;

use rand::Rng;

use crate::superpoly::{int, Chart, Monomial, Parity, SuperPoly};

/// A base chart with `even` even and `odd` odd variables and weights drawn
/// from `-2..=2`.
pub fn chart<R: Rng>(rng: &mut R, name: &str, even: usize, odd: usize) -> Arc<Chart> {
    let mut vars = Vec::with_capacity(even + odd);
    for i in 0..even {
        vars.push((format!("x{}", i + 1), Parity::Even, rng.gen_range(-2..=2)));
    }
    for i in 0..odd {
        vars.push((format!("xi{}", i + 1), Parity::Odd, rng.gen_range(-2..=2)));
    }
    // interleave so that signs are exercised across declaration order
    for i in (1..vars.len()).rev() {
        let j = rng.gen_range(0..=i);
        vars.swap(i, j);
    }
    Chart::base(name, vars).expect("generated names are distinct")
}

/// A random monomial of total degree at most `max_degree`.
pub fn monomial<R: Rng>(rng: &mut R, chart: &Chart, max_degree: u32) -> Monomial {
    if chart.is_empty() {
        return Monomial::one();
    }
    let deg = rng.gen_range(0..=max_degree);
    let pairs: Vec<(usize, u32)> = (0..deg)
        .map(|_| (rng.gen_range(0..chart.len()), 1))
        .collect();
    // drop repeated odd factors rather than annihilating the whole monomial
    let mut seen_odd = Vec::new();
    let pairs: Vec<(usize, u32)> = pairs
        .into_iter()
        .filter(|&(i, _)| {
            if chart.parity(i).is_odd() {
                if seen_odd.contains(&i) {
                    return false;
                }
                seen_odd.push(i);
            }
            true
        })
        .collect();
    Monomial::from_pairs(chart, pairs).expect("odd factors deduplicated")
}

/// A random polynomial with at most `max_terms` terms and small integer
/// coefficients. When `parity` is given every term has that parity.
pub fn poly<R: Rng>(
    rng: &mut R,
    chart: &Arc<Chart>,
    max_degree: u32,
    max_terms: usize,
    parity: Option<Parity>,
) -> SuperPoly {
    let n = rng.gen_range(0..=max_terms);
    let mut terms = Vec::with_capacity(n);
    let mut attempts = 0;
    while terms.len() < n && attempts < 50 * (n + 1) {
        attempts += 1;
        let m = monomial(rng, chart, max_degree);
        if let Some(p) = parity {
            if m.parity(chart) != p {
                continue;
            }
        }
        let c = rng.gen_range(-3i64..=3);
        if c != 0 {
            terms.push((m, int(c)));
        }
    }
    SuperPoly::from_terms(chart, terms)
}

/// A uniformly random parity.
pub fn parity<R: Rng>(rng: &mut R) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// A random homogeneous vector field of the given parity.
pub fn field<R: Rng>(
    rng: &mut R,
    chart: &Arc<Chart>,
    max_degree: u32,
    max_terms: usize,
    parity: Parity,
) -> crate::geometry::VectorField {
    let coeffs = (0..chart.len())
        .map(|a| {
            poly(
                rng,
                chart,
                max_degree,
                max_terms,
                Some(parity + chart.parity(a)),
            )
        })
        .collect();
    crate::geometry::VectorField::new(chart, coeffs).expect("coefficients live on the chart")
}

/// A random base chart of the given size, lifted with a random shift.
pub fn lifted_chart<R: Rng>(
    rng: &mut R,
    kind: crate::geometry::LiftKind,
    even: usize,
    odd: usize,
) -> Arc<Chart> {
    let base = chart(rng, "M", even, odd);
    let shift = rng.gen_range(-2..=2);
    crate::geometry::lift(&base, kind, shift, None).expect("default momentum names are distinct")
}
