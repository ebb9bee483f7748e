//! Canonical brackets on lifted charts, derived brackets and Lie
//! derivatives.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{lift_kind_of, LiftKind, VectorField};
use crate::superpoly::{sign, Chart, Parity, SuperPoly};

fn expect_kind(chart: &Arc<Chart>, kind: LiftKind) -> Result<()> {
    if lift_kind_of(chart) == Some(kind) {
        Ok(())
    } else {
        Err(Error::NotALift {
            chart: chart.name().to_string(),
            expected: match kind {
                LiftKind::Cotangent => "a cotangent lift",
                LiftKind::AntiCotangent => "an anticotangent lift",
            },
        })
    }
}

fn same(f: &SuperPoly, g: &SuperPoly) -> Result<()> {
    if crate::superpoly::same_chart(f.chart(), g.chart()) {
        Ok(())
    } else {
        Err(Error::ChartMismatch {
            left: f.chart().name().to_string(),
            right: g.chart().name().to_string(),
        })
    }
}

/// Even canonical bracket on a cotangent lift.
pub fn canonical_poisson(f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    same(f, g)?;
    let chart = f.chart();
    expect_kind(chart, LiftKind::Cotangent)?;
    let n = chart.base_len();
    let mut out = SuperPoly::zero(chart);
    for (fp, part) in f.parity_parts() {
        for a in 0..n {
            let pa = chart.momentum_of(a);
            let ta = chart.parity(a);
            let dfp = part.left_partial(pa);
            if !dfp.is_zero() {
                let dgx = g.left_partial(a);
                if !dgx.is_zero() {
                    let s = sign(ta.times(fp.flip()));
                    out = &out + &(&dfp * &dgx).scale_int(s);
                }
            }
            let dfx = part.left_partial(a);
            if !dfx.is_zero() {
                let dgp = g.left_partial(pa);
                if !dgp.is_zero() {
                    let s = -sign(ta.times(fp));
                    out = &out + &(&dfx * &dgp).scale_int(s);
                }
            }
        }
    }
    Ok(out)
}

/// Odd canonical bracket on an anticotangent lift.
pub fn canonical_schouten(f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    same(f, g)?;
    let chart = f.chart();
    expect_kind(chart, LiftKind::AntiCotangent)?;
    let n = chart.base_len();
    let mut out = SuperPoly::zero(chart);
    for (fp, part) in f.parity_parts() {
        for a in 0..n {
            let pa = chart.momentum_of(a);
            let ta = chart.parity(a);
            let dfp = part.left_partial(pa);
            if !dfp.is_zero() {
                let dgx = g.left_partial(a);
                if !dgx.is_zero() {
                    let s = sign(ta.flip().times(fp.flip()));
                    out = &out + &(&dfp * &dgx).scale_int(s);
                }
            }
            let dfx = part.left_partial(a);
            if !dfx.is_zero() {
                let dgp = g.left_partial(pa);
                if !dgp.is_zero() {
                    let s = -sign(ta.times(fp.flip()));
                    out = &out + &(&dfx * &dgp).scale_int(s);
                }
            }
        }
    }
    Ok(out)
}

/// The canonical bracket of whichever lift `f` lives on.
pub fn canonical(f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    match lift_kind_of(f.chart()) {
        Some(LiftKind::Cotangent) => canonical_poisson(f, g),
        Some(LiftKind::AntiCotangent) => canonical_schouten(f, g),
        None => Err(Error::NotALift {
            chart: f.chart().name().to_string(),
            expected: "a lift",
        }),
    }
}

/// Parity of the canonical bracket on `chart`: even on cotangent lifts,
/// odd on anticotangent lifts.
pub fn bracket_parity(chart: &Chart) -> Result<Parity> {
    match lift_kind_of(chart) {
        Some(LiftKind::Cotangent) => Ok(Parity::Even),
        Some(LiftKind::AntiCotangent) => Ok(Parity::Odd),
        None => Err(Error::NotALift {
            chart: chart.name().to_string(),
            expected: "a lift",
        }),
    }
}

/// Parity a bracket tensor must have so that `{T, ·}` is odd.
pub fn tensor_parity(chart: &Chart) -> Result<Parity> {
    Ok(bracket_parity(chart)?.flip())
}

/// `{f, {T, g}}`. `T` must be odd on a cotangent lift and even on an
/// anticotangent lift.
pub fn derived_bracket(t: &SuperPoly, f: &SuperPoly, g: &SuperPoly) -> Result<SuperPoly> {
    let want = tensor_parity(t.chart())?;
    if let Some(p) = t.homogeneous_parity()? {
        if p != want {
            return Err(Error::ParityMismatch(format!(
                "bracket tensor must be {want} on `{}`, got {p}",
                t.chart().name()
            )));
        }
    }
    canonical(f, &canonical(t, g)?)
}

/// Lie derivative of a function on a lift along a field on the base:
/// `{p_X, T}` on a cotangent lift, `(-1)^X {θ_X, T}` on an anticotangent
/// lift. Both restrict to `X(f)` on base functions.
pub fn lie_derivative(x: &VectorField, t: &SuperPoly) -> Result<SuperPoly> {
    let lift = t.chart();
    match lift_kind_of(lift) {
        Some(LiftKind::Cotangent) => canonical_poisson(&x.hamiltonian_lift_p(lift)?, t),
        Some(LiftKind::AntiCotangent) => {
            let mut out = SuperPoly::zero(lift);
            for (p, part) in x.parity_parts() {
                let b = canonical_schouten(&part.multivector_lift_theta(lift)?, t)?;
                out = &out + &b.scale_int(sign(p));
            }
            Ok(out)
        }
        None => Err(Error::NotALift {
            chart: lift.name().to_string(),
            expected: "a lift",
        }),
    }
}

/// `X_H = {H, ·}` as a vector field on the lift `H` lives on.
pub fn hamiltonian_vector_field(h: &SuperPoly) -> Result<VectorField> {
    let chart = h.chart();
    let coeffs = (0..chart.len())
        .map(|v| canonical(h, &SuperPoly::var(chart, v)))
        .collect::<Result<Vec<_>>>()?;
    VectorField::new(chart, coeffs)
}
