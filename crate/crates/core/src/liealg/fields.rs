use std::sync::Arc;

use num_traits::Zero;

use super::constants::StructureConstants;
use crate::brackets::{derived_bracket, tensor_parity};
use crate::error::{Error, Result};
use crate::geometry::{lift, lift_kind_of, LiftKind, VectorField};
use crate::superpoly::{int, rat, sign, Chart, Monomial, Parity, Rational, SuperPoly};

/// Shift used for lifts in the Lie layer: weight-one linear coordinates
/// with `q = 1` and tensor weight `-1`.
pub const LIE_SHIFT: i64 = 2;

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn linear_chart(
    name: &str,
    parities: impl Iterator<Item = Parity>,
    names: Vec<String>,
) -> Result<Arc<Chart>> {
    let vars = names
        .into_iter()
        .zip(parities)
        .map(|(n, p)| (n, p, 1))
        .collect();
    Chart::base(name, vars)
}

/// Linear coordinates on `Πg`: one per basis vector, of reversed parity and
/// weight one.
pub fn pi_chart(
    c: &StructureConstants,
    name: &str,
    names: Option<Vec<String>>,
) -> Result<Arc<Chart>> {
    let names = names.unwrap_or_else(|| default_names("xi", c.dim()));
    check_count(&names, c.dim())?;
    linear_chart(name, c.parities().iter().map(|p| p.flip()), names)
}

/// Linear coordinates of the basis parities and weight one.
pub fn plain_chart(
    c: &StructureConstants,
    name: &str,
    names: Option<Vec<String>>,
) -> Result<Arc<Chart>> {
    let names = names.unwrap_or_else(|| default_names("x", c.dim()));
    check_count(&names, c.dim())?;
    linear_chart(name, c.parities().iter().copied(), names)
}

fn check_count(names: &[String], n: usize) -> Result<()> {
    if names.len() == n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{} coordinate names for dimension {n}",
            names.len()
        )))
    }
}

fn expect_coordinates(chart: &Chart, parities: &[Parity], flip: bool) -> Result<()> {
    if chart.len() != parities.len() {
        return Err(Error::DimensionMismatch(format!(
            "chart `{}` has {} coordinates for dimension {}",
            chart.name(),
            chart.len(),
            parities.len()
        )));
    }
    for (i, &p) in parities.iter().enumerate() {
        let want = if flip { p.flip() } else { p };
        if chart.parity(i) != want {
            return Err(Error::ParityMismatch(format!(
                "coordinate `{}` should be {want}",
                chart.var(i).name
            )));
        }
    }
    Ok(())
}

/// `Q = ½ Σ (-1)^j ξ^j ξ^i c_ij^k ∂_k` on `Πg`.
pub fn q_from_sc(c: &StructureConstants, chart: &Arc<Chart>) -> Result<VectorField> {
    expect_coordinates(chart, c.parities(), true)?;
    let mut coeffs = vec![SuperPoly::zero(chart); c.dim()];
    for (&(i, j, k), v) in c.entries() {
        let s = rat(sign(c.parity(j)), 2) * v;
        let term = &SuperPoly::var(chart, j) * &SuperPoly::var(chart, i);
        coeffs[k] = &coeffs[k] + &term.scale(&s);
    }
    VectorField::new(chart, coeffs)
}

/// Constants of the bracket encoded by a quadratic field on `Πg`, read off
/// `i_[a,b] = [i_a,[Q,i_b]]` with `i_{e_i} = (-1)^i ∂_i`.
pub fn sc_from_q(q: &VectorField) -> Result<StructureConstants> {
    let chart = q.chart();
    for c in q.coeffs() {
        if c.terms().any(|(m, _)| m.degree() != 2) {
            return Err(Error::NotQuadratic(format!(
                "field is not purely quadratic: {}",
                q.render()
            )));
        }
    }
    let parities: Vec<Parity> = (0..chart.len()).map(|i| chart.parity(i).flip()).collect();
    let contraction = |i: usize| VectorField::partial(chart, i).scale(&int(sign(parities[i])));
    let mut entries = Vec::new();
    for j in 0..chart.len() {
        let inner = q.commutator(&contraction(j))?;
        if inner.is_zero() {
            continue;
        }
        for i in 0..chart.len() {
            let outer = contraction(i).commutator(&inner)?;
            for k in 0..chart.len() {
                let v = outer.coeff(k).constant_term();
                if !v.is_zero() {
                    entries.push(((i, j, k), v * int(sign(parities[k]))));
                }
            }
        }
    }
    let names = chart.names();
    StructureConstants::new(parities, entries)?.with_names(names)
}

/// Builds `T = ½ Σ T^{ab} π_b π_a` from the coordinate brackets
/// `{x^a,x^b}_T = table(a,b)`, with `T^{ab} = (-1)^a {x^a,x^b}` on an
/// anticotangent lift and `T^{ab} = -(-1)^a {x^a,x^b}` on a cotangent lift.
/// The table must be super-antisymmetric for the derived bracket; this is
/// verified on the result.
pub fn tensor_from_brackets(
    lift_chart: &Arc<Chart>,
    table: impl Fn(usize, usize) -> SuperPoly,
) -> Result<SuperPoly> {
    let kind = lift_kind_of(lift_chart).ok_or_else(|| Error::NotALift {
        chart: lift_chart.name().to_string(),
        expected: "a lift",
    })?;
    let n = lift_chart.base_len();
    let base_sign = match kind {
        LiftKind::AntiCotangent => 1,
        LiftKind::Cotangent => -1,
    };
    let mut entries = vec![vec![SuperPoly::zero(lift_chart); n]; n];
    let mut t = SuperPoly::zero(lift_chart);
    for a in 0..n {
        for b in 0..n {
            let v = table(a, b).embed(lift_chart)?;
            if v.is_zero() {
                continue;
            }
            let s = base_sign * sign(lift_chart.parity(a));
            let pb = SuperPoly::var(lift_chart, lift_chart.momentum_of(b));
            let pa = SuperPoly::var(lift_chart, lift_chart.momentum_of(a));
            let term = &(&v * &pb) * &pa;
            t = &t + &term.scale(&(rat(1, 2) * int(s)));
            entries[a][b] = v;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let got = derived_bracket(
                &t,
                &SuperPoly::var(lift_chart, a),
                &SuperPoly::var(lift_chart, b),
            )?;
            if got != entries[a][b] {
                return Err(Error::Invalid(format!(
                    "bracket table is not super-antisymmetric at ({}, {})",
                    lift_chart.var(a).name,
                    lift_chart.var(b).name
                )));
            }
        }
    }
    Ok(t)
}

/// Derived brackets `{z^a,z^b}_T` of base coordinates, which must be linear;
/// read as Lie constants on a basis of parity `coordinate + T`.
pub fn coordinate_bracket_constants(t: &SuperPoly) -> Result<StructureConstants> {
    let chart = t.chart();
    let n = chart.base_len();
    let tp = tensor_parity(chart)?;
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let v = derived_bracket(t, &SuperPoly::var(chart, a), &SuperPoly::var(chart, b))?;
            for (m, c) in v.terms() {
                let f = m.factors();
                if f.len() != 1 || f[0].1 != 1 || f[0].0 >= n {
                    return Err(Error::NotQuadratic(format!(
                        "coordinate bracket {{{},{}}} is not linear in base coordinates: {}",
                        chart.var(a).name,
                        chart.var(b).name,
                        v.render()
                    )));
                }
                entries.push(((a, b, f[0].0), c.clone()));
            }
        }
    }
    let parities = (0..n).map(|i| chart.parity(i) + tp).collect();
    let names = (0..n).map(|i| chart.var(i).name.clone()).collect();
    StructureConstants::new(parities, entries)?.with_names(names)
}

fn linear_table(c: &StructureConstants, chart: &Arc<Chart>) -> impl Fn(usize, usize) -> SuperPoly {
    let c = c.clone();
    let chart = chart.clone();
    move |a, b| {
        let v = c.bracket_basis(a, b);
        SuperPoly::from_terms(
            &chart,
            v.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (Monomial::var(k), x)),
        )
    }
}

/// Lie-Poisson tensor `{x_i,x_j} = c_ij^k x_k` on the anticotangent lift of
/// `g*` (coordinates of the basis parities).
pub fn lie_poisson_tensor(c: &StructureConstants, lift_chart: &Arc<Chart>) -> Result<SuperPoly> {
    let base = lift_chart
        .lift_base()
        .cloned()
        .ok_or_else(|| Error::NotALift {
            chart: lift_chart.name().to_string(),
            expected: "an anticotangent lift",
        })?;
    if lift_kind_of(lift_chart) != Some(LiftKind::AntiCotangent) {
        return Err(Error::NotALift {
            chart: lift_chart.name().to_string(),
            expected: "an anticotangent lift",
        });
    }
    expect_coordinates(&base, c.parities(), false)?;
    tensor_from_brackets(lift_chart, linear_table(c, &base))
}

/// Lie-Schouten tensor `{ξ_i,ξ_j} = c_ij^k ξ_k` on the cotangent lift of
/// `Πg*` (coordinates of reversed parity).
pub fn lie_schouten_tensor(c: &StructureConstants, lift_chart: &Arc<Chart>) -> Result<SuperPoly> {
    let base = lift_chart
        .lift_base()
        .cloned()
        .ok_or_else(|| Error::NotALift {
            chart: lift_chart.name().to_string(),
            expected: "a cotangent lift",
        })?;
    if lift_kind_of(lift_chart) != Some(LiftKind::Cotangent) {
        return Err(Error::NotALift {
            chart: lift_chart.name().to_string(),
            expected: "a cotangent lift",
        });
    }
    expect_coordinates(&base, c.parities(), true)?;
    tensor_from_brackets(lift_chart, linear_table(c, &base))
}

/// Both linear tensors of `c` on default charts: the Lie-Poisson tensor on
/// `ΠT*(g*)` and the Lie-Schouten tensor on `T*(Πg*)`.
pub fn lie_tensors(c: &StructureConstants) -> Result<(SuperPoly, SuperPoly)> {
    let even = plain_chart(c, "g*", None)?;
    let odd = pi_chart(c, "Pig*", None)?;
    let p = lie_poisson_tensor(c, &lift(&even, LiftKind::AntiCotangent, LIE_SHIFT, None)?)?;
    let s = lie_schouten_tensor(c, &lift(&odd, LiftKind::Cotangent, LIE_SHIFT, None)?)?;
    Ok((p, s))
}

/// Second-order coefficients `Q_ij^k = (-1)^{p_i p_j} ∂_j ∂_i Q^k` of a
/// field, with `p` the coordinate parities.
pub fn quadratic_coefficients(q: &VectorField) -> Vec<((usize, usize, usize), Rational)> {
    let chart = q.chart();
    let n = chart.len();
    let mut out = Vec::new();
    for k in 0..n {
        for i in 0..n {
            let di = q.coeff(k).left_partial(i);
            for j in 0..n {
                let v = di.left_partial(j).constant_term();
                if !v.is_zero() {
                    let s = sign(chart.parity(i).times(chart.parity(j)));
                    out.push(((i, j, k), v * int(s)));
                }
            }
        }
    }
    out
}
