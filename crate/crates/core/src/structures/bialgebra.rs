use std::sync::Arc;

use num_traits::Zero;

use super::{CheckReport, ResidueComponent};
use crate::brackets::canonical;
use crate::error::{Error, Result};
use crate::geometry::{lift, LiftKind, VectorField};
use crate::liealg::{
    lie_poisson_tensor, lie_schouten_tensor, pi_chart, q_from_sc, StructureConstants, LIE_SHIFT,
};
use crate::superpoly::{Chart, Rational, SuperPoly};

/// The Hamiltonians of a (odd) bialgebra on `T*Πg` (resp. `ΠT*Πg`) and the
/// three self/cross brackets.
#[derive(Clone, Debug)]
pub struct BialgebraCheck {
    pub base: Arc<Chart>,
    pub lift: Arc<Chart>,
    pub field: VectorField,
    /// `p(Q)` or `θ(Q)`.
    pub q: SuperPoly,
    /// The Lie-Schouten tensor `S` or Lie-Poisson tensor `P` of the dual.
    pub tensor: SuperPoly,
    pub report: CheckReport,
    /// Entries `((j,k,n,m), value)` of the coordinate cocycle identity, for
    /// purely even inputs.
    pub cocycle: Option<Vec<((usize, usize, usize, usize), Rational)>>,
}

fn expect_dims(c: &StructureConstants, b: &StructureConstants, flipped: bool) -> Result<()> {
    if c.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "algebra of dimension {} with dual constants of dimension {}",
            c.dim(),
            b.dim()
        )));
    }
    for i in 0..c.dim() {
        let want = if flipped {
            c.parity(i).flip()
        } else {
            c.parity(i)
        };
        if b.parity(i) != want {
            return Err(Error::ParityMismatch(format!(
                "dual basis vector {} has parity {}, expected {want}",
                i + 1,
                b.parity(i)
            )));
        }
    }
    Ok(())
}

/// `c_jk^i b_i^{nm} - c_ji^n b_k^{im} + c_ji^m b_k^{in} + c_ki^n b_j^{im} - c_ki^m b_j^{in}`
/// over all index tuples, with `b_i^{nm}` the coefficient of `e^i` in
/// `[e^n,e^m]`; nonzero entries only.
pub fn cocycle_residue(
    c: &StructureConstants,
    b: &StructureConstants,
) -> Vec<((usize, usize, usize, usize), Rational)> {
    let d = c.dim();
    let cb = |i: usize, j: usize, k: usize| c.get(i, j, k);
    let bb = |i: usize, n: usize, m: usize| b.get(n, m, i);
    let mut out = Vec::new();
    for j in 0..d {
        for k in 0..d {
            for n in 0..d {
                for m in 0..d {
                    let mut v = Rational::zero();
                    for i in 0..d {
                        v += cb(j, k, i) * bb(i, n, m);
                        v -= cb(j, i, n) * bb(k, i, m);
                        v += cb(j, i, m) * bb(k, i, n);
                        v += cb(k, i, n) * bb(j, i, m);
                        v -= cb(k, i, m) * bb(j, i, n);
                    }
                    if !v.is_zero() {
                        out.push(((j, k, n, m), v));
                    }
                }
            }
        }
    }
    out
}

/// Lie bialgebra conditions `{Q,Q} = {S,S} = {Q,S} = 0` on `T*Πg`, with the
/// dual constants `b` (`[e^i,e^j] = b^{ij}_k e^k`). For purely even input
/// the coordinate cocycle identity is evaluated too and must agree with
/// `{Q,S}`.
pub fn check_bialgebra(c: &StructureConstants, b: &StructureConstants) -> Result<BialgebraCheck> {
    expect_dims(c, b, false)?;
    let base = pi_chart(c, "Pig", None)?;
    let names = (1..=c.dim()).map(|i| format!("chi{i}")).collect();
    let lift_chart = lift(&base, LiftKind::Cotangent, LIE_SHIFT, Some(names))?;
    let field = q_from_sc(c, &base)?;
    let q = field.hamiltonian_lift_p(&lift_chart)?;
    let s = lie_schouten_tensor(b, &lift_chart)?;
    let qs = canonical(&q, &s)?;
    let mut comps = vec![
        ResidueComponent {
            label: "{Q,Q}".into(),
            poly: canonical(&q, &q)?,
        },
        ResidueComponent {
            label: "{S,S}".into(),
            poly: canonical(&s, &s)?,
        },
        ResidueComponent {
            label: "{Q,S}".into(),
            poly: qs.clone(),
        },
    ];
    let even = c.parities().iter().all(|p| !p.is_odd());
    let cocycle = if even {
        let entries = cocycle_residue(c, b);
        if entries.is_empty() != qs.is_zero() {
            return Err(Error::CheckFailed(format!(
                "coordinate cocycle identity ({} nonzero entries) disagrees with {{Q,S}} = {}",
                entries.len(),
                qs.render()
            )));
        }
        let mut poly = SuperPoly::zero(&lift_chart);
        for ((j, k, n, m), v) in &entries {
            let t = &(&(&SuperPoly::var(&lift_chart, *j) * &SuperPoly::var(&lift_chart, *k))
                * &SuperPoly::var(&lift_chart, lift_chart.momentum_of(*n)))
                * &SuperPoly::var(&lift_chart, lift_chart.momentum_of(*m));
            poly = &poly + &t.scale(v);
        }
        comps.push(ResidueComponent {
            label: "cocycle".into(),
            poly,
        });
        Some(entries)
    } else {
        None
    };
    Ok(BialgebraCheck {
        base,
        lift: lift_chart,
        field,
        q,
        tensor: s,
        report: CheckReport::new("bialgebra", "T*(Pig)", comps),
        cocycle,
    })
}

/// Odd bialgebra conditions `{Q,Q} = {P,P} = {Q,P} = 0` on `ΠT*Πg`, where
/// `p` are the constants of the bracket on `Πg*` (parities reversed).
pub fn check_odd_bialgebra(
    c: &StructureConstants,
    p: &StructureConstants,
) -> Result<BialgebraCheck> {
    expect_dims(c, p, true)?;
    let base = pi_chart(c, "Pig", None)?;
    let names = (1..=c.dim()).map(|i| format!("x{i}")).collect();
    let lift_chart = lift(&base, LiftKind::AntiCotangent, LIE_SHIFT, Some(names))?;
    let field = q_from_sc(c, &base)?;
    let q = field.multivector_lift_theta(&lift_chart)?;
    let t = lie_poisson_tensor(p, &lift_chart)?;
    let comps = vec![
        ResidueComponent {
            label: "{Q,Q}".into(),
            poly: canonical(&q, &q)?,
        },
        ResidueComponent {
            label: "{P,P}".into(),
            poly: canonical(&t, &t)?,
        },
        ResidueComponent {
            label: "{Q,P}".into(),
            poly: canonical(&q, &t)?,
        },
    ];
    Ok(BialgebraCheck {
        base,
        lift: lift_chart,
        field,
        q,
        tensor: t,
        report: CheckReport::new("odd-bialgebra", "PiT*(Pig)", comps),
        cocycle: None,
    })
}
