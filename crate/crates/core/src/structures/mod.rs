//! Structure checks with exact residues.

mod bialgebra;
mod report;

use std::collections::BTreeMap;

pub use bialgebra::{check_bialgebra, check_odd_bialgebra, cocycle_residue, BialgebraCheck};
pub use report::{CheckReport, ResidueComponent, Status};

use crate::brackets::{canonical, tensor_parity};
use crate::error::{Error, Result};
use crate::geometry::{cotangent_lift, expect_lift_of, GradingKind, VectorField};
use crate::superpoly::{rat, Parity, SuperPoly};

fn half() -> crate::superpoly::Rational {
    rat(1, 2)
}

fn require_odd(q: &VectorField) -> Result<()> {
    match q.homogeneous_parity()? {
        Some(Parity::Even) => Err(Error::ParityMismatch(format!(
            "homological field must be odd: {}",
            q.render()
        ))),
        _ => Ok(()),
    }
}

fn field_components(f: &VectorField, prefix: &str) -> Vec<ResidueComponent> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(a, c)| ResidueComponent {
            label: format!("{prefix}d/d{}", f.chart().var(a).name),
            poly: c.clone(),
        })
        .collect()
}

/// `½[Q,Q]`, reported coefficient by coefficient.
pub fn check_homological(q: &VectorField) -> Result<CheckReport> {
    require_odd(q)?;
    let sq = q.commutator(q)?.scale(&half());
    Ok(CheckReport::new(
        "homological",
        q.chart().name(),
        field_components(&sq, ""),
    ))
}

/// The same check through the Hamiltonian `p(Q)` on `T*M`: `{p(Q),p(Q)}`.
pub fn check_homological_hamiltonian(q: &VectorField) -> Result<CheckReport> {
    require_odd(q)?;
    let lift = cotangent_lift(q.chart(), 0, None)?;
    let h = q.hamiltonian_lift_p(&lift)?;
    Ok(CheckReport::single(
        "homological-hamiltonian",
        lift.name(),
        "{p(Q),p(Q)}",
        canonical(&h, &h)?,
    ))
}

/// `½[Q,Q]` split by the polynomial degree of its coefficients.
pub fn homological_by_degree(q: &VectorField) -> Result<BTreeMap<u32, VectorField>> {
    require_odd(q)?;
    Ok(q.commutator(q)?.scale(&half()).degree_parts())
}

/// Degree-`d` part of `½[Q,Q]` assembled from the homogeneous pieces of `Q`:
/// `½ Σ_{a+b=d+1} [Q_a, Q_b]`.
pub fn linked_component(pieces: &BTreeMap<u32, VectorField>, d: u32) -> Result<VectorField> {
    let chart = match pieces.values().next() {
        Some(f) => f.chart().clone(),
        None => return Err(Error::Invalid("no field pieces".into())),
    };
    let mut out = VectorField::zero(&chart);
    for (&a, qa) in pieces {
        if a > d + 1 {
            continue;
        }
        if let Some(qb) = pieces.get(&(d + 1 - a)) {
            out = out.checked_add(&qa.commutator(qb)?.scale(&half()))?;
        }
    }
    Ok(out)
}

/// Homological check with every component labelled by coefficient degree.
pub fn check_homological_graded(q: &VectorField) -> Result<CheckReport> {
    let parts = homological_by_degree(q)?;
    let comps = parts
        .iter()
        .flat_map(|(d, f)| field_components(f, &format!("deg {d} ")))
        .collect();
    Ok(CheckReport::new(
        "homological-graded",
        q.chart().name(),
        comps,
    ))
}

/// `{T,T}` under the canonical bracket of the lift `T` lives on.
pub fn check_tensor(t: &SuperPoly) -> Result<CheckReport> {
    let want = tensor_parity(t.chart())?;
    if let Some(p) = t.homogeneous_parity()? {
        if p != want {
            return Err(Error::ParityMismatch(format!(
                "tensor on `{}` must be {want}, got {p}",
                t.chart().name()
            )));
        }
    }
    Ok(CheckReport::single(
        "tensor",
        t.chart().name(),
        "{T,T}",
        canonical(t, t)?,
    ))
}

/// `{p(Q),S}` on `T*M` or `{θ(Q),P}` on `ΠT*M`.
pub fn check_compatibility(
    q: &VectorField,
    t: &SuperPoly,
    kind: GradingKind,
) -> Result<CheckReport> {
    let lift = t.chart();
    expect_lift_of(lift, q.chart(), kind.lift_kind())?;
    let (label, h) = match kind {
        GradingKind::QS => ("{p(Q),S}", q.hamiltonian_lift_p(lift)?),
        GradingKind::QP => ("{theta(Q),P}", q.multivector_lift_theta(lift)?),
    };
    Ok(CheckReport::single(
        "compatibility",
        lift.name(),
        label,
        canonical(&h, t)?,
    ))
}

/// Classical and generalized Yang-Baxter residues of a constant
/// momentum-only `r` with respect to the Hamiltonian `q`:
/// `{r,{Q,r}}` and `{Q,{r,{Q,r}}}`.
pub fn yang_baxter(r: &SuperPoly, q: &SuperPoly) -> Result<(CheckReport, CheckReport)> {
    let lift = r.chart();
    let n = lift.base_len();
    if lift.lift_base().is_none() {
        return Err(Error::NotALift {
            chart: lift.name().to_string(),
            expected: "a lift",
        });
    }
    if r.mentions(|i| i < n) {
        return Err(Error::Invalid(format!(
            "r must depend on momenta only: {}",
            r.render()
        )));
    }
    if let Some(Parity::Odd) = r.homogeneous_parity()? {
        return Err(Error::ParityMismatch("r must be even".into()));
    }
    let cybe = canonical(r, &canonical(q, r)?)?;
    let gybe = canonical(q, &cybe)?;
    let c = CheckReport::single("cybe", lift.name(), "{r,r}_Q", cybe);
    let g = CheckReport::single("gybe", lift.name(), "{Q,{r,r}_Q}", gybe);
    assert!(
        !c.passed() || g.passed(),
        "CYBE holds but its bracket with Q does not vanish"
    );
    Ok((c, g))
}

/// Anchor and bracket data read off a weight-one field on a chart split
/// into weight-0 base and weight-1 fibre coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebroidData {
    pub base: Vec<usize>,
    pub fiber: Vec<usize>,
    /// `anchor[i][a]`: coefficient of `∂_a` in the image of fibre `i`.
    pub anchor: Vec<Vec<SuperPoly>>,
    /// `(i, j, k) -> Q_ij^k`, nonzero entries only.
    pub structure: BTreeMap<(usize, usize, usize), SuperPoly>,
}

impl AlgebroidData {
    /// `[e_i,e_j] = (-1)^j Q_ij^k e_k` as `(k, coefficient)` pairs, where
    /// the basis parity is the reverse of the fibre coordinate parity.
    pub fn bracket(
        &self,
        chart: &crate::superpoly::Chart,
        i: usize,
        j: usize,
    ) -> Vec<(usize, SuperPoly)> {
        let pj = chart.parity(self.fiber[j]).flip();
        self.structure
            .iter()
            .filter(|((a, b, _), _)| *a == i && *b == j)
            .map(|((_, _, k), c)| (*k, c.scale_int(crate::superpoly::sign(pj))))
            .collect()
    }
}

/// Splits `Q = ξ^i Q_i^a ∂_a + ½ ξ^j ξ^i Q_ij^k ∂_k`; any other profile is
/// rejected with the offending term.
pub fn algebroid_extract(q: &VectorField) -> Result<AlgebroidData> {
    let chart = q.chart();
    let mut base = Vec::new();
    let mut fiber = Vec::new();
    for (i, v) in chart.vars().iter().enumerate() {
        match v.weight {
            0 => base.push(i),
            1 => fiber.push(i),
            w => {
                return Err(Error::NotAlgebroid(format!(
                    "`{}` has weight {w}; expected 0 or 1",
                    v.name
                )))
            }
        }
    }
    let fdeg =
        |m: &crate::superpoly::Monomial| -> u32 { fiber.iter().map(|&i| m.exponent(i)).sum() };
    for (a, c) in q.coeffs().iter().enumerate() {
        let want = if chart.weight(a) == 0 { 1 } else { 2 };
        for (m, _) in c.terms() {
            if fdeg(m) != want {
                return Err(Error::NotAlgebroid(format!(
                    "term {} in the coefficient of d/d{} has fibre degree {}, expected {want}",
                    crate::superpoly::render_monomial(m, chart),
                    chart.var(a).name,
                    fdeg(m)
                )));
            }
        }
    }
    let anchor = fiber
        .iter()
        .map(|&i| base.iter().map(|&a| q.coeff(a).left_partial(i)).collect())
        .collect();
    let mut structure = BTreeMap::new();
    for (ki, &k) in fiber.iter().enumerate() {
        for (ii, &i) in fiber.iter().enumerate() {
            for (ji, &j) in fiber.iter().enumerate() {
                let d = q.coeff(k).left_partial(i).left_partial(j);
                let s = crate::superpoly::sign(chart.parity(i).times(chart.parity(j)));
                let c = d.scale_int(s);
                if !c.is_zero() {
                    structure.insert((ii, ji, ki), c);
                }
            }
        }
    }
    Ok(AlgebroidData {
        base,
        fiber,
        anchor,
        structure,
    })
}
