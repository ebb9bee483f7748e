//! Doubles of graded QS- and QP-manifolds, the invariant almost Schouten
//! tensor built from a connection, the odd invariant `ρ` and the duality
//! maps between cotangent bundles of dual bundles.

mod duality;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use duality::{duality_map, DualityKind, DualityMap};

use crate::brackets::{canonical, derived_bracket, hamiltonian_vector_field};
use crate::error::{Error, Result};
use crate::geometry::{expect_lift_of, lift, GradingKind, GradingSystem, LiftKind, VectorField};
use crate::structures::{check_compatibility, check_homological, check_tensor, CheckReport};
use crate::superpoly::{int, rat, Chart, Grade, Parity, SuperPoly};

/// The double of a graded QS- or QP-manifold.
#[derive(Clone, Debug)]
pub struct DoubleModel {
    pub grading: GradingSystem,
    pub base: Arc<Chart>,
    pub q: VectorField,
    pub tensor: SuperPoly,
    /// `T*M` or `ΠT*M`; its recorded weights are the total weights.
    pub lift: Arc<Chart>,
    /// `p(Q)` or `θ(Q)` plus `λ` times the tensor.
    pub hamiltonian: SuperPoly,
    pub q_d: VectorField,
    pub compatibility: CheckReport,
    pub homological: CheckReport,
}

impl DoubleModel {
    pub fn total_weights(&self) -> Vec<(String, i64)> {
        self.lift
            .vars()
            .iter()
            .map(|v| (v.name.clone(), v.weight))
            .collect()
    }

    /// `Q_D(f)` for a base function `f`, truncated to momentum-free terms.
    pub fn restricted_action(&self, f: &SuperPoly) -> Result<SuperPoly> {
        let n = self.lift.base_len();
        let image = self.q_d.apply(&f.embed(&self.lift)?)?;
        Ok(image.filter(|m| m.factors().iter().all(|&(v, _)| v < n)))
    }
}

fn expect_weight(what: &str, f: &SuperPoly, want: i64) -> Result<()> {
    match f.weight_of() {
        Grade::Zero => Ok(()),
        Grade::Homogeneous(w) if w == want => Ok(()),
        Grade::Homogeneous(w) => Err(Error::WeightMismatch(format!(
            "{what} has total weight {w}, expected {want}"
        ))),
        Grade::Mixed(_) => Err(Error::WeightMismatch(format!(
            "{what} is not weight-homogeneous: {}",
            f.render()
        ))),
    }
}

fn build(
    q: &VectorField,
    t: &SuperPoly,
    grading: &GradingSystem,
    force: bool,
) -> Result<DoubleModel> {
    let lift_chart = t.chart().clone();
    expect_lift_of(&lift_chart, q.chart(), grading.kind.lift_kind())?;
    let shift = grading.shift();
    for a in 0..lift_chart.base_len() {
        let m = lift_chart.momentum_of(a);
        if lift_chart.weight(m) != shift - lift_chart.weight(a) {
            return Err(Error::WeightMismatch(format!(
                "momentum `{}` does not carry the shift {shift} of the grading",
                lift_chart.var(m).name
            )));
        }
    }
    let compatibility = check_compatibility(q, t, grading.kind)?;
    if !compatibility.passed() && !force {
        return Err(Error::CheckFailed(format!(
            "the field and tensor are not compatible:\n{compatibility}"
        )));
    }
    let lifted = match grading.kind {
        GradingKind::QS => q.hamiltonian_lift_p(&lift_chart)?,
        GradingKind::QP => q.multivector_lift_theta(&lift_chart)?,
    };
    let target = 2 * grading.q - grading.tensor_weight;
    expect_weight("the lifted field", &lifted, target)?;
    expect_weight("the tensor", t, target)?;
    let hamiltonian = &lifted + &t.scale(&grading.lambda);
    let mut q_d = hamiltonian_vector_field(&hamiltonian)?;
    if grading.kind == GradingKind::QP {
        // with the sign carried by θ, the minus makes Q_D restrict to Q
        q_d = q_d.neg();
    }
    for (w, _) in q_d.weight_parts() {
        if w != grading.q {
            return Err(Error::WeightMismatch(format!(
                "the double field has a part of weight {w}, expected {}",
                grading.q
            )));
        }
    }
    let homological = check_homological(&q_d)?;
    Ok(DoubleModel {
        grading: grading.clone(),
        base: q.chart().clone(),
        q: q.clone(),
        tensor: t.clone(),
        lift: lift_chart,
        hamiltonian,
        q_d,
        compatibility,
        homological,
    })
}

/// `Q_D = X_{p(Q) + λS}` on `T*M`. Fails on incompatible input unless
/// `force` is set, in which case the failing report is kept.
pub fn build_double_qs(
    q: &VectorField,
    s: &SuperPoly,
    grading: &GradingSystem,
    force: bool,
) -> Result<DoubleModel> {
    if grading.kind != GradingKind::QS {
        return Err(Error::Invalid("a QS double needs a QS grading".into()));
    }
    build(q, s, grading, force)
}

/// `Q_D = -X_{θ(Q) + λP}` on `ΠT*M`.
pub fn build_double_qp(
    q: &VectorField,
    p: &SuperPoly,
    grading: &GradingSystem,
    force: bool,
) -> Result<DoubleModel> {
    if grading.kind != GradingKind::QP {
        return Err(Error::Invalid("a QP double needs a QP grading".into()));
    }
    build(q, p, grading, force)
}

/// Christoffel symbols `Γ_ab^c` on a base chart, nonzero entries only.
#[derive(Clone, Debug)]
pub struct Connection {
    pub base: Arc<Chart>,
    pub christoffels: BTreeMap<(usize, usize, usize), SuperPoly>,
}

impl Connection {
    pub fn flat(base: &Arc<Chart>) -> Connection {
        Connection {
            base: base.clone(),
            christoffels: BTreeMap::new(),
        }
    }

    pub fn is_flat(&self) -> bool {
        self.christoffels.values().all(SuperPoly::is_zero)
    }

    /// Requires `w(Γ_ab^c) = w_c - w_a - w_b` and parity `a + b + c`.
    pub fn validate(&self) -> Result<()> {
        let b = &self.base;
        for (&(i, j, k), g) in &self.christoffels {
            if !crate::superpoly::same_chart(g.chart(), b) {
                return Err(Error::ChartMismatch {
                    left: g.chart().name().to_string(),
                    right: b.name().to_string(),
                });
            }
            let label = format!(
                "Gamma[{},{},{}]",
                b.var(i).name,
                b.var(j).name,
                b.var(k).name
            );
            expect_weight(&label, g, b.weight(k) - b.weight(i) - b.weight(j))?;
            if let Some(p) = g.homogeneous_parity()? {
                if p != b.parity(i) + b.parity(j) + b.parity(k) {
                    return Err(Error::ParityMismatch(format!("{label} has parity {p}")));
                }
            }
        }
        Ok(())
    }
}

/// The second lift `T*DM` of a double together with the invariant
/// `r = p_a q^a + Γ_ab^c y_c q^b q^a`.
#[derive(Clone, Debug)]
pub struct LongMomentum {
    pub chart: Arc<Chart>,
    pub r: SuperPoly,
}

/// Builds `T*DM` with shift zero (momentum names optional) and the long
/// momentum invariant. Only defined for QS doubles.
pub fn long_momentum_r(
    double: &DoubleModel,
    connection: &Connection,
    names: Option<Vec<String>>,
) -> Result<LongMomentum> {
    if double.grading.kind != GradingKind::QS {
        return Err(Error::Invalid(
            "the long momentum is defined for QS doubles".into(),
        ));
    }
    if !crate::superpoly::same_chart(&connection.base, &double.base) {
        return Err(Error::ChartMismatch {
            left: connection.base.name().to_string(),
            right: double.base.name().to_string(),
        });
    }
    connection.validate()?;
    let dm = &double.lift;
    let chart = lift(dm, LiftKind::Cotangent, 0, names)?;
    let n = double.base.len();
    let var = |i: usize| SuperPoly::var(&chart, i);
    // p_a: momentum of x^a; q^a: momentum of y_a
    let p = |a: usize| var(chart.momentum_of(a));
    let qm = |a: usize| var(chart.momentum_of(dm.momentum_of(a)));
    let y = |c: usize| var(dm.momentum_of(c));
    let mut r = SuperPoly::zero(&chart);
    for a in 0..n {
        r = &r + &(&p(a) * &qm(a));
    }
    for (&(a, b, c), g) in &connection.christoffels {
        let term = &(&(&g.embed(&chart)? * &y(c)) * &qm(b)) * &qm(a);
        r = &r + &term;
    }
    expect_weight("r", &r, double.grading.tensor_weight - double.grading.q)?;
    if let Some(Parity::Odd) = r.homogeneous_parity()? {
        return Err(Error::ParityMismatch("r must be even".into()));
    }
    Ok(LongMomentum { chart, r })
}

/// The almost Schouten tensor `S_D = ½{p(Q_D), r}` on `T*DM` with its
/// self-bracket.
#[derive(Clone, Debug)]
pub struct AlmostSchouten {
    pub chart: Arc<Chart>,
    pub s_d: SuperPoly,
    pub jacobi: CheckReport,
}

impl AlmostSchouten {
    /// `{a,b}_{S_D}` for functions on the double.
    pub fn bracket(&self, a: &SuperPoly, b: &SuperPoly) -> Result<SuperPoly> {
        derived_bracket(&self.s_d, &a.embed(&self.chart)?, &b.embed(&self.chart)?)
    }
}

pub fn almost_schouten_sd(double: &DoubleModel, long: &LongMomentum) -> Result<AlmostSchouten> {
    let chart = &long.chart;
    expect_lift_of(chart, &double.lift, LiftKind::Cotangent)?;
    let pq = double.q_d.hamiltonian_lift_p(chart)?;
    let s_d = canonical(&pq, &long.r)?.scale(&rat(1, 2));
    match s_d.fiber_degree_of() {
        Grade::Zero | Grade::Homogeneous(2) => {}
        other => {
            return Err(Error::Invalid(format!(
                "S_D is not quadratic in the second-lift momenta ({other:?})"
            )))
        }
    }
    expect_weight("S_D", &s_d, double.grading.tensor_weight)?;
    let jacobi = check_tensor(&s_d)?;
    Ok(AlmostSchouten {
        chart: chart.clone(),
        s_d,
        jacobi,
    })
}

/// The flat-coordinate form of `S_D`:
/// `½(-1)^{a+b}(∂_a∂_b Q^k y_k + ½ ∂_a∂_b S^{kl} y_l y_k) q^b q^a - ½ S^{ab} p_b p_a`,
/// valid when all Christoffel symbols vanish. Used as an independent route.
pub fn flat_sd_formula(double: &DoubleModel, long: &LongMomentum) -> Result<SuperPoly> {
    if double.grading.kind != GradingKind::QS {
        return Err(Error::Invalid("the flat formula is for QS doubles".into()));
    }
    let chart = &long.chart;
    let dm = &double.lift;
    let base = &double.base;
    let n = base.len();
    let var = |i: usize| SuperPoly::var(chart, i);
    let p = |a: usize| var(chart.momentum_of(a));
    let qm = |a: usize| var(chart.momentum_of(dm.momentum_of(a)));
    let y = |c: usize| var(dm.momentum_of(c));
    // S^{ab} from the coordinate brackets: S^{ab} = -(-1)^a {x^a,x^b}_S
    let lam = &double.grading.lambda;
    let s_up = |a: usize, b: usize| -> Result<SuperPoly> {
        let br = derived_bracket(
            &double.tensor,
            &SuperPoly::var(dm, a),
            &SuperPoly::var(dm, b),
        )?;
        Ok(br.scale(&(-lam * int(crate::superpoly::sign(base.parity(a))))))
    };
    let mut out = SuperPoly::zero(chart);
    for a in 0..n {
        for b in 0..n {
            let s = int(crate::superpoly::sign(base.parity(a) + base.parity(b)));
            let mut inner = SuperPoly::zero(chart);
            for k in 0..n {
                let qk = double.q.coeff(k).left_partial(b).left_partial(a);
                if !qk.is_zero() {
                    inner = &inner + &(&qk.embed(chart)? * &y(k));
                }
                for l in 0..n {
                    let skl = s_up(k, l)?.left_partial(b).left_partial(a);
                    if !skl.is_zero() {
                        let t = &(&skl.embed(chart)? * &y(l)) * &y(k);
                        inner = &inner + &t.scale(&rat(1, 2));
                    }
                }
            }
            if !inner.is_zero() {
                let t = &(&inner * &qm(b)) * &qm(a);
                out = &out + &t.scale(&(s * rat(1, 2)));
            }
            let sab = s_up(a, b)?;
            if !sab.is_zero() {
                let t = &(&sab.embed(chart)? * &p(b)) * &p(a);
                out = &out - &t.scale(&rat(1, 2));
            }
        }
    }
    Ok(out)
}

/// The odd invariant `ρ = Σ ξ*_a x^{*a}` on the second anticotangent lift of
/// a QP double and the Poisson tensor `P_D = ½{-θ(Q_D), ρ}` it generates.
#[derive(Clone, Debug)]
pub struct OddInvariant {
    pub chart: Arc<Chart>,
    pub rho: SuperPoly,
    pub p_d: SuperPoly,
    pub jacobi: CheckReport,
    pub invariance: CheckReport,
}

pub fn odd_rho_pd(double: &DoubleModel, names: Option<Vec<String>>) -> Result<OddInvariant> {
    if double.grading.kind != GradingKind::QP {
        return Err(Error::Invalid("rho is defined for QP doubles".into()));
    }
    let dm = &double.lift;
    let chart = lift(dm, LiftKind::AntiCotangent, 0, names)?;
    let n = double.base.len();
    let mut rho = SuperPoly::zero(&chart);
    for a in 0..n {
        let first = SuperPoly::var(&chart, chart.momentum_of(a));
        let second = SuperPoly::var(&chart, chart.momentum_of(dm.momentum_of(a)));
        rho = &rho + &(&first * &second);
    }
    let theta = double.q_d.multivector_lift_theta(&chart)?;
    let p_d = canonical(&-&theta, &rho)?.scale(&rat(1, 2));
    let jacobi = check_tensor(&p_d)?;
    let invariance = CheckReport::single(
        "invariance",
        chart.name(),
        "{theta(Q_D),P_D}",
        canonical(&theta, &p_d)?,
    );
    Ok(OddInvariant {
        chart,
        rho,
        p_d,
        jacobi,
        invariance,
    })
}
