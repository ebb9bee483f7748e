use std::sync::Arc;

use crate::brackets::canonical;
use crate::error::{Error, Result};
use crate::geometry::{lift, LiftKind};
use crate::structures::{CheckReport, ResidueComponent};
use crate::superpoly::{sign, Chart, SuperPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityKind {
    /// `T*E ≅ T*E*`.
    Even,
    /// `ΠT*E ≅ ΠT*(ΠE*)`.
    Odd,
}

impl DualityKind {
    fn lift_kind(self) -> LiftKind {
        match self {
            DualityKind::Even => LiftKind::Cotangent,
            DualityKind::Odd => LiftKind::AntiCotangent,
        }
    }
}

/// The natural map between the (anti)cotangent bundles of a graded bundle
/// `E` and of its dual, as a pullback of generators, with its checks.
#[derive(Clone, Debug)]
pub struct DualityMap {
    pub kind: DualityKind,
    pub bundle: Arc<Chart>,
    pub dual_bundle: Arc<Chart>,
    pub source: Arc<Chart>,
    pub target: Arc<Chart>,
    /// Image on `source` of each generator of `target`.
    pub pullback: Vec<SuperPoly>,
    pub preservation: CheckReport,
    pub square: CheckReport,
}

impl DualityMap {
    /// Lines `target generator -> image`.
    pub fn render(&self) -> Vec<String> {
        self.pullback
            .iter()
            .enumerate()
            .map(|(i, img)| format!("{} -> {}", self.target.var(i).name, img.render()))
            .collect()
    }
}

fn is_fiber(chart: &Chart, i: usize) -> bool {
    chart.weight(i) != 0
}

/// `E*` (even) or `ΠE*` (odd): the base is kept, each fibre coordinate of
/// weight `w` becomes `<name>_dual` of weight `-w`, with reversed parity in
/// the odd case.
fn dual_bundle(e: &Arc<Chart>, kind: DualityKind) -> Result<Arc<Chart>> {
    let vars = e
        .vars()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if is_fiber(e, i) {
                let parity = match kind {
                    DualityKind::Even => v.parity,
                    DualityKind::Odd => v.parity.flip(),
                };
                (format!("{}_dual", v.name), parity, -v.weight)
            } else {
                (v.name.clone(), v.parity, v.weight)
            }
        })
        .collect();
    let name = match kind {
        DualityKind::Even => format!("{}*", e.name()),
        DualityKind::Odd => format!("Pi{}*", e.name()),
    };
    Chart::base(name, vars)
}

struct Pieces {
    dual: Arc<Chart>,
    source: Arc<Chart>,
    target: Arc<Chart>,
    images: Vec<SuperPoly>,
}

fn pieces(e: &Arc<Chart>, kind: DualityKind) -> Result<Pieces> {
    let lk = kind.lift_kind();
    let dual = dual_bundle(e, kind)?;
    let source = lift(e, lk, 0, None)?;
    let target = lift(&dual, lk, 0, None)?;
    let n = e.len();
    let var = |i: usize| SuperPoly::var(&source, i);
    let mut images = vec![SuperPoly::zero(&source); 2 * n];
    for i in 0..n {
        let mom = source.momentum_of(i);
        if is_fiber(e, i) {
            images[i] = var(mom);
            images[target.momentum_of(i)] = match kind {
                DualityKind::Even => var(i).scale_int(-sign(e.parity(i))),
                DualityKind::Odd => -&var(i),
            };
        } else {
            images[i] = var(i);
            images[target.momentum_of(i)] = var(mom);
        }
    }
    Ok(Pieces {
        dual,
        source,
        target,
        images,
    })
}

/// Builds the duality map of the bundle chart `e`, whose weight-zero
/// coordinates form the base and the others the fibre. Checks that every
/// canonical bracket of generators is preserved and that applying the
/// construction twice is multiplication by `-1` on the fibres. For the
/// even map, `E**` is identified with `E` through `y ↦ (-1)^y y`.
pub fn duality_map(e: &Arc<Chart>, kind: DualityKind) -> Result<DualityMap> {
    if !(0..e.len()).any(|i| is_fiber(e, i)) {
        return Err(Error::Invalid(format!(
            "chart `{}` has no fibre coordinates (nonzero weight)",
            e.name()
        )));
    }
    let first = pieces(e, kind)?;
    let (source, target) = (&first.source, &first.target);
    let mut comps = Vec::new();
    for a in 0..target.len() {
        for b in 0..target.len() {
            let ga = SuperPoly::var(target, a);
            let gb = SuperPoly::var(target, b);
            let lhs = canonical(&ga, &gb)?.substitute(&first.images, source)?;
            let rhs = canonical(&first.images[a], &first.images[b])?;
            comps.push(ResidueComponent {
                label: format!("{{{},{}}}", target.var(a).name, target.var(b).name),
                poly: &lhs - &rhs,
            });
        }
    }
    let preservation = CheckReport::new("bracket-preservation", source.name(), comps);

    let second = pieces(&first.dual, kind)?;
    let n = e.len();
    let mut comps = Vec::new();
    for g in 0..second.target.len() {
        let composite = second.images[g].substitute(&first.images, source)?;
        let coord = if g < n { g } else { g - n };
        let mut expected = SuperPoly::var(source, g);
        if is_fiber(e, coord) {
            expected = -&expected;
            if kind == DualityKind::Even {
                expected = expected.scale_int(sign(e.parity(coord)));
            }
        }
        comps.push(ResidueComponent {
            label: second.target.var(g).name.clone(),
            poly: &composite - &expected,
        });
    }
    let square = CheckReport::new("square-is-minus-one", source.name(), comps);
    Ok(DualityMap {
        kind,
        bundle: e.clone(),
        dual_bundle: first.dual,
        source: first.source,
        target: first.target,
        pullback: first.images,
        preservation,
        square,
    })
}
