//! Weighted charts, (anti)cotangent lifts and vector fields.

mod field;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use field::VectorField;

use crate::error::{Error, Result};
use crate::superpoly::{Chart, Parity, Provenance, Rational};

/// Which double a grading is meant for: an odd bracket tensor on `T*M` or
/// an even one on `ΠT*M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GradingKind {
    QS,
    QP,
}

impl GradingKind {
    pub fn lift_kind(self) -> LiftKind {
        match self {
            GradingKind::QS => LiftKind::Cotangent,
            GradingKind::QP => LiftKind::AntiCotangent,
        }
    }
}

/// Weights of the homological field and of the bracket tensor, plus the
/// pencil parameter used when building a double.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSystem {
    pub q: i64,
    pub tensor_weight: i64,
    pub lambda: Rational,
    pub kind: GradingKind,
}

impl GradingSystem {
    pub fn new(kind: GradingKind, q: i64, tensor_weight: i64) -> GradingSystem {
        GradingSystem {
            q,
            tensor_weight,
            lambda: crate::superpoly::int(1),
            kind,
        }
    }

    /// Weight added to each momentum on top of the induced weight.
    pub fn shift(&self) -> i64 {
        self.q - self.tensor_weight
    }

    /// Total weight of a variable of `lift` as recorded in the chart.
    pub fn total_weight(lift: &Chart, i: usize) -> i64 {
        lift.weight(i)
    }

    /// Lift of `base` appropriate for this grading.
    pub fn lift(&self, base: &Arc<Chart>, names: Option<Vec<String>>) -> Result<Arc<Chart>> {
        lift(base, self.kind.lift_kind(), self.shift(), names)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftKind {
    Cotangent,
    AntiCotangent,
}

/// `p_x` / `ast_x` on a first lift; `p2_x` / `ast2_x` on a lift of a
/// lift, and so on.
fn default_momentum(kind: LiftKind, name: &str, level: usize) -> String {
    let stem = match kind {
        LiftKind::Cotangent => "p",
        LiftKind::AntiCotangent => "ast",
    };
    if level == 0 {
        format!("{stem}_{name}")
    } else {
        format!("{stem}{}_{name}", level + 1)
    }
}

fn lift_level(chart: &Chart) -> usize {
    match chart.lift_base() {
        Some(b) => 1 + lift_level(b),
        None => 0,
    }
}

/// Appends one momentum per variable of `base`. The momentum of a variable
/// of weight `w` gets weight `shift - w`; its parity is unchanged for the
/// cotangent lift and reversed for the anticotangent lift. Only the new
/// momenta have fibre degree 1.
pub fn lift(
    base: &Arc<Chart>,
    kind: LiftKind,
    shift: i64,
    names: Option<Vec<String>>,
) -> Result<Arc<Chart>> {
    let names = match names {
        Some(n) if n.len() != base.len() => {
            return Err(Error::DimensionMismatch(format!(
                "{} momentum names given for {} variables of `{}`",
                n.len(),
                base.len(),
                base.name()
            )))
        }
        Some(n) => n,
        None => base
            .vars()
            .iter()
            .map(|v| default_momentum(kind, &v.name, lift_level(base)))
            .collect(),
    };
    let mut decls: Vec<(String, Parity, i64, u32)> = base
        .vars()
        .iter()
        .map(|v| (v.name.clone(), v.parity, v.weight, 0))
        .collect();
    for (v, n) in base.vars().iter().zip(names) {
        let parity = match kind {
            LiftKind::Cotangent => v.parity,
            LiftKind::AntiCotangent => v.parity.flip(),
        };
        decls.push((n, parity, shift - v.weight, 1));
    }
    let (name, provenance) = match kind {
        LiftKind::Cotangent => (
            format!("T*({})", base.name()),
            Provenance::Cotangent(base.clone()),
        ),
        LiftKind::AntiCotangent => (
            format!("PiT*({})", base.name()),
            Provenance::AntiCotangent(base.clone()),
        ),
    };
    Chart::build(name, decls, provenance).map(Arc::new)
}

pub fn cotangent_lift(
    base: &Arc<Chart>,
    shift: i64,
    names: Option<Vec<String>>,
) -> Result<Arc<Chart>> {
    lift(base, LiftKind::Cotangent, shift, names)
}

pub fn anticotangent_lift(
    base: &Arc<Chart>,
    shift: i64,
    names: Option<Vec<String>>,
) -> Result<Arc<Chart>> {
    lift(base, LiftKind::AntiCotangent, shift, names)
}

/// The kind of `chart` if it is a lift.
pub fn lift_kind_of(chart: &Chart) -> Option<LiftKind> {
    match chart.provenance() {
        Provenance::Base => None,
        Provenance::Cotangent(_) => Some(LiftKind::Cotangent),
        Provenance::AntiCotangent(_) => Some(LiftKind::AntiCotangent),
    }
}

/// Requires `lift` to be a lift of `base` of the given kind.
pub fn expect_lift_of(lift: &Arc<Chart>, base: &Arc<Chart>, kind: LiftKind) -> Result<()> {
    let expected = match kind {
        LiftKind::Cotangent => "a cotangent lift",
        LiftKind::AntiCotangent => "an anticotangent lift",
    };
    match (lift_kind_of(lift), lift.lift_base()) {
        (Some(k), Some(b)) if k == kind && crate::superpoly::same_chart(b, base) => Ok(()),
        _ => Err(Error::NotALift {
            chart: lift.name().to_string(),
            expected,
        }),
    }
}
