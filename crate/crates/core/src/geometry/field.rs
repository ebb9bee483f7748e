use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{expect_lift_of, LiftKind};
use crate::error::{Error, Result};
use crate::superpoly::{sign, Chart, Grade, Parity, SuperPoly};

/// A derivation `Σ X^a ∂/∂x^a` with coefficients written on the left.
#[derive(Clone, PartialEq)]
pub struct VectorField {
    chart: Arc<Chart>,
    coeffs: Vec<SuperPoly>,
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorField[{}]({})", self.chart.name(), self.render())
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl VectorField {
    pub fn zero(chart: &Arc<Chart>) -> VectorField {
        VectorField {
            chart: chart.clone(),
            coeffs: (0..chart.len()).map(|_| SuperPoly::zero(chart)).collect(),
        }
    }

    pub fn new(chart: &Arc<Chart>, coeffs: Vec<SuperPoly>) -> Result<VectorField> {
        if coeffs.len() != chart.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                chart.len()
            )));
        }
        for c in &coeffs {
            if !crate::superpoly::same_chart(c.chart(), chart) {
                return Err(Error::ChartMismatch {
                    left: c.chart().name().to_string(),
                    right: chart.name().to_string(),
                });
            }
        }
        Ok(VectorField {
            chart: chart.clone(),
            coeffs,
        })
    }

    /// Builds a field from `(variable name, coefficient)` pairs; repeated
    /// names accumulate.
    pub fn from_named<'a, I>(chart: &Arc<Chart>, parts: I) -> Result<VectorField>
    where
        I: IntoIterator<Item = (&'a str, SuperPoly)>,
    {
        let mut out = VectorField::zero(chart);
        for (name, c) in parts {
            let i = chart.index_of(name)?;
            out.coeffs[i] = out.coeffs[i].checked_add(&c)?;
        }
        Ok(out)
    }

    /// The constant-coefficient field `∂/∂x^i`.
    pub fn partial(chart: &Arc<Chart>, i: usize) -> VectorField {
        let mut out = VectorField::zero(chart);
        out.coeffs[i] = SuperPoly::one(chart);
        out
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn coeff(&self, i: usize) -> &SuperPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[SuperPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperPoly::is_zero)
    }

    /// `X(f) = Σ X^a ∂_a f`.
    pub fn apply(&self, f: &SuperPoly) -> Result<SuperPoly> {
        if !crate::superpoly::same_chart(f.chart(), &self.chart) {
            return Err(Error::ChartMismatch {
                left: self.chart.name().to_string(),
                right: f.chart().name().to_string(),
            });
        }
        let mut out = SuperPoly::zero(&self.chart);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.left_partial(a);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        Ok(out)
    }

    fn parts_by<K: Ord + Copy>(
        &self,
        key: impl Fn(usize, K) -> K,
        split: impl Fn(&SuperPoly) -> BTreeMap<K, SuperPoly>,
    ) -> BTreeMap<K, VectorField> {
        let mut parts: BTreeMap<K, VectorField> = BTreeMap::new();
        for (a, c) in self.coeffs.iter().enumerate() {
            for (k, piece) in split(c) {
                parts
                    .entry(key(a, k))
                    .or_insert_with(|| VectorField::zero(&self.chart))
                    .coeffs[a] = piece;
            }
        }
        parts
    }

    /// Split by the parity `parity(X^a) + parity(x^a)`.
    pub fn parity_parts(&self) -> BTreeMap<Parity, VectorField> {
        self.parts_by(
            |a, p: Parity| p + self.chart.parity(a),
            |c| c.parity_parts(),
        )
    }

    /// Split by the weight `weight(X^a) - weight(x^a)`.
    pub fn weight_parts(&self) -> BTreeMap<i64, VectorField> {
        self.parts_by(|a, w: i64| w - self.chart.weight(a), |c| c.weight_parts())
    }

    /// Split by polynomial degree of the coefficients.
    pub fn degree_parts(&self) -> BTreeMap<u32, VectorField> {
        self.parts_by(|_, d: u32| d, |c| c.degree_parts())
    }

    fn grade<K: Ord + Copy>(parts: BTreeMap<K, VectorField>) -> Grade<K, VectorField> {
        match parts.len() {
            0 => Grade::Zero,
            1 => Grade::Homogeneous(*parts.keys().next().unwrap()),
            _ => Grade::Mixed(parts),
        }
    }

    pub fn parity_of(&self) -> Grade<Parity, VectorField> {
        VectorField::grade(self.parity_parts())
    }

    pub fn weight_of(&self) -> Grade<i64, VectorField> {
        VectorField::grade(self.weight_parts())
    }

    /// Parity of a homogeneous field; `Ok(None)` for the zero field.
    pub fn homogeneous_parity(&self) -> Result<Option<Parity>> {
        match self.parity_of() {
            Grade::Zero => Ok(None),
            Grade::Homogeneous(p) => Ok(Some(p)),
            Grade::Mixed(_) => Err(Error::MixedParity(self.render())),
        }
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(&self.chart, coeffs)
    }

    pub fn scale(&self, c: &crate::superpoly::Rational) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> VectorField {
        self.scale(&crate::superpoly::int(-1))
    }

    /// Supercommutator `[X,Y] = XY - (-1)^{XY} YX` of homogeneous fields.
    pub fn commutator(&self, other: &VectorField) -> Result<VectorField> {
        let px = self.homogeneous_parity()?.unwrap_or(Parity::Even);
        let py = other.homogeneous_parity()?.unwrap_or(Parity::Even);
        let s = crate::superpoly::int(sign(px.times(py)));
        let coeffs = (0..self.chart.len())
            .map(|v| {
                let xy = self.apply(&other.coeffs[v])?;
                let yx = other.apply(&self.coeffs[v])?;
                xy.checked_sub(&yx.scale(&s))
            })
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(&self.chart, coeffs)
    }

    /// Commutator extended bilinearly over parity parts.
    pub fn commutator_mixed(&self, other: &VectorField) -> Result<VectorField> {
        let mut out = VectorField::zero(&self.chart);
        for a in self.parity_parts().values() {
            for b in other.parity_parts().values() {
                out = out.checked_add(&a.commutator(b)?)?;
            }
        }
        Ok(out)
    }

    /// `Σ X^a p_a` on the cotangent lift `lift`.
    pub fn hamiltonian_lift_p(&self, lift: &Arc<Chart>) -> Result<SuperPoly> {
        expect_lift_of(lift, &self.chart, LiftKind::Cotangent)?;
        let mut out = SuperPoly::zero(lift);
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = SuperPoly::var(lift, lift.momentum_of(a));
            out = &out + &(&c.embed(lift)? * &p);
        }
        Ok(out)
    }

    /// `(-1)^{X} Σ X^a x*_a` on the anticotangent lift `lift`, taken part by
    /// part for mixed fields.
    pub fn multivector_lift_theta(&self, lift: &Arc<Chart>) -> Result<SuperPoly> {
        expect_lift_of(lift, &self.chart, LiftKind::AntiCotangent)?;
        let mut out = SuperPoly::zero(lift);
        for (parity, part) in self.parity_parts() {
            for (a, c) in part.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = SuperPoly::var(lift, lift.momentum_of(a));
                let term = (&c.embed(lift)? * &p).scale_int(sign(parity));
                out = &out + &term;
            }
        }
        Ok(out)
    }

    /// Re-expresses the field on a chart containing its own, extended by
    /// zero on the new variables.
    pub fn embed(&self, target: &Arc<Chart>) -> Result<VectorField> {
        let mut out = VectorField::zero(target);
        for (a, c) in self.coeffs.iter().enumerate() {
            let j = target.index_of(&self.chart.var(a).name)?;
            out.coeffs[j] = c.embed(target)?;
        }
        Ok(out)
    }

    /// Text form `(X^a) d/dx^a + ...` in chart order; `0` for the zero field.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| format!("({}) d/d{}", c.render(), self.chart.var(a).name))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}
