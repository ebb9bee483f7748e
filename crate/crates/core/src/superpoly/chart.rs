use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::Parity;
use crate::error::{Error, Result};

/// One coordinate of a chart.
///
/// `weight` is the grade used by [`crate::SuperPoly::weight_of`]; on lifted
/// charts it is already the total weight. `fiber_degree` is 1 for the momenta
/// added by the outermost lift and 0 otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableDecl {
    pub name: String,
    pub parity: Parity,
    pub weight: i64,
    pub fiber_degree: u32,
    pub order_index: usize,
}

/// How a chart was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Base,
    Cotangent(Arc<Chart>),
    AntiCotangent(Arc<Chart>),
}

impl Provenance {
    pub fn label(&self) -> String {
        match self {
            Provenance::Base => "base".to_string(),
            Provenance::Cotangent(b) => format!("cotangent-lift-of({})", b.name()),
            Provenance::AntiCotangent(b) => format!("anticotangent-lift-of({})", b.name()),
        }
    }
}

/// An ordered universe of coordinates. Declaration order is the canonical
/// monomial order.
#[derive(Clone, Debug)]
pub struct Chart {
    name: String,
    vars: Vec<VariableDecl>,
    provenance: Provenance,
    index: HashMap<String, usize>,
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.vars == other.vars && self.provenance == other.provenance
    }
}
impl Eq for Chart {}

impl Chart {
    /// Builds a base chart from `(name, parity, weight)` triples.
    pub fn base<S: Into<String>>(name: S, vars: Vec<(String, Parity, i64)>) -> Result<Arc<Chart>> {
        let decls = vars.into_iter().map(|(n, p, w)| (n, p, w, 0)).collect();
        Chart::build(name.into(), decls, Provenance::Base).map(Arc::new)
    }

    /// Convenience constructor for tests and builtins.
    pub fn from_spec(name: &str, vars: &[(&str, Parity, i64)]) -> Arc<Chart> {
        Chart::base(
            name,
            vars.iter()
                .map(|(n, p, w)| (n.to_string(), *p, *w))
                .collect(),
        )
        .expect("static chart specification")
    }

    pub(crate) fn build(
        name: String,
        decls: Vec<(String, Parity, i64, u32)>,
        provenance: Provenance,
    ) -> Result<Chart> {
        let mut index = HashMap::new();
        let mut vars = Vec::with_capacity(decls.len());
        for (i, (n, p, w, d)) in decls.into_iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n));
            }
            vars.push(VariableDecl {
                name: n,
                parity: p,
                weight: w,
                fiber_degree: d,
                order_index: i,
            });
        }
        Ok(Chart {
            name,
            vars,
            provenance,
            index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &[VariableDecl] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, i: usize) -> &VariableDecl {
        &self.vars[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.vars[i].parity
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.vars[i].weight
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The chart this one lifts, if any.
    pub fn lift_base(&self) -> Option<&Arc<Chart>> {
        match &self.provenance {
            Provenance::Base => None,
            Provenance::Cotangent(b) | Provenance::AntiCotangent(b) => Some(b),
        }
    }

    pub fn is_cotangent(&self) -> bool {
        matches!(self.provenance, Provenance::Cotangent(_))
    }

    pub fn is_anticotangent(&self) -> bool {
        matches!(self.provenance, Provenance::AntiCotangent(_))
    }

    /// Number of base coordinates of a lifted chart (0 for base charts).
    pub fn base_len(&self) -> usize {
        self.lift_base().map(|b| b.len()).unwrap_or(0)
    }

    /// Index of the momentum conjugate to base coordinate `a`.
    pub fn momentum_of(&self, a: usize) -> usize {
        debug_assert!(a < self.base_len());
        self.base_len() + a
    }

    pub fn is_momentum(&self, i: usize) -> bool {
        self.lift_base().is_some() && i >= self.base_len()
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    /// Same variables (names and parities, in order) as `other`.
    pub fn same_layout(&self, other: &Chart) -> bool {
        self.vars.len() == other.vars.len()
            && self
                .vars
                .iter()
                .zip(&other.vars)
                .all(|(a, b)| a.name == b.name && a.parity == b.parity)
    }
}

/// Pointer-or-structural chart identity.
pub fn same_chart(a: &Arc<Chart>, b: &Arc<Chart>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
