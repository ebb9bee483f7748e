use std::fmt;

use serde::Serialize;

use crate::superpoly::SuperPoly;

/// One nonzero piece of an obstruction.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueComponent {
    pub label: String,
    pub poly: SuperPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of a structure check. The residue is the exact obstruction; the
/// check passes exactly when no component is left.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub context: String,
    residue: Vec<ResidueComponent>,
}

#[derive(Serialize)]
struct ComponentJson<'a> {
    label: &'a str,
    rendering: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    name: &'a str,
    status: Status,
    context: &'a str,
    residue: Vec<ComponentJson<'a>>,
}

impl CheckReport {
    /// Zero components are dropped.
    pub fn new<N: Into<String>, C: Into<String>>(
        name: N,
        context: C,
        components: Vec<ResidueComponent>,
    ) -> CheckReport {
        CheckReport {
            name: name.into(),
            context: context.into(),
            residue: components
                .into_iter()
                .filter(|c| !c.poly.is_zero())
                .collect(),
        }
    }

    pub fn single<N: Into<String>, C: Into<String>>(
        name: N,
        context: C,
        label: &str,
        residue: SuperPoly,
    ) -> CheckReport {
        CheckReport::new(
            name,
            context,
            vec![ResidueComponent {
                label: label.to_string(),
                poly: residue,
            }],
        )
    }

    pub fn status(&self) -> Status {
        if self.residue.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn residue(&self) -> &[ResidueComponent] {
        &self.residue
    }

    /// The component with the given label, if nonzero.
    pub fn component(&self, label: &str) -> Option<&SuperPoly> {
        self.residue
            .iter()
            .find(|c| c.label == label)
            .map(|c| &c.poly)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            name: &self.name,
            status: self.status(),
            context: &self.context,
            residue: self
                .residue
                .iter()
                .map(|c| ComponentJson {
                    label: &c.label,
                    rendering: c.poly.render(),
                })
                .collect(),
        })
        .expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check {}: {}", self.name, self.status())?;
        if !self.context.is_empty() {
            write!(f, " [{}]", self.context)?;
        }
        for c in &self.residue {
            write!(f, "\n  {}: {}", c.label, c.poly.render())?;
        }
        Ok(())
    }
}
