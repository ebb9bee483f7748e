//! Command output: checks with exact residues and rendered objects, as
//! text or JSON. Everything is emitted in a fixed order.

use gradedq::structures::{CheckReport, Status};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residue {
    pub label: String,
    pub rendering: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub context: String,
    pub residue: Vec<Residue>,
}

impl Check {
    /// A check whose obstruction is a list of labelled mismatches.
    pub fn listing(name: &str, context: &str, failures: Vec<(String, String)>) -> Check {
        Check {
            name: name.to_string(),
            status: if failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            context: context.to_string(),
            residue: failures
                .into_iter()
                .map(|(label, rendering)| Residue { label, rendering })
                .collect(),
        }
    }

    /// Pass when `ok`, otherwise one residue line.
    pub fn boolean(name: &str, context: &str, ok: bool, detail: impl Into<String>) -> Check {
        let failures = if ok {
            vec![]
        } else {
            vec![("mismatch".to_string(), detail.into())]
        };
        Check::listing(name, context, failures)
    }

    pub fn named(mut self, name: &str) -> Check {
        self.name = name.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl From<&CheckReport> for Check {
    fn from(r: &CheckReport) -> Check {
        Check {
            name: r.name.clone(),
            status: r.status(),
            context: r.context.clone(),
            residue: r
                .residue()
                .iter()
                .map(|c| Residue {
                    label: c.label.clone(),
                    rendering: c.poly.render(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Object {
    pub name: String,
    pub kind: String,
    pub rendering: String,
}

impl Object {
    pub fn new(name: &str, kind: &str, rendering: impl Into<String>) -> Object {
        Object {
            name: name.to_string(),
            kind: kind.to_string(),
            rendering: rendering.into(),
        }
    }

    pub fn lines(name: &str, kind: &str, lines: &[String]) -> Object {
        Object::new(name, kind, lines.join("\n"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub model: String,
    pub command: String,
    pub checks: Vec<Check>,
    pub objects: Vec<Object>,
}

impl Report {
    pub fn new(model: &str, command: &str) -> Report {
        Report {
            model: model.to_string(),
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, c: impl Into<Check>) {
        self.checks.push(c.into());
    }

    pub fn object(&mut self, o: Object) {
        self.objects.push(o);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("model: {}\ncommand: {}\n", self.model, self.command);
        for c in &self.checks {
            s.push_str(&format!("check {}: {}", c.name, c.status));
            if !c.context.is_empty() {
                s.push_str(&format!(" [{}]", c.context));
            }
            s.push('\n');
            for r in &c.residue {
                s.push_str(&format!("  {}: {}\n", r.label, r.rendering));
            }
        }
        for o in &self.objects {
            if o.rendering.contains('\n') || o.rendering.is_empty() {
                s.push_str(&format!("object {} ({}):\n", o.name, o.kind));
                for line in o.rendering.lines() {
                    s.push_str(&format!("  {line}\n"));
                }
            } else {
                s.push_str(&format!(
                    "object {} ({}): {}\n",
                    o.name, o.kind, o.rendering
                ));
            }
        }
        s.push_str(if self.passed() {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        });
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl From<CheckReport> for Check {
    fn from(r: CheckReport) -> Check {
        Check::from(&r)
    }
}
