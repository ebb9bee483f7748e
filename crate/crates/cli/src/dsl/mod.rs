//! The model-file language: charts, gradings, fields, tensors, connections
//! and algebra references, parsed straight into library objects.

mod lexer;
mod parser;
mod printer;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use gradedq::doubles::Connection;
use gradedq::geometry::LiftKind;
use gradedq::liealg::StructureConstants;
use gradedq::{Chart, GradingSystem, Parity, SuperPoly, VectorField};

pub use lexer::{tokenize, Pos, Tok, Token};
pub use parser::{parse_model, parse_model_with};
pub use printer::print_model;

/// Default total-degree cap for expressions.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub struct ParseOptions {
    pub degree_cap: u32,
    /// Directory that `sc "file"` paths are relative to.
    pub base_dir: Option<PathBuf>,
}

impl Default for ParseOptions {
    fn default() -> ParseOptions {
        ParseOptions {
            degree_cap: DEFAULT_DEGREE_CAP,
            base_dir: None,
        }
    }
}

impl ParseOptions {
    /// Defaults with `GRADEDQ_DEGREE_CAP` applied when it is set.
    pub fn from_env() -> Result<ParseOptions, String> {
        let mut o = ParseOptions::default();
        if let Ok(v) = std::env::var("GRADEDQ_DEGREE_CAP") {
            o.degree_cap = v.trim().parse().map_err(|_| {
                format!("GRADEDQ_DEGREE_CAP must be a non-negative integer, got `{v}`")
            })?;
        }
        Ok(o)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChartDecl {
    pub name: String,
    pub chart: Arc<Chart>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradingDecl {
    pub name: String,
    pub system: GradingSystem,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldDecl {
    pub name: String,
    pub parity: Option<Parity>,
    pub chart: String,
    pub field: VectorField,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftSpec {
    Int(i64),
    Grading(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSpec {
    pub kind: LiftKind,
    pub chart: String,
    pub names: Option<Vec<String>>,
    pub shift: ShiftSpec,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorDecl {
    pub name: String,
    pub parity: Option<Parity>,
    pub lift: LiftSpec,
    pub poly: SuperPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionDecl {
    pub name: String,
    pub chart: String,
    pub base: Arc<Chart>,
    pub christoffels: BTreeMap<(usize, usize, usize), SuperPoly>,
}

impl ConnectionDecl {
    pub fn connection(&self) -> Connection {
        Connection {
            base: self.base.clone(),
            christoffels: self.christoffels.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// A generated family such as `q(2)` or `gl(1|1)`.
    Builtin(String),
    /// Structure constants in JSON, path as written.
    File(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDecl {
    pub name: String,
    pub source: AlgebraSource,
    pub constants: StructureConstants,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Chart(ChartDecl),
    Grading(GradingDecl),
    Field(FieldDecl),
    Tensor(TensorDecl),
    Connection(ConnectionDecl),
    Algebra(AlgebraDecl),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Chart(d) => &d.name,
            Item::Grading(d) => &d.name,
            Item::Field(d) => &d.name,
            Item::Tensor(d) => &d.name,
            Item::Connection(d) => &d.name,
            Item::Algebra(d) => &d.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Item::Chart(_) => "chart",
            Item::Grading(_) => "grading",
            Item::Field(_) => "field",
            Item::Tensor(_) => "tensor",
            Item::Connection(_) => "connection",
            Item::Algebra(_) => "algebra",
        }
    }
}

/// A parsed model: declarations in source order. Names are unique across
/// all declaration kinds.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModelFile {
    pub items: Vec<Item>,
}

macro_rules! lookup {
    ($fn:ident, $variant:ident, $ty:ty) => {
        pub fn $fn(&self, name: &str) -> Option<&$ty> {
            self.items.iter().find_map(|i| match i {
                Item::$variant(d) if d.name == name => Some(d),
                _ => None,
            })
        }
    };
}

impl ModelFile {
    lookup!(chart, Chart, ChartDecl);
    lookup!(grading, Grading, GradingDecl);
    lookup!(field, Field, FieldDecl);
    lookup!(tensor, Tensor, TensorDecl);
    lookup!(connection, Connection, ConnectionDecl);
    lookup!(algebra, Algebra, AlgebraDecl);

    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name() == name)
    }
}
