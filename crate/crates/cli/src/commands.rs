//! Command dispatch over a parsed model.

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use gradedq::doubles::{
    almost_schouten_sd, build_double_qp, build_double_qs, duality_map, flat_sd_formula,
    long_momentum_r, odd_rho_pd, Connection, DoubleModel, DualityKind,
};
use gradedq::liealg::{
    builtin, drinfeld_double, even_cobracket_formula, even_double_formula, odd_double,
    odd_dual_cobracket, q_cobracket_formula, q_relative_input, relative_double, render_combination,
    render_sym_cobracket, BuiltinAlgebra, OddDouble, StructureConstants,
};
use gradedq::structures::{
    check_bialgebra, check_compatibility, check_homological, check_homological_graded,
    check_homological_hamiltonian, check_odd_bialgebra, check_tensor, cocycle_residue,
    homological_by_degree, linked_component, yang_baxter,
};
use gradedq::superpoly::render_rational;
use gradedq::{Chart, Grade, GradingKind, GradingSystem, Parity, Rational, SuperPoly, VectorField};

use crate::dsl::{print_model, AlgebraSource, ModelFile};
use crate::error::CliError;
use crate::report::{Check, Object, Report};

#[derive(Parser, Debug)]
#[command(
    name = "gradedq",
    version,
    about = "Exact checks and double constructions for graded Q-manifolds"
)]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Model file with chart, grading, field, tensor, connection and
    /// algebra declarations.
    #[arg(short, long, global = true)]
    pub model: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DualityArg {
    Even,
    Odd,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ½[Q,Q] and {p(Q),p(Q)} for a field.
    CheckQ {
        field: String,
        /// Split the residue by coefficient degree and compare with the
        /// linked components.
        #[arg(long)]
        by_degree: bool,
    },
    /// {T,T} for a tensor.
    CheckTensor { tensor: String },
    /// Homological, Jacobi and compatibility checks on T*M.
    CheckQs {
        field: String,
        tensor: String,
        grading: String,
    },
    /// Homological, Jacobi and compatibility checks on ΠT*M.
    CheckQp {
        field: String,
        tensor: String,
        grading: String,
    },
    /// Bialgebra conditions for a bracket C and a dual bracket B.
    CheckBialgebra { c: String, b: String },
    /// Double of FIELD TENSOR GRADING, or Drinfeld double of C B.
    Double {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        /// Build even when the compatibility check fails.
        #[arg(long)]
        force: bool,
    },
    /// Odd double of C P, or FIELD TENSOR GRADING with its invariant P_D.
    OddDouble {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        /// Build even when the compatibility check fails.
        #[arg(long)]
        force: bool,
        /// Momentum names for the second lift.
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
    /// Almost Schouten tensor S_D of a QS double from a connection.
    Sd {
        field: String,
        tensor: String,
        grading: String,
        /// Connection declared in the model, or `flat`.
        #[arg(long, default_value = "flat")]
        connection: String,
        /// Momentum names on T*(T*M), comma separated.
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
    /// Classical and generalized Yang-Baxter residues of R with respect to
    /// Q, or of r on the Drinfeld double of C B.
    YangBaxter { r: String, q: String },
    /// Duality map of a bundle chart.
    Duality { kind: DualityArg, chart: String },
    /// Bracket table, Jacobi and pairing checks of an algebra.
    AlgebraReport {
        /// Declared algebra or a builtin such as `q(2)`, `gl(1|1)`, `sl(2)`.
        name: String,
        /// Also build the cobracket (relative double for q(n), otherwise
        /// from an odd pairing).
        #[arg(long)]
        cobracket: bool,
    },
    /// Pretty-print the model.
    Print,
}

type CResult<T> = Result<T, CliError>;

fn core<T>(context: &str, r: gradedq::Result<T>) -> CResult<T> {
    r.map_err(|source| CliError::Core {
        context: context.to_string(),
        source,
    })
}

struct Ctx<'a> {
    model: &'a ModelFile,
    command: String,
}

impl Ctx<'_> {
    fn core<T>(&self, r: gradedq::Result<T>) -> CResult<T> {
        core(&self.command, r)
    }

    fn field(&self, name: &str) -> CResult<&VectorField> {
        self.model
            .field(name)
            .map(|d| &d.field)
            .ok_or_else(|| CliError::Usage(format!("no field named `{name}` in the model")))
    }

    fn tensor(&self, name: &str) -> CResult<&SuperPoly> {
        self.model
            .tensor(name)
            .map(|d| &d.poly)
            .ok_or_else(|| CliError::Usage(format!("no tensor named `{name}` in the model")))
    }

    fn grading(&self, name: &str) -> CResult<&GradingSystem> {
        self.model
            .grading(name)
            .map(|d| &d.system)
            .ok_or_else(|| CliError::Usage(format!("no grading named `{name}` in the model")))
    }

    fn chart(&self, name: &str) -> CResult<&Arc<Chart>> {
        self.model
            .chart(name)
            .map(|d| &d.chart)
            .ok_or_else(|| CliError::Usage(format!("no chart named `{name}` in the model")))
    }

    /// A declared algebra, or a builtin family name such as `q(2)`.
    fn algebra(&self, name: &str) -> CResult<(StructureConstants, Option<BuiltinAlgebra>)> {
        if let Some(d) = self.model.algebra(name) {
            let b = match &d.source {
                AlgebraSource::Builtin(t) => Some(self.core(builtin(t))?),
                AlgebraSource::File(_) => None,
            };
            return Ok((d.constants.clone(), b));
        }
        match builtin(name) {
            Ok(b) => Ok((b.constants.clone(), Some(b))),
            Err(_) => Err(CliError::Usage(format!(
                "no algebra named `{name}` in the model"
            ))),
        }
    }

    fn is_algebra(&self, name: &str) -> bool {
        self.model.algebra(name).is_some()
            || (self.model.item(name).is_none() && builtin(name).is_ok())
    }
}

/// Runs one command; `print` yields model text instead of a report.
pub enum Output {
    Report(Report),
    Text(String),
}

pub fn run(
    command: &Command,
    model: &ModelFile,
    model_name: &str,
    command_line: &str,
) -> CResult<Output> {
    let ctx = Ctx {
        model,
        command: command_line.to_string(),
    };
    let mut r = Report::new(model_name, command_line);
    match command {
        Command::Print => return Ok(Output::Text(print_model(model))),
        Command::CheckQ { field, by_degree } => check_q(&ctx, &mut r, field, *by_degree)?,
        Command::CheckTensor { tensor } => {
            let t = ctx.tensor(tensor)?;
            r.check(ctx.core(check_tensor(t))?);
        }
        Command::CheckQs {
            field,
            tensor,
            grading,
        } => manifold(&ctx, &mut r, field, tensor, grading, GradingKind::QS)?,
        Command::CheckQp {
            field,
            tensor,
            grading,
        } => manifold(&ctx, &mut r, field, tensor, grading, GradingKind::QP)?,
        Command::CheckBialgebra { c, b } => bialgebra(&ctx, &mut r, c, b)?,
        Command::Double { args, force } => {
            if args.len() == 2 {
                drinfeld(&ctx, &mut r, &args[0], &args[1])?;
            } else {
                let kind = ctx.grading(&args[2])?.kind;
                let d = geometric_double(&ctx, &args[0], &args[1], &args[2], *force, kind)?;
                report_double(&mut r, &d);
            }
        }
        Command::OddDouble { args, force, names } => {
            if args.len() == 2 {
                odd_algebra_double(&ctx, &mut r, &args[0], &args[1])?;
            } else {
                let d =
                    geometric_double(&ctx, &args[0], &args[1], &args[2], *force, GradingKind::QP)?;
                report_double(&mut r, &d);
                let inv = ctx.core(odd_rho_pd(&d, names.clone()))?;
                r.check(Check::from(&inv.jacobi).named("P_D jacobi"));
                r.check(Check::from(&inv.invariance));
                r.object(Object::new("rho", "tensor", inv.rho.render()));
                r.object(Object::new("P_D", "tensor", inv.p_d.render()));
            }
        }
        Command::Sd {
            field,
            tensor,
            grading,
            connection,
            names,
        } => sd(
            &ctx,
            &mut r,
            field,
            tensor,
            grading,
            connection,
            names.clone(),
        )?,
        Command::YangBaxter { r: rn, q } => {
            if ctx.is_algebra(rn) && ctx.is_algebra(q) {
                let (c, _) = ctx.algebra(rn)?;
                let (b, _) = ctx.algebra(q)?;
                let d = ctx.core(drinfeld_double(&c, &b))?;
                r.object(Object::new("r", "tensor", d.long.r.render()));
                r.check(d.cybe.clone());
                r.check(d.gybe.clone());
            } else {
                let rt = ctx.tensor(rn)?;
                let qt = ctx.tensor(q)?;
                let (c, g) = ctx.core(yang_baxter(rt, qt))?;
                r.check(c);
                r.check(g);
            }
        }
        Command::Duality { kind, chart } => {
            let e = ctx.chart(chart)?;
            let k = match kind {
                DualityArg::Even => DualityKind::Even,
                DualityArg::Odd => DualityKind::Odd,
            };
            let m = ctx.core(duality_map(e, k))?;
            r.check(m.preservation.clone());
            r.check(m.square.clone());
            r.object(Object::lines("F", "map", &m.render()));
        }
        Command::AlgebraReport { name, cobracket } => {
            algebra_report(&ctx, &mut r, name, *cobracket)?
        }
    }
    Ok(Output::Report(r))
}

fn check_q(ctx: &Ctx, r: &mut Report, name: &str, by_degree: bool) -> CResult<()> {
    let q = ctx.field(name)?;
    r.check(ctx.core(check_homological(q))?);
    r.check(ctx.core(check_homological_hamiltonian(q))?);
    if by_degree {
        r.check(ctx.core(check_homological_graded(q))?);
        let pieces = q.degree_parts();
        let parts = ctx.core(homological_by_degree(q))?;
        let top = pieces.keys().copied().max().unwrap_or(0) * 2;
        let mut bad = Vec::new();
        for d in 0..=top {
            let linked = match pieces.is_empty() {
                true => VectorField::zero(q.chart()),
                false => ctx.core(linked_component(&pieces, d))?,
            };
            let want = parts
                .get(&d)
                .cloned()
                .unwrap_or_else(|| VectorField::zero(q.chart()));
            if linked != want {
                bad.push((format!("deg {d}"), linked.render()));
            }
        }
        r.check(Check::listing("linked-components", q.chart().name(), bad));
    }
    Ok(())
}

fn weight_ok(f: &SuperPoly, want: i64) -> bool {
    match f.weight_of() {
        Grade::Zero => true,
        Grade::Homogeneous(w) => w == want,
        Grade::Mixed(_) => false,
    }
}

fn manifold(
    ctx: &Ctx,
    r: &mut Report,
    f: &str,
    t: &str,
    g: &str,
    kind: GradingKind,
) -> CResult<()> {
    let q = ctx.field(f)?;
    let s = ctx.tensor(t)?;
    let grading = ctx.grading(g)?;
    if grading.kind != kind {
        return Err(CliError::Usage(format!(
            "grading `{g}` is not a {kind:?} grading"
        )));
    }
    r.check(ctx.core(check_homological(q))?);
    r.check(ctx.core(check_tensor(s))?);
    r.check(ctx.core(check_compatibility(q, s, kind))?);
    let lifted = match kind {
        GradingKind::QS => ctx.core(q.hamiltonian_lift_p(s.chart()))?,
        GradingKind::QP => ctx.core(q.multivector_lift_theta(s.chart()))?,
    };
    let target = 2 * grading.q - grading.tensor_weight;
    let mut bad = Vec::new();
    if !weight_ok(&lifted, target) {
        bad.push((
            "lifted field".to_string(),
            format!("{:?}, expected {target}", lifted.weight_of()),
        ));
    }
    if !weight_ok(s, target) {
        bad.push((
            "tensor".to_string(),
            format!("{:?}, expected {target}", s.weight_of()),
        ));
    }
    r.check(Check::listing("weights", s.chart().name(), bad));
    Ok(())
}

fn bialgebra(ctx: &Ctx, r: &mut Report, c: &str, b: &str) -> CResult<()> {
    let (c, _) = ctx.algebra(c)?;
    let (b, _) = ctx.algebra(b)?;
    let odd = c.dim() > 0
        && b.parities()
            .iter()
            .zip(c.parities())
            .all(|(x, y)| *x == y.flip());
    let chk = if odd {
        ctx.core(check_odd_bialgebra(&c, &b))?
    } else {
        ctx.core(check_bialgebra(&c, &b))?
    };
    r.check(chk.report.clone());
    if let Some(entries) = &chk.cocycle {
        r.check(Check::listing(
            "cocycle",
            "structure constants",
            cocycle_lines(entries),
        ));
    }
    Ok(())
}

fn cocycle_lines(entries: &[((usize, usize, usize, usize), Rational)]) -> Vec<(String, String)> {
    entries
        .iter()
        .map(|((j, k, n, m), v)| {
            (
                format!("({},{},{},{})", j + 1, k + 1, n + 1, m + 1),
                render_rational(v),
            )
        })
        .collect()
}

fn triples(
    entries: &[((usize, usize, usize), Rational)],
    names: &[String],
) -> Vec<(String, String)> {
    entries
        .iter()
        .map(|((a, b, c), v)| {
            (
                format!("({},{},{})", names[*a], names[*b], names[*c]),
                render_rational(v),
            )
        })
        .collect()
}

fn drinfeld(ctx: &Ctx, r: &mut Report, cn: &str, bn: &str) -> CResult<()> {
    let (c, _) = ctx.algebra(cn)?;
    let (b, _) = ctx.algebra(bn)?;
    let even = c.parities().iter().all(|p| !p.is_odd());
    if even {
        let bad = cocycle_lines(&cocycle_residue(&c, &b));
        let failed = !bad.is_empty();
        r.check(Check::listing("cocycle", "structure constants", bad));
        if failed {
            return Ok(());
        }
    }
    let d = ctx.core(drinfeld_double(&c, &b))?;
    let names = d.bracket.names().to_vec();
    r.check(d.bialgebra.clone());
    r.check(Check::listing(
        "pairing-invariance",
        "double",
        triples(&d.invariance, &names),
    ));
    let want = ctx.core(even_double_formula(&c, &b))?;
    r.check(Check::boolean(
        "bracket-formula",
        "double",
        d.bracket == want,
        want.render_table().join("; "),
    ));
    let want = ctx.core(even_cobracket_formula(&c, &b))?;
    r.check(Check::boolean(
        "cobracket-formula",
        "double",
        d.cobracket == want,
        want.render_table().join("; "),
    ));
    r.check(Check::boolean(
        "sub-bialgebras",
        "double",
        d.sub_bialgebras_match(&c, &b),
        "restriction differs",
    ));
    r.check(d.gybe.clone());
    r.object(Object::lines("bracket", "table", &d.bracket.render_table()));
    r.object(Object::lines("cobracket", "table", &d.render_cobracket()));
    r.object(Object::new("Q_D", "field", d.model.q_d.render()));
    r.object(Object::new("S_D", "tensor", d.schouten.s_d.render()));
    r.object(Object::new("r", "tensor", d.long.r.render()));
    for c in d.cybe.residue() {
        r.object(Object::new("cybe-residue", "polynomial", c.poly.render()));
    }
    Ok(())
}

fn odd_algebra_double(ctx: &Ctx, r: &mut Report, cn: &str, pn: &str) -> CResult<()> {
    let (c, _) = ctx.algebra(cn)?;
    let (p, _) = ctx.algebra(pn)?;
    let d = ctx.core(odd_double(&c, &p))?;
    let names = d.bracket.names().to_vec();
    r.check(d.bialgebra.clone());
    r.check(Check::listing(
        "pairing-invariance",
        "double",
        triples(&d.invariance, &names),
    ));
    let want = ctx.core(OddDouble::bracket_formula(&c, &p))?;
    r.check(Check::boolean(
        "bracket-formula",
        "double",
        d.bracket == want,
        want.render_table().join("; "),
    ));
    let want = ctx.core(d.p_d_formula())?;
    r.check(Check::boolean(
        "p_d-formula",
        "double",
        d.invariant.p_d == want,
        want.render(),
    ));
    let same = d.cobracket == d.coboundary;
    r.check(Check::boolean(
        "cobracket-routes",
        "double",
        same,
        render_sym_cobracket(&names, &d.coboundary).join("; "),
    ));
    r.object(Object::lines("bracket", "table", &d.bracket.render_table()));
    r.object(Object::lines(
        "cobracket",
        "table",
        &render_sym_cobracket(&names, &d.cobracket),
    ));
    r.object(Object::new("Q_D", "field", d.model.q_d.render()));
    r.object(Object::new("P", "tensor", d.model.tensor.render()));
    r.object(Object::new("P_D", "tensor", d.invariant.p_d.render()));
    Ok(())
}

fn geometric_double(
    ctx: &Ctx,
    f: &str,
    t: &str,
    g: &str,
    force: bool,
    kind: GradingKind,
) -> CResult<DoubleModel> {
    let q = ctx.field(f)?;
    let s = ctx.tensor(t)?;
    let grading = ctx.grading(g)?;
    match kind {
        GradingKind::QS => ctx.core(build_double_qs(q, s, grading, force)),
        GradingKind::QP => ctx.core(build_double_qp(q, s, grading, force)),
    }
}

fn report_double(r: &mut Report, d: &DoubleModel) {
    r.check(d.compatibility.clone());
    r.check(d.homological.clone().named_report("Q_D homological"));
    let w: Vec<String> = d
        .total_weights()
        .into_iter()
        .map(|(n, w)| format!("{n}: {w}"))
        .collect();
    r.object(Object::lines("weights", "total weights", &w));
    let qw = match d.q_d.weight_of() {
        Grade::Homogeneous(w) => w.to_string(),
        Grade::Zero => "zero".to_string(),
        Grade::Mixed(_) => "mixed".to_string(),
    };
    r.object(Object::new("Q_D weight", "weight", qw));
    r.object(Object::new("H", "hamiltonian", d.hamiltonian.render()));
    r.object(Object::new("Q_D", "field", d.q_d.render()));
}

trait Named {
    fn named_report(self, name: &str) -> Check;
}

impl Named for gradedq::structures::CheckReport {
    fn named_report(self, name: &str) -> Check {
        Check::from(&self).named(name)
    }
}

fn sd(
    ctx: &Ctx,
    r: &mut Report,
    f: &str,
    t: &str,
    g: &str,
    connection: &str,
    names: Option<Vec<String>>,
) -> CResult<()> {
    let d = geometric_double(ctx, f, t, g, false, GradingKind::QS)?;
    let conn = match ctx.model.connection(connection) {
        Some(c) => c.connection(),
        None if connection == "flat" => Connection::flat(&d.base),
        None => {
            return Err(CliError::Usage(format!(
                "no connection named `{connection}` in the model"
            )))
        }
    };
    let long = ctx.core(long_momentum_r(&d, &conn, names))?;
    let s = ctx.core(almost_schouten_sd(&d, &long))?;
    r.check(Check::from(&s.jacobi).named("S_D jacobi"));
    if conn.is_flat() {
        let want = ctx.core(flat_sd_formula(&d, &long))?;
        r.check(Check::boolean(
            "flat-formula",
            s.chart.name(),
            want == s.s_d,
            want.render(),
        ));
    }
    r.object(Object::new("r", "tensor", long.r.render()));
    r.object(Object::new("S_D", "tensor", s.s_d.render()));
    let dm = &d.lift;
    let mut lines = Vec::new();
    for a in 0..dm.len() {
        for b in a..dm.len() {
            let v = ctx.core(s.bracket(&SuperPoly::var(dm, a), &SuperPoly::var(dm, b)))?;
            if v.is_zero() {
                continue;
            }
            // weight carried by the bracket itself
            let w = match v.weight_of() {
                Grade::Homogeneous(w) => (w - dm.weight(a) - dm.weight(b)).to_string(),
                _ => "mixed".to_string(),
            };
            lines.push(format!(
                "{{{},{}}} = {} (bracket weight {w})",
                dm.var(a).name,
                dm.var(b).name,
                v.render()
            ));
        }
    }
    r.object(Object::lines("brackets", "S_D brackets", &lines));
    Ok(())
}

fn parity_line(c: &StructureConstants) -> String {
    c.names()
        .iter()
        .zip(c.parities())
        .map(|(n, p)| format!("{n}:{}", if p.is_odd() { "odd" } else { "even" }))
        .collect::<Vec<_>>()
        .join(" ")
}

fn algebra_report(ctx: &Ctx, r: &mut Report, name: &str, cobracket: bool) -> CResult<()> {
    let (c, b) = ctx.algebra(name)?;
    let jac: Vec<(String, String)> = c
        .jacobi_residue()
        .into_iter()
        .map(|((i, j, k), v)| {
            (
                format!("({},{},{})", c.name(i), c.name(j), c.name(k)),
                render_combination(&v, c.names()),
            )
        })
        .collect();
    r.check(Check::listing("jacobi", name, jac));
    let pairing = b.as_ref().and_then(|b| b.pairing.clone());
    if let Some(p) = &pairing {
        r.check(Check::listing(
            "pairing-invariance",
            name,
            triples(&p.invariance_residue(&c), c.names()),
        ));
    }
    r.object(Object::new("basis", "parities", parity_line(&c)));
    r.object(Object::lines("bracket", "table", &c.render_table()));
    if !cobracket {
        return Ok(());
    }
    let q_rank = b
        .as_ref()
        .and_then(|b| {
            b.name
                .strip_prefix("q(")?
                .strip_suffix(')')?
                .parse::<usize>()
                .ok()
        })
        .filter(|&n| n >= 2);
    if let Some(n) = q_rank {
        let split = ctx.core(q_relative_input(n))?;
        let d = ctx.core(relative_double(&split.input))?;
        let names = d.constants.names().to_vec();
        r.check(Check::listing(
            "double-jacobi",
            "relative double",
            d.jacobi
                .iter()
                .map(|((i, j, k), v)| {
                    (
                        format!("({},{},{})", names[*i], names[*j], names[*k]),
                        render_combination(v, &names),
                    )
                })
                .collect(),
        ));
        r.check(Check::listing(
            "double-invariance",
            "relative double",
            triples(&d.invariance, &names),
        ));
        let mism: Vec<(String, String)> = split
            .bracket_mismatches(&d, &c)
            .into_iter()
            .map(|(i, j)| {
                (
                    format!("[{},{}]", c.name(i), c.name(j)),
                    "differs from q(n)".to_string(),
                )
            })
            .collect();
        r.check(Check::listing("subalgebra-bracket", name, mism));
        let delta = ctx.core(split.cobracket_in_q(&d, &c))?;
        let formula = ctx.core(q_cobracket_formula(n))?;
        let bad: Vec<(String, String)> = delta
            .iter()
            .zip(&formula)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(k, (_, b))| (format!("delta({})", c.name(k)), b.render()))
            .collect();
        r.check(Check::listing("cobracket-formula", name, bad));
        let cartan: Vec<(String, String)> = (0..n)
            .flat_map(|k| [k * n + k, n * n + k * n + k])
            .filter(|&i| !delta[i].is_zero())
            .map(|i| (format!("delta({})", c.name(i)), delta[i].render()))
            .collect();
        r.check(Check::listing("cartan-vanishing", name, cartan));
        r.object(Object::lines(
            "cobracket",
            "table",
            &render_sym_cobracket(c.names(), &delta),
        ));
        let signs: Vec<String> = d
            .signs
            .iter()
            .map(|s| {
                let p = |x: Parity| if x.is_odd() { "odd" } else { "even" };
                format!(
                    "{:?} ({},{}): {}",
                    s.family,
                    p(s.parities.0),
                    p(s.parities.1),
                    render_rational(&s.ratio)
                )
            })
            .collect();
        r.object(Object::lines("signs", "sign resolution", &signs));
    } else if let Some(p) = pairing.filter(|p| p.parity().is_odd()) {
        let delta = ctx.core(odd_dual_cobracket(&c, &p))?;
        r.object(Object::lines(
            "cobracket",
            "table",
            &render_sym_cobracket(c.names(), &delta),
        ));
    } else {
        return Err(CliError::Usage(format!(
            "`{name}` has no odd invariant pairing; no cobracket is generated"
        )));
    }
    Ok(())
}
