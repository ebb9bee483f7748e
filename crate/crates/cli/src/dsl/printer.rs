use gradedq::geometry::LiftKind;
use gradedq::superpoly::render_rational;
use gradedq::{GradingKind, Parity};

use super::{AlgebraSource, Item, ModelFile, ShiftSpec};

fn parity_word(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

fn parity_suffix(p: Option<Parity>) -> String {
    p.map(|p| format!(" : {}", parity_word(p)))
        .unwrap_or_default()
}

/// Canonical text of a model; parsing it back gives an equal model.
pub fn print_model(m: &ModelFile) -> String {
    let mut out = String::new();
    for (k, item) in m.items.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&print_item(item));
    }
    out
}

fn print_item(item: &Item) -> String {
    match item {
        Item::Chart(d) => {
            let mut s = format!("chart {} {{\n", d.name);
            let vars = d.chart.vars();
            let mut i = 0;
            while i < vars.len() {
                let mut j = i + 1;
                while j < vars.len()
                    && vars[j].parity == vars[i].parity
                    && vars[j].weight == vars[i].weight
                {
                    j += 1;
                }
                let names: Vec<&str> = vars[i..j].iter().map(|v| v.name.as_str()).collect();
                s.push_str(&format!(
                    "  var {} : {}, weight {};\n",
                    names.join(", "),
                    parity_word(vars[i].parity),
                    vars[i].weight
                ));
                i = j;
            }
            s.push_str("}\n");
            s
        }
        Item::Grading(d) => {
            let g = &d.system;
            let key = match g.kind {
                GradingKind::QS => "s",
                GradingKind::QP => "p",
            };
            format!(
                "grading {} {{ q = {}; {key} = {}; lambda = {}; }}\n",
                d.name,
                g.q,
                g.tensor_weight,
                render_rational(&g.lambda)
            )
        }
        Item::Field(d) => format!(
            "field {}{} on {} = {};\n",
            d.name,
            parity_suffix(d.parity),
            d.chart,
            d.field.render()
        ),
        Item::Tensor(d) => {
            let kind = match d.lift.kind {
                LiftKind::Cotangent => "lift",
                LiftKind::AntiCotangent => "antilift",
            };
            let mut args = d.lift.chart.clone();
            if let Some(n) = &d.lift.names {
                args.push_str("; ");
                args.push_str(&n.join(", "));
            }
            match &d.lift.shift {
                ShiftSpec::Int(0) => {}
                ShiftSpec::Int(k) => args.push_str(&format!("; shift = {k}")),
                ShiftSpec::Grading(g) => args.push_str(&format!("; shift = {g}")),
            }
            format!(
                "tensor {}{} on {kind}({args}) = {};\n",
                d.name,
                parity_suffix(d.parity),
                d.poly.render()
            )
        }
        Item::Connection(d) => {
            let mut s = format!("connection {} on {} {{\n", d.name, d.chart);
            for (&(a, b, c), g) in &d.christoffels {
                let n = |i: usize| d.base.var(i).name.clone();
                s.push_str(&format!(
                    "  Gamma[{}, {}, {}] = {};\n",
                    n(a),
                    n(b),
                    n(c),
                    g.render()
                ));
            }
            s.push_str("}\n");
            s
        }
        Item::Algebra(d) => match &d.source {
            AlgebraSource::Builtin(t) => format!("algebra {} = {t};\n", d.name),
            AlgebraSource::File(p) => format!("algebra {} = sc \"{p}\";\n", d.name),
        },
    }
}
