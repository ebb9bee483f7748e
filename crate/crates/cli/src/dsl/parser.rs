use std::collections::BTreeMap;
use std::sync::Arc;

use gradedq::geometry::{lift, LiftKind};
use gradedq::liealg::{builtin, StructureConstants};
use gradedq::{Chart, GradingKind, GradingSystem, Parity, Rational, SuperPoly, VectorField};
use num_bigint::BigInt;

use super::lexer::{tokenize, Pos, Tok, Token};
use super::{
    AlgebraDecl, AlgebraSource, ChartDecl, ConnectionDecl, FieldDecl, GradingDecl, Item, LiftSpec,
    ModelFile, ParseError, ParseOptions, ShiftSpec, TensorDecl,
};

type PResult<T> = Result<T, ParseError>;

/// Parses model text with default options.
pub fn parse_model(text: &str) -> PResult<ModelFile> {
    parse_model_with(text, &ParseOptions::default())
}

pub fn parse_model_with(text: &str, options: &ParseOptions) -> PResult<ModelFile> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        options,
        model: ModelFile::default(),
        lifts: Vec::new(),
    };
    while !matches!(p.peek(), Tok::Eof) {
        let item = p.item()?;
        p.model.items.push(item);
    }
    Ok(p.model)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    at: usize,
    options: &'a ParseOptions,
    model: ModelFile,
    lifts: Vec<((LiftKind, String, Option<Vec<String>>, i64), Arc<Chart>)>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.tokens[(self.at + k).min(self.tokens.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(self.pos(), msg))
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        self.err(format!("expected {wanted}, found {}", self.peek()))
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else if c == ';' && self.at > 0 {
            // a missing terminator belongs right after the previous token
            let pos = self.tokens[self.at - 1].end;
            Err(ParseError::new(
                pos,
                format!("expected `;` before {}", self.peek()),
            ))
        } else {
            self.unexpected(&format!("`{c}`"))
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.is_kw(kw) {
            self.next();
            Ok(())
        } else {
            self.unexpected(&format!("`{kw}`"))
        }
    }

    fn ident(&mut self) -> PResult<(String, Pos)> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok((s, pos))
            }
            _ => self.unexpected("a name"),
        }
    }

    fn ident_list(&mut self) -> PResult<Vec<(String, Pos)>> {
        let mut out = vec![self.ident()?];
        while self.eat_sym(',') {
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat_sym('-');
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.next();
                let v: i64 = s
                    .parse()
                    .map_err(|_| ParseError::new(pos, format!("integer `{s}` is too large")))?;
                Ok(if neg { -v } else { v })
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn big(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.next();
                Ok(s.parse().expect("digits"))
            }
            _ => self.unexpected("a number"),
        }
    }

    /// `INT` or `INT/INT`, unsigned.
    fn number(&mut self) -> PResult<Rational> {
        let pos = self.pos();
        let n = self.big()?;
        if self.is_sym('/') && matches!(self.peek_at(1), Tok::Int(_)) {
            self.next();
            let d = self.big()?;
            if d == BigInt::from(0) {
                return Err(ParseError::new(pos, "zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    fn signed_number(&mut self) -> PResult<Rational> {
        let neg = self.eat_sym('-');
        let v = self.number()?;
        Ok(if neg { -v } else { v })
    }

    fn parity(&mut self) -> PResult<Parity> {
        if self.is_kw("even") {
            self.next();
            Ok(Parity::Even)
        } else if self.is_kw("odd") {
            self.next();
            Ok(Parity::Odd)
        } else {
            self.unexpected("`even` or `odd`")
        }
    }

    fn fresh_name(&self, name: &str, pos: Pos) -> PResult<()> {
        match self.model.item(name) {
            Some(i) => Err(ParseError::new(
                pos,
                format!("`{name}` is already declared as a {}", i.kind()),
            )),
            None => Ok(()),
        }
    }

    fn item(&mut self) -> PResult<Item> {
        match self.peek() {
            Tok::Ident(s) => match s.as_str() {
                "chart" => self.chart(),
                "grading" => self.grading(),
                "field" => self.field(),
                "tensor" => self.tensor(),
                "connection" => self.connection(),
                "algebra" => self.algebra(),
                other => self.err(format!("unknown declaration `{other}`")),
            },
            _ => self.unexpected("a declaration"),
        }
    }

    fn chart(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        self.expect_sym('{')?;
        let mut vars: Vec<(String, Parity, i64)> = Vec::new();
        while !self.eat_sym('}') {
            self.expect_kw("var")?;
            let names = self.ident_list()?;
            self.expect_sym(':')?;
            let parity = self.parity()?;
            self.expect_sym(',')?;
            self.expect_kw("weight")?;
            let w = self.int()?;
            self.expect_sym(';')?;
            for (n, p) in names {
                if vars.iter().any(|v| v.0 == n) {
                    return Err(ParseError::new(
                        p,
                        format!("variable `{n}` is declared twice"),
                    ));
                }
                vars.push((n, parity, w));
            }
        }
        let chart =
            Chart::base(name.clone(), vars).map_err(|e| ParseError::new(pos, e.to_string()))?;
        Ok(Item::Chart(ChartDecl { name, chart }))
    }

    fn grading(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        self.expect_sym('{')?;
        let (mut q, mut tensor, mut lambda) = (None, None, None);
        while !self.eat_sym('}') {
            let (key, kpos) = self.ident()?;
            self.expect_sym('=')?;
            match key.as_str() {
                "q" => q = Some(self.int()?),
                "s" | "p" => {
                    if tensor.is_some() {
                        return Err(ParseError::new(
                            kpos,
                            "a grading has exactly one of `s` and `p`",
                        ));
                    }
                    let kind = if key == "s" {
                        GradingKind::QS
                    } else {
                        GradingKind::QP
                    };
                    tensor = Some((kind, self.int()?));
                }
                "lambda" => lambda = Some(self.signed_number()?),
                other => {
                    return Err(ParseError::new(
                        kpos,
                        format!("unknown grading key `{other}`"),
                    ))
                }
            }
            self.expect_sym(';')?;
        }
        let q = q.ok_or_else(|| ParseError::new(pos, format!("grading `{name}` needs `q`")))?;
        let (kind, w) = tensor
            .ok_or_else(|| ParseError::new(pos, format!("grading `{name}` needs `s` or `p`")))?;
        let mut system = GradingSystem::new(kind, q, w);
        if let Some(l) = lambda {
            system.lambda = l;
        }
        Ok(Item::Grading(GradingDecl { name, system }))
    }

    fn chart_ref(&mut self) -> PResult<(String, Arc<Chart>)> {
        let (name, pos) = self.ident()?;
        match self.model.chart(&name) {
            Some(c) => Ok((name, c.chart.clone())),
            None => Err(ParseError::new(pos, format!("unknown chart `{name}`"))),
        }
    }

    fn opt_parity(&mut self) -> PResult<Option<Parity>> {
        if self.eat_sym(':') {
            Ok(Some(self.parity()?))
        } else {
            Ok(None)
        }
    }

    fn field(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        let parity = self.opt_parity()?;
        self.expect_kw("on")?;
        let (chart_name, chart) = self.chart_ref()?;
        self.expect_sym('=')?;
        let mut coeffs = vec![SuperPoly::zero(&chart); chart.len()];
        if matches!(self.peek(), Tok::Int(s) if s == "0")
            && matches!(self.peek_at(1), Tok::Sym(';'))
        {
            self.next();
        } else {
            let mut first = true;
            loop {
                let tpos = self.pos();
                let neg = if self.eat_sym('-') {
                    true
                } else if self.eat_sym('+') || first {
                    false
                } else {
                    break;
                };
                first = false;
                let coeff = if matches!(self.peek(), Tok::Partial(_)) {
                    SuperPoly::one(&chart)
                } else {
                    self.product(&chart, true)?
                };
                let var_pos = self.pos();
                let var = match self.peek().clone() {
                    Tok::Partial(v) => {
                        self.next();
                        v
                    }
                    _ => return self.unexpected("`d/dNAME`"),
                };
                let a = chart.index_of(&var).map_err(|_| {
                    ParseError::new(
                        var_pos,
                        format!("unknown variable `{var}` in chart `{chart_name}`"),
                    )
                })?;
                let coeff = if neg { -&coeff } else { coeff };
                if let Some(p) = parity {
                    self.expect_parity(
                        &coeff,
                        p + chart.parity(a),
                        tpos,
                        &format!("coefficient of d/d{var}"),
                    )?;
                }
                coeffs[a] = &coeffs[a] + &coeff;
            }
        }
        self.expect_sym(';')?;
        let field =
            VectorField::new(&chart, coeffs).map_err(|e| ParseError::new(pos, e.to_string()))?;
        Ok(Item::Field(FieldDecl {
            name,
            parity,
            chart: chart_name,
            field,
        }))
    }

    fn expect_parity(&self, f: &SuperPoly, want: Parity, pos: Pos, what: &str) -> PResult<()> {
        match f.homogeneous_parity() {
            Ok(None) => Ok(()),
            Ok(Some(p)) if p == want => Ok(()),
            Ok(Some(p)) => Err(ParseError::new(
                pos,
                format!("parity mismatch: {what} is {p}, expected {want}"),
            )),
            Err(_) => Err(ParseError::new(
                pos,
                format!("parity mismatch: {what} mixes parities"),
            )),
        }
    }

    fn lift_spec(&mut self) -> PResult<(LiftSpec, Arc<Chart>)> {
        let kpos = self.pos();
        let kind = if self.is_kw("lift") {
            LiftKind::Cotangent
        } else if self.is_kw("antilift") {
            LiftKind::AntiCotangent
        } else {
            return self.unexpected("`lift` or `antilift`");
        };
        self.next();
        self.expect_sym('(')?;
        let (chart_name, base) = self.chart_ref()?;
        let mut names = None;
        let mut shift = ShiftSpec::Int(0);
        let mut shift_value = 0;
        while self.eat_sym(';') {
            if self.is_kw("shift") && matches!(self.peek_at(1), Tok::Sym('=')) {
                self.next();
                self.next();
                if let Tok::Ident(_) = self.peek() {
                    let (g, gpos) = self.ident()?;
                    let sys = self
                        .model
                        .grading(&g)
                        .ok_or_else(|| ParseError::new(gpos, format!("unknown grading `{g}`")))?;
                    if sys.system.kind.lift_kind() != kind {
                        return Err(ParseError::new(
                            gpos,
                            format!("grading `{g}` does not use this kind of lift"),
                        ));
                    }
                    shift_value = sys.system.shift();
                    shift = ShiftSpec::Grading(g);
                } else {
                    shift_value = self.int()?;
                    shift = ShiftSpec::Int(shift_value);
                }
            } else if names.is_none() {
                names = Some(
                    self.ident_list()?
                        .into_iter()
                        .map(|(n, _)| n)
                        .collect::<Vec<_>>(),
                );
            } else {
                return self.unexpected("`shift = ...`");
            }
        }
        self.expect_sym(')')?;
        let key = (kind, chart_name.clone(), names.clone(), shift_value);
        let chart = match self.lifts.iter().find(|(k, _)| *k == key) {
            Some((_, c)) => c.clone(),
            None => {
                let c = lift(&base, kind, shift_value, names.clone())
                    .map_err(|e| ParseError::new(kpos, e.to_string()))?;
                self.lifts.push((key, c.clone()));
                c
            }
        };
        Ok((
            LiftSpec {
                kind,
                chart: chart_name,
                names,
                shift,
            },
            chart,
        ))
    }

    fn tensor(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        let parity = self.opt_parity()?;
        self.expect_kw("on")?;
        let (spec, chart) = self.lift_spec()?;
        self.expect_sym('=')?;
        let epos = self.pos();
        let poly = self.expr(&chart)?;
        if let Some(p) = parity {
            self.expect_parity(&poly, p, epos, &format!("tensor `{name}`"))?;
        }
        self.expect_sym(';')?;
        Ok(Item::Tensor(TensorDecl {
            name,
            parity,
            lift: spec,
            poly,
        }))
    }

    fn connection(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        self.expect_kw("on")?;
        let (chart_name, base) = self.chart_ref()?;
        self.expect_sym('{')?;
        let mut christoffels = BTreeMap::new();
        while !self.eat_sym('}') {
            self.expect_kw("Gamma")?;
            self.expect_sym('[')?;
            let mut idx = [0usize; 3];
            for (k, slot) in idx.iter_mut().enumerate() {
                if k > 0 {
                    self.expect_sym(',')?;
                }
                let (v, vpos) = self.ident()?;
                *slot = base.index_of(&v).map_err(|_| {
                    ParseError::new(
                        vpos,
                        format!("unknown variable `{v}` in chart `{chart_name}`"),
                    )
                })?;
            }
            self.expect_sym(']')?;
            self.expect_sym('=')?;
            let g = self.expr(&base)?;
            self.expect_sym(';')?;
            let key = (idx[0], idx[1], idx[2]);
            let total = match christoffels.remove(&key) {
                Some(old) => &old + &g,
                None => g,
            };
            if !total.is_zero() {
                christoffels.insert(key, total);
            }
        }
        Ok(Item::Connection(ConnectionDecl {
            name,
            chart: chart_name,
            base,
            christoffels,
        }))
    }

    fn algebra(&mut self) -> PResult<Item> {
        self.next();
        let (name, pos) = self.ident()?;
        self.fresh_name(&name, pos)?;
        self.expect_sym('=')?;
        let spos = self.pos();
        let (source, constants) = if self.is_kw("sc") {
            self.next();
            let path = match self.peek().clone() {
                Tok::Str(s) => {
                    self.next();
                    s
                }
                _ => return self.unexpected("a quoted file name"),
            };
            let full = match &self.options.base_dir {
                Some(d) => d.join(&path),
                None => path.clone().into(),
            };
            let text = std::fs::read_to_string(&full)
                .map_err(|e| ParseError::new(spos, format!("cannot read `{path}`: {e}")))?;
            let c = StructureConstants::from_json(&text)
                .map_err(|e| ParseError::new(spos, format!("`{path}`: {e}")))?;
            (AlgebraSource::File(path), c)
        } else {
            let (family, _) = self.ident()?;
            let mut text = family;
            if self.eat_sym('(') {
                text.push('(');
                text.push_str(&self.int()?.to_string());
                if self.eat_sym('|') {
                    text.push('|');
                    text.push_str(&self.int()?.to_string());
                }
                self.expect_sym(')')?;
                text.push(')');
            }
            let b = builtin(&text).map_err(|e| ParseError::new(spos, e.to_string()))?;
            (AlgebraSource::Builtin(text), b.constants)
        };
        self.expect_sym(';')?;
        Ok(Item::Algebra(AlgebraDecl {
            name,
            source,
            constants,
        }))
    }

    fn cap(&self, f: SuperPoly, pos: Pos) -> PResult<SuperPoly> {
        if f.max_degree() > self.options.degree_cap {
            return Err(ParseError::new(
                pos,
                format!(
                    "expression exceeds the degree cap {} (GRADEDQ_DEGREE_CAP)",
                    self.options.degree_cap
                ),
            ));
        }
        Ok(f)
    }

    /// `[+|-] product (('+'|'-') product)*`
    fn expr(&mut self, chart: &Arc<Chart>) -> PResult<SuperPoly> {
        let neg = if self.eat_sym('-') {
            true
        } else {
            self.eat_sym('+');
            false
        };
        let first = self.product(chart, false)?;
        let mut acc = if neg { -&first } else { first };
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.product(chart, false)?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.product(chart, false)?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// `unary ('*' unary)*`; inside a field term a trailing `* d/dx` is left
    /// for the caller.
    fn product(&mut self, chart: &Arc<Chart>, in_field: bool) -> PResult<SuperPoly> {
        let mut acc = self.unary(chart)?;
        loop {
            let pos = self.pos();
            if self.is_sym('*') {
                if in_field && matches!(self.peek_at(1), Tok::Partial(_)) {
                    self.next();
                    return Ok(acc);
                }
                self.next();
                let rhs = self.unary(chart)?;
                acc = self.cap(&acc * &rhs, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, chart: &Arc<Chart>) -> PResult<SuperPoly> {
        if self.eat_sym('-') {
            return Ok(-&self.unary(chart)?);
        }
        self.power(chart)
    }

    fn power(&mut self, chart: &Arc<Chart>) -> PResult<SuperPoly> {
        let base = self.primary(chart)?;
        if self.is_sym('^') {
            self.next();
            let pos = self.pos();
            let n = self.int()?;
            if n < 0 {
                return Err(ParseError::new(pos, "negative exponent"));
            }
            let d = base.max_degree() as i64;
            if d.saturating_mul(n) > self.options.degree_cap as i64 {
                return Err(ParseError::new(
                    pos,
                    format!(
                        "expression exceeds the degree cap {} (GRADEDQ_DEGREE_CAP)",
                        self.options.degree_cap
                    ),
                ));
            }
            return Ok(base.pow(n as u32));
        }
        Ok(base)
    }

    fn primary(&mut self, chart: &Arc<Chart>) -> PResult<SuperPoly> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.next();
                SuperPoly::var_named(chart, &v).map_err(|_| {
                    ParseError::new(
                        pos,
                        format!("unknown variable `{v}` in chart `{}`", chart.name()),
                    )
                })
            }
            Tok::Int(_) => Ok(SuperPoly::constant(chart, self.number()?)),
            Tok::Sym('(') => {
                self.next();
                let e = self.expr(chart)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => self.unexpected("an expression"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{AlgebraSource, Item, ParseOptions, ShiftSpec};
    use gradedq::Parity;

    const BASIC: &str = "chart M { var x : even, weight 2; var a, b : odd, weight 1; }\n\
                         grading G { q = 1; s = -1; lambda = 1/2; }\n\
                         field Q : odd on M = x*a d/dx + a*b d/da;\n\
                         tensor S : odd on lift(M; p, pa, pb; shift = G) = 0;\n\
                         algebra g = sl(2);\n";

    fn fails(text: &str) -> ParseError {
        parse_model(text).unwrap_err()
    }

    #[test]
    fn parses_every_item_kind() {
        let m = parse_model(BASIC).unwrap();
        assert_eq!(m.items.len(), 5);
        let c = &m.chart("M").unwrap().chart;
        assert_eq!(c.names(), vec!["x", "a", "b"]);
        assert_eq!(c.parity(1), Parity::Odd);
        assert_eq!(c.weight(0), 2);
        let g = &m.grading("G").unwrap().system;
        assert_eq!(g.shift(), 2);
        assert_eq!(
            m.field("Q").unwrap().field.render(),
            "(x*a) d/dx + (a*b) d/da"
        );
        let t = m.tensor("S").unwrap();
        assert_eq!(t.lift.shift, ShiftSpec::Grading("G".into()));
        assert_eq!(t.poly.chart().names(), vec!["x", "a", "b", "p", "pa", "pb"]);
        assert!(
            matches!(&m.algebra("g").unwrap().source, AlgebraSource::Builtin(s) if s == "sl(2)")
        );
        assert!(matches!(m.item("Q"), Some(Item::Field(_))));
    }

    #[test]
    fn precedence_and_rationals() {
        let m = parse_model(
            "chart M { var x, y : even, weight 0; }\nfield X on M = (-x^2*y + 3/4*(x - y)^2) d/dx;",
        )
        .unwrap();
        assert_eq!(
            m.field("X").unwrap().field.render(),
            "(3/4*x^2 - 3/2*x*y + 3/4*y^2 - x^2*y) d/dx"
        );
    }

    #[test]
    fn odd_squares_vanish() {
        let m =
            parse_model("chart M { var a : odd, weight 0; }\nfield X on M = a*a d/da;").unwrap();
        assert!(m.field("X").unwrap().field.is_zero());
    }

    #[test]
    fn error_positions() {
        let e = fails("chart M {\n  var x : even weight 0;\n}");
        assert_eq!(e.pos, Pos { line: 2, col: 16 });
        let e = fails("chart M { var x : even, weight 0; }\nfield Q on M = z d/dx;");
        assert_eq!((e.pos.line, e.pos.col), (2, 16));
        assert!(e.message.contains("unknown variable `z`"));
        let e = fails("chart M { var x : even, weight 0; }\nfield Q on N = 0;");
        assert!(e.message.contains("N"));
    }

    #[test]
    fn missing_semicolon_points_at_previous_token() {
        let e = fails("chart M {\n  var x : even, weight 0\n  var y : even, weight 0;\n}");
        assert_eq!(e.pos, Pos { line: 2, col: 25 });
    }

    #[test]
    fn declared_parity_is_enforced() {
        let e = fails("chart M { var x : even, weight 0; var a : odd, weight 0; }\nfield Q : odd on M = x d/dx;");
        assert!(e.message.contains("odd"), "{}", e.message);
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let e = fails("chart M { var x : even, weight 0; }\nchart M { var y : even, weight 0; }");
        assert!(e.message.contains("M"));
        let e = fails("chart M { var x, x : even, weight 0; }");
        assert!(e.message.contains("x"));
    }

    #[test]
    fn degree_cap_applies_to_products_and_powers() {
        let text = "chart M { var x : even, weight 0; }\nfield X on M = x^5 d/dx;";
        let tight = ParseOptions {
            degree_cap: 4,
            ..Default::default()
        };
        assert!(parse_model_with(text, &tight)
            .unwrap_err()
            .message
            .contains("degree"));
        let text = "chart M { var x : even, weight 0; }\nfield X on M = (x^2*x^2)*x d/dx;";
        assert!(parse_model_with(text, &tight).is_err());
        let ok = ParseOptions {
            degree_cap: 5,
            ..Default::default()
        };
        assert!(parse_model_with(text, &ok).is_ok());
    }

    #[test]
    fn lifts_are_shared_between_tensors() {
        let m = parse_model(
            "chart M { var a : odd, weight 1; }\n\
             tensor A : even on antilift(M; s) = 2*s^2;\n\
             tensor B : even on antilift(M; s) = s^2;",
        )
        .unwrap();
        let a = m.tensor("A").unwrap().poly.chart().clone();
        let b = m.tensor("B").unwrap().poly.chart().clone();
        assert!(std::sync::Arc::ptr_eq(&a, &b));
    }
}
