use std::fmt;

use super::ParseError;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    /// `d/dNAME`
    Partial(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "number `{s}`"),
            Tok::Str(s) => write!(f, "string \"{s}\""),
            Tok::Partial(s) => write!(f, "`d/d{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// Position just past the token.
    pub end: Pos,
}

fn greek(c: char) -> Option<&'static str> {
    Some(match c {
        'α' => "alpha",
        'β' => "beta",
        'γ' => "gamma",
        'Γ' => "Gamma",
        'δ' => "delta",
        'ε' => "eps",
        'ζ' => "zeta",
        'η' => "eta",
        'θ' => "theta",
        'κ' => "kappa",
        'λ' => "lambda",
        'μ' => "mu",
        'ν' => "nu",
        'ξ' => "xi",
        'π' => "pi",
        'ρ' => "rho",
        'σ' => "sigma",
        'τ' => "tau",
        'φ' => "phi",
        'χ' => "chi",
        'ψ' => "psi",
        'ω' => "omega",
        _ => return None,
    })
}

fn script_digit(c: char) -> Option<char> {
    let d = match c {
        '₀'..='₉' => c as u32 - '₀' as u32,
        '⁰' => 0,
        '¹' => 1,
        '²' => 2,
        '³' => 3,
        '⁴'..='⁹' => c as u32 - '⁴' as u32 + 4,
        _ => return None,
    };
    char::from_digit(d, 10)
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || greek(c).is_some()
}

fn ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || greek(c).is_some() || script_digit(c).is_some()
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Cursor<'_> {
    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !ident_continue(c) {
                break;
            }
            self.bump();
            match (greek(c), script_digit(c)) {
                (Some(g), _) => s.push_str(g),
                (_, Some(d)) => s.push(d),
                _ => s.push(c),
            }
        }
        s
    }
}

/// Splits model text into tokens. `#` and `//` start line comments;
/// Greek letters and sub/superscript digits in names are read as their
/// ASCII spellings.
pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    loop {
        let pos = cur.pos();
        let Some(c) = cur.peek() else {
            out.push(Token {
                tok: Tok::Eof,
                pos,
                end: pos,
            });
            return Ok(out);
        };
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        let tok = if c == '/' {
            cur.bump();
            if cur.peek() == Some('/') {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
                continue;
            }
            Tok::Sym('/')
        } else if c == 'd' || c == '∂' {
            let name = if c == '∂' {
                cur.bump();
                "∂".to_string()
            } else {
                cur.ident()
            };
            if (name == "d" || name == "∂") && cur.peek() == Some('/') {
                cur.bump();
                match cur.peek() {
                    Some(d) if d == name.chars().next().unwrap_or('d') => {
                        cur.bump();
                    }
                    _ => {
                        return Err(ParseError::new(
                            pos,
                            format!("expected `{name}/{name}NAME`"),
                        ))
                    }
                }
                if !cur.peek().is_some_and(ident_start) {
                    return Err(ParseError::new(pos, "expected a variable name after `d/d`"));
                }
                Tok::Partial(cur.ident())
            } else if name == "∂" {
                return Err(ParseError::new(pos, "stray `∂`"));
            } else {
                Tok::Ident(name)
            }
        } else if ident_start(c) {
            Tok::Ident(cur.ident())
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(d) = cur.peek().filter(char::is_ascii_digit) {
                cur.bump();
                s.push(d);
            }
            Tok::Int(s)
        } else if c == '"' {
            cur.bump();
            let mut s = String::new();
            loop {
                match cur.bump() {
                    Some('"') => break,
                    Some('\n') | None => return Err(ParseError::new(pos, "unterminated string")),
                    Some(ch) => s.push(ch),
                }
            }
            Tok::Str(s)
        } else {
            cur.bump();
            match c {
                '{' | '}' | '(' | ')' | '[' | ']' | ';' | ':' | ',' | '=' | '+' | '-' | '*'
                | '^' | '|' => Tok::Sym(c),
                '−' => Tok::Sym('-'),
                '·' => Tok::Sym('*'),
                other => {
                    return Err(ParseError::new(
                        pos,
                        format!("unexpected character `{other}`"),
                    ))
                }
            }
        };
        out.push(Token {
            tok,
            pos,
            end: cur.pos(),
        });
    }
}
