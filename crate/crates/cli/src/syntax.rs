//! Script syntax: tokens, the statement tree, the parser and a renderer that
//! produces text the parser accepts again.
//!
//! ```text
//! script  := stmt+ ;                      (one statement per line)
//! stmt    := "ring" ident ("," ident)* | ident "=" ideal | command ;
//! ideal   := "0" | mono ("," mono)* ;
//! mono    := factor ("*" factor)* ;       ("1" is accepted for the unit)
//! factor  := ident ("^" integer)? ;
//! command := name arg* ;                  (argument kinds fixed per command)
//! ordinal := term ("+" term)* ; term := integer | integer? "w" ("^" integer)? ;
//! ref     := ident | ident "/" ident ;
//! ```

use std::fmt;

use ordlen::Ordinal;

use crate::commands::{ArgKind, CommandRegistry};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(u64),
    Comma,
    Star,
    Caret,
    Eq,
    Slash,
    Plus,
    Minus,
    Newline,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Int(n) => write!(f, "`{n}`"),
            Token::Comma => f.write_str("`,`"),
            Token::Star => f.write_str("`*`"),
            Token::Caret => f.write_str("`^`"),
            Token::Eq => f.write_str("`=`"),
            Token::Slash => f.write_str("`/`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Newline => f.write_str("end of line"),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {col}: {message} (found {found})")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub found: String,
    pub message: String,
}

pub fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line_no = lineno + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let single = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                ',' => Some(Token::Comma),
                '*' => Some(Token::Star),
                '^' => Some(Token::Caret),
                '=' => Some(Token::Eq),
                '/' => Some(Token::Slash),
                '+' => Some(Token::Plus),
                '-' => Some(Token::Minus),
                _ => None,
            };
            if let Some(token) = single {
                out.push(Spanned {
                    token,
                    line: line_no,
                    col,
                });
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text.parse().map_err(|_| ParseError {
                    line: line_no,
                    col,
                    found: format!("`{text}`"),
                    message: "integer out of range".into(),
                })?;
                out.push(Spanned {
                    token: Token::Int(value),
                    line: line_no,
                    col,
                });
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                // ω stands alone so that `2ω` and `ωx` do not glue together
                if c == 'ω' {
                    i += 1;
                } else {
                    while i < chars.len()
                        && (chars[i].is_alphanumeric() || chars[i] == '_')
                        && chars[i] != 'ω'
                    {
                        i += 1;
                    }
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Spanned {
                    token: Token::Ident(text),
                    line: line_no,
                    col,
                });
                continue;
            }
            return Err(ParseError {
                line: line_no,
                col,
                found: format!("`{c}`"),
                message: "unexpected character".into(),
            });
        }
        out.push(Spanned {
            token: Token::Newline,
            line: line_no,
            col: chars.len() + 1,
        });
    }
    let last = input.lines().count().max(1);
    out.push(Spanned {
        token: Token::Eof,
        line: last + 1,
        col: 1,
    });
    Ok(out)
}

/// A monomial as written: `(variable, exponent)` factors.
pub type MonoExpr = Vec<(String, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Zero,
    Gens(Vec<MonoExpr>),
}

/// `I` denotes `R/I`; `J/I` the subquotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleRef {
    Cyclic(String),
    Sub { upper: String, lower: String },
}

impl fmt::Display for ModuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleRef::Cyclic(i) => write!(f, "R/{i}"),
            ModuleRef::Sub { upper, lower } => write!(f, "{upper}/{lower}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Int(i64),
    Ref(ModuleRef),
    Ordinal(Ordinal),
}

/// Equality ignores `line`.
#[derive(Clone, Debug, Eq)]
pub struct CommandCall {
    pub name: String,
    pub args: Vec<Arg>,
    pub line: usize,
}

impl PartialEq for CommandCall {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.args == other.args
    }
}

/// Equality ignores source lines.
#[derive(Clone, Debug, Eq)]
pub enum Stmt {
    Ring(Vec<String>),
    Bind {
        name: String,
        ideal: IdealExpr,
        line: usize,
    },
    Command(CommandCall),
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Stmt::Ring(a), Stmt::Ring(b)) => a == b,
            (
                Stmt::Bind {
                    name: a, ideal: i, ..
                },
                Stmt::Bind {
                    name: b, ideal: j, ..
                },
            ) => a == b && i == j,
            (Stmt::Command(a), Stmt::Command(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    registry: &'a CommandRegistry,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].token
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, message: impl Into<String>) -> ParseError {
        ParseError {
            line: at.line,
            col: at.col,
            found: at.token.to_string(),
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.peek(), message)
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match &self.peek().token {
            Token::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek().token {
            Token::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn script(&mut self) -> Result<Script, ParseError> {
        let mut stmts = Vec::new();
        loop {
            match self.peek().token {
                Token::Eof => break,
                Token::Newline => {
                    self.bump();
                }
                _ => {
                    stmts.push(self.stmt()?);
                    match self.peek().token {
                        Token::Newline | Token::Eof => {}
                        _ => return Err(self.error("expected end of statement")),
                    }
                }
            }
        }
        if stmts.is_empty() {
            return Err(self.error("empty script"));
        }
        Ok(Script { stmts })
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let start = self.peek().clone();
        let Token::Ident(word) = &start.token else {
            return Err(self.error("expected a statement"));
        };
        if word == "ring" {
            self.bump();
            let mut vars = vec![self.ident("variable name")?];
            while self.peek().token == Token::Comma {
                self.bump();
                vars.push(self.ident("variable name")?);
            }
            return Ok(Stmt::Ring(vars));
        }
        if *self.peek_at(1) == Token::Eq {
            let name = word.clone();
            if name == "ring" || self.registry.get(&name).is_some() {
                return Err(self.error(format!("`{name}` is reserved")));
            }
            self.bump();
            self.bump();
            let ideal = self.ideal()?;
            return Ok(Stmt::Bind {
                name,
                ideal,
                line: start.line,
            });
        }
        let Some(cmd) = self.registry.get(word) else {
            return Err(self.error("unknown command"));
        };
        let name = word.clone();
        self.bump();
        let mut args = Vec::new();
        for kind in cmd.signature() {
            args.push(match kind {
                ArgKind::Int => Arg::Int(self.signed_int()?),
                ArgKind::Module => Arg::Ref(self.module_ref()?),
                ArgKind::Ordinal => Arg::Ordinal(self.ordinal()?),
            });
        }
        Ok(Stmt::Command(CommandCall {
            name,
            args,
            line: start.line,
        }))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.peek().token == Token::Minus;
        if negative {
            self.bump();
        }
        let n = self.int("integer")?;
        let n = i64::try_from(n).map_err(|_| self.error("integer out of range"))?;
        Ok(if negative { -n } else { n })
    }

    fn module_ref(&mut self) -> Result<ModuleRef, ParseError> {
        let first = self.ident("ideal name")?;
        if self.peek().token == Token::Slash {
            self.bump();
            let lower = self.ident("ideal name after `/`")?;
            return Ok(ModuleRef::Sub {
                upper: first,
                lower,
            });
        }
        Ok(ModuleRef::Cyclic(first))
    }

    fn ideal(&mut self) -> Result<IdealExpr, ParseError> {
        if self.peek().token == Token::Int(0) {
            self.bump();
            return Ok(IdealExpr::Zero);
        }
        let mut gens = vec![self.mono()?];
        while self.peek().token == Token::Comma {
            self.bump();
            gens.push(self.mono()?);
        }
        Ok(IdealExpr::Gens(gens))
    }

    fn mono(&mut self) -> Result<MonoExpr, ParseError> {
        if self.peek().token == Token::Int(1) {
            self.bump();
            return Ok(Vec::new());
        }
        let mut factors = vec![self.factor()?];
        while self.peek().token == Token::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<(String, u32), ParseError> {
        let var = self.ident("variable")?;
        if self.peek().token == Token::Caret {
            let caret = self.bump();
            let Token::Int(e) = self.peek().token else {
                return Err(self.error_at(&caret, "expected integer exponent after `^`"));
            };
            self.bump();
            let e = u32::try_from(e).map_err(|_| self.error_at(&caret, "exponent out of range"))?;
            return Ok((var, e));
        }
        Ok((var, 1))
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseError> {
        let mut total = Ordinal::zero();
        loop {
            let term = self.ordinal_term()?;
            total = total.cantor_sum(&term);
            if self.peek().token != Token::Plus {
                return Ok(total);
            }
            self.bump();
        }
    }

    fn ordinal_term(&mut self) -> Result<Ordinal, ParseError> {
        let coeff = match self.peek().token {
            Token::Int(n) => {
                self.bump();
                Some(n)
            }
            _ => None,
        };
        let is_omega = matches!(&self.peek().token, Token::Ident(s) if s == "w" || s == "ω");
        if !is_omega {
            return match coeff {
                Some(n) => Ok(Ordinal::finite(n)),
                None => Err(self.error("expected ordinal term")),
            };
        }
        self.bump();
        let mut exp = 1;
        if self.peek().token == Token::Caret {
            let caret = self.bump();
            let Token::Int(e) = self.peek().token else {
                return Err(self.error_at(&caret, "expected integer exponent after `^`"));
            };
            self.bump();
            exp = u32::try_from(e).map_err(|_| self.error_at(&caret, "exponent out of range"))?;
        }
        Ok(Ordinal::monomial(exp, coeff.unwrap_or(1)))
    }
}

/// Parses a script; command names and their argument kinds come from
/// `registry`.
pub fn parse_with(input: &str, registry: &CommandRegistry) -> Result<Script, ParseError> {
    let tokens = tokenize(input)?;
    Parser {
        tokens,
        pos: 0,
        registry,
    }
    .script()
}

pub fn parse(input: &str) -> Result<Script, ParseError> {
    parse_with(input, &CommandRegistry::builtin())
}

fn render_mono(m: &MonoExpr) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter()
        .map(|(v, e)| {
            if *e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for stmt in &self.stmts {
            match stmt {
                Stmt::Ring(vars) => writeln!(f, "ring {}", vars.join(", "))?,
                Stmt::Bind { name, ideal, .. } => {
                    let body = match ideal {
                        IdealExpr::Zero => "0".to_string(),
                        IdealExpr::Gens(g) => {
                            g.iter().map(render_mono).collect::<Vec<_>>().join(", ")
                        }
                    };
                    writeln!(f, "{name} = {body}")?;
                }
                Stmt::Command(call) => {
                    let mut line = call.name.clone();
                    for arg in &call.args {
                        line.push(' ');
                        match arg {
                            Arg::Int(n) => line.push_str(&n.to_string()),
                            Arg::Ref(r) => match r {
                                ModuleRef::Cyclic(i) => line.push_str(i),
                                ModuleRef::Sub { upper, lower } => {
                                    line.push_str(&format!("{upper}/{lower}"))
                                }
                            },
                            Arg::Ordinal(o) => line.push_str(&format!("{o:#}")),
                        }
                    }
                    writeln!(f, "{line}")?;
                }
            }
        }
        Ok(())
    }
}
