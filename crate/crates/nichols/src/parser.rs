//! The instance file format.
//!
//! ```text
//! # A2 at a primitive third root of unity
//! rank 2
//! conductor 3
//! q 1 1 = z; q 1 2 = z^2
//! q 2 1 = 1; q 2 2 = z
//! ```
//!
//! Statements end at a newline or `;`, and `#` starts a comment. `params`
//! declares transcendental parameters (`params q, r`). Entries are
//! expressions in integers, `z` (a fixed primitive N-th root of unity for
//! conductor N), declared parameters, `+ - * /`, parentheses, and `^` with
//! an integer exponent. `conductor` defaults to 1 and `params` to none; both
//! must precede the first `q` line.

use std::fmt;
use std::sync::Arc;

use nichols_core::{Bicharacter, CycloContext, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Zeta,
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Zeta | Expr::Param(_) => 5,
        }
    }

    /// Evaluates in K, failing only on division by zero.
    pub fn eval(&self, ctx: &Arc<CycloContext>) -> Result<Scalar, nichols_core::ScalarError> {
        Ok(match self {
            Expr::Int(v) => Scalar::from_int(ctx, *v),
            Expr::Zeta => Scalar::zeta(ctx),
            Expr::Param(p) => Scalar::param(ctx, ctx.param_index(p).expect("validated at parse time")),
            Expr::Neg(a) => a.eval(ctx)?.neg_ref(),
            Expr::Add(a, b) => a.eval(ctx)?.add_ref(&b.eval(ctx)?),
            Expr::Sub(a, b) => a.eval(ctx)?.sub_ref(&b.eval(ctx)?),
            Expr::Mul(a, b) => a.eval(ctx)?.mul_ref(&b.eval(ctx)?),
            Expr::Div(a, b) => a.eval(ctx)?.checked_div(&b.eval(ctx)?)?,
            Expr::Pow(a, e) => a.eval(ctx)?.pow(*e)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Parenthesize operands that bind more loosely; right operands of
        // `-` and `/` also at equal precedence, keeping the tree unchanged.
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({})", e)
            } else {
                write!(f, "{}", e)
            }
        };
        match self {
            Expr::Int(v) if *v < 0 => write!(f, "({})", v),
            Expr::Int(v) => write!(f, "{}", v),
            Expr::Zeta => write!(f, "z"),
            Expr::Param(p) => write!(f, "{}", p),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, 4)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "*")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "/")?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                write!(f, "^{}", e)
            }
        }
    }
}

/// A parsed and validated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub rank: usize,
    pub conductor: u32,
    pub params: Vec<String>,
    /// `entries[i][j]` is the expression for q_{i+1, j+1}.
    pub entries: Vec<Vec<Expr>>,
}

impl InstanceSpec {
    pub fn context(&self) -> Arc<CycloContext> {
        CycloContext::new(self.conductor, self.params.clone()).expect("validated at parse time")
    }

    pub fn bicharacter(&self) -> Bicharacter {
        let ctx = self.context();
        let q = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(&ctx).expect("validated at parse time")).collect())
            .collect();
        Bicharacter::new(&ctx, q).expect("validated at parse time")
    }

    /// Canonical text; parsing it gives back `self`.
    pub fn emit(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("rank {}\n", self.rank));
        s.push_str(&format!("conductor {}\n", self.conductor));
        if !self.params.is_empty() {
            s.push_str(&format!("params {}\n", self.params.join(", ")));
        }
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                s.push_str(&format!("q {} {} = {}\n", i + 1, j + 1, e));
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    UnknownSymbol,
    ZeroEntry,
    Shape,
    Declaration,
    Arithmetic,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::UnknownSymbol => "unknown symbol",
            DiagnosticKind::ZeroEntry => "zero entry",
            DiagnosticKind::Shape => "shape mismatch",
            DiagnosticKind::Declaration => "invalid declaration",
            DiagnosticKind::Arithmetic => "arithmetic error",
        };
        f.write_str(s)
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {kind}: {message}")]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn diag(line: usize, col: usize, kind: DiagnosticKind, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        line,
        col,
        kind,
        message: message.into(),
    }
}

/// Splits the input into statements of tokens.
fn tokenize(text: &str) -> Result<Vec<Vec<Token>>, Diagnostic> {
    let mut stmts = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = body.chars().collect();
        let mut cur = Vec::new();
        let mut k = 0;
        while k < chars.len() {
            let c = chars[k];
            let col = k + 1;
            if c.is_whitespace() {
                k += 1;
            } else if c == ';' {
                if !cur.is_empty() {
                    stmts.push(std::mem::take(&mut cur));
                }
                k += 1;
            } else if c.is_ascii_digit() {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                let v = s
                    .parse::<i64>()
                    .map_err(|_| diag(line, col, DiagnosticKind::Syntax, format!("integer `{}` is too large", s)))?;
                cur.push(Token { tok: Tok::Int(v), line, col });
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                cur.push(Token { tok: Tok::Ident(s), line, col });
            } else if "+-*/^()=,".contains(c) {
                cur.push(Token { tok: Tok::Sym(c), line, col });
                k += 1;
            } else {
                return Err(diag(line, col, DiagnosticKind::Syntax, format!("unexpected character `{}`", c)));
            }
        }
        if !cur.is_empty() {
            stmts.push(cur);
        }
    }
    Ok(stmts)
}

struct ExprParser<'a> {
    toks: &'a [Token],
    pos: usize,
    params: &'a [String],
    end: (usize, usize),
}

impl ExprParser<'_> {
    fn peek(&self) -> (&Tok, usize, usize) {
        match self.toks.get(self.pos) {
            Some(t) => (&t.tok, t.line, t.col),
            None => (&Tok::End, self.end.0, self.end.1),
        }
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek().0 {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, Diagnostic> {
        if let Tok::Sym('-') = self.peek().0 {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.atom()?;
        if let Tok::Sym('^') = self.peek().0 {
            self.bump();
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    /// `-`? integer, optionally parenthesized.
    fn exponent(&mut self) -> Result<i64, Diagnostic> {
        let paren = matches!(self.peek().0, Tok::Sym('('));
        if paren {
            self.bump();
        }
        let neg = matches!(self.peek().0, Tok::Sym('-'));
        if neg {
            self.bump();
        }
        let (tok, line, col) = self.peek();
        let Tok::Int(v) = *tok else {
            return Err(diag(line, col, DiagnosticKind::Syntax, "exponent must be an integer"));
        };
        self.bump();
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -v } else { v })
    }

    fn expect(&mut self, c: char) -> Result<(), Diagnostic> {
        let (tok, line, col) = self.peek();
        if *tok == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(diag(line, col, DiagnosticKind::Syntax, format!("expected `{}`", c)))
        }
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        let (tok, line, col) = self.peek();
        let tok = tok.clone();
        match tok {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "z" {
                    Ok(Expr::Zeta)
                } else if self.params.contains(&name) {
                    Ok(Expr::Param(name))
                } else {
                    Err(diag(
                        line,
                        col,
                        DiagnosticKind::UnknownSymbol,
                        format!("`{}` is neither `z` nor a declared parameter", name),
                    ))
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::End => Err(diag(line, col, DiagnosticKind::Syntax, "expression expected")),
            Tok::Sym(c) => Err(diag(line, col, DiagnosticKind::Syntax, format!("unexpected `{}`", c))),
        }
    }
}

/// Parses one expression against the given parameter names.
pub fn parse_expr(text: &str, params: &[String]) -> Result<Expr, Diagnostic> {
    let stmts = tokenize(text)?;
    let toks: Vec<Token> = stmts.into_iter().flatten().collect();
    let end = toks.last().map_or((1, 1), |t| (t.line, t.col + 1));
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        params,
        end,
    };
    let e = p.expr()?;
    if let Some(t) = toks.get(p.pos) {
        return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "unexpected trailing input"));
    }
    Ok(e)
}

fn positive_int(tok: Option<&Token>, after: &Token, what: &str) -> Result<(i64, usize, usize), Diagnostic> {
    match tok {
        Some(Token {
            tok: Tok::Int(v),
            line,
            col,
        }) => Ok((*v, *line, *col)),
        Some(t) => Err(diag(t.line, t.col, DiagnosticKind::Syntax, format!("{} must be an integer", what))),
        None => Err(diag(
            after.line,
            after.col,
            DiagnosticKind::Syntax,
            format!("missing {}", what),
        )),
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceSpec, Diagnostic> {
    let stmts = tokenize(text)?;
    let mut rank: Option<(usize, usize, usize)> = None;
    let mut conductor: Option<u32> = None;
    let mut params: Vec<String> = Vec::new();
    let mut params_seen = false;
    let mut ctx: Option<Arc<CycloContext>> = None;
    let mut entries: Vec<(usize, usize, Expr, usize, usize)> = Vec::new();
    for st in &stmts {
        let head = &st[0];
        let Tok::Ident(key) = &head.tok else {
            return Err(diag(head.line, head.col, DiagnosticKind::Syntax, "statement must start with a keyword"));
        };
        let after_ctx = |what: &str| {
            diag(
                head.line,
                head.col,
                DiagnosticKind::Declaration,
                format!("`{}` must come before the first `q` line", what),
            )
        };
        match key.as_str() {
            "rank" => {
                if rank.is_some() {
                    return Err(diag(head.line, head.col, DiagnosticKind::Declaration, "rank declared twice"));
                }
                let (v, line, col) = positive_int(st.get(1), head, "rank")?;
                if !(1..=16).contains(&v) {
                    return Err(diag(line, col, DiagnosticKind::Declaration, "rank must be between 1 and 16"));
                }
                if let Some(t) = st.get(2) {
                    return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "unexpected trailing input"));
                }
                rank = Some((v as usize, line, col));
            }
            "conductor" => {
                if ctx.is_some() {
                    return Err(after_ctx("conductor"));
                }
                if conductor.is_some() {
                    return Err(diag(head.line, head.col, DiagnosticKind::Declaration, "conductor declared twice"));
                }
                let (v, line, col) = positive_int(st.get(1), head, "conductor")?;
                if !(1..=1000).contains(&v) {
                    return Err(diag(line, col, DiagnosticKind::Declaration, "conductor must be between 1 and 1000"));
                }
                if let Some(t) = st.get(2) {
                    return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "unexpected trailing input"));
                }
                conductor = Some(v as u32);
            }
            "params" => {
                if ctx.is_some() {
                    return Err(after_ctx("params"));
                }
                if params_seen {
                    return Err(diag(head.line, head.col, DiagnosticKind::Declaration, "params declared twice"));
                }
                params_seen = true;
                for t in &st[1..] {
                    match &t.tok {
                        Tok::Sym(',') => {}
                        Tok::Ident(name) if name == "z" => {
                            return Err(diag(t.line, t.col, DiagnosticKind::Declaration, "`z` is reserved for the root of unity"));
                        }
                        Tok::Ident(name) => {
                            if params.contains(name) {
                                return Err(diag(t.line, t.col, DiagnosticKind::Declaration, format!("parameter `{}` declared twice", name)));
                            }
                            params.push(name.clone());
                        }
                        _ => return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "expected a parameter name")),
                    }
                }
            }
            "q" => {
                let ctx = ctx.get_or_insert_with(|| {
                    CycloContext::new(conductor.unwrap_or(1), params.clone()).expect("names validated above")
                });
                let (i, li, ci) = positive_int(st.get(1), head, "row index")?;
                let (j, lj, cj) = positive_int(st.get(2), st.get(1).unwrap_or(head), "column index")?;
                match st.get(3) {
                    Some(Token { tok: Tok::Sym('='), .. }) => {}
                    Some(t) => return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "expected `=`")),
                    None => return Err(diag(head.line, head.col, DiagnosticKind::Syntax, "expected `=`")),
                }
                let last = st.last().expect("nonempty");
                let mut p = ExprParser {
                    toks: &st[4..],
                    pos: 0,
                    params: &params,
                    end: (last.line, last.col + 1),
                };
                let e = p.expr()?;
                if let Some(t) = st[4..].get(p.pos) {
                    return Err(diag(t.line, t.col, DiagnosticKind::Syntax, "unexpected trailing input"));
                }
                let (el, ec) = st.get(4).map_or((head.line, head.col), |t| (t.line, t.col));
                match e.eval(ctx) {
                    Ok(v) if v.is_zero() => {
                        return Err(diag(el, ec, DiagnosticKind::ZeroEntry, format!("q {} {} evaluates to 0", i, j)));
                    }
                    Ok(_) => {}
                    Err(err) => return Err(diag(el, ec, DiagnosticKind::Arithmetic, err.to_string())),
                }
                if i < 1 {
                    return Err(diag(li, ci, DiagnosticKind::Shape, "indices start at 1"));
                }
                if j < 1 {
                    return Err(diag(lj, cj, DiagnosticKind::Shape, "indices start at 1"));
                }
                if entries.iter().any(|(a, b, ..)| *a == i as usize && *b == j as usize) {
                    return Err(diag(head.line, head.col, DiagnosticKind::Shape, format!("q {} {} given twice", i, j)));
                }
                entries.push((i as usize, j as usize, e, li, ci));
            }
            other => {
                return Err(diag(
                    head.line,
                    head.col,
                    DiagnosticKind::Syntax,
                    format!("unknown keyword `{}`", other),
                ))
            }
        }
    }
    let Some((n, rl, rc)) = rank else {
        return Err(diag(1, 1, DiagnosticKind::Shape, "missing `rank` declaration"));
    };
    let mut grid: Vec<Vec<Option<Expr>>> = vec![vec![None; n]; n];
    for (i, j, e, line, col) in entries {
        if i > n || j > n {
            return Err(diag(
                line,
                col,
                DiagnosticKind::Shape,
                format!("q {} {} is outside a rank-{} matrix", i, j, n),
            ));
        }
        grid[i - 1][j - 1] = Some(e);
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in grid.into_iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (j, e) in row.into_iter().enumerate() {
            match e {
                Some(e) => out.push(e),
                None => {
                    return Err(diag(
                        rl,
                        rc,
                        DiagnosticKind::Shape,
                        format!("entry q {} {} is missing", i + 1, j + 1),
                    ))
                }
            }
        }
        rows.push(out);
    }
    Ok(InstanceSpec {
        rank: n,
        conductor: conductor.unwrap_or(1),
        params,
        entries: rows,
    })
}
