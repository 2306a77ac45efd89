//! Recursive-descent parser with one token of lookahead. Semantic rules are
//! checked as each statement is accepted, so every error carries the line of
//! the statement that caused it.

use std::collections::HashSet;

use num_complex::Complex64;

use super::ast::{Program, ReportKind, Statement};
use super::lexer::{tokenize, Token, TokenKind};
use super::{DslError, SemanticError, SyntaxError};
use crate::gates::{gate_from_names, GateName};
use crate::membership::MembershipModel;
use crate::projection::ProjectionName;

const STATEMENT_KEYWORDS: [&str; 7] = [
    "model", "qubit", "register", "gate", "project", "pair", "report",
];
const RESERVED: [&str; 12] = [
    "model", "qubit", "register", "gate", "project", "pair", "report", "amps", "memb", "bloch",
    "pm", "on",
];

pub fn parse(src: &str) -> Result<Program, DslError> {
    let tokens = tokenize(src).map_err(|e| {
        DslError::Syntax(SyntaxError {
            line: e.line,
            col: e.col,
            expected: vec!["a word, number, \"(\", \")\", \",\" or \"/\"".into()],
            found: format!("{:?}", e.found),
        })
    })?;
    Parser {
        tokens,
        pos: 0,
        symbols: Symbols::default(),
        program: Program {
            model: None,
            statements: Vec::new(),
            lines: Vec::new(),
        },
    }
    .run()
}

#[derive(Default)]
struct Symbols {
    declared: HashSet<String>,
    qubits: Vec<String>,
    pair: Option<(String, String)>,
    register: Option<String>,
    model_line: Option<usize>,
}

impl Symbols {
    fn qubit_count(&self) -> usize {
        self.qubits.len() + if self.register.is_some() { 2 } else { 0 }
    }

    fn is_paired(&self, id: &str) -> bool {
        self.pair.as_ref().is_some_and(|(a, b)| a == id || b == id)
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    symbols: Symbols,
    program: Program,
}

type PResult<T> = Result<T, DslError>;

fn semantic(line: usize, msg: impl Into<String>) -> DslError {
    DslError::Semantic(SemanticError {
        line,
        msg: msg.into(),
    })
}

impl Parser {
    fn run(mut self) -> PResult<Program> {
        loop {
            match self.peek().kind {
                TokenKind::Eof => break,
                TokenKind::Newline => {
                    self.pos += 1;
                }
                _ => {
                    let line = self.peek().line;
                    if let Some(stmt) = self.statement()? {
                        self.program.statements.push(stmt);
                        self.program.lines.push(line);
                    }
                    self.expect_newline()?;
                }
            }
        }
        Ok(self.program)
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if !matches!(t.kind, TokenKind::Eof) {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        Err(DslError::Syntax(SyntaxError {
            line: t.line,
            col: t.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.kind.to_string(),
        }))
    }

    fn expect_newline(&mut self) -> PResult<()> {
        match self.peek().kind {
            TokenKind::Newline | TokenKind::Eof => {
                self.advance();
                Ok(())
            }
            _ => self.error(&["end of line"]),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match &self.peek().kind {
            TokenKind::Word(w) if w == kw => {
                self.advance();
                Ok(())
            }
            _ => self.error(&[&format!("{kw:?}")]),
        }
    }

    fn word(&mut self, what: &str) -> PResult<String> {
        match &self.peek().kind {
            TokenKind::Word(w) => {
                let w = w.clone();
                self.advance();
                Ok(w)
            }
            _ => self.error(&[what]),
        }
    }

    fn ident(&mut self) -> PResult<String> {
        self.unreserved("identifier")
    }

    fn unreserved(&mut self, what: &str) -> PResult<String> {
        match &self.peek().kind {
            TokenKind::Word(w) if !RESERVED.contains(&w.as_str()) => {
                let w = w.clone();
                self.advance();
                Ok(w)
            }
            _ => self.error(&[what]),
        }
    }

    fn real(&mut self) -> PResult<f64> {
        match self.peek().kind {
            TokenKind::Number(x) => {
                let line = self.peek().line;
                self.advance();
                if !x.is_finite() {
                    return Err(semantic(line, "numeric literal is not finite"));
                }
                Ok(x)
            }
            _ => self.error(&["number"]),
        }
    }

    fn punct(&mut self, kind: TokenKind, shown: &str) -> PResult<()> {
        if self.peek().kind == kind {
            self.advance();
            Ok(())
        } else {
            self.error(&[shown])
        }
    }

    fn complex(&mut self) -> PResult<Complex64> {
        self.punct(TokenKind::LParen, "\"(\"")?;
        let re = self.real()?;
        self.punct(TokenKind::Comma, "\",\"")?;
        let im = self.real()?;
        self.punct(TokenKind::RParen, "\")\"")?;
        Ok(Complex64::new(re, im))
    }

    fn statement(&mut self) -> PResult<Option<Statement>> {
        let line = self.peek().line;
        let head = match &self.peek().kind {
            TokenKind::Word(w) if STATEMENT_KEYWORDS.contains(&w.as_str()) => w.clone(),
            _ => return self.error(&STATEMENT_KEYWORDS),
        };
        self.advance();
        match head.as_str() {
            "model" => {
                let name = self.word("model name")?;
                let model: MembershipModel = name.parse().map_err(|_| {
                    semantic(line, format!("unknown membership model {name:?} (expected born, arc or circle-square)"))
                })?;
                if let Some(prev) = self.symbols.model_line {
                    return Err(semantic(line, format!("model already set on line {prev}")));
                }
                self.symbols.model_line = Some(line);
                self.program.model = Some(model);
                Ok(None)
            }
            "qubit" => {
                let id = self.ident()?;
                let form = match &self.peek().kind {
                    TokenKind::Word(w) if ["amps", "bloch", "pm"].contains(&w.as_str()) => {
                        w.clone()
                    }
                    _ => return self.error(&["\"amps\"", "\"bloch\"", "\"pm\""]),
                };
                self.advance();
                let stmt = match form.as_str() {
                    "amps" => {
                        let amps = [self.complex()?, self.complex()?];
                        self.keyword("memb")?;
                        let memb = [self.real()?, self.real()?];
                        Statement::DeclareAmps { id, amps, memb }
                    }
                    "bloch" => Statement::DeclareBloch {
                        id,
                        theta: self.real()?,
                        phi: self.real()?,
                        theta_mu: self.real()?,
                    },
                    _ => Statement::DeclarePm {
                        id,
                        p: self.real()?,
                        mu: self.real()?,
                    },
                };
                self.declare(line, &stmt, 1)?;
                Ok(Some(stmt))
            }
            "register" => {
                let id = self.ident()?;
                self.keyword("amps")?;
                let amps = [
                    self.complex()?,
                    self.complex()?,
                    self.complex()?,
                    self.complex()?,
                ];
                self.keyword("memb")?;
                let memb = [self.real()?, self.real()?, self.real()?, self.real()?];
                let stmt = Statement::DeclareRegister { id, amps, memb };
                self.declare(line, &stmt, 2)?;
                Ok(Some(stmt))
            }
            "gate" => {
                let q = self.unreserved("gate name")?;
                let m = if self.peek().kind == TokenKind::Slash {
                    self.advance();
                    Some(self.unreserved("gate name")?)
                } else {
                    None
                };
                self.keyword("on")?;
                let mut targets = vec![self.ident()?];
                if matches!(self.peek().kind, TokenKind::Word(_)) {
                    targets.push(self.ident()?);
                }
                let stmt = self.check_gate(line, &q, m.as_deref(), targets)?;
                Ok(Some(stmt))
            }
            "project" => {
                let name = self.unreserved("projection name")?;
                self.keyword("on")?;
                let target = self.ident()?;
                let projection: ProjectionName = name.parse().map_err(|_| {
                    semantic(
                        line,
                        format!("unknown projection {name:?} (expected P0, P1, P01, P10, Q0, Q1, Q0mu or Q1mu)"),
                    )
                })?;
                self.require_declared(line, &target)?;
                if self.symbols.register.as_deref() == Some(target.as_str())
                    || self.symbols.is_paired(&target)
                {
                    return Err(semantic(
                        line,
                        format!("projections act on single qubits; {target} is part of a register"),
                    ));
                }
                Ok(Some(Statement::Project { projection, target }))
            }
            "pair" => {
                let a = self.ident()?;
                let b = self.ident()?;
                for id in [&a, &b] {
                    self.require_declared(line, id)?;
                    if !self.symbols.qubits.contains(id) {
                        return Err(semantic(line, format!("{id} is a register, not a qubit")));
                    }
                }
                if a == b {
                    return Err(semantic(line, format!("cannot pair {a} with itself")));
                }
                if self.symbols.pair.is_some() {
                    return Err(semantic(line, "qubits are already paired"));
                }
                self.symbols.pair = Some((a.clone(), b.clone()));
                Ok(Some(Statement::Pair(a, b)))
            }
            _ => {
                let word = self.word("report kind")?;
                let Some(kind) = ReportKind::from_keyword(&word) else {
                    self.pos -= 1;
                    return self.error(&[
                        "\"probs\"",
                        "\"memb\"",
                        "\"density\"",
                        "\"expect\"",
                        "\"concurrence\"",
                    ]);
                };
                if kind == ReportKind::Concurrence
                    && self.symbols.pair.is_none()
                    && self.symbols.register.is_none()
                {
                    return Err(semantic(
                        line,
                        "report concurrence needs a two-qubit register (use pair or register)",
                    ));
                }
                Ok(Some(Statement::Report(kind)))
            }
        }
    }

    fn require_declared(&self, line: usize, id: &str) -> PResult<()> {
        if self.symbols.declared.contains(id) {
            Ok(())
        } else {
            Err(semantic(line, format!("undeclared identifier {id}")))
        }
    }

    fn declare(&mut self, line: usize, stmt: &Statement, width: usize) -> PResult<()> {
        let id = match stmt {
            Statement::DeclareAmps { id, .. }
            | Statement::DeclareBloch { id, .. }
            | Statement::DeclarePm { id, .. }
            | Statement::DeclareRegister { id, .. } => id.clone(),
            _ => unreachable!("not a declaration"),
        };
        if !self.symbols.declared.insert(id.clone()) {
            return Err(semantic(line, format!("duplicate declaration of {id}")));
        }
        if self.symbols.qubit_count() + width > 2 {
            return Err(semantic(line, "at most two qubits may be declared"));
        }
        if width == 2 {
            self.symbols.register = Some(id);
        } else {
            self.symbols.qubits.push(id);
        }
        Ok(())
    }

    fn check_gate(
        &self,
        line: usize,
        q: &str,
        m: Option<&str>,
        targets: Vec<String>,
    ) -> PResult<Statement> {
        let lookup = |name: &str| {
            name.parse::<GateName>().map_err(|_| {
                semantic(
                    line,
                    format!("unknown gate {name:?} (expected I, H, X, NOT, Y, Z, CNOT or SWAP)"),
                )
            })
        };
        let quantum = lookup(q)?;
        let membership = m.map(lookup).transpose()?;
        let gate = gate_from_names::<f64>(quantum, membership.unwrap_or(GateName::I))
            .map_err(|e| semantic(line, e.to_string()))?;
        for t in &targets {
            self.require_declared(line, t)?;
        }
        let is_register = |t: &str| self.symbols.register.as_deref() == Some(t);
        match (gate.arity(), targets.as_slice()) {
            (1, [t]) if is_register(t) => {
                return Err(semantic(
                    line,
                    format!("single-qubit gate on register {t}; address one of its qubits"),
                ))
            }
            (1, [_]) => {}
            (1, _) => return Err(semantic(line, "single-qubit gate takes one target")),
            (2, [t]) if is_register(t) => {}
            (2, [t]) => {
                return Err(semantic(
                    line,
                    format!("two-qubit gate needs two paired targets, got {t}"),
                ))
            }
            (2, [a, b]) => {
                let ok = match &self.symbols.pair {
                    Some((x, y)) => a != b && [x, y].contains(&a) && [x, y].contains(&b),
                    None => false,
                };
                if !ok {
                    return Err(semantic(
                        line,
                        format!("pair {a} {b} before applying a two-qubit gate to them"),
                    ));
                }
            }
            _ => return Err(semantic(line, "too many targets")),
        }
        Ok(Statement::Gate {
            quantum,
            membership,
            targets,
        })
    }
}
