//! A small line-oriented language for obscure-qubit programs.
//!
//! ```text
//! model born
//! qubit q0 pm 1/2 1/2
//! gate H/X on q0
//! report probs
//! ```
//!
//! See the crate README for the full grammar.

pub mod ast;
pub mod exec;
pub mod lexer;
pub mod parser;
pub mod render;

use std::fmt;

use thiserror::Error;

use crate::error::Error;
use crate::membership::MembershipModel;
use crate::report::Report;

pub use ast::{Program, ReportKind, Statement};
pub use exec::execute;
pub use parser::parse;
pub use render::render;

#[derive(Debug, Clone, PartialEq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: expected ", self.line, self.col)?;
        match self.expected.as_slice() {
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {msg}")]
pub struct SemanticError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("syntax error: {0}")]
    Syntax(SyntaxError),
    #[error("semantic error: {0}")]
    Semantic(SemanticError),
    /// A numeric or domain failure while executing the statement on `line`.
    #[error("line {line}: {source}")]
    Runtime { line: usize, source: Error },
}

impl DslError {
    pub fn line(&self) -> usize {
        match self {
            DslError::Syntax(e) => e.line,
            DslError::Semantic(e) => e.line,
            DslError::Runtime { line, .. } => *line,
        }
    }

    /// Runtime failures are numeric domain errors; the rest are user errors.
    pub fn is_runtime(&self) -> bool {
        matches!(self, DslError::Runtime { .. })
    }
}

/// Parses and executes `src`. `model` overrides any `model` statement.
pub fn run(src: &str, model: Option<MembershipModel>, tol: f64) -> Result<Report, DslError> {
    let mut program = parse(src)?;
    if let Some(m) = model {
        program = program.with_model(m);
    }
    execute(&program, tol)
}
