use num_complex::Complex64;

use crate::gates::GateName;
use crate::membership::MembershipModel;
use crate::projection::ProjectionName;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Probs,
    Memb,
    Density,
    Expect,
    Concurrence,
}

impl ReportKind {
    pub const ALL: [ReportKind; 5] = [
        ReportKind::Probs,
        ReportKind::Memb,
        ReportKind::Density,
        ReportKind::Expect,
        ReportKind::Concurrence,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            ReportKind::Probs => "probs",
            ReportKind::Memb => "memb",
            ReportKind::Density => "density",
            ReportKind::Expect => "expect",
            ReportKind::Concurrence => "concurrence",
        }
    }

    pub fn from_keyword(word: &str) -> Option<ReportKind> {
        ReportKind::ALL.into_iter().find(|k| k.keyword() == word)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    DeclareAmps {
        id: String,
        amps: [Complex64; 2],
        memb: [f64; 2],
    },
    DeclareBloch {
        id: String,
        theta: f64,
        phi: f64,
        theta_mu: f64,
    },
    DeclarePm {
        id: String,
        p: f64,
        mu: f64,
    },
    /// Two-qubit register, amplitudes listed as `00', 10', 01', 11'`.
    DeclareRegister {
        id: String,
        amps: [Complex64; 4],
        memb: [f64; 4],
    },
    /// `membership: None` is the single-name form, identity on memberships.
    Gate {
        quantum: GateName,
        membership: Option<GateName>,
        targets: Vec<String>,
    },
    Project {
        projection: ProjectionName,
        target: String,
    },
    Pair(String, String),
    Report(ReportKind),
}

/// A parsed script. Equality ignores source line numbers.
#[derive(Debug, Clone)]
pub struct Program {
    pub model: Option<MembershipModel>,
    pub statements: Vec<Statement>,
    /// Source line of each statement.
    pub lines: Vec<usize>,
}

impl Program {
    pub fn effective_model(&self) -> MembershipModel {
        self.model.unwrap_or_default()
    }

    pub fn with_model(mut self, model: MembershipModel) -> Self {
        self.model = Some(model);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Statement)> {
        self.lines.iter().copied().zip(&self.statements)
    }
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model && self.statements == other.statements
    }
}
