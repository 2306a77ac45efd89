//! Double, crossed and half projections on Kronecker qubits.
//!
//! Every projection is block diagonal with a 0/1 diagonal in each block, so
//! it is stored as two pairs of flags. Products are exact: the diagonal of a
//! product is the element-wise AND of the factors.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kron::{BlockVector, KroneckerQubit};
use crate::scalar::Scalar;

/// The eight named projections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectionName {
    P0,
    P1,
    P01,
    P10,
    Q0,
    Q1,
    Q0Mu,
    Q1Mu,
}

impl ProjectionName {
    pub const ALL: [ProjectionName; 8] = [
        ProjectionName::P0,
        ProjectionName::P1,
        ProjectionName::P01,
        ProjectionName::P10,
        ProjectionName::Q0,
        ProjectionName::Q1,
        ProjectionName::Q0Mu,
        ProjectionName::Q1Mu,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProjectionName::P0 => "P0",
            ProjectionName::P1 => "P1",
            ProjectionName::P01 => "P01",
            ProjectionName::P10 => "P10",
            ProjectionName::Q0 => "Q0",
            ProjectionName::Q1 => "Q1",
            ProjectionName::Q0Mu => "Q0mu",
            ProjectionName::Q1Mu => "Q1mu",
        }
    }

    pub fn projection(self) -> DoubleProjection {
        const T: bool = true;
        const F: bool = false;
        let (quantum, membership) = match self {
            ProjectionName::P0 => ([T, F], [T, F]),
            ProjectionName::P1 => ([F, T], [F, T]),
            ProjectionName::P01 => ([T, F], [F, T]),
            ProjectionName::P10 => ([F, T], [T, F]),
            ProjectionName::Q0 => ([T, F], [F, F]),
            ProjectionName::Q1 => ([F, T], [F, F]),
            ProjectionName::Q0Mu => ([F, F], [T, F]),
            ProjectionName::Q1Mu => ([F, F], [F, T]),
        };
        DoubleProjection {
            quantum,
            membership,
        }
    }
}

impl fmt::Display for ProjectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProjectionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProjectionName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown projection {s:?}")))
    }
}

/// Block-diagonal projection `diag(P_q, P_μ)` with 0/1 diagonal blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoubleProjection {
    pub quantum: [bool; 2],
    pub membership: [bool; 2],
}

impl DoubleProjection {
    pub const ZERO: DoubleProjection = DoubleProjection {
        quantum: [false; 2],
        membership: [false; 2],
    };

    pub const IDENTITY: DoubleProjection = DoubleProjection {
        quantum: [true; 2],
        membership: [true; 2],
    };

    /// The named projection equal to `self`, if any.
    pub fn name(&self) -> Option<ProjectionName> {
        ProjectionName::ALL
            .into_iter()
            .find(|n| n.projection() == *self)
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Operator product `self · other`.
    pub fn product(&self, other: &DoubleProjection) -> DoubleProjection {
        DoubleProjection {
            quantum: [
                self.quantum[0] && other.quantum[0],
                self.quantum[1] && other.quantum[1],
            ],
            membership: [
                self.membership[0] && other.membership[0],
                self.membership[1] && other.membership[1],
            ],
        }
    }

    /// Operator sum, defined only when the supports are disjoint (the sum
    /// of orthogonal projections is again a projection).
    pub fn orthogonal_sum(&self, other: &DoubleProjection) -> Option<DoubleProjection> {
        if !self.product(other).is_zero() {
            return None;
        }
        Some(DoubleProjection {
            quantum: [
                self.quantum[0] || other.quantum[0],
                self.quantum[1] || other.quantum[1],
            ],
            membership: [
                self.membership[0] || other.membership[0],
                self.membership[1] || other.membership[1],
            ],
        })
    }

    /// Dense 4×4 rendering, quantum block first.
    pub fn to_dense(&self) -> [[u8; 4]; 4] {
        let diag = [
            self.quantum[0],
            self.quantum[1],
            self.membership[0],
            self.membership[1],
        ];
        let mut m = [[0u8; 4]; 4];
        for (i, &d) in diag.iter().enumerate() {
            m[i][i] = d as u8;
        }
        m
    }

    pub fn apply_block<T: Scalar>(&self, v: &BlockVector<T>) -> BlockVector<T> {
        let q = |i: usize| {
            if self.quantum[i] {
                v.quantum[i]
            } else {
                Complex::zero()
            }
        };
        let m = |i: usize| {
            if self.membership[i] {
                v.membership[i]
            } else {
                T::zero()
            }
        };
        BlockVector {
            quantum: [q(0), q(1)],
            membership: [m(0), m(1)],
        }
    }

    /// Projects a qubit. The result keeps the `1/√2` factor and is usually
    /// not normalized; see [`BlockVector::renormalize`].
    pub fn apply<T: Scalar>(&self, ket: &KroneckerQubit<T>) -> BlockVector<T> {
        self.apply_block(&ket.to_block())
    }

    /// `⟨Ψ|P|Ψ⟩` in closed form: half the sum of the selected `|a_i|²` and
    /// `α_j²`.
    pub fn expectation<T: Scalar>(&self, ket: &KroneckerQubit<T>) -> T {
        let p = ket.probabilities();
        let alpha = ket.membership();
        let mut total = T::zero();
        for i in 0..2 {
            if self.quantum[i] {
                total = total + p[i];
            }
            if self.membership[i] {
                total = total + alpha[i] * alpha[i];
            }
        }
        total * T::half()
    }
}

impl fmt::Display for DoubleProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => write!(f, "{n}"),
            None if self.is_zero() => f.write_str("0"),
            None => write!(f, "diag{:?}", self.to_dense().map(|r| r.iter().sum::<u8>())),
        }
    }
}

/// `(P0, P1)`: the same projector in both blocks.
pub fn standard_projections() -> (DoubleProjection, DoubleProjection) {
    (
        ProjectionName::P0.projection(),
        ProjectionName::P1.projection(),
    )
}

/// `(P01, P10)`: opposite projectors in the two blocks.
pub fn crossed_projections() -> (DoubleProjection, DoubleProjection) {
    (
        ProjectionName::P01.projection(),
        ProjectionName::P10.projection(),
    )
}

/// `(Q0, Q1, Q0μ, Q1μ)`: projections acting in one block only.
pub fn half_projections() -> [DoubleProjection; 4] {
    [
        ProjectionName::Q0.projection(),
        ProjectionName::Q1.projection(),
        ProjectionName::Q0Mu.projection(),
        ProjectionName::Q1Mu.projection(),
    ]
}

/// Expectation values of all eight named projections, in
/// [`ProjectionName::ALL`] order.
pub fn expectations<T: Scalar>(ket: &KroneckerQubit<T>) -> [(ProjectionName, T); 8] {
    ProjectionName::ALL.map(|n| (n, n.projection().expectation(ket)))
}
