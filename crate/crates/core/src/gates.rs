//! Obscure-quantum gates: block-diagonal pairs `{U, U^(μ)}`.
//!
//! The quantum column is mapped by a unitary `U` and the membership column by
//! a real orthogonal `U^(μ)`. The blocks never mix.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::entangle::TwoQubitRegister;
use crate::error::{Error, Result, Sector};
use crate::kron::KroneckerQubit;
use crate::matrix::{ComplexMatrix, RealMatrix};
use crate::scalar::{c, frac_1_sqrt_2, re, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateName {
    I,
    H,
    X,
    Y,
    Z,
    Cnot,
    Swap,
}

impl GateName {
    pub const ALL: [GateName; 7] = [
        GateName::I,
        GateName::H,
        GateName::X,
        GateName::Y,
        GateName::Z,
        GateName::Cnot,
        GateName::Swap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GateName::I => "I",
            GateName::H => "H",
            GateName::X => "X",
            GateName::Y => "Y",
            GateName::Z => "Z",
            GateName::Cnot => "CNOT",
            GateName::Swap => "SWAP",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            GateName::Cnot | GateName::Swap => 2,
            _ => 1,
        }
    }

    /// Only Pauli-Y has non-real entries.
    pub fn is_real(self) -> bool {
        self != GateName::Y
    }

    /// The standard matrix, first qubit as the high bit for arity 2.
    pub fn matrix<T: Scalar>(self) -> ComplexMatrix<T> {
        let (o, l) = (re(T::zero()), re(T::one()));
        let rows: Vec<Vec<Complex<T>>> = match self {
            GateName::I => return ComplexMatrix::identity(2),
            GateName::H => {
                let h = re(frac_1_sqrt_2::<T>());
                vec![vec![h, h], vec![h, -h]]
            }
            GateName::X => vec![vec![o, l], vec![l, o]],
            GateName::Y => {
                let i = c(T::zero(), T::one());
                vec![vec![o, -i], vec![i, o]]
            }
            GateName::Z => vec![vec![l, o], vec![o, -l]],
            GateName::Cnot => vec![
                vec![l, o, o, o],
                vec![o, l, o, o],
                vec![o, o, o, l],
                vec![o, o, l, o],
            ],
            GateName::Swap => vec![
                vec![l, o, o, o],
                vec![o, o, l, o],
                vec![o, l, o, o],
                vec![o, o, o, l],
            ],
        };
        ComplexMatrix::from_rows(&rows).expect("square gate table")
    }
}

impl fmt::Display for GateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GateName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "I" => GateName::I,
            "H" => GateName::H,
            "X" | "NOT" => GateName::X,
            "Y" => GateName::Y,
            "Z" => GateName::Z,
            "CNOT" => GateName::Cnot,
            "SWAP" => GateName::Swap,
            other => return Err(Error::UnknownGate(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObscureQuantumGate<T> {
    quantum: ComplexMatrix<T>,
    membership: RealMatrix<T>,
    arity: usize,
}

/// Builds `{U, U^(μ)}` from two names in the standard set.
pub fn make_gate<T: Scalar>(quantum: &str, membership: &str) -> Result<ObscureQuantumGate<T>> {
    let q: GateName = quantum.parse()?;
    let m: GateName = membership.parse()?;
    gate_from_names(q, m)
}

pub fn gate_from_names<T: Scalar>(q: GateName, m: GateName) -> Result<ObscureQuantumGate<T>> {
    gate_from_table(q, m, &|g| g.matrix())
}

/// Like [`gate_from_names`] with a caller-supplied matrix table.
pub fn gate_from_table<T: Scalar>(
    q: GateName,
    m: GateName,
    table: &dyn Fn(GateName) -> ComplexMatrix<T>,
) -> Result<ObscureQuantumGate<T>> {
    if !m.is_real() {
        return Err(Error::Realness(m.to_string()));
    }
    // I takes the arity of the other slot
    let arity = match (q, m) {
        (GateName::I, other) | (other, GateName::I) => other.arity(),
        _ if q.arity() != m.arity() => {
            return Err(Error::Arity {
                expected: q.arity(),
                found: m.arity(),
            })
        }
        _ => q.arity(),
    };
    let lookup = |name: GateName| {
        if name == GateName::I && arity == 2 {
            ComplexMatrix::identity(4)
        } else {
            table(name)
        }
    };
    let tol = T::default_tolerance();
    let membership = lookup(m)
        .real_part(tol)
        .ok_or_else(|| Error::Realness(m.to_string()))?;
    ObscureQuantumGate::from_blocks(lookup(q), membership)
}

impl<T: Scalar> ObscureQuantumGate<T> {
    /// Checks `U†U = I` and `U^(μ)ᵀU^(μ) = I` at the default tolerance.
    pub fn from_blocks(quantum: ComplexMatrix<T>, membership: RealMatrix<T>) -> Result<Self> {
        Self::from_blocks_with_tolerance(quantum, membership, T::default_tolerance())
    }

    pub fn from_blocks_with_tolerance(
        quantum: ComplexMatrix<T>,
        membership: RealMatrix<T>,
        tol: T,
    ) -> Result<Self> {
        if quantum.dim() != membership.dim() {
            return Err(Error::Dimension(format!(
                "quantum block is {0}x{0}, membership block is {1}x{1}",
                quantum.dim(),
                membership.dim()
            )));
        }
        let arity = match quantum.dim() {
            2 => 1,
            4 => 2,
            n => {
                return Err(Error::Dimension(format!(
                    "gate blocks must be 2x2 or 4x4, got {n}x{n}"
                )))
            }
        };
        if !quantum.is_unitary(tol) {
            return Err(Error::NotUnitary(Sector::Quantum));
        }
        if !membership.is_unitary(tol) {
            return Err(Error::NotUnitary(Sector::Membership));
        }
        Ok(ObscureQuantumGate {
            quantum,
            membership,
            arity,
        })
    }

    /// Splits a full `2n×2n` operator; off-diagonal blocks must vanish and
    /// the lower block must be real.
    pub fn from_dense(total: &ComplexMatrix<T>, tol: T) -> Result<Self> {
        let n2 = total.dim();
        if !n2.is_multiple_of(2) {
            return Err(Error::Dimension(format!("odd operator size {n2}")));
        }
        let n = n2 / 2;
        let mut q = ComplexMatrix::zeros(n);
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if total[(i, j + n)].norm() > tol || total[(i + n, j)].norm() > tol {
                    return Err(Error::NotBlockDiagonal);
                }
                q[(i, j)] = total[(i, j)];
                m[(i, j)] = total[(i + n, j + n)];
            }
        }
        let m = m
            .real_part(tol)
            .ok_or_else(|| Error::Realness("membership block".to_string()))?;
        Self::from_blocks_with_tolerance(q, m, tol)
    }

    pub fn identity(arity: usize) -> Self {
        let n = 1 << arity;
        ObscureQuantumGate {
            quantum: ComplexMatrix::identity(n),
            membership: RealMatrix::identity(n),
            arity,
        }
    }

    pub fn quantum(&self) -> &ComplexMatrix<T> {
        &self.quantum
    }

    pub fn membership(&self) -> &RealMatrix<T> {
        &self.membership
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `diag(U, U^(μ))` as a complex `2n×2n` matrix.
    pub fn to_dense(&self) -> ComplexMatrix<T> {
        let n = self.quantum.dim();
        let mut out = ComplexMatrix::zeros(2 * n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self.quantum[(i, j)];
                out[(i + n, j + n)] = re(self.membership[(i, j)]);
            }
        }
        out
    }

    /// Blockwise adjoint.
    pub fn inverse(&self) -> Self {
        ObscureQuantumGate {
            quantum: self.quantum.adjoint(),
            membership: self.membership.transpose(),
            arity: self.arity,
        }
    }

    /// `U ⊗ I` for `target = 0`, `I ⊗ U` for `target = 1`, blockwise.
    pub fn lift(&self, target: usize) -> Result<Self> {
        if self.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                found: self.arity,
            });
        }
        let iq = ComplexMatrix::identity(2);
        let im = RealMatrix::identity(2);
        let (quantum, membership) = match target {
            0 => (self.quantum.kron(&iq), self.membership.kron(&im)),
            1 => (iq.kron(&self.quantum), im.kron(&self.membership)),
            t => {
                return Err(Error::Dimension(format!(
                    "qubit index {t} outside a two-qubit register"
                )))
            }
        };
        Ok(ObscureQuantumGate {
            quantum,
            membership,
            arity: 2,
        })
    }

    /// Conjugation by SWAP in both blocks: exchanges the roles of the qubits.
    pub fn reversed(&self) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::Arity {
                expected: 2,
                found: self.arity,
            });
        }
        let sq: ComplexMatrix<T> = GateName::Swap.matrix();
        let sm = sq.real_part(T::zero()).expect("SWAP is real");
        Ok(ObscureQuantumGate {
            quantum: &(&sq * &self.quantum) * &sq,
            membership: &(&sm * &self.membership) * &sm,
            arity: 2,
        })
    }

    /// Maps the quantum column by `U` and the membership column by `U^(μ)`.
    pub fn apply(&self, ket: &KroneckerQubit<T>) -> Result<KroneckerQubit<T>> {
        if self.arity != 1 {
            return Err(Error::Arity {
                expected: self.arity,
                found: 1,
            });
        }
        let q = self.quantum.apply(&ket.quantum());
        let m = self.membership.apply(&ket.membership());
        Ok(KroneckerQubit::from_columns_unchecked(
            [q[0], q[1]],
            [m[0], m[1]],
        ))
    }

    /// Maps the 4-vectors of `b` and `β` coefficients, ordered `2i + j`.
    pub fn apply2(&self, reg: &TwoQubitRegister<T>) -> Result<TwoQubitRegister<T>> {
        if self.arity != 2 {
            return Err(Error::Arity {
                expected: self.arity,
                found: 2,
            });
        }
        let q = self.quantum.apply(&reg.quantum_vector());
        let m = self.membership.apply(&reg.membership_vector());
        Ok(TwoQubitRegister::from_vectors_unchecked(
            [q[0], q[1], q[2], q[3]],
            [m[0], m[1], m[2], m[3]],
        ))
    }

    /// `self` after `first`: blocks multiply as `self · first`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.arity != first.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: first.arity,
            });
        }
        Ok(ObscureQuantumGate {
            quantum: &self.quantum * &first.quantum,
            membership: &self.membership * &first.membership,
            arity: self.arity,
        })
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.arity == other.arity
            && self.quantum.approx_eq(&other.quantum, tol)
            && self.membership.approx_eq(&other.membership, tol)
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.approx_eq(&Self::identity(self.arity), tol)
    }
}

impl<T: Scalar> Default for ObscureQuantumGate<T> {
    fn default() -> Self {
        Self::identity(1)
    }
}
