//! Two-qubit obscure registers and double entanglement.
//!
//! A register `(Σ B_ij' |ij'⟩)/√2` carries a complex amplitude `b_ij'` and a
//! real membership amplitude `β_ij'` for each of the four basis states.
//! Entanglement is judged separately in each sector through `det b` and
//! `det β`, so a register can be entangled in one sector only.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result, Sector};
use crate::kron::{KroneckerQubit, ObscureAmplitude};
use crate::membership::MembershipModel;
use crate::scalar::{frac_1_sqrt_2, Scalar};

/// Basis states in the order `00', 10', 01', 11'` used for listings, as
/// `(i, j)` index pairs into the `b` and `β` matrices.
pub const LISTING_ORDER: [(usize, usize); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

pub fn basis_label(i: usize, j: usize) -> String {
    format!("{i}{j}'")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitRegister<T> {
    /// `b[i][j] = b_ij'`, first qubit on rows.
    b: [[Complex<T>; 2]; 2],
    beta: [[T; 2]; 2],
}

impl<T: Scalar> TwoQubitRegister<T> {
    /// Validates `Σ|b_ij'|² = 1` and `Σβ_ij'² = 1`.
    pub fn new(b: [[Complex<T>; 2]; 2], beta: [[T; 2]; 2], tol: T) -> Result<Self> {
        let q: T = b.iter().flatten().map(|z| z.norm_sqr()).sum();
        if (q - T::one()).abs() > tol || q.is_nan() {
            return Err(Error::Normalization {
                sector: Sector::Quantum,
                sum: q.to_f64_lossy(),
            });
        }
        let m: T = beta.iter().flatten().map(|&x| x * x).sum();
        if (m - T::one()).abs() > tol || m.is_nan() {
            return Err(Error::Normalization {
                sector: Sector::Membership,
                sum: m.to_f64_lossy(),
            });
        }
        Ok(TwoQubitRegister { b, beta })
    }

    /// Builds a register from four amplitudes listed as `00', 10', 01', 11'`.
    pub fn from_listing(amps: [ObscureAmplitude<T>; 4], tol: T) -> Result<Self> {
        let mut b = [[Complex::zero(); 2]; 2];
        let mut beta = [[T::zero(); 2]; 2];
        for (&(i, j), amp) in LISTING_ORDER.iter().zip(amps) {
            b[i][j] = amp.a;
            beta[i][j] = amp.alpha;
        }
        Self::new(b, beta, tol)
    }

    /// Amplitude vectors in computational order `|ij'⟩ ↦ 2i + j`.
    pub fn from_vectors(quantum: [Complex<T>; 4], membership: [T; 4], tol: T) -> Result<Self> {
        Self::new(
            [[quantum[0], quantum[1]], [quantum[2], quantum[3]]],
            [
                [membership[0], membership[1]],
                [membership[2], membership[3]],
            ],
            tol,
        )
    }

    pub(crate) fn from_vectors_unchecked(quantum: [Complex<T>; 4], membership: [T; 4]) -> Self {
        TwoQubitRegister {
            b: [[quantum[0], quantum[1]], [quantum[2], quantum[3]]],
            beta: [
                [membership[0], membership[1]],
                [membership[2], membership[3]],
            ],
        }
    }

    pub fn b(&self) -> [[Complex<T>; 2]; 2] {
        self.b
    }

    pub fn beta(&self) -> [[T; 2]; 2] {
        self.beta
    }

    pub fn amplitude(&self, i: usize, j: usize) -> ObscureAmplitude<T> {
        ObscureAmplitude::new(self.b[i][j], self.beta[i][j])
    }

    /// Quantum amplitudes in computational order `00', 01', 10', 11'`.
    pub fn quantum_vector(&self) -> [Complex<T>; 4] {
        [self.b[0][0], self.b[0][1], self.b[1][0], self.b[1][1]]
    }

    /// Membership amplitudes in computational order.
    pub fn membership_vector(&self) -> [T; 4] {
        [
            self.beta[0][0],
            self.beta[0][1],
            self.beta[1][0],
            self.beta[1][1],
        ]
    }

    /// Explicit eight-component vector `[Σ b_ij' e_i⊗e_j'; Σ β_ij' ε_i⊗ε_j'] / √2`.
    pub fn to_dense(&self) -> [Complex<T>; 8] {
        let k = frac_1_sqrt_2::<T>();
        let q = self.quantum_vector();
        let m = self.membership_vector();
        let mut out = [Complex::zero(); 8];
        for n in 0..4 {
            out[n] = q[n] * k;
            out[n + 4] = Complex::new(m[n] * k, T::zero());
        }
        out
    }

    /// `½ (Σ|b|² + Σβ²)`, equal to 1 for a valid register.
    pub fn norm_sqr(&self) -> T {
        let q: T = self.b.iter().flatten().map(|z| z.norm_sqr()).sum();
        let m: T = self.beta.iter().flatten().map(|&x| x * x).sum();
        (q + m) * T::half()
    }

    pub fn det_b(&self) -> Complex<T> {
        self.b[0][0] * self.b[1][1] - self.b[0][1] * self.b[1][0]
    }

    pub fn det_beta(&self) -> T {
        self.beta[0][0] * self.beta[1][1] - self.beta[0][1] * self.beta[1][0]
    }

    pub fn is_separable(&self, tol: T) -> Separability {
        Separability {
            quantum: self.det_b().norm() <= tol,
            membership: self.det_beta().abs() <= tol,
        }
    }

    /// `(C_q, C_μ) = 2(|det b|, |det β|)`.
    pub fn vector_concurrence(&self) -> (T, T) {
        (
            T::two() * self.det_b().norm(),
            T::two() * self.det_beta().abs(),
        )
    }

    /// `√((C_q² + C_μ²)/2)`.
    pub fn scalar_concurrence(&self) -> T {
        let (cq, cm) = self.vector_concurrence();
        ((cq * cq + cm * cm) * T::half()).sqrt()
    }

    pub fn concurrence(&self) -> Concurrence<T> {
        let (c_q, c_mu) = self.vector_concurrence();
        Concurrence {
            c_q,
            c_mu,
            c_scal: self.scalar_concurrence(),
        }
    }

    /// Probabilities `|b_ij'|²` and memberships from `β` under `model`,
    /// listed as `00', 10', 01', 11'`.
    ///
    /// Only the Born-like model is defined on four amplitudes.
    pub fn report(&self, model: MembershipModel, tol: T) -> Result<RegisterReport<T>> {
        let betas: Vec<T> = LISTING_ORDER
            .iter()
            .map(|&(i, j)| self.beta[i][j])
            .collect();
        let mu = model.evaluate(&betas, tol)?.into_vec();
        let rows = LISTING_ORDER
            .iter()
            .zip(mu)
            .map(|(&(i, j), membership)| ReportRow {
                label: basis_label(i, j),
                probability: self.b[i][j].norm_sqr(),
                membership,
            })
            .collect();
        Ok(RegisterReport { rows })
    }
}

/// Product register of two Kronecker qubits: `b_ij' = a_i a'_j`,
/// `β_ij' = α_i α'_j`.
///
/// Each sector is the outer product of the two input columns, so both
/// determinants vanish and the register is normalized whenever the inputs
/// are.
pub fn tensor_two<T: Scalar>(x: &KroneckerQubit<T>, y: &KroneckerQubit<T>) -> TwoQubitRegister<T> {
    let mut b = [[Complex::zero(); 2]; 2];
    let mut beta = [[T::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let amp = x.amplitudes()[i].hadamard(y.amplitudes()[j]);
            b[i][j] = amp.a;
            beta[i][j] = amp.alpha;
        }
    }
    TwoQubitRegister { b, beta }
}

/// Per-sector separability flags. `true` means the sector factorizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separability {
    pub quantum: bool,
    pub membership: bool,
}

impl Separability {
    pub fn is_totally_separable(&self) -> bool {
        self.quantum && self.membership
    }

    /// Entangled in exactly one sector.
    pub fn is_partial(&self) -> bool {
        self.quantum != self.membership
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Concurrence<T> {
    pub c_q: T,
    pub c_mu: T,
    pub c_scal: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow<T> {
    pub label: String,
    pub probability: T,
    pub membership: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegisterReport<T> {
    pub rows: Vec<ReportRow<T>>,
}

impl<T: Scalar> RegisterReport<T> {
    pub fn probabilities(&self) -> Vec<T> {
        self.rows.iter().map(|r| r.probability).collect()
    }

    pub fn memberships(&self) -> Vec<T> {
        self.rows.iter().map(|r| r.membership).collect()
    }
}
