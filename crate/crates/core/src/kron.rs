//! Kronecker obscure qubits.
//!
//! A Kronecker qubit is the double superposition `(A_0|0⟩ + A_1|1⟩)/√2`
//! whose coefficients `A_i = [a_i; α_i]` pair a complex quantum amplitude
//! with a real membership amplitude. In the vector representation the
//! state lives in `H_q × V_memb`: a complex quantum block and a real
//! membership block that are never mixed.
//!
//! The global `1/√2` is not stored. [`KroneckerQubit`] keeps the bare
//! columns `(a_0, a_1)` and `(α_0, α_1)`; the factor is applied by
//! [`KroneckerQubit::to_block`], [`inner`] and [`KroneckerQubit::density4`].

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result, Sector};
use crate::matrix::ComplexMatrix;
use crate::membership::{MembershipModel, MembershipVector};
use crate::scalar::{frac_1_sqrt_2, Scalar};

/// Double obscure-quantum amplitude `[a; α]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObscureAmplitude<T> {
    pub a: Complex<T>,
    pub alpha: T,
}

impl<T: Scalar> ObscureAmplitude<T> {
    pub fn new(a: Complex<T>, alpha: T) -> Self {
        ObscureAmplitude { a, alpha }
    }

    pub fn zero() -> Self {
        ObscureAmplitude::new(Complex::zero(), T::zero())
    }

    /// Element-wise (Schur) product `[a; α] ∘ [c; d] = [a c; α d]`.
    pub fn hadamard(self, other: ObscureAmplitude<T>) -> ObscureAmplitude<T> {
        ObscureAmplitude::new(self.a * other.a, self.alpha * other.alpha)
    }

    /// Schur product with a unit vector of the total space, `A ∘_H E_i`.
    pub fn hadamard_basis(self, basis: TotalBasisVector) -> BlockVector<T> {
        basis.block().hadamard(self)
    }

    /// `A^⋆ A = |a|² + α²`.
    pub fn star_norm_sqr(self) -> T {
        self.a.norm_sqr() + self.alpha * self.alpha
    }
}

/// Index of a computational basis state of one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Zero = 0,
    One = 1,
}

impl Basis {
    pub const BOTH: [Basis; 2] = [Basis::Zero, Basis::One];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Basis> {
        match i {
            0 => Some(Basis::Zero),
            1 => Some(Basis::One),
            _ => None,
        }
    }

    pub fn flip(self) -> Basis {
        match self {
            Basis::Zero => Basis::One,
            Basis::One => Basis::Zero,
        }
    }
}

/// Unit vector `E_i = [e_i; ε_i]` of the total four-dimensional space. The
/// two halves share an index but belong to different spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TotalBasisVector(pub Basis);

impl TotalBasisVector {
    pub fn index(self) -> Basis {
        self.0
    }

    pub fn quantum_part<T: Scalar>(self) -> [Complex<T>; 2] {
        let mut e = [Complex::zero(); 2];
        e[self.0.index()] = Complex::new(T::one(), T::zero());
        e
    }

    pub fn membership_part<T: Scalar>(self) -> [T; 2] {
        let mut eps = [T::zero(); 2];
        eps[self.0.index()] = T::one();
        eps
    }

    pub fn block<T: Scalar>(self) -> BlockVector<T> {
        BlockVector {
            quantum: self.quantum_part(),
            membership: self.membership_part(),
        }
    }
}

/// An explicit element of `H_q × V_memb`: a complex quantum block and a real
/// membership block. Not necessarily normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockVector<T> {
    pub quantum: [Complex<T>; 2],
    pub membership: [T; 2],
}

impl<T: Scalar> BlockVector<T> {
    pub fn zero() -> Self {
        BlockVector {
            quantum: [Complex::zero(); 2],
            membership: [T::zero(); 2],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        BlockVector {
            quantum: [
                self.quantum[0] + other.quantum[0],
                self.quantum[1] + other.quantum[1],
            ],
            membership: [
                self.membership[0] + other.membership[0],
                self.membership[1] + other.membership[1],
            ],
        }
    }

    pub fn scale(&self, k: T) -> Self {
        BlockVector {
            quantum: [self.quantum[0] * k, self.quantum[1] * k],
            membership: [self.membership[0] * k, self.membership[1] * k],
        }
    }

    /// Multiplies the quantum block by `amp.a` and the membership block by
    /// `amp.alpha`.
    pub fn hadamard(&self, amp: ObscureAmplitude<T>) -> Self {
        BlockVector {
            quantum: [self.quantum[0] * amp.a, self.quantum[1] * amp.a],
            membership: [
                self.membership[0] * amp.alpha,
                self.membership[1] * amp.alpha,
            ],
        }
    }

    /// `⟨u|v⟩` with the quantum block conjugated and the membership block
    /// taken as is.
    pub fn inner(&self, ket: &Self) -> Complex<T> {
        let q = self.quantum[0].conj() * ket.quantum[0] + self.quantum[1].conj() * ket.quantum[1];
        let m = self.membership[0] * ket.membership[0] + self.membership[1] * ket.membership[1];
        q + Complex::new(m, T::zero())
    }

    pub fn norm_sqr(&self) -> T {
        self.inner(self).re
    }

    /// The four components `(q_0, q_1, m_0, m_1)` as complex numbers, for
    /// display or dense-matrix work.
    pub fn to_dense(&self) -> [Complex<T>; 4] {
        [
            self.quantum[0],
            self.quantum[1],
            Complex::new(self.membership[0], T::zero()),
            Complex::new(self.membership[1], T::zero()),
        ]
    }

    /// Removes the implicit `1/√2` and returns the bare columns, the same
    /// convention in which [`KroneckerQubit`] stores its amplitudes.
    pub fn columns(&self) -> ([Complex<T>; 2], [T; 2]) {
        let k = T::SQRT_2();
        (
            [self.quantum[0] * k, self.quantum[1] * k],
            [self.membership[0] * k, self.membership[1] * k],
        )
    }

    /// Rescales each block to unit length and returns the resulting qubit.
    /// Fails if either block vanishes.
    pub fn renormalize(&self, tol: T) -> Result<KroneckerQubit<T>> {
        let (q, m) = self.columns();
        let qn = (q[0].norm_sqr() + q[1].norm_sqr()).sqrt();
        let mn = (m[0] * m[0] + m[1] * m[1]).sqrt();
        if qn <= tol {
            return Err(Error::Domain(
                "cannot renormalize: quantum block vanishes".into(),
            ));
        }
        if mn <= tol {
            return Err(Error::Domain(
                "cannot renormalize: membership block vanishes".into(),
            ));
        }
        KroneckerQubit::from_columns([q[0] / qn, q[1] / qn], [m[0] / mn, m[1] / mn], tol)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.quantum
            .iter()
            .zip(&other.quantum)
            .all(|(x, y)| (x - y).norm() <= tol)
            && self
                .membership
                .iter()
                .zip(&other.membership)
                .all(|(x, y)| (*x - *y).abs() <= tol)
    }
}

/// Kronecker-like product `[a; α] ⊗̃ e_i = [a e_i; α ε_i]`.
pub fn kron_like<T: Scalar>(amp: ObscureAmplitude<T>, index: Basis) -> BlockVector<T> {
    let basis = TotalBasisVector(index);
    let mut out = BlockVector::zero();
    out.quantum[index.index()] = amp.a;
    out.membership[index.index()] = amp.alpha;
    debug_assert_eq!(out, amp.hadamard_basis(basis));
    out
}

/// Element-wise product of two amplitude pairs.
pub fn hadamard_product<T: Scalar>(
    x: ObscureAmplitude<T>,
    y: ObscureAmplitude<T>,
) -> ObscureAmplitude<T> {
    x.hadamard(y)
}

/// Kronecker obscure qubit `(A_0|0⟩ + A_1|1⟩)/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KroneckerQubit<T> {
    amps: [ObscureAmplitude<T>; 2],
}

impl<T: Scalar> KroneckerQubit<T> {
    /// Builds a qubit from its two obscure amplitudes, checking
    /// `|a_0|²+|a_1|² = 1`, `α_0²+α_1² = 1` and `α_i ∈ [−1, 1]`.
    pub fn new(a0: ObscureAmplitude<T>, a1: ObscureAmplitude<T>, tol: T) -> Result<Self> {
        let q_sum = a0.a.norm_sqr() + a1.a.norm_sqr();
        if (q_sum - T::one()).abs() > tol || q_sum.is_nan() {
            return Err(Error::Normalization {
                sector: Sector::Quantum,
                sum: q_sum.to_f64_lossy(),
            });
        }
        for (i, amp) in [a0, a1].iter().enumerate() {
            if amp.alpha.abs() > T::one() + tol {
                return Err(Error::range(
                    format!("membership amplitude α_{i}"),
                    amp.alpha.to_f64_lossy(),
                    -1.0,
                    1.0,
                ));
            }
        }
        let m_sum = a0.alpha * a0.alpha + a1.alpha * a1.alpha;
        if (m_sum - T::one()).abs() > tol || m_sum.is_nan() {
            return Err(Error::Normalization {
                sector: Sector::Membership,
                sum: m_sum.to_f64_lossy(),
            });
        }
        Ok(KroneckerQubit { amps: [a0, a1] })
    }

    /// Builds a qubit from the quantum column `(a_0, a_1)` and the
    /// membership column `(α_0, α_1)`.
    pub fn from_columns(quantum: [Complex<T>; 2], membership: [T; 2], tol: T) -> Result<Self> {
        Self::new(
            ObscureAmplitude::new(quantum[0], membership[0]),
            ObscureAmplitude::new(quantum[1], membership[1]),
            tol,
        )
    }

    /// The unit vector `E_i`, i.e. `A_i = [1; 1]` and the other amplitude zero.
    pub fn basis(index: Basis) -> Self {
        let mut amps = [ObscureAmplitude::zero(); 2];
        amps[index.index()] = ObscureAmplitude::new(Complex::new(T::one(), T::zero()), T::one());
        KroneckerQubit { amps }
    }

    /// Qubit with probability `p` and membership `μ` for `|0⟩` (and `1−p`,
    /// `1−μ` for `|1⟩`): `a = (√p, √(1−p))`, and membership amplitudes
    /// chosen so that the model returns `μ_0 = μ`.
    ///
    /// * Arc: `α = (cos(πμ/2), sin(πμ/2))`, giving `μ = (μ, 1−μ)`.
    /// * Born-like: `α = (√μ, √(1−μ))`, giving `μ = (μ, 1−μ)`.
    /// * Circle-square: `α = (sin(πμ/2), cos(πμ/2))`, giving `μ_0 = μ`; the
    ///   model fixes `μ_1 = 1` for every normalized positive pair.
    pub fn from_prob_membership(p: T, mu: T, model: MembershipModel) -> Result<Self> {
        for (name, v) in [("p", p), ("mu", mu)] {
            if !(T::zero()..=T::one()).contains(&v) {
                return Err(Error::range(name, v.to_f64_lossy(), 0.0, 1.0));
            }
        }
        let one = T::one();
        let quantum = [
            Complex::new(p.sqrt(), T::zero()),
            Complex::new((one - p).sqrt(), T::zero()),
        ];
        let angle = T::FRAC_PI_2() * mu;
        let membership = match model {
            MembershipModel::Arc => [angle.cos(), angle.sin()],
            MembershipModel::BornLike => [mu.sqrt(), (one - mu).sqrt()],
            MembershipModel::CircleSquare => [angle.sin(), angle.cos()],
        };
        Self::from_columns(quantum, membership, T::default_tolerance())
    }

    pub fn amplitude(&self, index: Basis) -> ObscureAmplitude<T> {
        self.amps[index.index()]
    }

    pub fn amplitudes(&self) -> [ObscureAmplitude<T>; 2] {
        self.amps
    }

    pub fn quantum(&self) -> [Complex<T>; 2] {
        [self.amps[0].a, self.amps[1].a]
    }

    pub fn membership(&self) -> [T; 2] {
        [self.amps[0].alpha, self.amps[1].alpha]
    }

    /// `p_i = |a_i|²`.
    pub fn probabilities(&self) -> [T; 2] {
        [self.amps[0].a.norm_sqr(), self.amps[1].a.norm_sqr()]
    }

    pub fn memberships(&self, model: MembershipModel, tol: T) -> Result<MembershipVector<T>> {
        model.evaluate(&self.membership(), tol)
    }

    /// Explicit four-component vector, including the `1/√2`.
    pub fn to_block(&self) -> BlockVector<T> {
        self.decomposed()
    }

    /// `(1/√2)·(A_0 ⊗̃ e_0 + A_1 ⊗̃ e_1)`.
    pub fn decomposed(&self) -> BlockVector<T> {
        kron_like(self.amps[0], Basis::Zero)
            .add(&kron_like(self.amps[1], Basis::One))
            .scale(frac_1_sqrt_2())
    }

    /// `(1/√2)·(A_0 ∘_H E_0 + A_1 ∘_H E_1)`.
    pub fn hadamard_form(&self) -> BlockVector<T> {
        self.amps[0]
            .hadamard_basis(TotalBasisVector(Basis::Zero))
            .add(&self.amps[1].hadamard_basis(TotalBasisVector(Basis::One)))
            .scale(frac_1_sqrt_2())
    }

    /// The 4×4 matrix `|Ψ⟩⟨Ψ|` with ket `(a_0, a_1, α_0, α_1)/√2` and bra
    /// `(a_0*, a_1*, α_0, α_1)/√2`.
    pub fn density4(&self) -> ComplexMatrix<T> {
        let ket = self.to_block().to_dense();
        let bra: Vec<_> = ket.iter().map(|z| z.conj()).collect();
        ComplexMatrix::outer(&ket, &bra)
    }

    /// Multiplies the quantum column by a unit phase.
    pub fn with_global_phase(&self, theta: T) -> Self {
        let phase = Complex::from_polar(T::one(), theta);
        let mut amps = self.amps;
        for amp in &mut amps {
            amp.a = amp.a * phase;
        }
        KroneckerQubit { amps }
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.to_block().approx_eq(&other.to_block(), tol)
    }

    /// Skips validation; for gate outputs whose norms are preserved by
    /// construction.
    pub(crate) fn from_columns_unchecked(quantum: [Complex<T>; 2], membership: [T; 2]) -> Self {
        KroneckerQubit {
            amps: [
                ObscureAmplitude::new(quantum[0], membership[0]),
                ObscureAmplitude::new(quantum[1], membership[1]),
            ],
        }
    }
}

/// `⟨Ψ_bra|Ψ_ket⟩ = ½ Σ_i (a_i^bra* a_i^ket + α_i^bra α_i^ket)`.
pub fn inner<T: Scalar>(bra: &KroneckerQubit<T>, ket: &KroneckerQubit<T>) -> Complex<T> {
    let sum = bra
        .amps
        .iter()
        .zip(&ket.amps)
        .fold(Complex::zero(), |acc: Complex<T>, (x, y)| {
            acc + x.a.conj() * y.a + Complex::new(x.alpha * y.alpha, T::zero())
        });
    sum * T::half()
}
