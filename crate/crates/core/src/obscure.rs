//! Product-form obscure qudits.
//!
//! Each basis state `|i⟩` carries a complex probability amplitude `a_i` and
//! a real membership amplitude `α_i`; the state vector itself has the
//! combined coefficients `α_i a_i`. Both factors are stored separately
//! because the membership model, the membership matrix and the density
//! matrix all need them individually.

use num_complex::Complex;

use crate::error::{Error, Result, Sector};
use crate::matrix::{ComplexMatrix, RealMatrix};
use crate::membership::{MembershipModel, MembershipVector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct ObscureQudit<T> {
    quantum: Vec<Complex<T>>,
    membership: Vec<T>,
    model: MembershipModel,
    normalized: bool,
}

impl<T: Scalar> ObscureQudit<T> {
    /// Validated constructor using the scalar's default tolerance.
    pub fn new(
        quantum: Vec<Complex<T>>,
        membership: Vec<T>,
        model: MembershipModel,
    ) -> Result<Self> {
        Self::with_tolerance(quantum, membership, model, T::default_tolerance())
    }

    pub fn with_tolerance(
        quantum: Vec<Complex<T>>,
        membership: Vec<T>,
        model: MembershipModel,
        tol: T,
    ) -> Result<Self> {
        let dim = quantum.len();
        if dim != membership.len() {
            return Err(Error::Dimension(format!(
                "{dim} quantum amplitudes but {} membership amplitudes",
                membership.len()
            )));
        }
        if dim < 2 {
            return Err(Error::Dimension(format!(
                "an obscure qudit needs at least two basis states, got {dim}"
            )));
        }
        if !model.supports_dim(dim) {
            return Err(Error::Domain(format!(
                "the {model} model is only defined for qubits"
            )));
        }
        let q_sum: T = quantum.iter().map(|a| a.norm_sqr()).sum();
        if (q_sum - T::one()).abs() > tol {
            return Err(Error::Normalization {
                sector: Sector::Quantum,
                sum: q_sum.to_f64_lossy(),
            });
        }
        for (i, &alpha) in membership.iter().enumerate() {
            if alpha < -tol || alpha > T::one() + tol || alpha.is_nan() {
                return Err(Error::range(
                    format!("membership amplitude α_{i}"),
                    alpha.to_f64_lossy(),
                    0.0,
                    1.0,
                ));
            }
        }
        if model == MembershipModel::BornLike {
            let m_sum: T = membership.iter().map(|&a| a * a).sum();
            if (m_sum - T::one()).abs() > tol {
                return Err(Error::Normalization {
                    sector: Sector::Membership,
                    sum: m_sum.to_f64_lossy(),
                });
            }
        }
        Ok(ObscureQudit {
            quantum,
            membership,
            model,
            normalized: true,
        })
    }

    /// Builds a state without any normalization or range checks. The result
    /// is flagged as unnormalized.
    pub fn unnormalized(
        quantum: Vec<Complex<T>>,
        membership: Vec<T>,
        model: MembershipModel,
    ) -> Result<Self> {
        if quantum.len() != membership.len() {
            return Err(Error::Dimension(format!(
                "{} quantum amplitudes but {} membership amplitudes",
                quantum.len(),
                membership.len()
            )));
        }
        Ok(ObscureQudit {
            quantum,
            membership,
            model,
            normalized: false,
        })
    }

    /// Qubit from its Bloch-ball angles, with the Born-like model.
    pub fn from_bloch(params: BlochParams<T>) -> Self {
        let half = T::half();
        let (s, c) = (params.theta * half).sin_cos();
        let (sm, cm) = (params.theta_mu * half).sin_cos();
        let phase = Complex::from_polar(T::one(), params.phi);
        ObscureQudit {
            quantum: vec![Complex::new(c, T::zero()), phase * s],
            membership: vec![cm, sm],
            model: MembershipModel::BornLike,
            normalized: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.quantum.len()
    }

    pub fn quantum(&self) -> &[Complex<T>] {
        &self.quantum
    }

    pub fn membership(&self) -> &[T] {
        &self.membership
    }

    pub fn model(&self) -> MembershipModel {
        self.model
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Same amplitudes under a different membership model. No revalidation.
    pub fn with_model(mut self, model: MembershipModel) -> Self {
        self.model = model;
        self
    }

    /// The state-vector coefficients `α_i a_i`.
    pub fn coefficients(&self) -> Vec<Complex<T>> {
        self.quantum
            .iter()
            .zip(&self.membership)
            .map(|(&a, &alpha)| a * alpha)
            .collect()
    }

    /// `⟨ψ_ob|ψ_ob⟩ = Σ α_i² |a_i|²`. Not constant over the Bloch ball.
    pub fn norm(&self) -> T {
        self.quantum
            .iter()
            .zip(&self.membership)
            .map(|(a, &alpha)| alpha * alpha * a.norm_sqr())
            .sum()
    }

    /// Born probabilities `|a_i|²`.
    pub fn probabilities(&self) -> Vec<T> {
        self.quantum.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn memberships(&self, tol: T) -> Result<MembershipVector<T>> {
        self.model.evaluate(&self.membership, tol)
    }

    /// Pure-state density matrix in the layout `ρ_ij = (α_i a_i)* (α_j a_j)`.
    ///
    /// This is the transpose of `|ψ⟩⟨ψ|`; trace, determinant and
    /// (non-)idempotence agree with the usual outer product.
    pub fn density(&self) -> ComplexMatrix<T> {
        let coeffs = self.coefficients();
        let bra: Vec<_> = coeffs.iter().map(|z| z.conj()).collect();
        ComplexMatrix::outer(&bra, &coeffs)
    }

    /// Density matrix of a qubit.
    pub fn density2(&self) -> Result<ComplexMatrix<T>> {
        self.require_qubit()?;
        Ok(self.density())
    }

    /// Membership matrix `diag(α_0, α_1)` built from the state's own
    /// membership amplitudes.
    pub fn membership_matrix(&self) -> Result<MembershipMatrix<T>> {
        self.require_qubit()?;
        Ok(MembershipMatrix::new(
            self.membership[0],
            self.membership[1],
        ))
    }

    fn require_qubit(&self) -> Result<()> {
        if self.dim() != 2 {
            return Err(Error::Dimension(format!(
                "operation needs a qubit, state has {} levels",
                self.dim()
            )));
        }
        Ok(())
    }
}

/// Bloch-ball angles of a Born-like obscure qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochParams<T> {
    pub theta: T,
    pub phi: T,
    pub theta_mu: T,
}

impl<T: Scalar> BlochParams<T> {
    /// Checks `θ, θ_μ ∈ [0, π]` and `φ ∈ [0, 2π]`.
    pub fn new(theta: T, phi: T, theta_mu: T) -> Result<Self> {
        let pi = T::PI();
        let check = |name: &str, v: T, max: T| {
            if v >= T::zero() && v <= max {
                Ok(())
            } else {
                Err(Error::range(
                    name,
                    v.to_f64_lossy(),
                    0.0,
                    max.to_f64_lossy(),
                ))
            }
        };
        check("theta", theta, pi)?;
        check("phi", phi, pi + pi)?;
        check("theta_mu", theta_mu, pi)?;
        Ok(BlochParams {
            theta,
            phi,
            theta_mu,
        })
    }

    /// `1/2 + cos(θ+θ_μ)/4 + cos(θ−θ_μ)/4`.
    pub fn closed_form_norm(&self) -> T {
        let quarter = T::lit(0.25);
        T::half()
            + quarter * (self.theta + self.theta_mu).cos()
            + quarter * (self.theta - self.theta_mu).cos()
    }
}

/// `M(α_0, α_1) = diag(α_0, α_1) = α_0 P_0 + α_1 P_1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipMatrix<T> {
    alpha: [T; 2],
}

impl<T: Scalar> MembershipMatrix<T> {
    pub fn new(alpha0: T, alpha1: T) -> Self {
        MembershipMatrix {
            alpha: [alpha0, alpha1],
        }
    }

    pub fn entries(&self) -> [T; 2] {
        self.alpha
    }

    pub fn to_matrix(&self) -> RealMatrix<T> {
        RealMatrix::diagonal(&self.alpha)
    }

    /// The same matrix assembled as a linear combination of the basis
    /// projectors.
    pub fn from_projectors(&self) -> RealMatrix<T> {
        let p0 = RealMatrix::diagonal(&[T::one(), T::zero()]);
        let p1 = RealMatrix::diagonal(&[T::zero(), T::one()]);
        p0.scale(self.alpha[0]).add(&p1.scale(self.alpha[1]))
    }

    /// `tr M² = α_0² + α_1²`.
    pub fn trace_of_square(&self) -> T {
        self.alpha[0] * self.alpha[0] + self.alpha[1] * self.alpha[1]
    }

    pub fn is_invertible(&self) -> bool {
        !self.alpha[0].is_zero() && !self.alpha[1].is_zero()
    }

    /// Composition of two diagonal actions.
    pub fn then(&self, other: &Self) -> Self {
        MembershipMatrix::new(
            self.alpha[0] * other.alpha[0],
            self.alpha[1] * other.alpha[1],
        )
    }
}

/// Applies a membership matrix to an obscure qubit.
///
/// The combined coefficients `α_i a_i` become `m_i α_i a_i`; with the
/// state's own matrix that is `α_i² a_i`. The map is invertible when both
/// `m_i ≠ 0` but not unitary, so the result is flagged unnormalized.
pub fn obscure_measure<T: Scalar>(
    m: &MembershipMatrix<T>,
    state: &ObscureQudit<T>,
) -> Result<ObscureQudit<T>> {
    state.require_qubit()?;
    let membership = state
        .membership
        .iter()
        .zip(m.alpha)
        .map(|(&alpha, mi)| alpha * mi)
        .collect();
    ObscureQudit::unnormalized(state.quantum.clone(), membership, state.model)
}

/// Combined coefficients `(α_0 a_0, α_1 a_1)` of the superposition
/// `c_f|s⟩_f + c_g|s⟩_g` of two classical-quantum fuzzy registers
/// `|s⟩_f = √(1−f)|0⟩ + √f|1⟩`.
///
/// Only the products are determined; splitting them into a membership and
/// a quantum factor is not unique and is left to the caller.
pub fn from_classical_quantum<T: Scalar>(
    cf: Complex<T>,
    cg: Complex<T>,
    f: T,
    g: T,
) -> Result<[Complex<T>; 2]> {
    for (name, v) in [("f", f), ("g", g)] {
        if !(T::zero()..=T::one()).contains(&v) {
            return Err(Error::range(name, v.to_f64_lossy(), 0.0, 1.0));
        }
    }
    let one = T::one();
    Ok([
        cf * (one - f).sqrt() + cg * (one - g).sqrt(),
        cf * f.sqrt() + cg * g.sqrt(),
    ])
}

impl<T: Scalar> Default for MembershipMatrix<T> {
    fn default() -> Self {
        MembershipMatrix::new(T::one(), T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c, re};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    const TOL: f64 = 1e-9;

    fn qubit(a: [Complex<f64>; 2], alpha: [f64; 2]) -> ObscureQudit<f64> {
        ObscureQudit::new(a.to_vec(), alpha.to_vec(), MembershipModel::BornLike).unwrap()
    }

    #[test]
    fn construction_examples() {
        let basis = qubit([re(1.0), re(0.0)], [1.0, 0.0]);
        assert_eq!(basis.probabilities(), vec![1.0, 0.0]);

        let s = qubit([re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)], [0.6, 0.8]);
        let p = s.probabilities();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.5, epsilon = 1e-15);
        let mu = s.memberships(TOL).unwrap();
        assert_abs_diff_eq!(mu[0], 0.36, epsilon = 1e-15);
        assert_abs_diff_eq!(mu[1], 0.64, epsilon = 1e-15);

        let err = ObscureQudit::new(
            vec![re(1.0), re(0.0)],
            vec![0.5, 0.5],
            MembershipModel::BornLike,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::Normalization {
                sector: Sector::Membership,
                ..
            }
        ));
    }

    #[test]
    fn construction_errors() {
        let bad_q = ObscureQudit::new(
            vec![re(1.0), re(1.0)],
            vec![1.0, 0.0],
            MembershipModel::BornLike,
        );
        assert!(matches!(
            bad_q,
            Err(Error::Normalization {
                sector: Sector::Quantum,
                ..
            })
        ));
        let out_of_range =
            ObscureQudit::new(vec![re(1.0), re(0.0)], vec![1.2, 0.0], MembershipModel::Arc);
        assert!(matches!(out_of_range, Err(Error::Range { .. })));
        let negative = ObscureQudit::new(
            vec![re(1.0), re(0.0)],
            vec![-0.6, 0.8],
            MembershipModel::BornLike,
        );
        assert!(matches!(negative, Err(Error::Range { .. })));
        let ragged =
            ObscureQudit::new(vec![re(1.0), re(0.0)], vec![1.0], MembershipModel::BornLike);
        assert!(matches!(ragged, Err(Error::Dimension(_))));
        let single = ObscureQudit::new(vec![re(1.0)], vec![1.0], MembershipModel::BornLike);
        assert!(matches!(single, Err(Error::Dimension(_))));
        let qutrit_arc = ObscureQudit::new(
            vec![re(1.0), re(0.0), re(0.0)],
            vec![1.0, 0.0, 0.0],
            MembershipModel::Arc,
        );
        assert!(matches!(qutrit_arc, Err(Error::Domain(_))));
    }

    #[test]
    fn arc_model_does_not_require_unit_membership_norm() {
        let s = ObscureQudit::new(vec![re(1.0), re(0.0)], vec![0.5, 0.5], MembershipModel::Arc)
            .unwrap();
        let mu = s.memberships(TOL).unwrap();
        assert_abs_diff_eq!(mu[0], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn qutrit_born_like() {
        let s = ObscureQudit::new(
            vec![re(0.6), re(0.0), c(0.0, 0.8)],
            vec![0.0, 0.6, 0.8],
            MembershipModel::BornLike,
        )
        .unwrap();
        assert_eq!(s.dim(), 3);
        assert_abs_diff_eq!(s.probabilities().iter().sum::<f64>(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.norm(), 0.64 * 0.64, epsilon = 1e-15);
        assert!(s.density2().is_err());
    }

    #[test]
    fn bloch_examples() {
        let s = ObscureQudit::from_bloch(BlochParams::new(0.0, 0.0, 0.0).unwrap());
        assert_eq!(s.quantum(), &[re(1.0), re(0.0)]);
        assert_eq!(s.membership(), &[1.0, 0.0]);

        let s = ObscureQudit::from_bloch(BlochParams::new(FRAC_PI_2, 0.0, FRAC_PI_2).unwrap());
        for z in s.quantum() {
            assert_abs_diff_eq!(z.re, FRAC_1_SQRT_2, epsilon = 1e-15);
            assert_abs_diff_eq!(z.im, 0.0, epsilon = 1e-15);
        }
        for &a in s.membership() {
            assert_abs_diff_eq!(a, FRAC_1_SQRT_2, epsilon = 1e-15);
        }

        let s = ObscureQudit::from_bloch(BlochParams::new(PI, 0.0, PI).unwrap());
        assert_abs_diff_eq!(s.quantum()[0].norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.quantum()[1].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.membership()[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.membership()[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn bloch_ranges_are_checked() {
        assert!(BlochParams::new(-0.1, 0.0, 0.0).is_err());
        assert!(BlochParams::new(0.0, 7.0, 0.0).is_err());
        assert!(BlochParams::new(0.0, 0.0, 3.2).is_err());
        assert!(BlochParams::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn bloch_combined_coefficients_match_display() {
        let p = BlochParams::new(1.1, 2.3, 0.4).unwrap();
        let s = ObscureQudit::from_bloch(p);
        let coeffs = s.coefficients();
        let expected0 = (1.1f64 / 2.0).cos() * (0.4f64 / 2.0).cos();
        let expected1 = Complex::from_polar(1.0, 2.3) * (1.1f64 / 2.0).sin() * (0.4f64 / 2.0).sin();
        assert_abs_diff_eq!(coeffs[0].re, expected0, epsilon = 1e-15);
        assert_abs_diff_eq!((coeffs[1] - expected1).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn norm_examples() {
        let min = ObscureQudit::from_bloch(BlochParams::new(FRAC_PI_2, 0.0, FRAC_PI_2).unwrap());
        assert_abs_diff_eq!(min.norm(), 0.5, epsilon = 1e-15);
        let pole = ObscureQudit::from_bloch(BlochParams::new(0.0, 0.0, 0.0).unwrap());
        assert_eq!(pole.norm(), 1.0);
        for k in 0..=20 {
            let t = PI * k as f64 / 20.0;
            let s = ObscureQudit::from_bloch(BlochParams::new(t, 0.3, t).unwrap());
            assert_abs_diff_eq!(s.norm(), 1.0 - 0.5 * t.sin().powi(2), epsilon = 1e-14);
        }
    }

    #[test]
    fn probabilities_with_phase() {
        let s = qubit([c(0.0, 0.6), re(0.8)], [1.0, 0.0]);
        let p = s.probabilities();
        assert_abs_diff_eq!(p[0], 0.36, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 0.64, epsilon = 1e-15);
    }

    #[test]
    fn memberships_per_model() {
        let q = vec![re(1.0), re(0.0)];
        let born = ObscureQudit::new(q.clone(), vec![0.6, 0.8], MembershipModel::BornLike).unwrap();
        assert_abs_diff_eq!(born.memberships(TOL).unwrap()[1], 0.64, epsilon = 1e-15);
        let arc = ObscureQudit::new(
            q.clone(),
            vec![FRAC_1_SQRT_2, FRAC_1_SQRT_2],
            MembershipModel::Arc,
        )
        .unwrap();
        assert_abs_diff_eq!(arc.memberships(TOL).unwrap()[0], 0.5, epsilon = 1e-15);
        let cs = ObscureQudit::new(q, vec![0.6, 0.8], MembershipModel::CircleSquare).unwrap();
        assert_abs_diff_eq!(cs.memberships(TOL).unwrap()[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn membership_matrix_examples() {
        assert_eq!(
            MembershipMatrix::new(1.0, 1.0).to_matrix(),
            RealMatrix::identity(2)
        );
        let m = MembershipMatrix::new(0.6, 0.8);
        assert_eq!(m.to_matrix(), RealMatrix::diagonal(&[0.6, 0.8]));
        assert_abs_diff_eq!(m.trace_of_square(), 1.0, epsilon = 1e-15);
        let sq = &m.to_matrix() * &m.to_matrix();
        assert_abs_diff_eq!(sq.trace(), 1.0, epsilon = 1e-15);
        assert_eq!(m.from_projectors(), m.to_matrix());
        let h = MembershipMatrix::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);
        assert_eq!(
            h.to_matrix(),
            RealMatrix::diagonal(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2])
        );
        assert!(h.is_invertible());
        assert!(!MembershipMatrix::new(1.0, 0.0).is_invertible());
    }

    #[test]
    fn obscure_measure_examples() {
        let s = qubit([re(0.6), c(0.0, 0.8)], [0.6, 0.8]);
        let same = obscure_measure(&MembershipMatrix::default(), &s).unwrap();
        assert_eq!(same.coefficients(), s.coefficients());
        assert!(!same.is_normalized());

        let basis = qubit([re(1.0), re(0.0)], [1.0, 0.0]);
        let m = basis.membership_matrix().unwrap();
        assert_eq!(
            obscure_measure(&m, &basis).unwrap().coefficients(),
            vec![re(1.0), re(0.0)]
        );

        let h = qubit(
            [re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)],
            [FRAC_1_SQRT_2, FRAC_1_SQRT_2],
        );
        let out = obscure_measure(&h.membership_matrix().unwrap(), &h).unwrap();
        let expected = 1.0 / (2.0 * 2f64.sqrt());
        for z in out.coefficients() {
            assert_abs_diff_eq!(z.re, expected, epsilon = 1e-15);
        }
    }

    #[test]
    fn density_examples() {
        let basis = qubit([re(1.0), re(0.0)], [1.0, 0.0]);
        let rho = basis.density2().unwrap();
        assert_eq!(rho, ComplexMatrix::diagonal(&[re(1.0), re(0.0)]));
        assert_eq!(&rho * &rho, rho);

        let h = qubit(
            [re(FRAC_1_SQRT_2), re(FRAC_1_SQRT_2)],
            [FRAC_1_SQRT_2, FRAC_1_SQRT_2],
        );
        let rho = h.density2().unwrap();
        for row in rho.rows() {
            for z in row {
                assert_abs_diff_eq!(z.re, 0.25, epsilon = 1e-15);
            }
        }
        assert_abs_diff_eq!(rho.trace().re, 0.5, epsilon = 1e-15);
        assert!(!(&rho * &rho).approx_eq(&rho, 1e-3));
    }

    #[test]
    fn density_layout_follows_conjugated_first_factor() {
        let s = qubit([re(0.6), c(0.0, 0.8)], [0.6, 0.8]);
        let rho = s.density2().unwrap();
        // ρ_01 = α_0 a_0* α_1 a_1
        let expected = c(0.0f64, 0.8) * (0.6 * 0.6 * 0.8);
        assert_abs_diff_eq!((rho[(0, 1)] - expected).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((rho[(1, 0)] - expected.conj()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn classical_quantum_examples() {
        let (cf, f) = (c(0.3, 0.4), 0.36);
        let single = from_classical_quantum(cf, re(0.0), f, 0.5).unwrap();
        assert_abs_diff_eq!((single[0] - cf * 0.8).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((single[1] - cf * 0.6).norm(), 0.0, epsilon = 1e-15);

        let cg = c(-0.1, 0.2);
        let same = from_classical_quantum(cf, cg, 0.25, 0.25).unwrap();
        assert_abs_diff_eq!(
            (same[0] - (cf + cg) * 0.75f64.sqrt()).norm(),
            0.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!((same[1] - (cf + cg) * 0.5).norm(), 0.0, epsilon = 1e-15);

        let k = re(FRAC_1_SQRT_2);
        let mix = from_classical_quantum(k, k, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(mix[0].re, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(mix[1].re, FRAC_1_SQRT_2, epsilon = 1e-15);

        assert!(from_classical_quantum(k, k, 1.5, 0.0).is_err());
    }

    #[test]
    fn single_precision_bloch_norm() {
        let p = BlochParams::new(1.0f32, 0.5, 2.0).unwrap();
        let s = ObscureQudit::from_bloch(p);
        assert!((s.norm() - p.closed_form_norm()).abs() < 1e-6);
    }

    fn random_qubit() -> impl Strategy<Value = ObscureQudit<f64>> {
        (0.0..PI, 0.0..2.0 * PI, 0.0..PI)
            .prop_map(|(t, p, m)| ObscureQudit::from_bloch(BlochParams::new(t, p, m).unwrap()))
    }

    proptest! {
        #[test]
        fn probabilities_sum_to_one(s in random_qubit()) {
            prop_assert!((s.probabilities().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn density_is_singular(s in random_qubit()) {
            let rho = s.density2().unwrap();
            let explicit = rho[(0, 0)] * rho[(1, 1)] - rho[(0, 1)] * rho[(1, 0)];
            prop_assert!(explicit.norm() < 1e-12);
            prop_assert!(rho.det().norm() < 1e-12);
        }

        #[test]
        fn density_idempotent_iff_unit_trace(s in random_qubit()) {
            let rho = s.density2().unwrap();
            let trace = rho.trace().re;
            prop_assume!(trace > 1e-6);
            let a = s.quantum();
            let al = s.membership();
            let defect = (al[0] * al[0] - 1.0) * a[0].norm_sqr() + (al[1] * al[1] - 1.0) * a[1].norm_sqr();
            prop_assert!(((trace - 1.0) - defect).abs() < 1e-12);
            let idempotent = (&rho * &rho).approx_eq(&rho, 1e-9);
            prop_assert_eq!(idempotent, (trace - 1.0).abs() < 1e-9);
        }

        #[test]
        fn measuring_twice_squares_the_membership_matrix(s in random_qubit()) {
            let m = s.membership_matrix().unwrap();
            let twice = obscure_measure(&m, &obscure_measure(&m, &s).unwrap()).unwrap();
            let once = obscure_measure(&m.then(&m), &s).unwrap();
            for (x, y) in twice.coefficients().iter().zip(once.coefficients()) {
                prop_assert!((x - y).norm() < 1e-15);
            }
        }

        #[test]
        fn bloch_recovers_squared_half_angles(t in 0.0..PI, p in 0.0..2.0 * PI, m in 0.0..PI) {
            let s = ObscureQudit::from_bloch(BlochParams::new(t, p, m).unwrap());
            let probs = s.probabilities();
            let mu = s.memberships(TOL).unwrap();
            prop_assert!((probs[0] - (t / 2.0).cos().powi(2)).abs() < 1e-12);
            prop_assert!((probs[1] - (t / 2.0).sin().powi(2)).abs() < 1e-12);
            prop_assert!((mu[0] - (m / 2.0).cos().powi(2)).abs() < 1e-12);
            prop_assert!((mu[1] - (m / 2.0).sin().powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn norm_matches_closed_form_on_grid() {
        for i in 0..50 {
            for j in 0..50 {
                let p = BlochParams::new(PI * i as f64 / 49.0, 0.0, PI * j as f64 / 49.0).unwrap();
                let s = ObscureQudit::from_bloch(p);
                assert_abs_diff_eq!(s.norm(), p.closed_form_norm(), epsilon = 1e-12);
            }
        }
    }
}
