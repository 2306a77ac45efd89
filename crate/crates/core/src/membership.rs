//! Membership-function models.
//!
//! A model maps real membership amplitudes `α_i` to membership functions
//! `μ_i ∈ [0, 1]`. Three models ship with the crate:
//!
//! * [`MembershipModel::BornLike`]: `μ_i = α_i²`, any dimension.
//! * [`MembershipModel::Arc`]: `μ_0 = (2/π)·atan(α_1/α_0)`,
//!   `μ_1 = (2/π)·atan(α_0/α_1)`. Qubits only.
//! * [`MembershipModel::CircleSquare`]: the circle-to-square homeomorphism
//!   applied to `(α_0, α_1)`. Qubits only.
//!
//! Further models can be added as new enum variants; every consumer goes
//! through [`MembershipModel::evaluate`].

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MembershipModel {
    #[default]
    #[serde(rename = "born")]
    BornLike,
    #[serde(rename = "arc")]
    Arc,
    #[serde(rename = "circle-square")]
    CircleSquare,
}

impl MembershipModel {
    pub const ALL: [MembershipModel; 3] = [
        MembershipModel::BornLike,
        MembershipModel::Arc,
        MembershipModel::CircleSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MembershipModel::BornLike => "born",
            MembershipModel::Arc => "arc",
            MembershipModel::CircleSquare => "circle-square",
        }
    }

    /// Whether the model is defined for `dim` basis states.
    pub fn supports_dim(self, dim: usize) -> bool {
        match self {
            MembershipModel::BornLike => dim >= 1,
            MembershipModel::Arc | MembershipModel::CircleSquare => dim == 2,
        }
    }

    /// Evaluates the model on a list of membership amplitudes.
    pub fn evaluate<T: Scalar>(self, alpha: &[T], tol: T) -> Result<MembershipVector<T>> {
        if !self.supports_dim(alpha.len()) {
            return Err(Error::Domain(format!(
                "the {} model is defined for two amplitudes, got {}",
                self.name(),
                alpha.len()
            )));
        }
        match self {
            MembershipModel::BornLike => Ok(born_membership(alpha)),
            MembershipModel::Arc => {
                let (m0, m1) = arc_membership(alpha[0], alpha[1], tol)?;
                Ok(MembershipVector(vec![m0, m1]))
            }
            MembershipModel::CircleSquare => {
                let (m0, m1) = circle_square_membership(alpha[0], alpha[1], tol)?;
                Ok(MembershipVector(vec![m0, m1]))
            }
        }
    }
}

impl fmt::Display for MembershipModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MembershipModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "born" => Ok(MembershipModel::BornLike),
            "arc" => Ok(MembershipModel::Arc),
            "circle-square" => Ok(MembershipModel::CircleSquare),
            other => Err(Error::Domain(format!(
                "unknown membership model {other:?} (expected born, arc or circle-square)"
            ))),
        }
    }
}

/// Membership function values `μ_i`, one per basis state.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipVector<T>(pub Vec<T>);

impl<T: Scalar> MembershipVector<T> {
    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> T {
        self.0.iter().copied().sum()
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

impl<T> Index<usize> for MembershipVector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

/// Born-like model: `μ_i = α_i²`.
pub fn born_membership<T: Scalar>(alpha: &[T]) -> MembershipVector<T> {
    MembershipVector(alpha.iter().map(|&a| a * a).collect())
}

/// Arc model on the quarter circle.
///
/// Uses the two-argument arctangent so a vanishing denominator resolves to
/// `π/2`. With this convention `μ_0 + μ_1 = 1` on the whole closed quadrant.
/// Note the labelling: `(α_0, α_1) = (1, 0)` gives `μ = (0, 1)`.
pub fn arc_membership<T: Scalar>(alpha0: T, alpha1: T, tol: T) -> Result<(T, T)> {
    if alpha0 < -tol || alpha1 < -tol {
        return Err(Error::Domain(format!(
            "arc model needs non-negative amplitudes, got ({alpha0}, {alpha1})"
        )));
    }
    let (a0, a1) = (alpha0.max(T::zero()), alpha1.max(T::zero()));
    if a0.is_zero() && a1.is_zero() {
        return Err(Error::Domain(
            "arc model is undefined when both amplitudes vanish".into(),
        ));
    }
    let scale = T::two() / T::PI();
    let mu0 = scale * a1.atan2(a0);
    let mu1 = scale * a0.atan2(a1);
    Ok((mu0, mu1))
}

fn signum0<T: Scalar>(x: T) -> T {
    if x > T::zero() {
        T::one()
    } else if x < T::zero() {
        -T::one()
    } else {
        T::zero()
    }
}

fn arcsin_sqrt_membership<T: Scalar>(arg: T, tol: T) -> Result<T> {
    if arg < -tol || arg > T::one() + tol {
        return Err(Error::Domain(format!(
            "circle-square argument {arg} lies outside [0, 1]"
        )));
    }
    let arg = arg.max(T::zero()).min(T::one());
    Ok(T::two() / T::PI() * arg.sqrt().asin())
}

/// Circle-to-square model with `sign(0) = 0`.
pub fn circle_square_membership<T: Scalar>(alpha0: T, alpha1: T, tol: T) -> Result<(T, T)> {
    let s0 = alpha0 * alpha0 * signum0(alpha0);
    let s1 = alpha1 * alpha1 * signum0(alpha1);
    let mu0 = arcsin_sqrt_membership((s0 - s1 + T::one()) / T::two(), tol)?;
    let mu1 = arcsin_sqrt_membership((s0 + s1 + T::one()) / T::two(), tol)?;
    Ok((mu0, mu1))
}

/// Interval bounds on the membership of an outcome, built from the fuzzy
/// union/intersection of `(μ_0, 1 − μ_1)` and `(1 − μ_0, μ_1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeBounds<T> {
    /// `min(max(μ_0, 1−μ_1), max(1−μ_0, μ_1))`
    pub lower: T,
    /// `max(min(μ_0, 1−μ_1), min(1−μ_0, μ_1))`
    pub upper: T,
}

pub fn outcome_bounds<T: Scalar>(mu0: T, mu1: T) -> OutcomeBounds<T> {
    let one = T::one();
    let upper = (mu0.min(one - mu1)).max((one - mu0).min(mu1));
    let lower = (mu0.max(one - mu1)).min((one - mu0).max(mu1));
    OutcomeBounds { lower, upper }
}
