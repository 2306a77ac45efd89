//! Obscure qubits: basis states carrying both a complex quantum amplitude and
//! a real membership amplitude.
//!
//! The numeric core is generic over [`Scalar`] (`f32` or `f64`). Concrete
//! aliases for both widths are exported at the crate root.

pub mod dsl;
pub mod entangle;
pub mod error;
pub mod gates;
pub mod kron;
pub mod matrix;
pub mod membership;
pub mod obscure;
pub mod projection;
pub mod report;
pub mod scalar;
pub mod selfcheck;

pub use entangle::{tensor_two, Concurrence, RegisterReport, Separability, TwoQubitRegister};
pub use error::{Error, Result, Sector};
pub use gates::{make_gate, GateName, ObscureQuantumGate};
pub use kron::{inner, Basis, BlockVector, KroneckerQubit, ObscureAmplitude, TotalBasisVector};
pub use matrix::{ComplexMatrix, Matrix, RealMatrix};
pub use membership::{outcome_bounds, MembershipModel, MembershipVector, OutcomeBounds};
pub use obscure::{BlochParams, MembershipMatrix, ObscureQudit};
pub use projection::{DoubleProjection, ProjectionName};
pub use report::Report;
pub use scalar::{Entry, Scalar};

pub type ObscureQuditF64 = ObscureQudit<f64>;
pub type ObscureQuditF32 = ObscureQudit<f32>;
pub type KroneckerQubitF64 = KroneckerQubit<f64>;
pub type KroneckerQubitF32 = KroneckerQubit<f32>;
pub type TwoQubitRegisterF64 = TwoQubitRegister<f64>;
pub type TwoQubitRegisterF32 = TwoQubitRegister<f32>;
pub type GateF64 = ObscureQuantumGate<f64>;
pub type GateF32 = ObscureQuantumGate<f32>;
