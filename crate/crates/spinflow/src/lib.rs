//! Verification engine for spin geometry on frame-presented
//! homogeneous manifolds.
//!
//! The crate computes Levi-Civita connections and curvature from
//! constant structure constants, spin connections and Dirac operators
//! on frame-constant spinors, the energy-momentum tensors of a spinor
//! field with the eigenvalue estimates built from them, Riemannian-flow
//! and Sasakian structure data, and mechanically checks every identity
//! against closed-form expectations at machine precision.

pub mod catalog;
pub mod clifford;
pub mod emt;
pub mod error;
pub mod foliation;
pub mod frame;
pub mod linalg;
pub mod report;
pub mod sasaki;
pub mod spec;
pub mod spinor_field;
pub mod tensor;
pub mod verify;

pub use error::{Result, SpinError};
pub use report::{render_report, CheckRecord, VerificationReport};
pub use spec::{load_spec, resolve, ManifoldSpec};
pub use verify::run_verification;
