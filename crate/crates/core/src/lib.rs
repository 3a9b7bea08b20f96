//! Exact computations for the affine Yangian of gl(1) on plane partitions,
//! its free-boson realization and 3-Jack polynomials.
//!
//! Everything is generic over a [`Coeff`] field. [`Scalar`] is the symbolic
//! field Q(h1, h2); [`ProbeScalar`] evaluates at a rational point.

pub mod config;
pub mod error;
pub mod fock;
pub mod jack2d;
pub mod jack3;
pub mod linalg;
pub mod planepart;
pub mod poly;
pub mod reference;
pub mod ratfunc;
pub mod scalar;
pub mod structure;
pub mod urational;
pub mod verify;
pub mod wfields;
pub mod yangian;

pub use config::ModelConfig;
pub use error::{Error, Result, ScalarError};
pub use fock::{FockState, ModeOperator, PMonomial};
pub use jack3::{JackTable, PBasis, PWord};
pub use planepart::{Box3, PlanePartition};
pub use poly::ParamPoly;
pub use ratfunc::RatFunc;
pub use scalar::Coeff;
pub use urational::{UPoly, URational};
pub use wfields::{Field, OpeSpec};
pub use yangian::{PPVector, YangianRep};

/// Symbolic coefficients in Q(h1, h2).
pub type Scalar = RatFunc;
/// Exact rational coefficients at a probe point.
pub type ProbeScalar = num_rational::BigRational;

pub type SymbolicConfig = ModelConfig<Scalar>;
pub type ProbeConfig = ModelConfig<ProbeScalar>;
