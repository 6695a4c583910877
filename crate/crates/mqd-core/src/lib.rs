//! Simulation core for entangling two quantum dots through the Majorana end
//! modes of topological superconductor wires.
//!
//! The crate builds occupation-number bases and second-quantized operators
//! ([`fock`]), assembles the concrete dot–wire models on their low-energy
//! subspaces ([`schemes`]), propagates the time-dependent Schrödinger
//! equation with projective parity measurements ([`dynamics`]), and produces
//! control fields — linear ramps for adiabatic passage and Lyapunov feedback
//! with optional square-pulse shaping ([`control`]).
//!
//! All numerical code is generic over the scalar type through [`Float`];
//! the concrete `f64` aliases at the crate root are what the CLI and the
//! test suites use. Energies are in units of the tunnel coupling λ, times in
//! units of 1/λ, and ħ = 1 throughout.

pub mod control;
pub mod dynamics;
pub mod eig;
pub mod error;
pub mod float;
pub mod fock;
pub mod schemes;

pub use error::Error;
pub use float::Float;

/// Default scalar type.
pub type Real = f64;
/// Complex number over the default scalar.
pub type Cplx = num_complex::Complex<Real>;

/// Concrete aliases over [`Real`].
pub type Operator = fock::Operator<Real>;
pub type QuantumState = fock::QuantumState<Real>;
pub type Eigensystem = eig::Eigensystem<Real>;
pub type SchemeParams = schemes::SchemeParams<Real>;
pub type SchemeModel = schemes::SchemeModel<Real>;
pub type TimeGrid = dynamics::TimeGrid<Real>;
pub type Trajectory = dynamics::Trajectory<Real>;
pub type ParityMeasurement = dynamics::ParityMeasurement<Real>;
pub type ControlField = control::ControlField<Real>;
pub type AppliedField = control::AppliedField<Real>;
pub type ControllerDiagnostics = control::ControllerDiagnostics<Real>;

pub type Result<T, E = Error> = std::result::Result<T, E>;
