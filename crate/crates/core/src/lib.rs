//! Radon-type transforms along complex co-dimension-2 plane waves.
//!
//! The crate covers four settings that share one polynomial engine:
//!
//! * [`ball`]: harmonic and holomorphic functions on the unit ball of `C^n`,
//! * [`fock`]: the Segal-Bargmann-Fock space,
//! * [`realspace`]: `L^2(R^n)` through the Segal-Bargmann correspondence,
//! * [`clifford`]: Hermitian monogenic functions with spinor values.
//!
//! Every transform is parametrised by a [`StiefelTuple`](geometry::StiefelTuple)
//! `(t, s)` of Hermitian-orthonormal vectors. Polynomials are stored as
//! [`BiPoly`](bipoly::BiPoly) over a coefficient [`Ring`](scalar::Ring); exact
//! Gaussian-rational coefficients make most identities checkable without
//! tolerances.

pub mod ball;
pub mod bipoly;
pub mod cli;
pub mod clifford;
pub mod constants;
pub mod error;
pub mod fock;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod montecarlo;
pub mod projection;
pub mod quadrature;
pub mod random;
pub mod realspace;
pub mod report;
pub mod scalar;
pub mod verify;

pub use bipoly::{BiPoly, Monomial, MultiIndex};
pub use error::{Error, Result};
pub use geometry::StiefelTuple;
pub use scalar::{Ring, Scalar, C64, CQ};
