//! Exact-arithmetic workbench for the symplectic fermion vertex operator
//! superalgebra SF(d) and its even orbifold SF+.
//!
//! The crate constructs the Fock space of d symplectic fermion pairs over
//! the rationals and mechanically verifies the algebraic structure around
//! it: mode-algebra identities and Borcherds residuals, the invariant
//! bilinear form, the theta-twisted module with its Delta(z) correction,
//! the C2 quotient (dimension 11 for d = 1), Zhu-algebra relations with
//! O(V)-membership certificates, the 11-dimensional presented algebra and
//! its ideal decomposition, logarithmic modules with non-semisimple L_0,
//! eta-quotient characters and their modular transformations.
//!
//! Every identity is checked in exact rational arithmetic; only the modular
//! S-transformation uses a floating-point layer.
//!
//! Entry points:
//! - [`symplectic`]: the 2d-dimensional symplectic space and its maps
//! - [`fock`]: canonical monomials, sparse states, the CAR action
//! - [`vertex`]: untwisted vertex operator modes, Virasoro, bilinear form
//! - [`twisted`]: the theta-twisted module SF(theta)
//! - [`zhu`]: C2 quotients, Zhu products, relation certificates, the
//!   presented algebra
//! - [`logmod`]: the extended module with zero modes and its L_0 Jordan
//!   structure
//! - [`chars`]: exact q-series and modular transformation checks
//! - [`report`]: the check catalog behind the `sfcheck` binary
//!
//! See the `examples/` directory for one runnable demonstration per
//! capability.

pub mod chars;
pub mod fock;
pub mod linalg;
pub mod logmod;
pub mod report;
pub mod scalar;
pub mod symplectic;
pub mod twisted;
pub mod vertex;
pub mod zhu;

pub use fock::{Monomial, Sector, State};
pub use scalar::{Half, Scalar};
pub use symplectic::{Gen, HVector, LinearMap, SymplecticSpace};
