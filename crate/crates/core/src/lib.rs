//! Exact certification of torsion Ceresa classes for smooth plane quartics
//! carrying a diagonal automorphism that fixes a point of the curve.
//!
//! A certificate checks that the quartic is smooth, that the automorphism
//! preserves it and fixes a point `p` on it, and that 1 is not an eigenvalue
//! of the automorphism on the tangent space of the intermediate Jacobian,
//! `Λ³V* ⊕ (Λ²V* ⊗ V)` with `V` the space of holomorphic differentials.
//! All eigenvalues are roots of unity and are handled as exponents mod `n`.

pub mod ceresa;
pub mod character;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod search;

pub use ceresa::{certify, DiagonalAutomorphism, TorsionCertificate, Verdict};
pub use character::CharacterMultiset;
pub use error::{Error, Result};
pub use poly::{parse_polynomial, Axis, Monomial, Polynomial};
pub use search::{run_search, SearchConfig, SearchHit};
