//! Exact computation with generalized coinvariant algebras `R_{n,λ}`.
//!
//! The crate is split into three layers:
//!
//! - [`exact`]: rationals, sparse multivariate polynomials in `x_1..x_n` with
//!   the lexicographic order, the differentiation action `f ⊙ g = (∂f)(g)`,
//!   the apolarity pairing, and fraction-free elimination over `ℚ`.
//! - [`combinatorics`]: partitions, injective column-strict tableaux, ordered
//!   set partitions drawn in container diagrams, coinversion codes, the code
//!   family `C_{n,λ}` and the insertion map inverting `code`.
//! - [`harmonics`]: the ideal `I_{n,λ}`, the polynomials `δ_T` and `δ_σ`,
//!   graded dimensions of the quotient and harmonic space, and the
//!   identification `I_{n,k,s} = I_{n,λ(k,s)}`.

pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod harmonics;

pub use error::{Error, Result};
