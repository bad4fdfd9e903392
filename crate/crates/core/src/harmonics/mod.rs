//! The ideal `I_{n,λ}`, the harmonic polynomials `δ_T` and `δ_σ`, and graded
//! dimensions of `R_{n,λ}` and its harmonic space `V_{n,λ} = I_{n,λ}^⊥`.

mod delta;
mod graded;
mod ideal;
mod wilson;

pub use delta::{
    antisymmetrize_oracle, delta_osp, delta_tableau, dotted_staircases, staircase_expansion, x_of_tableau,
    DottedStaircase,
};
pub use graded::{
    graded_ideal_dimension, harmonic_check, harmonic_space_bases, harmonic_space_basis, hilbert_coinv, hilbert_linear_algebra,
    leading_exponents_of_harmonics, module_closure_dimension, GradedDimensionTable,
};
pub use ideal::{ideal_generators, Generator, GeneratorKind, IdealPresentation};
pub use wilson::{telescoping_identity_check, wilson_ideal, wilson_ideal_equality, wilson_partition};
