//! The supersymmetric algebra `ℂ[M_{m|n,d}]` as a `U(gl(m|n))`-module:
//! superpolarizations, biproducts, Young bitableaux, highest weight
//! vectors, the Cayley process, and eigenvalue checks.

pub mod action;
pub mod biproduct;
pub mod hook;
pub mod poly;

pub use action::{act, act_generator, capelli_identity_sides, cayley_omega, partial, superpolarize};
pub use biproduct::{
    act_on_bitableau_rowwise, biproduct, highest_weight_vector, polarize_word, word_parity, young_bitableau,
};
pub use hook::{
    dominant_weights, eigen_scalar, hook_eigenvalue, is_highest_weight, random_polynomial, verify_capelli_identities,
    verify_capelli_identity, verify_hook_shape, verify_hook_vanishing,
};
pub use poly::{bracket_det, minor_det, Monomial, PolyTermRepr, RepVar, SuperPolynomial};
