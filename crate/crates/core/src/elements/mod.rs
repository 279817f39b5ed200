//! Column determinants and the named elements of `U(gl(n))`: the Capelli
//! generators, Capelli determinants, Capelli–Deruyts bitableaux, shaped
//! Capelli elements, and the verifiers for the identities relating them.

pub mod named;
pub mod cdet;
pub mod verify;

pub use named::{
    append_rows, capelli_c, capelli_det_poly, capelli_deruyts, capelli_h, capelli_h_shift, capelli_script_coeff,
    capelli_script_poly, default_pool, rectangular_k, row_bitableau, shaped_k,
};
pub use cdet::{cdet, cdet_limit, cdet_with, set_cdet_limit, EnvMatrix, EnvPoly, Matrix, NcRing, UniPoly};
pub use verify::{
    expansion_coefficients, is_central, row_insertion_coefficients, verify_centrality, verify_det_poly_expansion,
    verify_expansion, verify_factorization, verify_factorization_examples, verify_factorization_shape,
    verify_filtration, verify_h_equals_c, verify_one_row, verify_row_insertion, verify_script_expansion,
    verify_triangularity,
};
