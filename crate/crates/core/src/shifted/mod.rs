//! Shifted symmetric polynomials, the Harish-Chandra map on the center of
//! `U(gl(n))`, the invariants `h_k(n)`, and the Koszul map.

pub mod hc;
pub mod invariants;
pub mod poly;
pub mod verify;

pub use hc::{
    c_image_poly, elementary_of, falling_poly, hc_image, hc_projection, hook_product_poly, is_shifted_symmetric,
    shifted_bar_elementary, shifted_elementary,
};
pub use invariants::{char_h, char_poly, char_poly_identity, h_products_independent, koszul_shaped, signed_h_product};
pub use poly::{ShiftedPoly, ShiftedRepr};
pub use verify::{falling_factorial_identity, verify_hc_suite, verify_koszul, weights_at_least};
