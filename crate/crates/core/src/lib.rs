//! Exact computation in the enveloping algebras `U(gl(n))` and `U(gl(m|n))`.

pub mod elements;
pub mod error;
pub mod laws;
pub mod rat;
pub mod report;
pub mod rep;
pub mod shifted;
pub mod ugl;
pub mod virt;

pub use error::{Error, Result};
pub use rat::Rat;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/enveloping.md")]
    mod enveloping {}
    #[doc = include_str!("../../../book/src/virtual.md")]
    mod virtual_variables {}
    #[doc = include_str!("../../../book/src/elements.md")]
    mod elements {}
    #[doc = include_str!("../../../book/src/representation.md")]
    mod representation {}
    #[doc = include_str!("../../../book/src/shifted.md")]
    mod shifted {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
