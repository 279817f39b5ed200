//! The enveloping algebra `U(gl(m|n))`: symbols, generators, words,
//! elements, the superbracket, normal forms, and adjoint superderivations.

pub mod adjoint;
pub mod element;
pub mod pbw;
pub mod splits;
pub mod symbol;
pub mod word;

pub use adjoint::{adjoint_t, adjoint_word};
pub use element::EnvElement;
pub use pbw::{bracket, superbracket, GeneratorOrder};
pub use splits::{signed_splits, Split};
pub use symbol::{e, Context, Generator, Symbol};
pub use word::Word;
