//! The virtual-variable calculus: tableaux, irregular expressions, the
//! devirtualization map, and Capelli bitableaux.

pub mod bitableau;
pub mod devirt;
pub mod tableau;

pub use bitableau::{bitableau_monomial, capelli_bitableau};
pub use devirt::{devirtualize, is_irregular};
pub use tableau::{coderuyts, deruyts, reverse_deruyts, row_increasing, Shape, Tableau, VirtualPool};
