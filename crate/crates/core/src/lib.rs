//! Exact computations with partial coinvariant algebras, their Tanisaki
//! quotients, and the Chevalley-operator action on their direct sum.

pub mod error;
pub mod glaction;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod shapes;
pub mod suites;
pub mod tableaux;
pub mod traces;

pub use error::{Error, Result};
pub use poly::{Monomial, Permutation, Poly, Rational};
pub use shapes::{Composition, IndexWindow, Partition};
